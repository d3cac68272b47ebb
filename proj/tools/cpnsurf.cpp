#include <complex>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cpn/errors.hpp"
#include "cpn/report.hpp"
#include "cpn/spectrum.hpp"

namespace {

int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream os(path);
    if (!os) {
        std::cerr << "cpnsurf: cannot open output file '" << path << "'\n";
        return 1;
    }
    body(os);
    return 0;
}

std::complex<double> parse_center(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw cpn::ParseError("grid center must be 're,im', got '" + text + "'");
    try {
        std::size_t used = 0;
        const double re = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        const std::string imag = text.substr(comma + 1);
        const double im = std::stod(imag, &used);
        if (used != imag.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw cpn::ParseError("grid center must be 're,im', got '" + text + "'");
    }
}

int fail(int code, const std::exception& e) {
    std::cerr << "cpnsurf: " << e.what() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projector towers, soliton surfaces, and eigenvalue spectra of "
                 "rank-one sigma models"};
    app.require_subcommand(1);

    std::string seed_path, out_path, format = "table", center_text = "0.3,0.2";
    std::string numeric_format = "json";
    int n = 0, samples = 41;
    double half_width = 1.0, fd_step = 1e-3;

    auto* tower_cmd =
        app.add_subcommand("tower", "build the projector tower of a seed and write it as JSON");
    tower_cmd->add_option("--seed", seed_path, "seed JSON file")->required();
    tower_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* verify_cmd =
        app.add_subcommand("verify", "run the exact verification catalogue for a seed");
    verify_cmd->add_option("--seed", seed_path, "seed JSON file")->required();
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "emit the eigenvalue positions S(n) of a tower of size n");
    spectrum_cmd->add_option("--n", n, "tower size, at least 2")
        ->required()
        ->check(CLI::Range(2, 1 << 16));
    spectrum_cmd->add_option("--format", format, "table, csv, or svg (default table)")
        ->check(CLI::IsMember({"table", "csv", "svg"}));
    spectrum_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* numeric_cmd =
        app.add_subcommand("numeric", "numeric residual study of a seed on a grid, as JSON");
    numeric_cmd->add_option("--seed", seed_path, "seed JSON file")->required();
    numeric_cmd->add_option("--format", numeric_format, "json (default)")
        ->check(CLI::IsMember({"json"}));
    numeric_cmd->add_option("--grid-center", center_text, "grid center as re,im (default 0.3,0.2)");
    numeric_cmd->add_option("--grid-width", half_width, "grid half width (default 1)")
        ->check(CLI::PositiveNumber);
    numeric_cmd->add_option("--samples", samples, "samples per axis (default 41)")
        ->check(CLI::Range(3, 4096));
    numeric_cmd->add_option("--fd-step", fd_step, "finite difference step (default 1e-3)")
        ->check(CLI::PositiveNumber);
    numeric_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*tower_cmd) {
            const cpn::SeedFile file = cpn::load_seed_file(seed_path);
            const cpn::HoloSeed seed = cpn::seed_from_file(file);
            const cpn::ProjectorTower tower = cpn::build_tower(seed);
            return with_output(out_path,
                               [&](std::ostream& os) { cpn::write_tower_json(file, tower, os); });
        }
        if (*verify_cmd) {
            const cpn::Report report = cpn::run_verification(cpn::load_seed_file(seed_path));
            const int io = with_output(out_path,
                                       [&](std::ostream& os) { cpn::write_report(report, os); });
            if (io != 0) return io;
            if (!report.all_pass()) {
                std::cerr << "cpnsurf: " << report.failures() << " verification checks failed\n";
                return 3;
            }
            return 0;
        }
        if (*spectrum_cmd) {
            return with_output(out_path, [&](std::ostream& os) {
                if (format == "csv")
                    cpn::write_figure_csv(cpn::figure_data(n), os);
                else if (format == "svg")
                    cpn::write_figure_svg(cpn::figure_data(n), os);
                else
                    cpn::write_spectrum_table(n, os);
            });
        }
        const cpn::GridSpec grid{parse_center(center_text), half_width, samples, fd_step};
        const cpn::NumericStudy study =
            cpn::run_numeric_study(cpn::load_seed_file(seed_path), grid);
        return with_output(out_path,
                           [&](std::ostream& os) { cpn::write_numeric_json(study, os); });
    } catch (const cpn::ParseError& e) {
        return fail(1, e);
    } catch (const cpn::ZeroSeed& e) {
        return fail(1, e);
    } catch (const cpn::InvalidSeed& e) {
        return fail(1, e);
    } catch (const cpn::PoleAtPoint& e) {
        return fail(1, e);
    } catch (const cpn::StencilOutOfGrid& e) {
        return fail(1, e);
    } catch (const cpn::RankDeficient& e) {
        return fail(1, e);
    } catch (const cpn::PrematureAnnihilation& e) {
        return fail(2, e);
    } catch (const cpn::DegenerateProjector& e) {
        return fail(2, e);
    } catch (const cpn::DimensionTooSmall& e) {
        return fail(2, e);
    } catch (const std::exception& e) {
        return fail(3, e);
    }
}
