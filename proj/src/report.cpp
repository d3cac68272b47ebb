#include "cpn/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "cpn/errors.hpp"
#include "cpn/spectrum.hpp"

namespace cpn {

namespace {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

SeedFile read_seed_json(std::istream& is) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("seed file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("seed file must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("seed file needs an integer field 'n'");
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("seed file needs an array field 'components'");

    SeedFile file;
    file.n = j["n"].get<int>();
    for (const auto& comp : j["components"]) {
        if (!comp.is_array())
            throw ParseError("each seed component must be an array of coefficient strings");
        std::vector<std::string> coeffs;
        for (const auto& c : comp) {
            if (!c.is_string())
                throw ParseError("seed coefficients must be strings; bare numeric literals "
                                 "are not accepted");
            coeffs.push_back(c.get<std::string>());
        }
        file.components.push_back(std::move(coeffs));
    }
    return file;
}

SeedFile load_seed_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot read seed file '" + path + "'");
    return read_seed_json(is);
}

HoloSeed seed_from_file(const SeedFile& file) {
    if (file.n != static_cast<int>(file.components.size()))
        throw InvalidSeed("seed file declares n = " + std::to_string(file.n) + " but lists " +
                          std::to_string(file.components.size()) + " components");
    return seed_from_strings(file.components);
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int Report::failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

namespace {

struct CatalogueRunner {
    std::vector<CheckResult>* out;

    void exact(const std::string& name, const std::string& detail,
               const std::function<bool()>& body) const {
        Stopwatch sw;
        bool pass = false;
        std::string note = detail;
        try {
            pass = body();
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        out->push_back({name, "exact", pass, note, sw.seconds()});
    }
};

std::string range_note(int n) { return "k = 0.." + std::to_string(n - 1); }

} // namespace

Report run_verification(const SeedFile& file) {
    Report report;
    report.seed = file;
    const HoloSeed seed = seed_from_file(file);
    report.n = seed.n();
    const int n = seed.n();

    Stopwatch total;
    Stopwatch build;
    const ProjectorTower tower = build_tower(seed);
    const SurfaceTower st = build_surface_tower(tower);
    report.build_seconds = build.seconds();

    const CatalogueRunner run{&report.checks};

    run.exact("seed.admissible", std::to_string(n) + " polynomial components, constant gcd",
              [] { return true; });

    run.exact("projector.rank_one", "Pk' = Pk = Pk^2, tr Pk = 1, " + range_note(n), [&] {
        for (int k = 0; k < n; ++k)
            if (!is_rank_one_projector(tower.p[k])) return false;
        return true;
    });

    run.exact("projector.orthogonal", "Pj Pk = 0 for j != k", [&] {
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (!(tower.p[j] * tower.p[k]).is_zero()) return false;
        return true;
    });

    run.exact("projector.complete", "sum_k Pk = I", [&] {
        MatRF sum(n);
        for (int k = 0; k < n; ++k) sum += tower.p[k];
        return sum.is_identity();
    });

    run.exact("projector.el", "[d dbar Pk, Pk] = 0, " + range_note(n), [&] {
        for (int k = 0; k < n; ++k)
            if (!verify_el(tower.p[k])) return false;
        return true;
    });

    run.exact("projector.conservation", "d[dbar Pk, Pk] + dbar[d Pk, Pk] = 0, " + range_note(n),
              [&] {
                  for (int k = 0; k < n; ++k)
                      if (!verify_conservation(tower.p[k])) return false;
                  return true;
              });

    run.exact("projector.holomorphy", "P0 holomorphic, P(n-1) antiholomorphic, middles mixed",
              [&] {
                  if (holomorphy_class(tower.p[0]) != HolomorphyClass::holomorphic) return false;
                  if (holomorphy_class(tower.p[n - 1]) != HolomorphyClass::antiholomorphic)
                      return false;
                  for (int k = 1; k + 1 < n; ++k)
                      if (holomorphy_class(tower.p[k]) != HolomorphyClass::mixed) return false;
                  return true;
              });

    run.exact("surface.structure", "Xk' = -Xk, tr Xk = 0, " + range_note(n), [&] {
        for (int k = 0; k < n; ++k) {
            if (!(st.x[k].herm_conj() + st.x[k]).is_zero()) return false;
            if (!st.x[k].trace().is_zero()) return false;
        }
        return true;
    });

    run.exact("surface.tangent", "d Xk = -i[d Pk, Pk], dbar Xk = i[dbar Pk, Pk]", [&] {
        for (int k = 0; k < n; ++k)
            if (!verify_tangent(st.x[k], tower.p[k])) return false;
        return true;
    });

    run.exact("surface.dxdx", "dXk dbarXk + dPk dbarPk = 0", [&] {
        for (int k = 0; k < n; ++k)
            if (!verify_dXdX(st.x[k], tower.p[k])) return false;
        return true;
    });

    run.exact("surface.el", "[d dbar Xk, Xk] = 0, " + range_note(n), [&] {
        for (int k = 0; k < n; ++k)
            if (!verify_el_surface(st.x[k])) return false;
        return true;
    });

    run.exact("surface.minimal_poly", "designated factors annihilate, no proper divisor does",
              [&] {
                  for (int k = 0; k < n; ++k)
                      if (!minimal_poly_check(st.x[k], k, n)) return false;
                  return true;
              });

    run.exact("surface.invert_linear", "alternating sum of surfaces recovers Pk", [&] {
        for (int k = 0; k < n; ++k)
            if (!(invert_linear(st.x, k, n) == tower.p[k])) return false;
        return true;
    });

    run.exact("surface.invert_quadratic", "Xk^2 - 2i(ck-1)Xk - ck(ck-2)I = Pk", [&] {
        for (int k = 0; k < n; ++k)
            if (!(invert_quadratic(st.x[k], k, n) == tower.p[k])) return false;
        return true;
    });

    run.exact("surface.chi_ladder", "chi+ / chi- step the tower, ends annihilate, round trips",
              [&] {
                  if (chi_plus(st.x[n - 1], tower.p[n - 1], n)) return false;
                  if (chi_minus(st.x[0], tower.p[0], n)) return false;
                  for (int k = 0; k + 1 < n; ++k) {
                      const auto up = chi_plus(st.x[k], tower.p[k], n);
                      if (!up || !(*up == st.x[k + 1])) return false;
                      const auto down = chi_minus(st.x[k + 1], tower.p[k + 1], n);
                      if (!down || !(*down == st.x[k])) return false;
                  }
                  return true;
              });

    run.exact("surface.commute", "[Xj, Xk] = 0 for all pairs", [&] {
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (!commutator(st.x[j], st.x[k]).is_zero()) return false;
        return true;
    });

    run.exact("surface.spin_sum", "-(i/2) sum_k Xk = sum_k (k - (n-1)/2) Pk",
              [&] { return verify_spin_sum(st, tower); });

    report.total_seconds = total.seconds();
    return report;
}

void write_report(const Report& report, std::ostream& os) {
    os << "verification report, n = " << report.n << "\n";
    for (std::size_t i = 0; i < report.seed.components.size(); ++i) {
        os << "  f[" << i << "] coefficients:";
        for (const auto& c : report.seed.components[i]) os << " " << c;
        os << "\n";
    }
    os << "tower and surfaces built in " << std::fixed << std::setprecision(3)
       << report.build_seconds << " s\n\n";

    std::size_t name_width = 4;
    for (const auto& c : report.checks) name_width = std::max(name_width, c.name.size());

    os << std::left << std::setw(static_cast<int>(name_width) + 2) << "name" << std::setw(7)
       << "kind" << std::setw(6) << "verdict" << std::right << std::setw(10) << "seconds"
       << "  detail\n";
    for (const auto& c : report.checks) {
        os << std::left << std::setw(static_cast<int>(name_width) + 2) << c.name << std::setw(7)
           << c.kind << std::setw(6) << (c.pass ? "pass" : "FAIL") << std::right << std::setw(10)
           << std::fixed << std::setprecision(4) << c.seconds << "  " << c.detail << "\n";
    }

    const int failed = report.failures();
    os << "\n";
    if (failed == 0)
        os << "all " << report.checks.size() << " checks passed";
    else
        os << failed << " of " << report.checks.size() << " checks FAILED";
    os << " (total " << std::fixed << std::setprecision(3) << report.total_seconds << " s)\n";
}

namespace {

void write_terms(std::ostream& os, const BiPoly& p) {
    os << '[';
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!first) os << ", ";
        first = false;
        os << '[' << mono.a << ", " << mono.b << ", \"" << rational_to_string(coeff.re())
           << "\", \"" << rational_to_string(coeff.im()) << "\"]";
    }
    os << ']';
}

void write_seed_components(std::ostream& os, const SeedFile& file, const std::string& indent) {
    os << "[\n";
    for (std::size_t i = 0; i < file.components.size(); ++i) {
        os << indent << "  [";
        for (std::size_t j = 0; j < file.components[i].size(); ++j) {
            if (j) os << ", ";
            os << '"' << json_escape(file.components[i][j]) << '"';
        }
        os << ']' << (i + 1 < file.components.size() ? "," : "") << "\n";
    }
    os << indent << ']';
}

} // namespace

void write_tower_json(const SeedFile& file, const ProjectorTower& tower, std::ostream& os) {
    os << "{\n  \"n\": " << tower.n << ",\n  \"components\": ";
    write_seed_components(os, file, "  ");
    os << ",\n  \"projectors\": [\n";
    for (int k = 0; k < tower.n; ++k) {
        os << "    {\n      \"k\": " << k << ",\n      \"rows\": [\n";
        for (int i = 0; i < tower.n; ++i) {
            os << "        [";
            for (int j = 0; j < tower.n; ++j) {
                if (j) os << ", ";
                const RatFun& e = tower.p[k].at(i, j);
                os << "{\"num\": ";
                write_terms(os, e.num());
                os << ", \"den\": ";
                write_terms(os, e.den());
                os << '}';
            }
            os << ']' << (i + 1 < tower.n ? "," : "") << "\n";
        }
        os << "      ]\n    }" << (k + 1 < tower.n ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

namespace {

const char* class_label(Klass k) {
    switch (k) {
        case Klass::Dplus: return "D+";
        case Klass::Dzero: return "D0";
        default: return "D-";
    }
}

} // namespace

void write_spectrum_table(int n, std::ostream& os) {
    const EigenSet set = build_S(n);

    struct Row {
        Rational pos;
        std::string classes;
        std::string ks;
        bool ghost = true;
    };
    std::vector<Row> rows;
    for (const auto& m : set.members()) {
        if (rows.empty() || rows.back().pos != m.value) rows.push_back({m.value, "", "", true});
        Row& r = rows.back();
        if (!r.classes.empty()) r.classes += ",";
        r.classes += class_label(m.klass);
        if (!r.ks.empty()) r.ks += ",";
        r.ks += std::to_string(m.k_origin);
        if (!m.ghost) r.ghost = false;
    }

    const auto realized =
        std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.ghost; });
    os << "S(" << n << "): " << rows.size() << " positions (" << realized << " realized, "
       << rows.size() - static_cast<std::size_t>(realized) << " ghost), " << set.members().size()
       << " members\n\n";
    os << std::left << std::setw(10) << "position" << std::setw(10) << "classes" << std::setw(8)
       << "k"
       << "ghost\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(10) << rational_to_string(r.pos) << std::setw(10) << r.classes
           << std::setw(8) << r.ks << (r.ghost ? "ghost" : "") << "\n";
    }
}

NumericStudy run_numeric_study(const SeedFile& file, const GridSpec& grid) {
    NumericStudy study;
    study.seed = file;
    study.grid = grid;

    const HoloSeed seed = seed_from_file(file);
    const ProjectorTower tower = build_tower(seed);
    const SurfaceTower st = build_surface_tower(tower);
    const int n = tower.n;

    const VGrid vg{&tower, grid};
    for (int i = 0; i < grid.samples_per_axis; ++i) {
        for (int j = 0; j < grid.samples_per_axis; ++j) {
            ++study.grid_points;
            try {
                const Vframe frame = vg.frame(vg.point_at(i, j));
                study.max_unitarity_drift =
                    std::max(study.max_unitarity_drift, unitarity_drift(frame));
                study.max_projector_drift =
                    std::max(study.max_projector_drift, diagonalization_drift(tower, frame));
            } catch (const RankDeficient&) {
                ++study.skipped_points;
            }
        }
    }

    const double h0 = grid.fd_step;
    for (double h : {2.0 * h0, h0, 0.5 * h0}) {
        GridSpec g = grid;
        g.fd_step = h;
        study.residuals.push_back(residual_report(tower, g, grid.center));
    }
    const auto ratio = [](double next, double prev) {
        return next / std::max(prev, 1e-300);
    };
    for (std::size_t i = 0; i + 1 < study.residuals.size(); ++i) {
        const ResidualReport& a = study.residuals[i];
        const ResidualReport& b = study.residuals[i + 1];
        study.ratio_first_expanded.push_back(ratio(b.first_expanded, a.first_expanded));
        study.ratio_first_covariant.push_back(ratio(b.first_covariant, a.first_covariant));
        study.ratio_second_expanded.push_back(ratio(b.second_expanded, a.second_expanded));
        study.ratio_second_covariant.push_back(ratio(b.second_covariant, a.second_covariant));
        const double za = *std::max_element(a.z.begin(), a.z.end());
        const double zb = *std::max_element(b.z.begin(), b.z.end());
        study.ratio_z.push_back(ratio(zb, za));
    }
    for (const auto& r : study.residuals) {
        study.max_first_gap = std::max(study.max_first_gap, r.first_gap);
        study.max_second_gap = std::max(study.max_second_gap, r.second_gap);
    }

    study.nu_h = 5e-5;
    {
        GridSpec g = grid;
        g.fd_step = study.nu_h;
        study.nu_gap = residual_report(tower, g, grid.center).nu_gap;
    }

    std::mt19937 rng(7261983u);
    const auto uniform = [&rng] { return static_cast<double>(rng()) / 4294967296.0; };
    study.eigen_points = 5;
    for (int p = 0; p < study.eigen_points; ++p) {
        const Complex pt(grid.center.real() + grid.half_width * (2.0 * uniform() - 1.0),
                         grid.center.imag() + grid.half_width * (2.0 * uniform() - 1.0));
        for (int k = 0; k < n; ++k) {
            const EigenResult eig = hermitian_eigen(Complex(0.0, -1.0) * eval_mat(st.x[k], pt));
            const double ck = rational_to_double(c_of(k, n));
            for (int j = 0; j < n; ++j) {
                const double expected = j < k ? ck - 2.0 : (j == k ? ck - 1.0 : ck);
                study.eigen_max_deviation =
                    std::max(study.eigen_max_deviation, std::abs(eig.values[j] - expected));
            }
        }
    }

    study.quad_resolutions = {64, 128, 256};
    for (int r : study.quad_resolutions) study.quads.push_back(action_quadrature(tower.p[0], r));
    const double d1 = std::abs(study.quads[1].value - study.quads[0].value);
    const double d2 = std::abs(study.quads[2].value - study.quads[1].value);
    study.quad_cauchy_ratio = d1 / std::max(d2, 1e-300);

    return study;
}

namespace {

void write_double_list(std::ostream& os, const std::vector<double>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << fmt17(v[i]);
    }
    os << ']';
}

} // namespace

void write_numeric_json(const NumericStudy& study, std::ostream& os) {
    os << "{\n  \"seed\": {\"n\": " << study.seed.n << ", \"components\": ";
    write_seed_components(os, study.seed, "  ");
    os << "},\n";

    os << "  \"grid\": {\"center\": [" << fmt17(study.grid.center.real()) << ", "
       << fmt17(study.grid.center.imag()) << "], \"half_width\": " << fmt17(study.grid.half_width)
       << ", \"samples_per_axis\": " << study.grid.samples_per_axis
       << ", \"fd_step\": " << fmt17(study.grid.fd_step) << "},\n";

    os << "  \"diagonalization\": {\"points\": " << study.grid_points
       << ", \"skipped\": " << study.skipped_points
       << ", \"max_projector_drift\": " << fmt17(study.max_projector_drift)
       << ", \"max_unitarity_drift\": " << fmt17(study.max_unitarity_drift) << "},\n";

    os << "  \"residuals\": [\n";
    for (std::size_t i = 0; i < study.residuals.size(); ++i) {
        const ResidualReport& r = study.residuals[i];
        os << "    {\"point\": [" << fmt17(r.point.real()) << ", " << fmt17(r.point.imag())
           << "], \"h\": " << fmt17(r.h) << ", \"residual_first\": " << fmt17(r.first_expanded)
           << ", \"residual_second\": " << fmt17(r.second_expanded) << ", \"residual_z\": ";
        write_double_list(os, r.z);
        os << ", \"unitarity_drift\": " << fmt17(r.unitarity_drift) << '}'
           << (i + 1 < study.residuals.size() ? "," : "") << "\n";
    }
    os << "  ],\n";

    os << "  \"form_agreement\": {\"max_first_gap\": " << fmt17(study.max_first_gap)
       << ", \"max_second_gap\": " << fmt17(study.max_second_gap) << "},\n";

    os << "  \"convergence_ratios\": {\"first_expanded\": ";
    write_double_list(os, study.ratio_first_expanded);
    os << ", \"first_covariant\": ";
    write_double_list(os, study.ratio_first_covariant);
    os << ", \"second_expanded\": ";
    write_double_list(os, study.ratio_second_expanded);
    os << ", \"second_covariant\": ";
    write_double_list(os, study.ratio_second_covariant);
    os << ", \"z\": ";
    write_double_list(os, study.ratio_z);
    os << "},\n";

    os << "  \"nu\": {\"h\": " << fmt17(study.nu_h) << ", \"gap\": " << fmt17(study.nu_gap)
       << "},\n";

    os << "  \"eigenvalues\": {\"points\": " << study.eigen_points
       << ", \"max_deviation\": " << fmt17(study.eigen_max_deviation) << "},\n";

    os << "  \"quadrature\": {\"resolutions\": [";
    for (std::size_t i = 0; i < study.quad_resolutions.size(); ++i) {
        if (i) os << ", ";
        os << study.quad_resolutions[i];
    }
    os << "], \"values\": ";
    std::vector<double> values, x_values, gaps;
    for (const auto& q : study.quads) {
        values.push_back(q.value);
        x_values.push_back(q.x_value);
        gaps.push_back(q.density_gap);
    }
    write_double_list(os, values);
    os << ", \"x_values\": ";
    write_double_list(os, x_values);
    os << ", \"density_gaps\": ";
    write_double_list(os, gaps);
    os << ", \"cauchy_ratio\": " << fmt17(study.quad_cauchy_ratio) << "}\n}\n";
}

} // namespace cpn
