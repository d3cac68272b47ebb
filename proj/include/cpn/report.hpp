#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpn/numeric.hpp"
#include "cpn/seed.hpp"
#include "cpn/surface.hpp"
#include "cpn/tower.hpp"

namespace cpn {

/// On-disk seed: {"n": 2, "components": [["1"], ["0", "1"]]}. Every
/// coefficient is a GaussianRational string, constant term first; numeric
/// JSON literals are rejected so the boundary stays exact.
struct SeedFile {
    int n = 0;
    std::vector<std::vector<std::string>> components;
};

SeedFile read_seed_json(std::istream& is);
SeedFile load_seed_file(const std::string& path);
/// Checks the declared n against the component count and validates.
HoloSeed seed_from_file(const SeedFile& file);

struct CheckResult {
    std::string name;
    std::string kind;
    bool pass;
    std::string detail;
    double seconds;
};

/// Result of the verification catalogue for one seed. Each catalogue
/// check appears exactly once.
struct Report {
    SeedFile seed;
    int n = 0;
    double build_seconds = 0.0;
    double total_seconds = 0.0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    int failures() const;
};

/// Builds the tower and surfaces, then runs every exact check: projector
/// structure, orthogonality, completeness, field equations, conservation,
/// holomorphy of the endpoints, surface structure, tangent and product
/// identities, minimal polynomials, both inversions, the chi ladder,
/// pairwise commutation, and the spin decomposition.
Report run_verification(const SeedFile& file);
void write_report(const Report& report, std::ostream& os);

/// Tower as JSON with exact num/den coefficient tables: each entry is
/// {"num": [[a, b, re, im], ...], "den": ...} listing terms xi^a xibar^b
/// with rational strings re, im. An empty table is the zero polynomial.
void write_tower_json(const SeedFile& file, const ProjectorTower& tower, std::ostream& os);

/// Sorted distinct positions of S(n), one row per position with class,
/// origin, and ghost annotations.
void write_spectrum_table(int n, std::ostream& os);

/// Grid study: diagonalization drift sweep, residuals at steps
/// {2h, h, h/2} with convergence ratios, the nu cross-check at a fine
/// step, eigenvalue comparison against the combinatorial spectrum at
/// pseudo-random points, and the action quadrature at three resolutions.
struct NumericStudy {
    SeedFile seed;
    GridSpec grid;
    int grid_points = 0;
    int skipped_points = 0;
    double max_projector_drift = 0.0;
    double max_unitarity_drift = 0.0;
    std::vector<ResidualReport> residuals;
    std::vector<double> ratio_first_expanded;
    std::vector<double> ratio_first_covariant;
    std::vector<double> ratio_second_expanded;
    std::vector<double> ratio_second_covariant;
    std::vector<double> ratio_z;
    double max_first_gap = 0.0;
    double max_second_gap = 0.0;
    double nu_h = 0.0;
    double nu_gap = 0.0;
    int eigen_points = 0;
    double eigen_max_deviation = 0.0;
    std::vector<int> quad_resolutions;
    std::vector<Quadrature> quads;
    double quad_cauchy_ratio = 0.0;
};

NumericStudy run_numeric_study(const SeedFile& file, const GridSpec& grid);
/// Deterministic serialization: every float is printed with %.17g.
void write_numeric_json(const NumericStudy& study, std::ostream& os);

} // namespace cpn
