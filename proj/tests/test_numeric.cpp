#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cpn/cmatrix.hpp"
#include "cpn/errors.hpp"
#include "cpn/numeric.hpp"
#include "cpn/seed.hpp"
#include "cpn/spectrum.hpp"
#include "cpn/surface.hpp"
#include "cpn/tower.hpp"

using namespace cpn;

namespace {

ProjectorTower tower2() { return build_tower(seed_from_strings({{"1"}, {"0", "1"}})); }

ProjectorTower tower3() {
    return build_tower(seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}}));
}

ProjectorTower tower4() {
    return build_tower(
        seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}, {"0", "0", "0", "1"}}));
}

Complex random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-0.7, 0.7);
    return {d(rng), d(rng)};
}

} // namespace

TEST_CASE("eval_mat closed-form values") {
    const ProjectorTower t = tower2();
    const CMatrix at0 = eval_mat(t.p[0], 0.0);
    CHECK(std::abs(at0.at(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(at0.at(0, 1)) < 1e-15);
    CHECK(std::abs(at0.at(1, 0)) < 1e-15);
    CHECK(std::abs(at0.at(1, 1)) < 1e-15);

    const CMatrix at1 = eval_mat(t.p[0], 1.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(at1.at(i, j) - 0.5) < 1e-15);

    MatRF inv(1);
    inv.at(0, 0) = RatFun(BiPoly::one(), BiPoly::xi());
    CHECK_THROWS_AS(eval_mat(inv, 0.0), PoleAtPoint);
}

TEST_CASE("hermitian_eigen on fixed matrices") {
    CMatrix d(3);
    d.at(0, 0) = 3.0;
    d.at(1, 1) = 1.0;
    d.at(2, 2) = 2.0;
    const EigenResult r = hermitian_eigen(d);
    CHECK(std::abs(r.values[0] - 1.0) < 1e-14);
    CHECK(std::abs(r.values[1] - 2.0) < 1e-14);
    CHECK(std::abs(r.values[2] - 3.0) < 1e-14);

    CMatrix bad(2);
    bad.at(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(bad), NotHermitian);

    const EigenResult degen = hermitian_eigen(CMatrix::identity(4));
    CHECK((degen.vectors.adjoint() * degen.vectors - CMatrix::identity(4)).inf_norm() < 1e-12);
}

TEST_CASE("hermitian_eigen random property") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        CMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = Complex(d(rng), d(rng));
        const CMatrix h = 0.5 * (a + a.adjoint());
        const EigenResult r = hermitian_eigen(h);

        for (int i = 1; i < n; ++i) CHECK(r.values[i] >= r.values[i - 1]);
        CHECK((r.vectors.adjoint() * r.vectors - CMatrix::identity(n)).inf_norm() < 1e-10);
        CMatrix lam(n);
        for (int i = 0; i < n; ++i) lam.at(i, i) = r.values[i];
        CHECK((h * r.vectors - r.vectors * lam).inf_norm() < 1e-9);
    }
}

TEST_CASE("spectra of -i X_k at sample points") {
    std::mt19937 rng(23);
    for (const ProjectorTower& t : {tower2(), tower3(), tower4()}) {
        const SurfaceTower s = build_surface_tower(t);
        const int n = t.n;
        for (int rep = 0; rep < 3; ++rep) {
            const Complex pt = random_point(rng);
            for (int k = 0; k < n; ++k) {
                const CMatrix h = Complex(0.0, -1.0) * eval_mat(s.x[k], pt);
                const EigenResult r = hermitian_eigen(h);

                std::vector<double> expect;
                const double ck = rational_to_double(surface_constant(k, n));
                for (int i = 0; i < k; ++i) expect.push_back(ck - 2.0);
                expect.push_back(ck - 1.0);
                for (int i = 0; i < n - 1 - k; ++i) expect.push_back(ck);
                REQUIRE(expect.size() == static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) CHECK(std::abs(r.values[i] - expect[i]) < 1e-10);
            }
        }
    }
}

TEST_CASE("assemble_V at closed-form points") {
    const ProjectorTower t = tower2();
    const Vframe f0 = assemble_V(t, 0.0);
    CHECK((f0.v - CMatrix::identity(2)).inf_norm() < 1e-14);

    const Vframe f1 = assemble_V(t, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f1.v.at(0, 0) - s) < 1e-14);
    CHECK(std::abs(f1.v.at(1, 0) - s) < 1e-14);
    CHECK(std::abs(f1.v.at(0, 1) - s) < 1e-14);
    CHECK(std::abs(f1.v.at(1, 1) + s) < 1e-14);
}

TEST_CASE("assemble_V diagonalizes every projector") {
    std::mt19937 rng(5);
    const ProjectorTower t = tower3();
    for (int rep = 0; rep < 10; ++rep) {
        const Complex pt = random_point(rng);
        const Vframe f = assemble_V(t, pt);
        CHECK(unitarity_drift(f) < 1e-10);
        CHECK(diagonalization_drift(t, f) < 1e-8);
    }
}

TEST_CASE("cov_deriv_matrix matches the vector covariant derivative") {
    const ProjectorTower t = tower2();
    const GridSpec grid{Complex(0.3, 0.2), 1.0, 41, 1e-4};
    const VGrid vg{&t, grid};
    const Complex pt(0.3, 0.2);

    for (int axis : {1, 2}) {
        const CMatrix dm = cov_deriv_matrix(vg, axis, pt);

        const double h = grid.fd_step;
        const Complex e = axis == 1 ? Complex(h, 0.0) : Complex(0.0, h);
        const Vframe c = vg.frame(pt);
        const Vframe fp = vg.frame(pt + e, c.ref);
        const Vframe fm = vg.frame(pt - e, c.ref);
        for (int k = 0; k < t.n; ++k) {
            const auto zc = c.v.column(k);
            const auto zp = fp.v.column(k);
            const auto zm = fm.v.column(k);
            std::vector<Complex> dz(zc.size());
            Complex a = 0.0;
            for (std::size_t i = 0; i < zc.size(); ++i) {
                dz[i] = (zp[i] - zm[i]) / (2.0 * h);
                a += std::conj(zc[i]) * dz[i];
            }
            a = Complex(0.0, a.imag());
            for (std::size_t i = 0; i < zc.size(); ++i) {
                const Complex vec_path = dz[i] - a * zc[i];
                CHECK(std::abs(vec_path - dm.at(static_cast<int>(i), k)) < 1e-9);
            }
        }
    }
}

TEST_CASE("var_op closed forms") {
    CMatrix d(2);
    d.at(0, 0) = Complex(2.0, 1.0);
    d.at(1, 1) = -3.0;
    CHECK(var_op(d).inf_norm() < 1e-15);

    CMatrix swap(2);
    swap.at(0, 1) = 1.0;
    swap.at(1, 0) = 1.0;
    CHECK((var_op(swap) - CMatrix::identity(2)).inf_norm() < 1e-15);

    CMatrix nil(2);
    nil.at(0, 1) = 1.0;
    CHECK(var_op(nil).inf_norm() < 1e-15);
}

TEST_CASE("residual magnitudes and pair gaps") {
    const GridSpec grid{Complex(0.3, 0.2), 1.0, 41, 1e-3};
    const Complex pt(0.4, 0.1);
    for (const ProjectorTower& t : {tower2(), tower3()}) {
        const ResidualReport rep = residual_report(t, grid, pt);
        CHECK(rep.first_expanded < 1e-4);
        CHECK(rep.second_expanded < 1e-4);
        for (double zr : rep.z) CHECK(zr < 1e-4);
        CHECK(rep.first_gap < 1e-8);
        CHECK(rep.second_gap < 1e-8);
        CHECK(rep.unitarity_drift < 1e-10);

        CHECK(residual_first_form(t, grid, pt) == rep.first_expanded);
        CHECK(residual_second_form(t, grid, pt) == rep.second_expanded);
        CHECK(z_equation_residual(t, 0, grid, pt) == rep.z[0]);
    }
}

TEST_CASE("residuals converge at second order") {
    const Complex pt(0.4, 0.1);
    for (const ProjectorTower& t : {tower2(), tower3()}) {
        std::vector<ResidualReport> reps;
        for (double h : {2e-3, 1e-3, 5e-4})
            reps.push_back(residual_report(t, GridSpec{Complex(0.3, 0.2), 1.0, 41, h}, pt));
        for (std::size_t i = 1; i < reps.size(); ++i) {
            const auto ratio = [&](double a, double b) { return b / a; };
            CHECK(ratio(reps[i - 1].first_expanded, reps[i].first_expanded) > 0.15);
            CHECK(ratio(reps[i - 1].first_expanded, reps[i].first_expanded) < 0.45);
            CHECK(ratio(reps[i - 1].second_expanded, reps[i].second_expanded) > 0.15);
            CHECK(ratio(reps[i - 1].second_expanded, reps[i].second_expanded) < 0.45);
            CHECK(ratio(reps[i - 1].first_covariant, reps[i].first_covariant) > 0.15);
            CHECK(ratio(reps[i - 1].first_covariant, reps[i].first_covariant) < 0.45);
            CHECK(ratio(reps[i - 1].second_covariant, reps[i].second_covariant) > 0.15);
            CHECK(ratio(reps[i - 1].second_covariant, reps[i].second_covariant) < 0.45);
            for (std::size_t k = 0; k < reps[i].z.size(); ++k) {
                CHECK(ratio(reps[i - 1].z[k], reps[i].z[k]) > 0.15);
                CHECK(ratio(reps[i - 1].z[k], reps[i].z[k]) < 0.45);
            }
        }
    }
}

TEST_CASE("nu closed form against diagonal extraction") {
    const GridSpec grid{Complex(0.3, 0.2), 1.0, 41, 5e-5};
    for (const ProjectorTower& t : {tower2(), tower3()}) {
        const ResidualReport rep = residual_report(t, grid, Complex(0.4, 0.1));
        CHECK(rep.nu_gap < 1e-6);
    }
}

TEST_CASE("stencil domain errors") {
    const ProjectorTower t = tower2();
    const GridSpec grid{Complex(0.3, 0.2), 1.0, 41, 1e-3};
    CHECK_THROWS_AS(residual_report(t, grid, Complex(1.3, 0.2)), StencilOutOfGrid);
    CHECK_THROWS_AS(residual_report(t, grid, Complex(5.0, 5.0)), StencilOutOfGrid);
    CHECK_THROWS_AS(z_equation_residual(t, 2, grid, Complex(0.3, 0.2)), IndexOutOfRange);
}

TEST_CASE("action quadrature for the degree-one seed") {
    const ProjectorTower t = tower2();

    std::vector<double> values;
    for (int res : {32, 64, 128, 256}) {
        const Quadrature q = action_quadrature(t.p[0], res);
        CHECK(q.density_gap < 1e-10);
        CHECK(std::abs(q.value - q.x_value) < 1e-12);
        values.push_back(q.value);
    }
    const double d1 = std::abs(values[1] - values[0]);
    const double d2 = std::abs(values[2] - values[1]);
    const double d3 = std::abs(values[3] - values[2]);
    CHECK(d1 / d2 >= 4.0);
    CHECK(d2 / d3 >= 4.0);

    const double pi = std::acos(-1.0);
    const Quadrature fine = action_quadrature(t.p[0], 2048);
    CHECK(std::abs(fine.value - pi) < 1e-6);
}

TEST_CASE("constant projector has zero action") {
    MatRF p = MatRF(2);
    p.at(0, 0) = RatFun(BiPoly::one());
    const Quadrature q = action_quadrature(p, 16);
    CHECK(q.value == 0.0);
    CHECK(q.x_value == 0.0);
    CHECK(q.density_gap == 0.0);
}

TEST_CASE("density stays nonnegative") {
    std::mt19937 rng(31);
    const ProjectorTower t = tower3();
    const MatRF pd = t.p[1].d_xi();
    const MatRF pdb = t.p[1].d_xibar();
    for (int rep = 0; rep < 25; ++rep) {
        const Complex pt = random_point(rng);
        const CMatrix ed = eval_mat(pd, pt);
        const CMatrix edb = eval_mat(pdb, pt);
        Complex tr = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tr += ed.at(i, j) * edb.at(j, i);
        CHECK(tr.real() >= -1e-12);
        CHECK(std::abs(tr.imag()) < 1e-12);
    }
}
