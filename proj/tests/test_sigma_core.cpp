#include <complex>
#include <random>
#include <vector>

#include "cpn/errors.hpp"
#include "cpn/tower.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cpn;
using cpn_test::eval_entries;
using Mat = cpn_test::CMat;

TEST_CASE("seed validation") {
    CHECK_NOTHROW(seed_from_strings({{"1"}, {"0", "1"}}));
    CHECK_NOTHROW(seed_from_strings({{"1"}, {"0", "i"}}));
    CHECK_NOTHROW(seed_from_strings({{"0", "1"}, {"1", "1"}}));
    CHECK_THROWS_AS(seed_from_strings({{"0"}, {"0"}}), ZeroSeed);
    CHECK_THROWS_AS(seed_from_strings({{"1"}}), InvalidSeed);
    CHECK_THROWS_AS(seed_from_strings({{"0", "1"}, {"0", "0", "1"}}), InvalidSeed);
    CHECK_THROWS_AS(HoloSeed(3, {UniPoly::one(), UniPoly::one()}), InvalidSeed);
}

TEST_CASE("build_P0 matches the rank-one formula") {
    const BiPoly xi = BiPoly::xi();
    const BiPoly xb = BiPoly::xibar();
    const BiPoly one = BiPoly::one();

    const MatRF p = build_P0(seed_from_strings({{"1"}, {"0", "1"}}));
    const BiPoly q = one + xi * xb;
    MatRF expect(2);
    expect.at(0, 0) = RatFun(one, q);
    expect.at(0, 1) = RatFun(xb, q);
    expect.at(1, 0) = RatFun(xi, q);
    expect.at(1, 1) = RatFun(xi * xb, q);
    CHECK(p == expect);
    CHECK(is_rank_one_projector(p));

    const MatRF pc = build_P0(seed_from_strings({{"1"}, {"0"}}));
    MatRF expect_const(2);
    expect_const.at(0, 0) = RatFun::one();
    CHECK(pc == expect_const);

    const MatRF p3 = build_P0(seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}}));
    const BiPoly q3 = one + xi * xb + xi * xi * xb * xb;
    CHECK(p3.at(0, 0) == RatFun(one, q3));
    CHECK(p3.at(2, 1) == RatFun(xi * xi * xb, q3));
    CHECK(is_rank_one_projector(p3));
    CHECK_FALSE(pi_minus(p3).has_value());
}

TEST_CASE("ladder operators raise, annihilate, and invert") {
    const MatRF p0 = build_P0(seed_from_strings({{"1"}, {"0", "1"}}));
    const auto p1 = pi_plus(p0);
    REQUIRE(p1.has_value());
    CHECK(*p1 == MatRF::identity(2) - p0);
    CHECK_FALSE(pi_minus(p0).has_value());

    const MatRF q0 = build_P0(seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}}));
    const auto q1 = pi_plus(q0);
    REQUIRE(q1.has_value());
    CHECK(is_rank_one_projector(*q1));
    const auto back = pi_minus(*q1);
    REQUIRE(back.has_value());
    CHECK(*back == q0);
}

TEST_CASE("build_tower produces the full orthogonal ladder") {
    const ProjectorTower t2 = build_tower(seed_from_strings({{"1"}, {"0", "1"}}));
    REQUIRE(t2.p.size() == 2);
    CHECK(t2.p[1] == MatRF::identity(2) - t2.p[0]);

    CHECK_THROWS_AS(build_tower(seed_from_strings({{"1"}, {"0"}, {"0"}})), PrematureAnnihilation);

    const ProjectorTower t3 = build_tower(seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}}));
    REQUIRE(t3.p.size() == 3);
    MatRF sum(3);
    for (const auto& p : t3.p) {
        CHECK(is_rank_one_projector(p));
        sum += p;
    }
    CHECK(sum.is_identity());
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j) {
            if (k == j) continue;
            CHECK(mat_is_zero(t3.p[k] * t3.p[j]));
        }
}

TEST_CASE("verify_el on solutions and a counterexample") {
    const BiPoly xi = BiPoly::xi();
    const BiPoly xb = BiPoly::xibar();

    const MatRF p0 = build_P0(seed_from_strings({{"1"}, {"0", "1"}}));
    CHECK(verify_el(p0));

    const MatRF pc = build_P0(seed_from_strings({{"1"}, {"0"}}));
    CHECK(verify_el(pc));

    // d dbar annihilates an entry linear in xi, so this one still passes.
    MatRF linear(2);
    linear.at(0, 0) = RatFun(xi);
    CHECK(verify_el(linear));

    MatRF bad(2);
    bad.at(0, 1) = RatFun(xi * xb);
    bad.at(1, 0) = RatFun::one();
    CHECK_FALSE(verify_el(bad));
    const MatRF comm = commutator(bad.d_xi().d_xibar(), bad);
    CHECK(std::abs(comm.at(0, 0).eval({1.0, 0.0}, {1.0, 0.0}) - 1.0) < 1e-12);
}

TEST_CASE("verify_conservation agrees with the E-L form") {
    const BiPoly xi = BiPoly::xi();
    const BiPoly xb = BiPoly::xibar();

    CHECK(verify_conservation(build_P0(seed_from_strings({{"1"}, {"0", "1"}}))));

    const ProjectorTower t3 = build_tower(seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}}));
    for (const auto& p : t3.p) {
        CHECK(verify_conservation(p));
        CHECK(verify_el(p));
    }

    // Diagonal entries commute with their derivatives entrywise.
    MatRF diag(2);
    diag.at(0, 0) = RatFun(xi * xb);
    CHECK(verify_conservation(diag));

    MatRF bad(2);
    bad.at(0, 1) = RatFun(xi * xb);
    bad.at(1, 0) = RatFun::one();
    CHECK_FALSE(verify_conservation(bad));
    const MatRF expr = commutator(bad.d_xibar(), bad).d_xi() + commutator(bad.d_xi(), bad).d_xibar();
    const std::complex<double> pt{1.0, 1.0};
    CHECK(std::abs(expr.at(0, 0).eval(pt, std::conj(pt)) - 2.0) < 1e-12);
}

TEST_CASE("lagrangian density: exact value and finite-difference oracle") {
    const BiPoly xi = BiPoly::xi();
    const BiPoly xb = BiPoly::xibar();
    const BiPoly one = BiPoly::one();

    const ProjectorTower t = build_tower(seed_from_strings({{"1"}, {"0", "1"}}));
    const BiPoly q = one + xi * xb;
    const RatFun expect(one, q * q);
    CHECK(lagrangian_density(t.p[0]) == expect);
    CHECK(lagrangian_density(t.p[1]) == expect);

    CHECK(lagrangian_density(build_P0(seed_from_strings({{"1"}, {"0"}}))).is_zero());

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coord(-0.7, 0.7);
    const double h = 1e-4;
    for (int pt = 0; pt < 3; ++pt) {
        const std::complex<double> u(coord(rng), coord(rng));
        const std::complex<double> v(coord(rng), coord(rng));
        const Mat plus = eval_entries(t.p[0], u + h, v);
        const Mat minus = eval_entries(t.p[0], u - h, v);
        const Mat bplus = eval_entries(t.p[0], u, v + h);
        const Mat bminus = eval_entries(t.p[0], u, v - h);
        std::complex<double> tr{0.0, 0.0};
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                const std::complex<double> dp = (plus[a][b] - minus[a][b]) / (2.0 * h);
                const std::complex<double> db = (bplus[b][a] - bminus[b][a]) / (2.0 * h);
                tr += dp * db;
            }
        CHECK(std::abs(tr - lagrangian_density(t.p[0]).eval(u, v)) < 1e-6);
    }
}

TEST_CASE("holomorphy classification across a tower") {
    const ProjectorTower t = build_tower(seed_from_strings({{"1"}, {"0", "1"}, {"0", "0", "1"}}));
    CHECK(holomorphy_class(t.p[0]) == HolomorphyClass::holomorphic);
    CHECK(holomorphy_class(t.p[1]) == HolomorphyClass::mixed);
    CHECK(holomorphy_class(t.p[2]) == HolomorphyClass::antiholomorphic);
    CHECK_THROWS_AS(holomorphy_class(build_P0(seed_from_strings({{"1"}, {"0"}}))), DegenerateProjector);
}

TEST_CASE("tower invariants across assorted seeds") {
    const std::vector<std::vector<std::vector<std::string>>> seeds = {
        {{"1"}, {"0", "1"}},
        {{"1"}, {"1", "2"}},
        {{"1"}, {"0", "i"}},
        {{"1"}, {"0", "1"}, {"0", "0", "1"}},
        {{"1"}, {"0", "1"}, {"1", "0", "1"}},
        {{"1", "1"}, {"-1", "1"}, {"0", "0", "1"}},
    };
    for (const auto& spec : seeds) {
        const ProjectorTower t = build_tower(seed_from_strings(spec));
        const int n = t.n;
        MatRF sum(n);
        for (const auto& p : t.p) {
            CHECK(is_rank_one_projector(p));
            CHECK(verify_el(p));
            CHECK(verify_conservation(p));
            sum += p;
        }
        CHECK(sum.is_identity());
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (k == j) continue;
                CHECK(mat_is_zero(t.p[static_cast<std::size_t>(k)] * t.p[static_cast<std::size_t>(j)]));
            }
        for (int k = 0; k + 1 < n; ++k) {
            const auto up = pi_plus(t.p[static_cast<std::size_t>(k)]);
            REQUIRE(up.has_value());
            CHECK(*up == t.p[static_cast<std::size_t>(k) + 1]);
            const auto down = pi_minus(*up);
            REQUIRE(down.has_value());
            CHECK(*down == t.p[static_cast<std::size_t>(k)]);
        }
    }
}
