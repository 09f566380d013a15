#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diskspace/disk_function.hpp"
#include "diskspace/errors.hpp"

using namespace diskspace;

namespace {

std::vector<Complex> sample_points(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rd(0.0, 0.95), td(0.0, 2.0 * 3.14159265);
    std::vector<Complex> pts;
    for (int i = 0; i < n; ++i) {
        double r = rd(rng), t = td(rng);
        pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return pts;
}

} // namespace

TEST_CASE("power series construction and evaluation") {
    auto f = DiskFunction::power_series({{0.0, 0.0}, {1.0, 0.0}});
    CHECK(f.capabilities().isAnalytic);
    CHECK(f.capabilities().isHarmonic);
    CHECK(f.capabilities().hasExactDerivatives);
    Complex z{0.3, 0.4};
    CHECK(f.eval(z) == z);

    auto c = DiskFunction::constant({2.0, -1.0});
    CHECK(c.eval({0.5, 0.1}) == Complex{2.0, -1.0});
    CHECK(c.eval({-0.9, 0.0}) == Complex{2.0, -1.0});
}

TEST_CASE("evaluation outside the disk is rejected") {
    auto f = DiskFunction::power_series({{0.0, 0.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(f.eval({1.0, 0.0}), Error);
    CHECK_THROWS_AS(f.eval({0.8, 0.8}), Error);
    try {
        f.eval({1.5, 0.0});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfDomain);
    }
}

TEST_CASE("malformed specs are rejected") {
    CHECK_THROWS_AS(DiskFunction::lacunary(0), Error);
    CHECK_THROWS_AS(DiskFunction::yukawa_exp(-1.0), Error);
    double nan = std::nan("");
    CHECK_THROWS_AS(DiskFunction::power_series({{nan, 0.0}}), Error);

    // Geometric coefficient growth means radius of convergence < 1.
    std::vector<Complex> growing;
    double c = 1.0;
    for (int n = 0; n < 40; ++n) {
        growing.push_back({c, 0.0});
        c *= 2.0;
    }
    CHECK_THROWS_AS(DiskFunction::power_series(growing), Error);

    // Radius exactly 1 (flat, harmonic-series tails) is fine.
    std::vector<Complex> flat(100, Complex{1.0, 0.0});
    CHECK_NOTHROW(DiskFunction::power_series(flat));
    std::vector<Complex> spike(60, Complex{0.0, 0.0});
    spike.back() = {1e6, 0.0};
    CHECK_NOTHROW(DiskFunction::power_series(spike));
}

TEST_CASE("lacunary partial sums use exponents 2^n, n = 0..N-1") {
    auto f = DiskFunction::lacunary(3); // z + z^2 + z^4
    double r = 0.5;
    CHECK(f.eval({r, 0.0}).real() == doctest::Approx(0.5 + 0.25 + 0.0625).epsilon(1e-14));

    // independent sparse-sum oracle at a complex point
    Complex z{0.3, -0.2};
    Complex expected = std::pow(z, 1.0) + std::pow(z, 2.0) + std::pow(z, 4.0);
    CHECK(std::abs(f.eval(z) - expected) < 1e-14);

    // derivative: 1 + 2z + 4z^3
    Complex dExpected = 1.0 + 2.0 * z + 4.0 * std::pow(z, 3.0);
    CHECK(std::abs(f.wirtinger(z).fz - dExpected) < 1e-13);
    CHECK(f.wirtinger({0.0, 0.0}).fz == Complex{1.0, 0.0});
    CHECK(f.second_wirtinger({0.0, 0.0}).fzz == Complex{2.0, 0.0});
}

TEST_CASE("yukawa family satisfies its PDE exactly") {
    auto f4 = DiskFunction::yukawa_exp(4.0);
    Complex z{0.2, 0.0};
    CHECK(std::abs(f4.laplacian(z) - 4.0 * f4.eval(z)) < 1e-10);

    auto f1 = DiskFunction::yukawa_exp(1.0);
    CHECK(f1.eval({0.5, 0.0}).real() == doctest::Approx(std::exp(0.5)).epsilon(1e-14));

    // f_z = f_zbar = e^{2x} for lambda = 4
    Complex w{0.1, 0.6};
    auto d = f4.wirtinger(w);
    double e2x = std::exp(2.0 * w.real());
    CHECK(std::abs(d.fz - Complex{e2x, 0.0}) < 1e-12);
    CHECK(std::abs(d.fzbar - Complex{e2x, 0.0}) < 1e-12);
}

TEST_CASE("wirtinger derivatives of conjugate and square") {
    // f(z) = conj(z): (f_z, f_zbar) = (0, 1)
    auto conj = DiskFunction::harmonic_pair({}, {{0.0, 0.0}, {1.0, 0.0}});
    auto d = conj.wirtinger({0.3, -0.5});
    CHECK(std::abs(d.fz) < 1e-15);
    CHECK(std::abs(d.fzbar - Complex{1.0, 0.0}) < 1e-15);

    auto sq = DiskFunction::power_series({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    auto ds = sq.wirtinger({0.3, 0.0});
    CHECK(std::abs(ds.fz - Complex{0.6, 0.0}) < 1e-15);
    CHECK(std::abs(ds.fzbar) == 0.0);
}

TEST_CASE("laplacian: analytic zero, |z|^2 numeric, yukawa identity") {
    auto sq = DiskFunction::power_series({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    CHECK(std::abs(sq.laplacian({0.4, 0.2})) == 0.0);

    auto abs2 = DiskFunction::numeric(
        [](Complex z) -> Complex { return {std::norm(z), 0.0}; });
    CHECK(std::abs(abs2.laplacian({0.25, -0.3}) - Complex{4.0, 0.0}) < 1e-6);

    auto f1 = DiskFunction::yukawa_exp(1.0);
    CHECK(std::abs(f1.laplacian({0.2, 0.0}) - f1.eval({0.2, 0.0})) < 1e-10);
}

TEST_CASE("jacobian norms") {
    auto id = DiskFunction::power_series({{0.0, 0.0}, {1.0, 0.0}});
    auto n = id.jacobian_norms({0.3, 0.3});
    CHECK(n.opNorm == doctest::Approx(1.0));
    CHECK(n.coNorm == doctest::Approx(1.0));

    // f = z + conj(z)/2
    auto mix = DiskFunction::harmonic_pair({{0.0, 0.0}, {1.0, 0.0}},
                                           {{0.0, 0.0}, {0.5, 0.0}});
    auto m = mix.jacobian_norms({0.1, 0.7});
    CHECK(m.opNorm == doctest::Approx(1.5));
    CHECK(m.coNorm == doctest::Approx(0.5));

    // h = z^2, g = z at z = 0.5: (|2z| + 1, ||2z| - 1|) = (2, 0)
    auto hp = DiskFunction::harmonic_pair(
        {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}});
    auto j = hp.jacobian_norms({0.5, 0.0});
    CHECK(j.opNorm == doctest::Approx(2.0));
    CHECK(j.coNorm == doctest::Approx(0.0));
}

TEST_CASE("family invariants on sampled points") {
    auto pts = sample_points(60, 20240810u);

    SUBCASE("analytic families have exactly zero fzbar") {
        auto poly = DiskFunction::power_series(
            {{0.1, 0.2}, {1.0, 0.0}, {0.0, -0.4}, {0.3, 0.0}});
        auto lac = DiskFunction::lacunary(6);
        for (Complex z : pts) {
            CHECK(std::abs(poly.wirtinger(z).fzbar) == 0.0);
            CHECK(std::abs(lac.wirtinger(z).fzbar) == 0.0);
        }
    }

    SUBCASE("numeric wrapper of an analytic function has tiny fzbar") {
        auto wrapped = DiskFunction::numeric(
            [](Complex z) { return z * z + Complex{0.3, 0.1} * z; });
        for (Complex z : pts) CHECK(std::abs(wrapped.wirtinger(z).fzbar) < 1e-9);
    }

    SUBCASE("harmonic pair laplacian vanishes") {
        auto hp = DiskFunction::harmonic_pair(
            {{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}},
            {{0.0, 0.0}, {0.0, 0.3}, {0.0, 0.0}, {0.25, 0.0}});
        for (Complex z : pts) CHECK(std::abs(hp.laplacian(z)) < 1e-8);
    }

    SUBCASE("yukawa PDE residual") {
        auto f = DiskFunction::yukawa_exp(2.5);
        for (Complex z : pts) {
            double scale = 1.0 + std::abs(f.eval(z));
            CHECK(std::abs(f.laplacian(z) - 2.5 * f.eval(z)) < 1e-8 * scale);
        }
    }

    SUBCASE("opNorm dominates coNorm") {
        auto hp = DiskFunction::harmonic_pair(
            {{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.9}});
        for (Complex z : pts) {
            auto n = hp.jacobian_norms(z);
            CHECK(n.opNorm >= n.coNorm);
            CHECK(n.coNorm >= 0.0);
        }
    }
}

TEST_CASE("closed-form wirtinger agrees with central differences") {
    auto pts = sample_points(25, 7u);
    std::vector<DiskFunction> fams;
    fams.push_back(DiskFunction::power_series({{0.2, 0.0}, {1.0, 0.5}, {0.0, 0.0}, {-0.3, 0.1}}));
    fams.push_back(DiskFunction::lacunary(5));
    fams.push_back(DiskFunction::harmonic_pair({{0.0, 0.0}, {1.0, 0.0}},
                                               {{0.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}}));
    fams.push_back(DiskFunction::yukawa_exp(1.5));
    for (const auto& f : fams) {
        for (Complex z : pts) {
            auto exact = f.wirtinger(z);
            auto fd = numeric_wirtinger([&f](Complex w) { return f.eval(w); }, z);
            CHECK(std::abs(exact.fz - fd.fz) < 1e-6);
            CHECK(std::abs(exact.fzbar - fd.fzbar) < 1e-6);
        }
    }
}

TEST_CASE("step underflow near the boundary for numeric differencing") {
    auto f = DiskFunction::numeric([](Complex z) { return z; });
    try {
        f.wirtinger({1.0 - 1e-7, 0.0});
        FAIL("expected StepUnderflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StepUnderflow);
    }
}

TEST_CASE("scaled copies preserve derivatives and capabilities") {
    auto f = DiskFunction::lacunary(4);
    Complex c{2.0, 1.0};
    auto g = f.scaled(c);
    CHECK(g.capabilities().isAnalytic);
    Complex z{0.4, 0.1};
    CHECK(std::abs(g.eval(z) - c * f.eval(z)) < 1e-15);
    CHECK(std::abs(g.wirtinger(z).fz - c * f.wirtinger(z).fz) < 1e-14);
    CHECK(std::abs(g.laplacian(z)) == 0.0);
}
