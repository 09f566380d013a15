#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diskspace/errors.hpp"
#include "diskspace/norms.hpp"
#include "diskspace/suite.hpp"
#include "oracles.hpp"

using namespace diskspace;

namespace {

DiskFunction poly(std::vector<Complex> coeffs) {
    return DiskFunction::power_series(std::move(coeffs));
}

} // namespace

TEST_CASE("hardy norm: constant and monomial") {
    auto c = DiskFunction::constant({3.0, 4.0});
    CHECK(hardy_norm(c, 2.0).value == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(hardy_norm(c, std::numeric_limits<double>::infinity()).value ==
          doctest::Approx(5.0).epsilon(1e-10));

    // means of f(z) = z are r; sup over r < 1 extrapolates to 1
    auto id = battery::identity_fn();
    NormValue h = hardy_norm(id, 2.0);
    CHECK(h.finite());
    CHECK(h.value == doctest::Approx(1.0).epsilon(1e-9));

    NormValue hinf = hardy_norm(id, std::numeric_limits<double>::infinity());
    CHECK(hinf.finite());
    CHECK(hinf.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("hardy norm flags truncated 1/(1-z) as apparently unbounded") {
    std::vector<Complex> coeffs(60, Complex{1.0, 0.0});
    auto f = poly(coeffs);
    SupSearchConfig search;
    search.radialCount = 6; // resolvable range for a 60-term truncation

    NormValue h = hardy_norm(f, 2.0, {}, search);
    CHECK_FALSE(h.finite());

    // Oracle: fit the Parseval means over the same schedule radii.
    std::vector<double> xs, ys;
    for (int k = 1; k <= 6; ++k) {
        double r = 1.0 - std::ldexp(1.0, -k);
        xs.push_back(-std::log1p(-r));
        ys.push_back(std::log(oracles::parseval_mean2(coeffs, r)));
    }
    double oracleExponent = oracles::ls_slope(xs, ys);
    CHECK(oracleExponent > 0.35);
    CHECK(oracleExponent < 0.6);
    CHECK(h.growthExponent == doctest::Approx(oracleExponent).epsilon(0.1));
}

TEST_CASE("bloch norm: anchors from closed forms") {
    auto idMaj = Majorant::identity();
    auto c = DiskFunction::constant({1.0, -2.0});
    BlochParams pinf(std::numeric_limits<double>::infinity(), 1.0, 0.0);
    CHECK(bloch_norm(c, pinf, idMaj).value ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));

    // f(z) = z: 0 + sup (1-|z|) = 1 at z = 0
    auto id = battery::identity_fn();
    NormValue b = bloch_norm(id, pinf, idMaj);
    CHECK(b.finite());
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-10));

    // finite p branch has the same value for f(z) = z
    BlochParams p2(2.0, 1.0, 0.0);
    CHECK(bloch_norm(id, p2, idMaj).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("bloch norm of truncated -log(1-z): sup of (1-|z|)/|1-z| is 1") {
    auto f = battery::truncated_log(200);
    BlochParams pinf(std::numeric_limits<double>::infinity(), 1.0, 0.0);
    NormValue b = bloch_norm(f, pinf, Majorant::identity());
    CHECK(b.finite());
    CHECK(b.value == doctest::Approx(1.0).epsilon(2e-2));
}

TEST_CASE("bloch norm equals the classical alpha-Bloch norm for analytic f") {
    // cross-check against a direct brute-force implementation on closed forms
    struct Entry {
        DiskFunction f;
        std::function<Complex(Complex)> deriv;
    };
    std::vector<Entry> entries;
    entries.push_back({battery::square_fn(), [](Complex z) { return 2.0 * z; }});
    entries.push_back({poly({{0.3, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                       [](Complex z) { return Complex{1.0, 0.0} + 3.0 * z * z; }});
    entries.push_back({battery::log_series(0.9, 60), [](Complex z) {
                           // derivative of the partial sum: sum 0.9^n z^{n-1}
                           Complex acc{0.0, 0.0};
                           Complex zp{1.0, 0.0};
                           double rn = 0.9;
                           for (int n = 1; n <= 60; ++n) {
                               acc += rn * zp;
                               zp *= z;
                               rn *= 0.9;
                           }
                           return acc;
                       }});
    for (double alpha : {0.5, 1.0, 1.5}) {
        BlochParams params(std::numeric_limits<double>::infinity(), alpha, 0.0);
        for (auto& e : entries) {
            double direct =
                std::abs(e.f.eval({0.0, 0.0})) +
                oracles::grid_sup([&](Complex z) {
                    return std::pow(1.0 - std::abs(z), alpha) * std::abs(e.deriv(z));
                });
            NormValue b = bloch_norm(e.f, params, Majorant::identity());
            CHECK(b.value == doctest::Approx(direct).epsilon(5e-3));
        }
    }
}

TEST_CASE("bloch norm is nonincreasing in alpha") {
    auto f = battery::square_fn();
    double prev = std::numeric_limits<double>::infinity();
    for (double alpha : {0.5, 1.0, 1.5}) {
        BlochParams params(std::numeric_limits<double>::infinity(), alpha, 0.0);
        double v = bloch_norm(f, params, Majorant::identity()).value;
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("norm functionals are homogeneous") {
    std::vector<Complex> scalars = {{2.0, 0.0}, {-3.0, 0.0}, {0.0, 1.0}};
    std::vector<DiskFunction> fns;
    fns.push_back(poly({{0.2, 0.1}, {1.0, 0.0}, {0.5, -0.2}}));
    fns.push_back(DiskFunction::harmonic_pair({{0.0, 0.0}, {1.0, 0.0}},
                                              {{0.0, 0.0}, {0.5, 0.0}}));
    fns.push_back(DiskFunction::lacunary(5));
    fns.push_back(DiskFunction::yukawa_exp(1.0));
    BlochParams pinf(std::numeric_limits<double>::infinity(), 1.0, 0.0);
    for (const auto& f : fns) {
        double base = bloch_norm(f, pinf, Majorant::identity()).value;
        double hardyBase = hardy_norm(f, 2.0).value;
        // mu = 1 is the homogeneous member of the Dirichlet family; for
        // mu != 1 the integral term scales like |c|^mu by design.
        double dirBase = dirichlet_norm(f, 1.0, 1.0).value;
        for (Complex c : scalars) {
            auto g = f.scaled(c);
            double mag = std::abs(c);
            CHECK(bloch_norm(g, pinf, Majorant::identity()).value ==
                  doctest::Approx(mag * base).epsilon(1e-9));
            CHECK(hardy_norm(g, 2.0).value ==
                  doctest::Approx(mag * hardyBase).epsilon(1e-9));
            CHECK(dirichlet_norm(g, 1.0, 1.0).value ==
                  doctest::Approx(mag * dirBase).epsilon(1e-9));
        }
    }
}

TEST_CASE("little Bloch membership") {
    BlochParams pinf(std::numeric_limits<double>::infinity(), 1.0, 0.0);
    auto idMaj = Majorant::identity();
    CHECK(little_bloch_limit(battery::identity_fn(), pinf, idMaj).passed());
    CHECK(little_bloch_limit(DiskFunction::constant({2.0, 0.0}), pinf, idMaj).passed());

    SupSearchConfig search;
    search.radialCount = 7; // resolvable range for 200 terms
    CheckReport r = little_bloch_limit(battery::truncated_log(200), pinf, idMaj,
                                       {}, search);
    CHECK(r.verdict == Verdict::Fail);

    BlochParams finite(2.0, 1.0, 0.0);
    CHECK_THROWS_AS(little_bloch_limit(battery::identity_fn(), finite, idMaj), Error);
}

TEST_CASE("dirichlet norm closed forms") {
    auto c = DiskFunction::constant({0.0, -2.5});
    CHECK(dirichlet_norm(c, 1.0, 2.0).value == doctest::Approx(2.5).epsilon(1e-12));

    // f(z) = z, gamma=1, mu=2: 2 int (1-t) t dt = 1/3
    NormValue a = dirichlet_norm(battery::identity_fn(), 1.0, 2.0);
    CHECK(a.finite());
    CHECK(a.value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

    // f(z) = z^2: ||D_f|| = 2|z|, 8 int t^3 (1-t) dt = 0.4
    NormValue b = dirichlet_norm(battery::square_fn(), 1.0, 2.0);
    CHECK(b.value == doctest::Approx(0.4).epsilon(1e-10));

    CHECK_THROWS_AS(dirichlet_norm(c, 0.0, 2.0), Error);
}

TEST_CASE("dirichlet norm reports divergence for steep truncations") {
    // f' ~ (1-r)^-2 within the resolvable range: d |f'|^2 ~ (1-r)^-3
    std::vector<Complex> coeffs;
    coeffs.push_back({0.0, 0.0});
    for (int n = 1; n <= 300; ++n) coeffs.push_back({static_cast<double>(n), 0.0});
    // bypass the growth guard: coefficients grow polynomially, fine
    auto f = poly(coeffs);
    QuadratureConfig quad;
    quad.scheduleK = 8; // resolvable for 300 terms
    NormValue d = dirichlet_norm(f, 1.0, 2.0, quad);
    CHECK_FALSE(d.finite());
    CHECK(d.growthExponent == doctest::Approx(2.0).epsilon(0.3));
}

TEST_CASE("lipschitz quotient sup") {
    auto idMaj = Majorant::identity();
    CHECK(lipschitz_quotient_sup(DiskFunction::constant({1.0, 1.0}), idMaj, 0.0, 0.5)
              .value == doctest::Approx(0.0));

    // f(z) = z, s=0, alpha=0.5: sup_w d^{1/2}(w) = 1 at w = 0
    NormValue a = lipschitz_quotient_sup(battery::identity_fn(), idMaj, 0.0, 0.5);
    CHECK(a.finite());
    CHECK(a.value == doctest::Approx(1.0).epsilon(5e-3));

    // f(z) = z, s=0.5, alpha=0.5: sup_z d^{1/2}(z) = 1
    NormValue b = lipschitz_quotient_sup(battery::identity_fn(), idMaj, 0.5, 0.5);
    CHECK(b.finite());
    CHECK(b.value == doctest::Approx(1.0).epsilon(5e-3));

    CHECK_THROWS_AS(lipschitz_quotient_sup(battery::identity_fn(), idMaj, 1.0, 1.0),
                    Error);
    CHECK_THROWS_AS(lipschitz_quotient_sup(battery::identity_fn(), idMaj, 0.5, 1.9),
                    Error);
}

TEST_CASE("lipschitz quotient dominates the weighted derivative sup") {
    // diagonal limit direction: sup_z ||D_f|| omega(d^alpha(z))
    auto f = battery::square_fn();
    double s = 0.5, alpha = 0.8;
    NormValue q = lipschitz_quotient_sup(f, Majorant::identity(), s, alpha);
    double derivSup = oracles::grid_sup([&](Complex z) {
        return f.jacobian_norms(z).opNorm * std::pow(1.0 - std::abs(z), alpha);
    });
    CHECK(q.value >= derivSup - 5e-3);
}

TEST_CASE("mean oscillation closed forms") {
    QuadratureConfig quad;
    auto c = DiskFunction::constant({2.0, 2.0});
    CHECK(mean_oscillation(c, {0.1, 0.1}, 0.5, quad) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // f(zeta) = zeta centered at 0: (1/(pi r^2)) int |zeta| dA = 2r/3
    auto id = battery::identity_fn();
    for (double r : {0.3, 0.5, 0.9}) {
        CHECK(mean_oscillation(id, {0.0, 0.0}, r, quad) ==
              doctest::Approx(2.0 * r / 3.0).epsilon(1e-9));
    }

    // f = Re zeta at z=0, r=0.5: 4r/(3 pi)
    auto re = battery::re_z();
    CHECK(mean_oscillation(re, {0.0, 0.0}, 0.5, quad) ==
          doctest::Approx(4.0 * 0.5 / (3.0 * std::numbers::pi)).epsilon(1e-5));

    CHECK_THROWS_AS(mean_oscillation(id, {0.5, 0.0}, 0.6, quad), Error);
}

TEST_CASE("mean oscillation is bounded by twice the sup of |f|") {
    auto f = DiskFunction::harmonic_pair({{0.1, 0.0}, {0.8, 0.0}},
                                         {{0.0, 0.0}, {0.0, 0.4}});
    Complex z{0.2, 0.1};
    double r = 0.5;
    double mo = mean_oscillation(f, z, r);
    double supAbs = 0.0;
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j < 32; ++j) {
            double rho = r * i / 20.0;
            double th = 2.0 * std::numbers::pi * j / 32.0;
            Complex w = z + Complex{rho * std::cos(th), rho * std::sin(th)};
            if (std::abs(w) < 1.0) supAbs = std::max(supAbs, std::abs(f.eval(w)));
        }
    CHECK(mo <= 2.0 * supAbs + 1e-9);
}

TEST_CASE("oscillation profile") {
    auto idMaj = Majorant::identity();
    CHECK(oscillation_profile(DiskFunction::constant({5.0, 0.0}), idMaj, 1.0).value ==
          doctest::Approx(0.0));

    // f = zeta: MO(z, r) = 2r/3, profile sup = 2/3 as r -> 1 at z = 0
    NormValue p = oscillation_profile(battery::identity_fn(), idMaj, 1.0);
    CHECK(p.finite());
    CHECK(p.value == doctest::Approx(2.0 / 3.0).epsilon(2e-3));

    // f = Re zeta: 4/(3 pi)
    NormValue q = oscillation_profile(battery::re_z(), idMaj, 1.0);
    CHECK(q.value == doctest::Approx(4.0 / (3.0 * std::numbers::pi)).epsilon(5e-3));

    CHECK_THROWS_AS(oscillation_profile(DiskFunction::yukawa_exp(1.0), idMaj, 1.0),
                    Error);
    CHECK_THROWS_AS(oscillation_profile(battery::re_z(), idMaj, 2.5), Error);
}

TEST_CASE("oscillation profile grows for a steep harmonic function") {
    // h' ~ (1-r)^-2.5 within the resolvable range, so the alpha = 1 profile
    // and the weighted derivative both blow up toward the boundary.
    std::vector<Complex> coeffs{{0.0, 0.0}};
    for (int n = 1; n <= 60; ++n)
        coeffs.push_back({std::pow(static_cast<double>(n), 0.5), 0.0});
    auto f = DiskFunction::harmonic_pair(coeffs, {});
    SupSearchConfig search;
    search.radialCount = 5;
    search.angularCount = 16;

    BlochParams pinf(std::numeric_limits<double>::infinity(), 1.0, 0.0);
    NormValue b = bloch_norm(f, pinf, Majorant::identity(), {}, search);
    CHECK_FALSE(b.finite());

    NormValue p = oscillation_profile(f, Majorant::identity(), 1.0, {}, search);
    CHECK_FALSE(p.finite());
}

TEST_CASE("boundary sequence classifier") {
    std::vector<double> radii;
    for (int k = 1; k <= 10; ++k) radii.push_back(1.0 - std::ldexp(1.0, -k));

    SUBCASE("geometric approach extrapolates the limit") {
        std::vector<double> vals;
        for (double r : radii) vals.push_back(r); // v = r -> 1
        auto cls = classify_boundary_sequence(radii, vals, 1e-10);
        CHECK(cls.verdict == Boundedness::Finite);
        CHECK(cls.limitValue == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("doubling values are unbounded with the right exponent") {
        std::vector<double> vals;
        for (double r : radii) vals.push_back(std::pow(1.0 - r, -0.5));
        auto cls = classify_boundary_sequence(radii, vals, 1e-10);
        CHECK(cls.verdict == Boundedness::ApparentlyUnbounded);
        CHECK(cls.growthExponent == doctest::Approx(0.5).epsilon(1e-6));
    }
    SUBCASE("peaked-then-decaying sequences are finite") {
        std::vector<double> vals = {1, 2, 4, 6, 5, 3, 2, 1.5, 1.2, 1.1};
        auto cls = classify_boundary_sequence(radii, vals, 1e-10);
        CHECK(cls.verdict == Boundedness::Finite);
        CHECK(cls.limitValue == doctest::Approx(6.0));
    }
}

TEST_CASE("sup search config validation") {
    SupSearchConfig s;
    CHECK_NOTHROW(s.validate());
    s.radialCount = 3;
    CHECK_THROWS_AS(s.validate(), Error);
    s = {};
    s.angularCount = 4;
    CHECK_THROWS_AS(s.validate(), Error);
}
