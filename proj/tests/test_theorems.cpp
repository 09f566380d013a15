#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diskspace/errors.hpp"
#include "diskspace/suite.hpp"
#include "diskspace/theorems.hpp"
#include "oracles.hpp"

using namespace diskspace;

namespace {

DiskFunction abs2_fn() { return battery::abs2_numeric(); }

// Re(conj(f) Lap f) < 0 everywhere away from 0: f = 2 - |z|^2.
DiskFunction concave_bump() {
    return DiskFunction::numeric(
        [](Complex z) -> Complex { return {2.0 - std::norm(z), 0.0}; });
}

// Third-order sign violator: f = exp(-|z|^2).
DiskFunction gaussian_bump() {
    return DiskFunction::numeric(
        [](Complex z) -> Complex { return {std::exp(-std::norm(z)), 0.0}; });
}

} // namespace

TEST_CASE("heinz check") {
    auto grid = hypothesis_grid(6, 12);

    SUBCASE("analytic with zero coefficients") {
        CHECK(heinz_check(battery::square_fn(), HeinzCoefficients::zero(), grid)
                  .passed());
    }
    SUBCASE("yukawa saturates with b = lambda") {
        auto f = DiskFunction::yukawa_exp(2.0);
        CHECK(heinz_check(f, HeinzCoefficients::constants(0.0, 2.0, 0.0), grid)
                  .passed());
    }
    SUBCASE("|z|^2 with q = 3 fails: Laplacian is 4") {
        CheckReport r =
            heinz_check(abs2_fn(), HeinzCoefficients::constants(0.0, 0.0, 3.0), grid);
        CHECK(r.verdict == Verdict::Fail);
        CHECK(r.worst.lhs == doctest::Approx(4.0).epsilon(1e-6));
    }
    SUBCASE("negative coefficients are rejected") {
        CHECK_THROWS_AS(HeinzCoefficients::constants(-1.0, 0.0, 0.0), Error);
    }
}

TEST_CASE("growth bound: hand-checkable anchor at f(z) = z") {
    BlochParams params(2.0, 1.0, 0.0);
    CheckReport r = growth_bound_verify(battery::identity_fn(), params,
                                Majorant::identity(), HeinzCoefficients::zero(), 0.5);
    CHECK(r.passed());
    REQUIRE(r.samples.size() == 1);
    CHECK(r.samples[0].lhs == doctest::Approx(0.5).epsilon(1e-10));
    // closed form: I(r) = (-r - log(1-r))/r^2 at r = 1/2
    double I = (-0.5 - std::log(0.5)) / 0.25;
    CHECK(I == doctest::Approx(0.772588722239781).epsilon(1e-12));
    CHECK(r.samples[0].rhs == doctest::Approx(std::sqrt(I)).epsilon(1e-9));
}

TEST_CASE("growth bound passes on the yukawa battery at two resolutions") {
    BlochParams params(2.0, 1.0, 0.0);
    auto f = DiskFunction::yukawa_exp(1.0);
    auto coeffs = HeinzCoefficients::constants(0.0, 1.0, 0.0);

    QuadratureConfig coarse;
    QuadratureConfig fine;
    fine.angularNodes = 1024;
    fine.scheduleK = 16;

    CheckReport a = growth_bound_verify(f, params, Majorant::identity(), coeffs, 0.9, coarse);
    CheckReport b = growth_bound_verify(f, params, Majorant::identity(), coeffs, 0.9, fine);
    CHECK(a.passed());
    CHECK(b.passed());
    CHECK(a.samples[0].lhs == doctest::Approx(b.samples[0].lhs).epsilon(1e-8));
    CHECK(a.samples[0].rhs == doctest::Approx(b.samples[0].rhs).epsilon(1e-6));
}

TEST_CASE("growth bound hypothesis gating") {
    BlochParams params(2.0, 1.0, 0.0);
    SUBCASE("sup b >= 4/p") {
        CheckReport r =
            growth_bound_verify(battery::identity_fn(), params, Majorant::identity(),
                        HeinzCoefficients::constants(0.0, 2.0, 0.0), 0.5);
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
    SUBCASE("sign hypothesis fails for 2 - |z|^2") {
        CheckReport r = growth_bound_verify(concave_bump(), params, Majorant::identity(),
                                    HeinzCoefficients::constants(0.0, 1.9, 0.1), 0.5);
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
    SUBCASE("p below 2 is outside the statement") {
        CHECK_THROWS_AS(growth_bound_verify(battery::identity_fn(), BlochParams(1.5, 1.0, 0.0),
                                    Majorant::identity(), HeinzCoefficients::zero(),
                                    0.5),
                        Error);
    }
}

TEST_CASE("yukawa corollary") {
    BlochParams params(2.0, 1.0, 0.0);
    SUBCASE("constant solves the lambda = 0 equation") {
        CheckReport r = yukawa_growth_verify(DiskFunction::constant({1.0, 0.0}), params,
                                    Majorant::identity(), 0.0, 0.5);
        CHECK(r.passed());
        CHECK(r.samples[0].lhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("yukawa(1) at two radii") {
        auto f = DiskFunction::yukawa_exp(1.0);
        for (double r : {0.5, 0.9}) {
            CheckReport rep = yukawa_growth_verify(f, params, Majorant::identity(), 1.0, r);
            CHECK(rep.passed());
        }
    }
    SUBCASE("PDE mismatch is a hypothesis violation") {
        CheckReport r = yukawa_growth_verify(DiskFunction::yukawa_exp(2.0), params,
                                    Majorant::identity(), 1.0, 0.5);
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
    SUBCASE("lambda above 4/p") {
        CheckReport r = yukawa_growth_verify(DiskFunction::yukawa_exp(3.0), params,
                                    Majorant::identity(), 3.0, 0.5);
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
}

TEST_CASE("lacunary means and sharpness") {
    SUBCASE("parseval fast path against direct summation") {
        for (double r : {0.9, 0.99, 0.999}) {
            double direct = 0.0;
            for (int n = 0; n < 14; ++n)
                direct += std::pow(r, std::pow(2.0, n + 1));
            CHECK(lacunary_mean2(14, r) ==
                  doctest::Approx(std::sqrt(direct)).epsilon(1e-13));
        }
    }
    SUBCASE("regression baseline at r = 0.99, N = 14") {
        // frozen from the Parseval oracle: sqrt(sum r^(2^(n+1))) / sqrt(L)
        double ratio = lacunary_mean2(14, 0.99) / std::sqrt(-std::log1p(-0.99));
        CHECK(ratio == doctest::Approx(1.075207032590).epsilon(1e-9));
    }
    SUBCASE("band and exponent over the schedule grid") {
        std::vector<double> grid{0.9};
        for (int k = 4; k <= 13; ++k) grid.push_back(1.0 - std::ldexp(1.0, -k));
        SharpnessReport rep = sharpness_fit(14, grid);
        CHECK(rep.check.passed());
        CHECK(rep.bandRatio <= 2.0);
        CHECK(rep.fittedExponent > 0.4);
        CHECK(rep.fittedExponent < 0.6);
    }
    SUBCASE("degenerate and out-of-range grids") {
        CHECK(sharpness_fit(1, {0.9}).check.verdict == Verdict::Inconclusive);
        CHECK_THROWS_AS(sharpness_fit(5, {0.9, 0.98}), Error);
    }
}

TEST_CASE("mean monotonicity") {
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) grid.push_back(0.02 + 0.96 * i / 49.0);

    CHECK(monotone_means_verify(battery::identity_fn(), 2.0, grid).passed());
    CHECK(monotone_means_verify(battery::square_fn(), 3.0, grid).passed());
    CHECK(monotone_means_verify(DiskFunction::yukawa_exp(1.0), 3.0, grid).passed());

    CheckReport r = monotone_means_verify(concave_bump(), 2.0, grid);
    CHECK(r.verdict == Verdict::HypothesisViolated);

    CHECK_THROWS_AS(monotone_means_verify(battery::identity_fn(), 1.0, grid), Error);
}

TEST_CASE("log-weight bound") {
    SUBCASE("constants give equality") {
        CheckReport r =
            log_weight_bound_verify(DiskFunction::constant({1.0, 0.5}), 2.0, 0.8);
        CHECK(r.passed());
        // LHS = |c|^p r^2/2 exactly
        double cp = std::pow(std::abs(Complex{1.0, 0.5}), 2.0);
        CHECK(r.samples[0].lhs == doctest::Approx(cp * 0.32).epsilon(1e-9));
        CHECK(r.samples[0].rhs == doctest::Approx(cp * 0.32).epsilon(1e-9));
    }
    SUBCASE("strict inequality for z") {
        CheckReport r = log_weight_bound_verify(battery::identity_fn(), 2.0, 0.8);
        CHECK(r.passed());
        CHECK(r.samples[0].lhs < r.samples[0].rhs);
    }
    SUBCASE("yukawa") {
        CHECK(log_weight_bound_verify(DiskFunction::yukawa_exp(1.0), 2.0, 0.8).passed());
    }
    SUBCASE("hypothesis gating") {
        CHECK(log_weight_bound_verify(concave_bump(), 2.0, 0.5).verdict ==
              Verdict::HypothesisViolated);
    }
}

TEST_CASE("subharmonicity of |f_z|^2 + |f_zbar|^2") {
    auto samples = hypothesis_grid(6, 8);

    SUBCASE("harmonic pair: Laplacian F = 4(|h''|^2 + |g''|^2)") {
        auto f = DiskFunction::harmonic_pair(
            {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}});
        CHECK(subharmonic_verify(f, samples).passed());
    }
    SUBCASE("z^2: Laplacian F = 16") {
        CHECK(subharmonic_verify(battery::square_fn(), samples).passed());
    }
    SUBCASE("yukawa families") {
        CHECK(subharmonic_verify(DiskFunction::yukawa_exp(1.0), samples).passed());
        CHECK(subharmonic_verify(DiskFunction::yukawa_exp(4.0), samples).passed());
    }
    SUBCASE("gaussian bump violates the sign hypothesis") {
        CheckReport r = subharmonic_verify(gaussian_bump(), samples);
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
}

TEST_CASE("gradient decay with explicit constant") {
    SUBCASE("f(z) = z, gamma = 1: C6 = 4/sqrt(3)") {
        CheckReport r = gradient_decay_verify(battery::identity_fn(), 1.0);
        CHECK(r.passed());
        // worst case z = 0: 1 <= C6 = 2^2 sqrt(1/3) ~ 2.309
        CHECK(r.worst.violation <= 0.0);
    }
    SUBCASE("f(z) = z^2, gamma = 1 uses ||f||_D = 0.4") {
        CHECK(gradient_decay_verify(battery::square_fn(), 1.0).passed());
    }
    SUBCASE("harmonic re z at both gammas") {
        CHECK(gradient_decay_verify(battery::re_z(), 0.5).passed());
        CHECK(gradient_decay_verify(battery::re_z(), 1.0).passed());
    }
    SUBCASE("sign violator is gated") {
        CHECK(gradient_decay_verify(gaussian_bump(), 1.0).verdict ==
              Verdict::HypothesisViolated);
    }
    SUBCASE("divergent Dirichlet norm is gated") {
        std::vector<Complex> coeffs;
        coeffs.push_back({0.0, 0.0});
        for (int n = 1; n <= 300; ++n) coeffs.push_back({static_cast<double>(n), 0.0});
        QuadratureConfig quad;
        quad.scheduleK = 8;
        CheckReport r = gradient_decay_verify(DiskFunction::power_series(coeffs), 0.5,
                                              quad);
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
    CHECK_THROWS_AS(gradient_decay_verify(battery::identity_fn(), 1.5), Error);
}

TEST_CASE("hardy membership evidence") {
    SUBCASE("constant") {
        CheckReport r = hardy_membership_estimate(
            DiskFunction::constant({1.0, 0.0}), 1.0,
            HeinzCoefficients::constants(0.0, 0.0, 0.1));
        CHECK(r.passed());
    }
    SUBCASE("yukawa(1), gamma = 1: means bounded by e") {
        CheckReport r = hardy_membership_estimate(
            DiskFunction::yukawa_exp(1.0), 1.0,
            HeinzCoefficients::constants(0.0, 1.0, 0.0));
        CHECK(r.passed());
    }
    SUBCASE("re z, gamma = 0.5: M_4 bounded") {
        CheckReport r = hardy_membership_estimate(
            battery::re_z(), 0.5, HeinzCoefficients::constants(0.0, 0.0, 0.1));
        CHECK(r.passed());
    }
    SUBCASE("identically zero coefficients violate the non-zero hypothesis") {
        CheckReport r = hardy_membership_estimate(battery::re_z(), 0.5,
                                                  HeinzCoefficients::zero());
        CHECK(r.verdict == Verdict::HypothesisViolated);
    }
}

TEST_CASE("characterizations") {
    Majorant id = Majorant::identity();
    SUBCASE("lipschitz characterization agrees for f(z) = z at (0, 0.5)") {
        CheckReport r = characterization_verify(CharacterizationMode::LipschitzQuotient,
                                                battery::identity_fn(), id, 0.0, 0.5);
        CHECK(r.passed());
    }
    SUBCASE("oscillation characterization is trivial for constants") {
        CheckReport r = characterization_verify(CharacterizationMode::MeanOscillation,
                                                DiskFunction::constant({1.0, 1.0}),
                                                id, 0.0, 1.0);
        CHECK(r.passed());
    }
    SUBCASE("boundary-limit characterization for f(z) = z at s = 0.5, alpha = 1") {
        CheckReport r = characterization_verify(CharacterizationMode::BoundaryLimit,
                                                battery::identity_fn(), id, 0.5, 1.0);
        CHECK(r.passed());
    }
    SUBCASE("parameter ranges are enforced") {
        CHECK_THROWS_AS(characterization_verify(CharacterizationMode::LipschitzQuotient,
                                                battery::identity_fn(), id, 0.0, 1.0),
                        Error);
        CHECK_THROWS_AS(characterization_verify(CharacterizationMode::MeanOscillation,
                                                battery::re_z(), id, 0.0, 2.5),
                        Error);
        CHECK_THROWS_AS(characterization_verify(CharacterizationMode::MeanOscillation,
                                                DiskFunction::yukawa_exp(1.0), id,
                                                0.0, 1.0),
                        Error);
    }
}

TEST_CASE("lipschitz characterization agrees on an unbounded case: truncated -log(1-z)") {
    Majorant id = Majorant::identity();
    SupSearchConfig search;
    search.radialCount = 6; // resolvable range for 200 terms
    auto f = battery::truncated_log(200);
    // alpha = 0.5 < 1: not a member, quotient unbounded; both sides agree
    CheckReport r = characterization_verify(CharacterizationMode::LipschitzQuotient, f, id, 0.0,
                                            0.5, {}, search);
    CHECK(r.passed());
}

TEST_CASE("power mean inequality") {
    CHECK(power_mean_inequality_check(1.0, 1.0, 2.0).passed());
    CHECK(power_mean_inequality_check(0.0, 7.3, 0.8).passed());
    CheckReport r = power_mean_inequality_check(3.0, 5.0, 0.5);
    CHECK(r.passed());
    CHECK(r.samples[0].lhs == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(r.samples[0].rhs ==
          doctest::Approx(std::sqrt(3.0) + std::sqrt(5.0)).epsilon(1e-12));
    CHECK_THROWS_AS(power_mean_inequality_check(-1.0, 0.0, 1.0), Error);
}

TEST_CASE("harmonic gradient bound") {
    SUBCASE("constant is trivially bounded") {
        CHECK(harmonic_gradient_bound_verify(DiskFunction::constant({2.0, 0.0}),
                                             {0.1, 0.1}, 0.3)
                  .passed());
    }
    SUBCASE("f(z) = z at the origin: RHS = 4") {
        CheckReport r =
            harmonic_gradient_bound_verify(battery::identity_fn(), {0.0, 0.0}, 0.5);
        CHECK(r.passed());
        CHECK(r.samples[0].lhs == doctest::Approx(1.0));
        CHECK(r.samples[0].rhs == doctest::Approx(4.0).epsilon(1e-9));
    }
    SUBCASE("re z off-center") {
        CHECK(harmonic_gradient_bound_verify(battery::re_z(), {0.2, 0.0}, 0.3)
                  .passed());
    }
    SUBCASE("domain and harmonicity guards") {
        CHECK_THROWS_AS(
            harmonic_gradient_bound_verify(battery::re_z(), {0.8, 0.0}, 0.3), Error);
        CHECK_THROWS_AS(harmonic_gradient_bound_verify(DiskFunction::yukawa_exp(1.0),
                                                       {0.0, 0.0}, 0.3),
                        Error);
    }
}

TEST_CASE("beta function") {
    CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_function(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    // cross-check against quadrature of t^{-1/4} (1-t)^{-1/4}
    double quad = oracles::graded_integral(
        [](double t) { return std::pow(t, -0.25) * std::pow(1.0 - t, -0.25); }, 0.0,
        1.0);
    CHECK(beta_function(0.75, 0.75) == doctest::Approx(quad).epsilon(1e-8));
    CHECK_THROWS_AS(beta_function(0.0, 1.0), Error);
}

TEST_CASE("growth bound scales like sqrt(log 1/(1-r)) on lacunary(14)") {
    BlochParams params(2.0, 1.0, 0.0);
    auto f = DiskFunction::lacunary(14);
    std::vector<double> xs, ys;
    for (int k = 9; k <= 14; ++k) {
        double r = 1.0 - std::ldexp(1.0, -k);
        CheckReport rep = growth_bound_verify(f, params, Majorant::identity(),
                                      HeinzCoefficients::zero(), r);
        CHECK(rep.passed());
        xs.push_back(std::log(-std::log1p(-r)));
        ys.push_back(std::log(rep.samples[0].rhs));
    }
    double slope = oracles::ls_slope(xs, ys);
    CHECK(slope > 0.4);
    CHECK(slope < 0.6);
}
