#pragma once

#include <functional>
#include <vector>

#include "diskspace/disk_function.hpp"
#include "diskspace/majorant.hpp"
#include "diskspace/norms.hpp"
#include "diskspace/quadrature.hpp"
#include "diskspace/report.hpp"

namespace diskspace {

// Nonnegative coefficient fields of Heinz's differential inequality
// |Laplacian f| <= a ||D_f|| + b |f| + q, together with their sups
// (supplied, or estimated on the hypothesis grid by with_estimated_sups).
struct HeinzCoefficients {
    std::function<double(Complex)> a;
    std::function<double(Complex)> b;
    std::function<double(Complex)> q;
    double supA = 0.0;
    double supB = 0.0;
    double supQ = 0.0;

    static HeinzCoefficients constants(double a, double b, double q);
    static HeinzCoefficients zero() { return constants(0.0, 0.0, 0.0); }
};

// Default pointwise-hypothesis grid: 14 schedule radii x 32 angles.
std::vector<Complex> hypothesis_grid(int radialCount = 14, int angularCount = 32);

// |Laplacian f| <= a ||D_f|| + b |f| + q at every sample (1e-9 slack scaled
// by the right-hand side).
CheckReport heinz_check(const DiskFunction& f, const HeinzCoefficients& coeffs,
                        const std::vector<Complex>& samples);

// The Bloch-type growth bound: M_p(r, f) bounded by the display with
// prefactor 1 / (1 - (p r^2 / 4) sup b), the weighted-norm integrals, and
// the a- and q-terms carrying M_p(r, f) itself. Verified literally as
// stated, substituting the computed left side into the right side.
CheckReport growth_bound_verify(const DiskFunction& f, const BlochParams& params,
                        const Majorant& w, const HeinzCoefficients& coeffs,
                        double r, const QuadratureConfig& quad = {},
                        const SupSearchConfig& search = {});

// Yukawa specialization: M_p(r,f) <= C_lambda^p(r) sqrt(|f(0)|^2 +
// (r p ||f|| / omega(1))^2 I(r)).
CheckReport yukawa_growth_verify(const DiskFunction& f, const BlochParams& params,
                        const Majorant& w, double lambdaSup, double r,
                        const QuadratureConfig& quad = {},
                        const SupSearchConfig& search = {});

// Sharpness of the (log 1/(1-r))^(1/2) growth rate on the lacunary partial
// sum, via the exact Parseval fast path. The ratio band and exponent fit
// run over grid points within the resolvable range r <= 1 - 2^(1-N).
struct SharpnessReport {
    CheckReport check;
    std::vector<std::pair<double, double>> ratios; // (r, M2/sqrt(log 1/(1-r)))
    double fittedExponent = 0.0;                   // log M2 vs log log 1/(1-r)
    double bandRatio = 0.0;                        // max/min over resolvable range
};
SharpnessReport sharpness_fit(int lacunaryTerms, const std::vector<double>& rGrid);

// Exact Parseval value of M_2(r, lacunary(N)).
double lacunary_mean2(int terms, double r);

// M_p^p(r, f) nondecreasing along the grid under Re(conj(f) Laplacian f) >= 0.
CheckReport monotone_means_verify(const DiskFunction& f, double p,
                                  const std::vector<double>& rGrid,
                                  const QuadratureConfig& quad = {});

// int_{D_r} |f|^p log(r/|z|) dsigma <= (r^2/2) M_p^p(r, f).
CheckReport log_weight_bound_verify(const DiskFunction& f, double p, double r,
                                    const QuadratureConfig& quad = {});

// F = |f_z|^2 + |f_zbar|^2 subharmonic under the third-order sign
// hypothesis; also validates the closed-form expansion of Laplacian F.
CheckReport subharmonic_verify(const DiskFunction& f,
                               const std::vector<Complex>& samples);

// ||D_f(z)|| <= C6 / d(z)^(1 + gamma/2) with C6 = 2^((gamma+3)/2)
// sqrt(||f||_{D_{gamma,2}}), plus the induced Bloch-type membership report.
CheckReport gradient_decay_verify(const DiskFunction& f, double gamma,
                                  const QuadratureConfig& quad = {},
                                  const SupSearchConfig& search = {});

// Evidence for f in H^{2/gamma}: stabilization of M_{2/gamma}(r, f) along
// the boundary schedule. Membership is only evidenced, never certified.
CheckReport hardy_membership_estimate(const DiskFunction& f, double gamma,
                                      const HeinzCoefficients& coeffs,
                                      const QuadratureConfig& quad = {},
                                      const SupSearchConfig& search = {});

enum class CharacterizationMode { LipschitzQuotient, MeanOscillation, BoundaryLimit };

// Both-direction agreement of the space characterizations:
//   LipschitzQuotient: Bloch-type norm finite <=> weighted Lipschitz
//     quotient bounded.
//   MeanOscillation: (harmonic f) Bloch-type norm finite <=> oscillation
//     profile bounded.
//   BoundaryLimit: little Bloch membership <=> boundary limit of the
//     quotient is zero.
CheckReport characterization_verify(CharacterizationMode mode,
                                    const DiskFunction& f, const Majorant& w,
                                    double s, double alpha,
                                    const QuadratureConfig& quad = {},
                                    const SupSearchConfig& search = {});

// (a+b)^q <= 2^max(q-1,0) (a^q + b^q).
CheckReport power_mean_inequality_check(double a, double b, double q);

// ||D_f(a)|| <= (2/(pi r)) int_0^{2pi} |f(a + r e^{i theta}) - f(a)| dtheta
// for harmonic f on a closed disk inside the domain.
CheckReport harmonic_gradient_bound_verify(const DiskFunction& f, Complex a,
                                           double r,
                                           const QuadratureConfig& quad = {});

// B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y) via log-gamma.
double beta_function(double x, double y);

} // namespace diskspace
