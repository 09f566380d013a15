#pragma once

#include <cstdint>
#include <vector>

#include "diskspace/disk_function.hpp"
#include "diskspace/majorant.hpp"
#include "diskspace/quadrature.hpp"
#include "diskspace/report.hpp"

namespace diskspace {

// Search protocol for sups over the disk: the boundary-schedule radii
// crossed with uniform angles, followed by local golden-section refinement
// around the best sample.
struct SupSearchConfig {
    int radialCount = 14; // boundary schedule prefix length
    int angularCount = 64;
    int refineRounds = 3;
    // Pair sampling for the Lipschitz quotient.
    int pairSamples = 10000;
    std::uint64_t seed = 20240801u;

    void validate() const;
};

enum class Boundedness { Finite, ApparentlyUnbounded };

// Sup-type functional outcome. The +inf sentinel is capped at 1e12 so
// reports stay arithmetic-safe; the verdict carries the real story.
struct NormValue {
    double value = 0.0;
    std::vector<Complex> attainedAt;
    Boundedness verdict = Boundedness::Finite;
    // Least-squares slope of log(value) against log(1/(1-r)) over the last
    // schedule radii, when ApparentlyUnbounded.
    double growthExponent = 0.0;
    // Quadrature error for integral-backed norms; sup searches report 0
    // (they lower-bound the true sup by construction).
    double errorEstimate = 0.0;

    bool finite() const { return verdict == Boundedness::Finite; }
};

inline const char* boundedness_name(Boundedness b) {
    return b == Boundedness::Finite ? "Finite" : "ApparentlyUnbounded";
}

// sup_{0<r<1} M_p(r, f) for finite p; sup |f| over the sample grid for
// p = infinity.
NormValue hardy_norm(const DiskFunction& f, double p,
                     const QuadratureConfig& quad = {},
                     const SupSearchConfig& search = {});

// |f(0)| + sup of the weighted derivative quantity of the generalized
// Bloch-type space: ||D_f(z)|| omega(eta(|z|)) for p = infinity,
// M_p(|z|, ||D_f||) omega(eta(|z|)) (a radial quantity) for finite p.
NormValue bloch_norm(const DiskFunction& f, const BlochParams& params,
                     const Majorant& w, const QuadratureConfig& quad = {},
                     const SupSearchConfig& search = {});

// Little Bloch-type membership: annulus sups of the weighted quantity must
// decay to zero along the boundary schedule. Pass / Fail / Inconclusive.
CheckReport little_bloch_limit(const DiskFunction& f, const BlochParams& params,
                               const Majorant& w,
                               const QuadratureConfig& quad = {},
                               const SupSearchConfig& search = {},
                               double memberTol = 1e-3);

// |f(0)| + int_D d^gamma(z) ||D_f(z)||^mu dsigma(z), with the improper
// boundary handled by the radial schedule.
NormValue dirichlet_norm(const DiskFunction& f, double gamma, double mu,
                         const QuadratureConfig& quad = {});

// sup over pairs z != w of |f(z)-f(w)| omega(d^s(z) d^(alpha-s)(w)) / |z-w|,
// with stratified seeded pair sampling and diagonal pairs approached along
// the Jacobian-norm maximizing direction.
NormValue lipschitz_quotient_sup(const DiskFunction& f, const Majorant& w,
                                 double s, double alpha,
                                 const SupSearchConfig& search = {},
                                 const QuadratureConfig& quad = {});

// L^1 mean oscillation of f over the disk D(z, r) (Lebesgue area measure).
double mean_oscillation(const DiskFunction& f, Complex z, double r,
                        const QuadratureConfig& quad = {});

// sup over (z, r in (0, d(z)]) of mean_oscillation(f, z, r) omega(r^alpha)/r
// for harmonic f and 1 <= alpha < 2.
NormValue oscillation_profile(const DiskFunction& f, const Majorant& w,
                              double alpha, const QuadratureConfig& quad = {},
                              const SupSearchConfig& search = {});

// Shared classifier: decides Finite vs ApparentlyUnbounded from a quantity
// sampled along increasing schedule radii, extrapolating geometric
// approaches and fitting the growth exponent otherwise. relStab is the
// relative increment below which the sequence counts as stabilized:
// quadrature-accurate means can use 1e-6, sampled sups carry O(1e-2)
// search noise and must use a matching floor.
struct BoundaryClassification {
    Boundedness verdict = Boundedness::Finite;
    double limitValue = 0.0;
    double growthExponent = 0.0;
};
BoundaryClassification classify_boundary_sequence(
    const std::vector<double>& radii, const std::vector<double>& values,
    double absTol, double relStab = 1e-6);

} // namespace diskspace
