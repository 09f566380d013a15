#pragma once

#include <functional>
#include <string>
#include <vector>

#include "diskspace/disk_function.hpp"
#include "diskspace/geometry.hpp"

namespace diskspace {

struct QuadratureConfig {
    // Trapezoid points on the circle (starting resolution; doubling
    // proceeds from here). Must be >= 16 and even.
    int angularNodes = 512;
    // Radial Gauss-Legendre budget for disk integrals: panel count and
    // nodes per panel.
    int radialPanels = 64;
    int gaussNodes = 16;
    // Boundary-approach schedule r_k = 1 - 2^-k, k = 1..scheduleK.
    int scheduleK = 14;
    double absTol = 1e-10;
    // Panel contributions decaying slower than 1/divergenceGrowthFactor
    // per panel trigger the divergence analysis.
    double divergenceGrowthFactor = 1.5;

    void validate() const;
    std::vector<double> boundary_schedule() const;
    std::string canonical_string() const;
};

enum class IntegralVerdict { Converged, Divergent };

struct IntegralResult {
    double value = 0.0;
    double errorEstimate = 0.0;
    IntegralVerdict verdict = IntegralVerdict::Converged;
    // Panel-sum growth ratio over the boundary schedule; meaningful for
    // Divergent verdicts (>= ~1).
    double growthRate = 0.0;

    bool converged() const { return verdict == IntegralVerdict::Converged; }
};

// M_p(r, f) = ((1/2pi) int |f(r e^{i theta})|^p dtheta)^(1/p) by periodic
// trapezoid with doubling until the change drops below absTol scaled by
// the magnitude. Throws NonConvergence if doubling stalls.
double circle_mean(const DiskFunction& f, double r, double p,
                   const QuadratureConfig& cfg = {});

// Same integral for an arbitrary nonnegative scalar field on the circle.
double circle_mean_field(const std::function<double(Complex)>& field, double r,
                         double p, const QuadratureConfig& cfg = {});

// (1/2pi) int g(r e^{i theta}) dtheta for a complex field (the p-free mean
// used by the Green identity).
Complex circle_average(const std::function<Complex(Complex)>& g, double r,
                       const QuadratureConfig& cfg = {});

// int_{D_r} g dsigma with dsigma = dA / pi. Radial panels are graded
// geometrically toward both endpoints so integrable log/power endpoint
// singularities converge.
double disk_integral(const std::function<double(Complex)>& g, double r,
                     const QuadratureConfig& cfg = {});

double annulus_integral(const std::function<double(Complex)>& g, double r1,
                        double r2, const QuadratureConfig& cfg = {});

// | (1/2pi) int g(r e^{i theta}) dtheta - g(0)
//   - (1/2) int_{D_r} (Laplacian g) log(r/|z|) dsigma |
// Complex g is handled by linearity of both sides.
double green_identity_residual(const DiskFunction& g, double r,
                               const QuadratureConfig& cfg = {});

// Integrates h over [0,1) along the boundary schedule with divergence
// detection: panel sums that keep decaying geometrically are summed with a
// geometric tail; ratios creeping up to 1 are fitted against the
// log-boundary variable u = log(e/(1-t)) to separate convergent
// (1-t)^-1 (log e/(1-t))^-m tails (m > 1) from divergent ones.
IntegralResult radial_improper_integral(const std::function<double(double)>& h,
                                        const QuadratureConfig& cfg = {});

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule(int n);

// Mean over [0, 2pi) by periodic trapezoid with incremental doubling from
// startNodes; accepts at the first change below absTol * (1 + |mean|). At
// the node cap the value is accepted when the relative change is below
// stallTol, and NonConvergence is raised past that.
double periodic_mean(const std::function<double(double)>& sample,
                     int startNodes, int maxNodes, double absTol,
                     double stallTol = 1e-6);
Complex periodic_mean_complex(const std::function<Complex(double)>& sample,
                              int startNodes, int maxNodes, double absTol,
                              double stallTol = 1e-6);

// Breakpoints of [a, b] graded geometrically toward both endpoints.
std::vector<double> graded_breakpoints(double a, double b, int depth);

} // namespace diskspace
