#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskspace/disk_function.hpp"
#include "diskspace/norms.hpp"
#include "diskspace/quadrature.hpp"

namespace diskspace {

// An analytic self-map of the disk. Construction enforces the analyticity
// capability and sup |phi| < 1 over the sample grid.
class SelfMap {
  public:
    static SelfMap create(DiskFunction phi, const SupSearchConfig& search = {});
    static SelfMap identity_map();

    const DiskFunction& phi() const { return phi_; }
    double range_margin() const { return rangeMargin_; }

  private:
    SelfMap(DiskFunction phi, double margin)
        : phi_(std::move(phi)), rangeMargin_(margin) {}
    DiskFunction phi_;
    double rangeMargin_;
};

struct GFunctionValue {
    double value = 0.0;
    Boundedness verdict = Boundedness::Finite;
};

// Littlewood-Paley g-function: g(f)(zeta) = (int_0^1 |f'(r zeta)|^2 (1-r)
// dr)^(1/2) for analytic f and |zeta| = 1. A divergent radial integral is
// surfaced as ApparentlyUnbounded.
GFunctionValue g_function(const DiskFunction& f, Complex zeta,
                          const QuadratureConfig& quad = {});

// (1/2pi) int int |phi'|^2 / d^{2 alpha}(phi) (log e/d(phi))^{-2 beta}
// (1-r) dr dtheta, via angular trapezoid times the improper radial
// integrator.
IntegralResult criterion_integral(const SelfMap& phi, double alpha, double beta,
                                  const QuadratureConfig& quad = {});

// Truncated gap series whose derivative modulus tracks the (alpha, beta)
// boundary weight; pairs of these jointly dominate the weight for the
// boundedness cross-check.
struct GapSeries {
    std::vector<double> exponents;
    std::vector<double> coefficients;

    Complex derivative(Complex w) const;
    // f itself (antiderivative of the stored expansion), for reporting.
    Complex value(Complex w) const;
};

// Precomputed battery pairs exist for (alpha, beta) in
// {(1,0), (1,1), (1/2,0)}.
std::optional<std::pair<GapSeries, GapSeries>> adapted_battery(double alpha,
                                                               double beta);

struct BoundednessReport {
    bool bounded = false;
    IntegralResult criterion;
    bool batteryAvailable = false;
    bool batteryAgreed = true;
    // min over the sample grid of (|f1'|^2 + |f2'|^2) d^{2a} (log e/d)^{2b}.
    double dominationConstant = 0.0;
    std::string detail;
};

// Bounded iff the criterion integral converges; when the adapted battery
// exists for (alpha, beta) the finiteness of ||g(C_phi(f_k))||_2 over the
// battery is cross-checked against the verdict. With requireBattery the
// absence of a battery raises BatteryUnavailable instead of degrading.
BoundednessReport boundedness_verdict(const SelfMap& phi, double alpha,
                                      double beta,
                                      const QuadratureConfig& quad = {},
                                      bool requireBattery = false);

} // namespace diskspace
