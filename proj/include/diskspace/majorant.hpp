#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "diskspace/report.hpp"

namespace diskspace {

// A majorant: continuous nondecreasing omega with omega(0) = 0 and
// omega(t)/t nonincreasing for t > 0. Every Bloch-type weight in this
// project is omega applied to a boundary-distance expression.
class Majorant {
  public:
    // omega(t) = t.
    static Majorant identity();
    // omega(t) = t^s for s in (0, 1].
    static Majorant power(double s);
    // omega(t) = t (1 + log(1/t)) for t <= 1, constant 1 beyond (the affine
    // extension matching the zero slope at t = 1).
    static Majorant log_smoothed();
    // Piecewise-linear through sorted knots (t_i, w_i), linear from (0,0)
    // below the first knot and constant beyond the last. The majorant
    // axioms are validated on the knots at construction, which decides
    // them for the whole interpolant.
    static Majorant table(std::vector<std::pair<double, double>> knots);

    double operator()(double t) const;
    std::string describe() const;

    class Impl;

  private:
    explicit Majorant(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// (p, alpha, beta) of the generalized Bloch-type space. p may be infinity.
struct BlochParams {
    double p = std::numeric_limits<double>::infinity();
    double alpha = 1.0;
    double beta = 0.0;

    BlochParams() = default;
    BlochParams(double p_, double alpha_, double beta_);

    bool p_is_infinite() const { return std::isinf(p); }
};

// eta(r) = d^alpha(r) (log e/d(r))^beta, evaluated in log space so beta < 0
// stays stable as r -> 1.
double eta(double r, double alpha, double beta);

// Checks omega(0) = 0, monotonicity of omega and of omega(t)/t along the
// grid. The report's worst sample names the first violating pair.
CheckReport validate_majorant(const Majorant& w, const std::vector<double>& grid);

// Same axioms checked on a raw weight function (table construction already
// rejects invalid knots, so the failure paths are only reachable here).
CheckReport validate_majorant_fn(const std::function<double(double)>& w,
                                 const std::string& label,
                                 const std::vector<double>& grid);

// omega(nu t) >= nu omega(t) for nu in (0,1], a consequence of the ratio
// monotonicity.
CheckReport scaling_law_check(const Majorant& w, double nu, double t);

// eta and eta / omega(eta) nonincreasing along a grid in (0,1).
CheckReport eta_monotonicity_check(const Majorant& w, double alpha, double beta,
                                   const std::vector<double>& grid);

} // namespace diskspace
