#include "diskspace/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diskspace/errors.hpp"
#include "diskspace/geometry.hpp"

namespace diskspace {

namespace {

// All call sites feed arguments bounded by eta(0) = 1 or explicit test
// grids; anything past this is a usage bug, not a data case.
constexpr double kMaxArgument = 10.0;

void require_argument(double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        raise(ErrorCode::OutOfDomain, "majorant argument must be a finite nonnegative real");
    if (t > kMaxArgument)
        raise(ErrorCode::OutOfDomain, "majorant argument exceeds the supported range [0, 10]");
}

} // namespace

class Majorant::Impl {
  public:
    virtual ~Impl() = default;
    virtual double value(double t) const = 0;
    virtual std::string describe() const = 0;
};

namespace {

class IdentityImpl final : public Majorant::Impl {
  public:
    double value(double t) const override { return t; }
    std::string describe() const override { return "identity"; }
};

class PowerImpl final : public Majorant::Impl {
  public:
    explicit PowerImpl(double s) : s_(s) {
        if (!(s > 0.0) || !(s <= 1.0))
            raise(ErrorCode::MalformedSpec, "power majorant exponent must lie in (0, 1]");
    }
    double value(double t) const override { return t == 0.0 ? 0.0 : std::pow(t, s_); }
    std::string describe() const override {
        std::ostringstream os;
        os << "power(" << s_ << ")";
        return os.str();
    }

  private:
    double s_;
};

class LogSmoothedImpl final : public Majorant::Impl {
  public:
    double value(double t) const override {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return t * (1.0 - std::log(t));
    }
    std::string describe() const override { return "logsmoothed"; }
};

class TableImpl final : public Majorant::Impl {
  public:
    explicit TableImpl(std::vector<std::pair<double, double>> knots)
        : knots_(std::move(knots)) {
        if (knots_.empty())
            raise(ErrorCode::MalformedSpec, "table majorant requires at least one knot");
        double prevT = 0.0, prevW = 0.0, prevRatio = std::numeric_limits<double>::infinity();
        for (const auto& [t, w] : knots_) {
            if (!(t > prevT))
                raise(ErrorCode::MalformedSpec, "table knots must have strictly increasing positive abscissae");
            if (!std::isfinite(w) || w < 0.0)
                raise(ErrorCode::MalformedSpec, "table knot values must be finite and nonnegative");
            if (w + 1e-15 < prevW)
                raise(ErrorCode::MalformedSpec, "table knot values must be nondecreasing");
            double ratio = w / t;
            if (ratio > prevRatio * (1.0 + 1e-12))
                raise(ErrorCode::MalformedSpec, "table violates omega(t)/t monotonicity at a knot");
            prevT = t;
            prevW = w;
            prevRatio = ratio;
        }
    }

    double value(double t) const override {
        if (t <= 0.0) return 0.0;
        if (t <= knots_.front().first) {
            // linear from (0,0) to the first knot: constant ratio segment
            return knots_.front().second * t / knots_.front().first;
        }
        if (t >= knots_.back().first) return knots_.back().second;
        auto it = std::lower_bound(
            knots_.begin(), knots_.end(), t,
            [](const std::pair<double, double>& k, double x) { return k.first < x; });
        auto [t1, w1] = *std::prev(it);
        auto [t2, w2] = *it;
        return w1 + (w2 - w1) * (t - t1) / (t2 - t1);
    }

    std::string describe() const override {
        std::ostringstream os;
        os << "table(" << knots_.size() << " knots)";
        return os.str();
    }

  private:
    std::vector<std::pair<double, double>> knots_;
};

} // namespace

Majorant::Majorant(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Majorant Majorant::identity() { return Majorant(std::make_shared<IdentityImpl>()); }
Majorant Majorant::power(double s) { return Majorant(std::make_shared<PowerImpl>(s)); }
Majorant Majorant::log_smoothed() { return Majorant(std::make_shared<LogSmoothedImpl>()); }
Majorant Majorant::table(std::vector<std::pair<double, double>> knots) {
    return Majorant(std::make_shared<TableImpl>(std::move(knots)));
}

double Majorant::operator()(double t) const {
    require_argument(t);
    return impl_->value(t);
}

std::string Majorant::describe() const { return impl_->describe(); }

BlochParams::BlochParams(double p_, double alpha_, double beta_)
    : p(p_), alpha(alpha_), beta(beta_) {
    if (!(p > 0.0))
        raise(ErrorCode::ConstraintViolated, "Bloch parameter p must be positive (possibly infinite)");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        raise(ErrorCode::ConstraintViolated, "Bloch parameter alpha must be a positive real");
    if (!(beta <= alpha))
        raise(ErrorCode::ConstraintViolated, "Bloch parameter beta must satisfy beta <= alpha");
}

double eta(double r, double alpha, double beta) {
    if (!(r >= 0.0) || r >= 1.0)
        raise(ErrorCode::OutOfDomain, "eta requires 0 <= r < 1");
    double logd = log_boundary_distance(r);           // log(1 - r)
    double loglog = std::log(log_e_over_d(r));        // log(1 - log(1 - r))
    return std::exp(alpha * logd + beta * loglog);
}

CheckReport validate_majorant(const Majorant& w, const std::vector<double>& grid) {
    return validate_majorant_fn([&w](double t) { return w(t); }, w.describe(), grid);
}

CheckReport validate_majorant_fn(const std::function<double(double)>& w,
                                 const std::string& label,
                                 const std::vector<double>& grid) {
    if (grid.empty()) raise(ErrorCode::EmptyGrid, "validate_majorant needs a nonempty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0))
            raise(ErrorCode::OutOfDomain, "validate_majorant grid points must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            raise(ErrorCode::OutOfDomain, "validate_majorant grid must be sorted ascending");
    }
    const std::string id = "validate_majorant(" + label + ")";
    double w0 = w(0.0);
    if (std::abs(w0) > 1e-15) {
        CheckSample s{{0.0, 0.0}, w0, 0.0, std::abs(w0)};
        return make_fail(id, s, "omega(0) != 0");
    }
    double prev = 0.0, prevRatio = std::numeric_limits<double>::infinity();
    double prevT = 0.0;
    for (double t : grid) {
        double v = w(t);
        if (v + 1e-12 < prev) {
            CheckSample s{{t, 0.0}, v, prev, prev - v};
            std::ostringstream os;
            os << "omega decreases between t=" << prevT << " and t=" << t;
            return make_fail(id, s, os.str());
        }
        double ratio = v / t;
        if (ratio > prevRatio * (1.0 + 1e-12)) {
            CheckSample s{{t, 0.0}, ratio, prevRatio, ratio - prevRatio};
            std::ostringstream os;
            os << "omega(t)/t increases between t=" << prevT << " and t=" << t;
            return make_fail(id, s, os.str());
        }
        prev = v;
        prevRatio = ratio;
        prevT = t;
    }
    return make_pass(id);
}

CheckReport scaling_law_check(const Majorant& w, double nu, double t) {
    if (!(nu > 0.0) || !(nu <= 1.0))
        raise(ErrorCode::OutOfDomain, "scaling_law_check requires nu in (0, 1]");
    if (!(t > 0.0))
        raise(ErrorCode::OutOfDomain, "scaling_law_check requires t > 0");
    const std::string id = "scaling_law(" + w.describe() + ")";
    double lhs = w(nu * t);
    double rhs = nu * w(t);
    if (lhs >= rhs - 1e-12) {
        return make_pass(id, lhs - rhs);
    }
    CheckSample s{{nu, t}, lhs, rhs, rhs - lhs};
    return make_fail(id, s, "omega(nu t) < nu omega(t)");
}

CheckReport eta_monotonicity_check(const Majorant& w, double alpha, double beta,
                                   const std::vector<double>& grid) {
    if (grid.empty()) raise(ErrorCode::EmptyGrid, "eta_monotonicity_check needs a nonempty grid");
    if (!(alpha > 0.0) || !(beta <= alpha))
        raise(ErrorCode::ConstraintViolated, "eta_monotonicity_check requires alpha > 0, beta <= alpha");
    const std::string id = "eta_monotonicity(" + w.describe() + ")";
    double prevEta = std::numeric_limits<double>::infinity();
    double prevQuot = std::numeric_limits<double>::infinity();
    double prevR = -1.0;
    for (double r : grid) {
        if (!(r > 0.0) || !(r < 1.0))
            raise(ErrorCode::OutOfDomain, "eta_monotonicity_check grid must lie in (0, 1)");
        if (r <= prevR)
            raise(ErrorCode::OutOfDomain, "eta_monotonicity_check grid must be sorted ascending");
        double e = eta(r, alpha, beta);
        double we = w(e);
        double quot = we > 0.0 ? e / we : std::numeric_limits<double>::infinity();
        if (e > prevEta + 1e-12) {
            CheckSample s{{r, 0.0}, e, prevEta, e - prevEta};
            return make_fail(id, s, "eta increases along the grid");
        }
        if (quot > prevQuot + 1e-12) {
            CheckSample s{{r, 0.0}, quot, prevQuot, quot - prevQuot};
            return make_fail(id, s, "eta/omega(eta) increases along the grid");
        }
        prevEta = e;
        prevQuot = quot;
        prevR = r;
    }
    return make_pass(id);
}

} // namespace diskspace
