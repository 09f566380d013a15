#include "diskspace/disk_function.hpp"

#include <cmath>
#include <sstream>

#include "diskspace/errors.hpp"

namespace diskspace {

namespace {

void require_in_disk(Complex z) {
    if (!(std::abs(z) < 1.0)) {
        std::ostringstream os;
        os << "point (" << z.real() << ", " << z.imag()
           << ") lies outside the open unit disk";
        raise(ErrorCode::OutOfDomain, os.str());
    }
}

// Polynomial in z with Horner evaluation; derivative coefficient lists are
// materialized once at construction.
struct Poly {
    std::vector<Complex> c;

    Complex eval(Complex z) const {
        Complex acc{0.0, 0.0};
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    }

    Poly derivative() const {
        Poly d;
        if (c.size() <= 1) return d;
        d.c.resize(c.size() - 1);
        for (std::size_t n = 1; n < c.size(); ++n)
            d.c[n - 1] = static_cast<double>(n) * c[n];
        return d;
    }
};

void validate_series_coefficients(const std::vector<Complex>& coeffs) {
    for (const Complex& a : coeffs) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            raise(ErrorCode::MalformedSpec, "power series coefficient is not finite");
    }
    // Geometric-ratio test over the tail: least-squares slope of log|a_n|
    // against n, corroborated by actual head-to-tail magnitude growth so
    // noisy bounded coefficients never trip it. A confirmed rho > 1 means
    // the truncated evaluation blows up near the boundary.
    if (coeffs.size() < 12) return;
    std::size_t start = coeffs.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t n = start; n < coeffs.size(); ++n) {
        double mag = std::abs(coeffs[n]);
        if (mag == 0.0) continue;
        double x = static_cast<double>(n);
        double y = std::log(mag);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    if (m < 4) return;
    double denom = m * sxx - sx * sx;
    if (denom <= 0) return;
    double slope = (m * sxy - sx * sy) / denom;

    double headMax = 0.0, tailMax = 0.0;
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        double mag = std::abs(coeffs[n]);
        if (n < coeffs.size() / 3) headMax = std::max(headMax, mag);
        if (n >= 2 * coeffs.size() / 3) tailMax = std::max(tailMax, mag);
    }
    bool growing = headMax > 0.0 && tailMax > 8.0 * headMax;
    if (slope > std::log(1.05) && growing) {
        std::ostringstream os;
        os << "power series tail grows like rho^n with rho ~ " << std::exp(slope)
           << " > 1; not evaluable on the unit disk";
        raise(ErrorCode::MalformedSpec, os.str());
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Family implementations
// ---------------------------------------------------------------------------

class DiskFunction::Impl {
  public:
    virtual ~Impl() = default;
    virtual Complex eval(Complex z) const = 0;
    virtual WirtingerDerivs wirtinger(Complex z) const = 0;
    virtual SecondWirtingerDerivs second_wirtinger(Complex z) const = 0;
    virtual Complex laplacian(Complex z) const = 0;
    virtual LaplacianDerivs laplacian_wirtinger(Complex z) const = 0;
    virtual const Capabilities& capabilities() const = 0;
    virtual std::optional<double> yukawa_lambda() const { return std::nullopt; }
    virtual std::string describe() const = 0;
};

namespace {

class PowerSeriesImpl final : public DiskFunction::Impl {
  public:
    explicit PowerSeriesImpl(std::vector<Complex> coeffs) {
        validate_series_coefficients(coeffs);
        p_.c = std::move(coeffs);
        d1_ = p_.derivative();
        d2_ = d1_.derivative();
        d3_ = d2_.derivative();
        caps_ = {true, true, true};
    }

    Complex eval(Complex z) const override { return p_.eval(z); }
    WirtingerDerivs wirtinger(Complex z) const override {
        return {d1_.eval(z), {0.0, 0.0}};
    }
    SecondWirtingerDerivs second_wirtinger(Complex z) const override {
        return {d2_.eval(z), {0.0, 0.0}, {0.0, 0.0}};
    }
    Complex laplacian(Complex) const override { return {0.0, 0.0}; }
    LaplacianDerivs laplacian_wirtinger(Complex) const override { return {}; }
    const Capabilities& capabilities() const override { return caps_; }
    std::string describe() const override {
        std::ostringstream os;
        os << "power_series(degree " << (p_.c.empty() ? 0 : p_.c.size() - 1) << ")";
        return os.str();
    }

  private:
    Poly p_, d1_, d2_, d3_;
    Capabilities caps_;
};

class LacunaryImpl final : public DiskFunction::Impl {
  public:
    explicit LacunaryImpl(int termCount) : terms_(termCount) {
        if (termCount < 1)
            raise(ErrorCode::MalformedSpec, "lacunary termCount must be >= 1");
        if (termCount > 40)
            raise(ErrorCode::MalformedSpec,
                  "lacunary termCount above 40 exceeds double exponent range");
        caps_ = {true, true, true};
    }

    // Exponents 2^n for n = 0..terms-1; powers by repeated squaring.
    Complex eval(Complex z) const override {
        Complex sum{0.0, 0.0};
        Complex w = z;
        for (int n = 0; n < terms_; ++n) {
            sum += w;
            w *= w;
        }
        return sum;
    }

    WirtingerDerivs wirtinger(Complex z) const override {
        // f'(z) = sum 2^n z^(2^n - 1)
        if (z == Complex{0.0, 0.0}) return {{1.0, 0.0}, {0.0, 0.0}};
        Complex sum{0.0, 0.0};
        Complex w = z;
        double scale = 1.0;
        for (int n = 0; n < terms_; ++n) {
            sum += scale * (w / z);
            w *= w;
            scale *= 2.0;
        }
        return {sum, {0.0, 0.0}};
    }

    SecondWirtingerDerivs second_wirtinger(Complex z) const override {
        // f''(z) = sum 2^n (2^n - 1) z^(2^n - 2)
        if (z == Complex{0.0, 0.0}) {
            Complex fzz = terms_ >= 2 ? Complex{2.0, 0.0} : Complex{0.0, 0.0};
            return {fzz, {0.0, 0.0}, {0.0, 0.0}};
        }
        Complex sum{0.0, 0.0};
        Complex w = z;
        double scale = 1.0;
        Complex z2 = z * z;
        for (int n = 0; n < terms_; ++n) {
            sum += scale * (scale - 1.0) * (w / z2);
            w *= w;
            scale *= 2.0;
        }
        return {sum, {0.0, 0.0}, {0.0, 0.0}};
    }

    Complex laplacian(Complex) const override { return {0.0, 0.0}; }
    LaplacianDerivs laplacian_wirtinger(Complex) const override { return {}; }
    const Capabilities& capabilities() const override { return caps_; }
    std::string describe() const override {
        std::ostringstream os;
        os << "lacunary(" << terms_ << ")";
        return os.str();
    }

  private:
    int terms_;
    Capabilities caps_;
};

class HarmonicPairImpl final : public DiskFunction::Impl {
  public:
    HarmonicPairImpl(std::vector<Complex> h, std::vector<Complex> g) {
        validate_series_coefficients(h);
        validate_series_coefficients(g);
        h_.c = std::move(h);
        g_.c = std::move(g);
        h1_ = h_.derivative();
        h2_ = h1_.derivative();
        g1_ = g_.derivative();
        g2_ = g1_.derivative();
        bool conjTrivial = g1_.c.empty();
        caps_ = {conjTrivial, true, true};
    }

    Complex eval(Complex z) const override {
        return h_.eval(z) + std::conj(g_.eval(z));
    }
    WirtingerDerivs wirtinger(Complex z) const override {
        return {h1_.eval(z), std::conj(g1_.eval(z))};
    }
    SecondWirtingerDerivs second_wirtinger(Complex z) const override {
        return {h2_.eval(z), {0.0, 0.0}, std::conj(g2_.eval(z))};
    }
    Complex laplacian(Complex) const override { return {0.0, 0.0}; }
    LaplacianDerivs laplacian_wirtinger(Complex) const override { return {}; }
    const Capabilities& capabilities() const override { return caps_; }
    std::string describe() const override {
        std::ostringstream os;
        os << "harmonic_pair(deg h " << (h_.c.empty() ? 0 : h_.c.size() - 1)
           << ", deg g " << (g_.c.empty() ? 0 : g_.c.size() - 1) << ")";
        return os.str();
    }

  private:
    Poly h_, g_, h1_, h2_, g1_, g2_;
    Capabilities caps_;
};

class YukawaImpl final : public DiskFunction::Impl {
  public:
    explicit YukawaImpl(double lambda) : lambda_(lambda) {
        if (!(lambda >= 0.0) || !std::isfinite(lambda))
            raise(ErrorCode::MalformedSpec, "yukawa lambda must be a finite nonnegative real");
        c_ = std::sqrt(lambda) / 2.0;
        caps_ = {lambda == 0.0, lambda == 0.0, true};
    }

    // f(z) = exp(2c x) with c = sqrt(lambda)/2, so f_z = f_zbar = c f and
    // Laplacian f = 4 c^2 f = lambda f.
    Complex eval(Complex z) const override {
        return {std::exp(2.0 * c_ * z.real()), 0.0};
    }
    WirtingerDerivs wirtinger(Complex z) const override {
        Complex f = eval(z);
        return {c_ * f, c_ * f};
    }
    SecondWirtingerDerivs second_wirtinger(Complex z) const override {
        Complex f = eval(z);
        double c2 = c_ * c_;
        return {c2 * f, c2 * f, c2 * f};
    }
    Complex laplacian(Complex z) const override { return lambda_ * eval(z); }
    LaplacianDerivs laplacian_wirtinger(Complex z) const override {
        Complex f = eval(z);
        return {lambda_ * c_ * f, lambda_ * c_ * f};
    }
    const Capabilities& capabilities() const override { return caps_; }
    std::optional<double> yukawa_lambda() const override { return lambda_; }
    std::string describe() const override {
        std::ostringstream os;
        os << "yukawa_exp(" << lambda_ << ")";
        return os.str();
    }

  private:
    double lambda_;
    double c_;
    Capabilities caps_;
};

// ---------------------------------------------------------------------------
// Numeric differencing
// ---------------------------------------------------------------------------

double difference_step(Complex z) {
    double d = 1.0 - std::abs(z);
    double h = std::max(1e-6, 1e-3 * d);
    // The widest stencil point is z +/- 2h; keep a factor-2 margin inside.
    if (d <= 4.0 * h) {
        raise(ErrorCode::StepUnderflow,
              "point too close to the boundary for stable differencing");
    }
    return h;
}

// (-f(x+2h) + 8 f(x+h) - 8 f(x-h) + f(x-2h)) / (12 h) along direction dir.
Complex directional_derivative(const std::function<Complex(Complex)>& f,
                               Complex z, Complex dir, double h) {
    Complex step = dir * h;
    return (-f(z + 2.0 * step) + 8.0 * f(z + step) - 8.0 * f(z - step) +
            f(z - 2.0 * step)) /
           (12.0 * h);
}

WirtingerDerivs numeric_wirtinger_impl(const std::function<Complex(Complex)>& f,
                                       Complex z) {
    double h = difference_step(z);
    Complex fx = directional_derivative(f, z, {1.0, 0.0}, h);
    Complex fy = directional_derivative(f, z, {0.0, 1.0}, h);
    Complex i{0.0, 1.0};
    return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

class NumericImpl final : public DiskFunction::Impl {
  public:
    NumericImpl(std::function<Complex(Complex)> sampler, Capabilities caps)
        : f_(std::move(sampler)), caps_(caps) {
        if (!f_) raise(ErrorCode::MalformedSpec, "numeric wrapper requires a sampler");
        caps_.hasExactDerivatives = false;
    }

    Complex eval(Complex z) const override { return f_(z); }

    WirtingerDerivs wirtinger(Complex z) const override {
        return numeric_wirtinger_impl(f_, z);
    }

    // Second derivatives by nested first differences: the outer stencil
    // differentiates the numerically computed f_z / f_zbar fields.
    SecondWirtingerDerivs second_wirtinger(Complex z) const override {
        auto vz = [this](Complex w) { return numeric_wirtinger_impl(f_, w).fz; };
        auto vzbar = [this](Complex w) {
            return numeric_wirtinger_impl(f_, w).fzbar;
        };
        double h = difference_step(z);
        Complex i{0.0, 1.0};
        Complex vzx = directional_derivative(vz, z, {1.0, 0.0}, h);
        Complex vzy = directional_derivative(vz, z, {0.0, 1.0}, h);
        Complex vbx = directional_derivative(vzbar, z, {1.0, 0.0}, h);
        Complex vby = directional_derivative(vzbar, z, {0.0, 1.0}, h);
        Complex fzz = 0.5 * (vzx - i * vzy);
        Complex fzzbar = 0.5 * (vzx + i * vzy);
        Complex fzbarzbar = 0.5 * (vbx + i * vby);
        return {fzz, fzzbar, fzbarzbar};
    }

    Complex laplacian(Complex z) const override {
        if (caps_.isAnalytic || caps_.isHarmonic) return {0.0, 0.0};
        return 4.0 * second_wirtinger(z).fzzbar;
    }

    LaplacianDerivs laplacian_wirtinger(Complex z) const override {
        if (caps_.isAnalytic || caps_.isHarmonic) return {};
        auto lap = [this](Complex w) { return laplacian(w); };
        double h = difference_step(z);
        Complex i{0.0, 1.0};
        Complex lx = directional_derivative(lap, z, {1.0, 0.0}, h);
        Complex ly = directional_derivative(lap, z, {0.0, 1.0}, h);
        return {0.5 * (lx - i * ly), 0.5 * (lx + i * ly)};
    }

    const Capabilities& capabilities() const override { return caps_; }
    std::string describe() const override { return "numeric_wrapper"; }

  private:
    std::function<Complex(Complex)> f_;
    Capabilities caps_;
};

// c * f for any family, derivatives scaled exactly.
class ScaledImpl final : public DiskFunction::Impl {
  public:
    ScaledImpl(std::shared_ptr<const DiskFunction::Impl> base, Complex c)
        : base_(std::move(base)), c_(c) {
        caps_ = base_->capabilities();
    }

    Complex eval(Complex z) const override { return c_ * base_->eval(z); }
    WirtingerDerivs wirtinger(Complex z) const override {
        auto w = base_->wirtinger(z);
        return {c_ * w.fz, c_ * w.fzbar};
    }
    SecondWirtingerDerivs second_wirtinger(Complex z) const override {
        auto s = base_->second_wirtinger(z);
        return {c_ * s.fzz, c_ * s.fzzbar, c_ * s.fzbarzbar};
    }
    Complex laplacian(Complex z) const override { return c_ * base_->laplacian(z); }
    LaplacianDerivs laplacian_wirtinger(Complex z) const override {
        auto l = base_->laplacian_wirtinger(z);
        return {c_ * l.dz, c_ * l.dzbar};
    }
    const Capabilities& capabilities() const override { return caps_; }
    std::string describe() const override {
        std::ostringstream os;
        os << "scaled(" << c_.real() << "+" << c_.imag() << "i, "
           << base_->describe() << ")";
        return os.str();
    }

  private:
    std::shared_ptr<const DiskFunction::Impl> base_;
    Complex c_;
    Capabilities caps_;
};

} // namespace

// ---------------------------------------------------------------------------
// DiskFunction surface
// ---------------------------------------------------------------------------

DiskFunction::DiskFunction(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

DiskFunction DiskFunction::power_series(std::vector<Complex> coefficients) {
    return DiskFunction(std::make_shared<PowerSeriesImpl>(std::move(coefficients)));
}

DiskFunction DiskFunction::lacunary(int termCount) {
    return DiskFunction(std::make_shared<LacunaryImpl>(termCount));
}

DiskFunction DiskFunction::harmonic_pair(std::vector<Complex> h,
                                         std::vector<Complex> g) {
    return DiskFunction(
        std::make_shared<HarmonicPairImpl>(std::move(h), std::move(g)));
}

DiskFunction DiskFunction::yukawa_exp(double lambda) {
    return DiskFunction(std::make_shared<YukawaImpl>(lambda));
}

DiskFunction DiskFunction::numeric(std::function<Complex(Complex)> sampler,
                                   Capabilities caps) {
    return DiskFunction(std::make_shared<NumericImpl>(std::move(sampler), caps));
}

DiskFunction DiskFunction::constant(Complex c) {
    return power_series({c});
}

Complex DiskFunction::eval(Complex z) const {
    require_in_disk(z);
    return impl_->eval(z);
}

WirtingerDerivs DiskFunction::wirtinger(Complex z) const {
    require_in_disk(z);
    return impl_->wirtinger(z);
}

SecondWirtingerDerivs DiskFunction::second_wirtinger(Complex z) const {
    require_in_disk(z);
    return impl_->second_wirtinger(z);
}

Complex DiskFunction::laplacian(Complex z) const {
    require_in_disk(z);
    return impl_->laplacian(z);
}

LaplacianDerivs DiskFunction::laplacian_wirtinger(Complex z) const {
    require_in_disk(z);
    return impl_->laplacian_wirtinger(z);
}

JacobianNorms DiskFunction::jacobian_norms(Complex z) const {
    auto w = wirtinger(z);
    double az = std::abs(w.fz);
    double ab = std::abs(w.fzbar);
    return {az + ab, std::abs(az - ab)};
}

const Capabilities& DiskFunction::capabilities() const {
    return impl_->capabilities();
}

std::optional<double> DiskFunction::yukawa_lambda() const {
    return impl_->yukawa_lambda();
}

std::string DiskFunction::describe() const { return impl_->describe(); }

DiskFunction DiskFunction::scaled(Complex c) const {
    return DiskFunction(std::make_shared<ScaledImpl>(impl_, c));
}

WirtingerDerivs numeric_wirtinger(const std::function<Complex(Complex)>& f,
                                  Complex z) {
    require_in_disk(z);
    return numeric_wirtinger_impl(f, z);
}

Complex numeric_laplacian(const std::function<Complex(Complex)>& f, Complex z) {
    require_in_disk(z);
    auto vz = [&f](Complex w) { return numeric_wirtinger_impl(f, w).fz; };
    double h = difference_step(z);
    Complex i{0.0, 1.0};
    Complex vzx = directional_derivative(vz, z, {1.0, 0.0}, h);
    Complex vzy = directional_derivative(vz, z, {0.0, 1.0}, h);
    return 4.0 * 0.5 * (vzx + i * vzy);
}

} // namespace diskspace
