#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diskspace/geometry.hpp"

namespace diskspace {

// First-order Wirtinger pair: f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2.
struct WirtingerDerivs {
    Complex fz{0.0, 0.0};
    Complex fzbar{0.0, 0.0};
};

struct SecondWirtingerDerivs {
    Complex fzz{0.0, 0.0};
    Complex fzzbar{0.0, 0.0};
    Complex fzbarzbar{0.0, 0.0};
};

// Wirtinger gradient of the Laplacian field, ((Δf)_z, (Δf)_zbar).
struct LaplacianDerivs {
    Complex dz{0.0, 0.0};
    Complex dzbar{0.0, 0.0};
};

// ||D_f|| = |f_z| + |f_zbar| and l(D_f) = ||f_z| - |f_zbar||, the operator
// norm and co-norm of the real 2x2 Jacobian.
struct JacobianNorms {
    double opNorm = 0.0;
    double coNorm = 0.0;
};

struct Capabilities {
    bool isAnalytic = false;
    bool isHarmonic = false;
    bool hasExactDerivatives = false;
};

// An evaluable complex-valued function on the open unit disk with
// first/second Wirtinger derivative access. Immutable after construction;
// all operations are pure and safe to call concurrently.
class DiskFunction {
  public:
    // f(z) = sum a_n z^n by Horner recurrence. Rejects non-finite
    // coefficients and coefficient tails growing like c*rho^n with
    // rho > 1 (the evaluation would overflow near the boundary).
    static DiskFunction power_series(std::vector<Complex> coefficients);

    // Partial sum of sum_{n=0}^{termCount-1} z^(2^n).
    static DiskFunction lacunary(int termCount);

    // f = h + conj(g) for analytic h, g given as power series.
    static DiskFunction harmonic_pair(std::vector<Complex> h,
                                      std::vector<Complex> g);

    // f(z) = exp(sqrt(lambda) * Re z), solving the Yukawa PDE
    // Laplacian f = lambda * f.
    static DiskFunction yukawa_exp(double lambda);

    // Arbitrary sampler; derivatives fall back to fourth-order central
    // differences with step max(1e-6, 1e-3 * d(z)) per axis. Capability
    // flags are taken on faith from the caller except
    // hasExactDerivatives, which is always false.
    static DiskFunction numeric(std::function<Complex(Complex)> sampler,
                                Capabilities caps = {});

    static DiskFunction constant(Complex c);

    Complex eval(Complex z) const;
    WirtingerDerivs wirtinger(Complex z) const;
    SecondWirtingerDerivs second_wirtinger(Complex z) const;
    Complex laplacian(Complex z) const;
    LaplacianDerivs laplacian_wirtinger(Complex z) const;
    JacobianNorms jacobian_norms(Complex z) const;

    const Capabilities& capabilities() const;
    // lambda of the Yukawa family, empty for every other family.
    std::optional<double> yukawa_lambda() const;
    std::string describe() const;

    // c * f with derivatives scaled exactly.
    DiskFunction scaled(Complex c) const;

    class Impl;

  private:
    explicit DiskFunction(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// Fourth-order central differencing on a raw sampler, exposed so the exact
// derivative paths can be cross-validated against it.
WirtingerDerivs numeric_wirtinger(const std::function<Complex(Complex)>& f,
                                  Complex z);
Complex numeric_laplacian(const std::function<Complex(Complex)>& f, Complex z);

} // namespace diskspace
