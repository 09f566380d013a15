#pragma once

#include <cmath>
#include <complex>

namespace diskspace {

using Complex = std::complex<double>;

// Distance from z to the unit circle.
inline double boundary_distance(Complex z) { return 1.0 - std::abs(z); }

// d(r) = 1 - r for a radius given directly as a real number.
inline double boundary_distance(double r) { return 1.0 - r; }

// log(e / (1 - r)) = 1 - log(1 - r), computed through log1p so the
// boundary schedule radii (up to 1 - 2^-14 and beyond) do not lose
// digits to cancellation.
inline double log_e_over_d(double r) { return 1.0 - std::log1p(-r); }

// log d(r) = log(1 - r) via log1p.
inline double log_boundary_distance(double r) { return std::log1p(-r); }

inline bool in_unit_disk(Complex z) { return std::abs(z) < 1.0; }

} // namespace diskspace
