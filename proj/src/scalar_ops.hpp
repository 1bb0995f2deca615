#pragma once

#include <cmath>

#include "scalar.hpp"

namespace g2forge {

// Uniform scalar hooks so the exterior/metric templates instantiate for both
// the exact-or-float Scalar and plain double.

inline double s_to_double(const Scalar& s) { return s.to_double(); }
inline double s_to_double(double s) { return s; }

inline bool s_is_exact_zero(const Scalar& s) { return s.is_exact_zero(); }
inline bool s_is_exact_zero(double s) { return s == 0.0; }

inline bool s_is_zero(const Scalar& s, double tol) { return s.is_zero(tol); }
inline bool s_is_zero(double s, double tol) { return std::abs(s) <= tol; }

inline int s_sign(const Scalar& s) { return s.sign(); }
inline int s_sign(double s) { return (s > 0.0) - (s < 0.0); }

inline Scalar s_sqrt(const Scalar& s) { return s.sqrt(); }
inline double s_sqrt(double s) { return std::sqrt(s); }

inline Scalar s_nth_root(const Scalar& s, unsigned long n) { return s.nth_root(n); }
inline double s_nth_root(double s, unsigned long n) {
  return std::pow(s, 1.0 / static_cast<double>(n));
}

}  // namespace g2forge
