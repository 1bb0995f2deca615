#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace g2forge {

/// Default absolute tolerance for floating-point comparisons. Exact values
/// never consult it.
inline constexpr double kDefaultTol = 1e-9;

/// A field element that is either an exact rational (GMP-backed) or an
/// IEEE-754 binary64. Arithmetic between two exact values stays exact;
/// any operation touching a float value promotes the result to float.
///
/// Exactness matters here: structure constants like 3/8 must satisfy
/// d^2 = 0 and the Jacobi identity exactly, while parameters like
/// sqrt(15)/8 force float arithmetic. Mixed expressions degrade gracefully.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int n) : v_(mpq_class(n)) {}
  Scalar(long n) : v_(mpq_class(static_cast<long int>(n))) {}
  Scalar(double d) : v_(d) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  /// Exact rational n/d. Requires d != 0.
  static Scalar rational(long n, long d);

  /// Parses "p", "p/q" as exact rationals; anything else (decimal point,
  /// exponent) as binary64. Returns nullopt for malformed input.
  static std::optional<Scalar> parse(const std::string& text);

  bool is_exact() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_float() const { return !is_exact(); }

  /// Exact zero test for rationals, |x| <= tol for floats.
  bool is_zero(double tol = kDefaultTol) const;

  /// True exact zero (floats must be literally 0.0). Used for pruning.
  bool is_exact_zero() const;

  double to_double() const;
  const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }

  /// "p/q" (or "p") for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws on division by exact zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality when both sides are exact, tolerance otherwise.
  bool close_to(const Scalar& o, double tol = kDefaultTol) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  int sign() const;  // -1, 0, +1 (float compares against exact 0.0)

  /// Square root: stays exact when numerator and denominator are perfect
  /// squares, promotes to float otherwise. Requires a nonnegative value.
  Scalar sqrt() const;

  /// n-th root (n >= 1), exact when possible, float otherwise.
  Scalar nth_root(unsigned long n) const;

  Scalar abs() const;

 private:
  std::variant<mpq_class, double> v_;
};

inline Scalar abs(const Scalar& s) { return s.abs(); }
inline Scalar sqrt(const Scalar& s) { return s.sqrt(); }

/// Convenience for exact fractions in source code: frac(5, 8) == 5/8.
inline Scalar frac(long n, long d) { return Scalar::rational(n, d); }

}  // namespace g2forge
