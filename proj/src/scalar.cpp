#include "scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace g2forge {

namespace {

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  bool seen_slash = false;
  bool digit_in_part = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_in_part = true;
    } else if (c == '/' && !seen_slash && digit_in_part) {
      seen_slash = true;
      digit_in_part = false;
    } else {
      return false;
    }
  }
  return digit_in_part;
}

}  // namespace

Scalar Scalar::rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

std::optional<Scalar> Scalar::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (looks_rational(text)) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Scalar(q);
  }
  char* end = nullptr;
  double d = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') return std::nullopt;
  return Scalar(d);
}

bool Scalar::is_zero(double tol) const {
  if (is_exact()) return sgn(rational_value()) == 0;
  return std::abs(std::get<double>(v_)) <= tol;
}

bool Scalar::is_exact_zero() const {
  if (is_exact()) return sgn(rational_value()) == 0;
  return std::get<double>(v_) == 0.0;
}

double Scalar::to_double() const {
  if (is_exact()) return rational_value().get_d();
  return std::get<double>(v_);
}

std::string Scalar::str() const {
  if (is_exact()) return rational_value().get_str();
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v_));
  return buf;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-rational_value()));
  return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) += o.rational_value();
  } else {
    v_ = to_double() + o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) -= o.rational_value();
  } else {
    v_ = to_double() - o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) *= o.rational_value();
  } else {
    v_ = to_double() * o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    if (sgn(o.rational_value()) == 0) throw std::domain_error("division by exact zero");
    std::get<mpq_class>(v_) /= o.rational_value();
  } else {
    v_ = to_double() / o.to_double();
  }
  return *this;
}

bool Scalar::close_to(const Scalar& o, double tol) const {
  if (is_exact() && o.is_exact()) return rational_value() == o.rational_value();
  return std::abs(to_double() - o.to_double()) <= tol;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational_value() == b.rational_value();
  return a.to_double() == b.to_double();
}

int Scalar::sign() const {
  if (is_exact()) return sgn(rational_value());
  double d = std::get<double>(v_);
  return (d > 0.0) - (d < 0.0);
}

Scalar Scalar::sqrt() const { return nth_root(2); }

Scalar Scalar::nth_root(unsigned long n) const {
  if (n == 0) throw std::invalid_argument("0th root");
  if (n == 1) return *this;
  if (sign() < 0) throw std::domain_error("root of negative value");
  if (is_exact()) {
    const mpq_class& q = rational_value();
    mpz_class num_root, den_root;
    bool num_exact = mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), n) != 0;
    bool den_exact = mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), n) != 0;
    if (num_exact && den_exact) {
      mpq_class r(num_root, den_root);
      r.canonicalize();
      return Scalar(r);
    }
  }
  return Scalar(std::pow(to_double(), 1.0 / static_cast<double>(n)));
}

Scalar Scalar::abs() const {
  return sign() < 0 ? -*this : *this;
}

}  // namespace g2forge
