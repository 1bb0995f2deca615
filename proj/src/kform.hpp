#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blade.hpp"
#include "scalar.hpp"

namespace g2forge {

/// A degree-k alternating form stored as a sparse map blade -> coefficient,
/// kept sorted by blade mask with exact zeros pruned. Immutable in spirit:
/// every operation returns a fresh value.
///
/// The inner product makes distinct blades orthonormal, so
/// beta ^ star(alpha) = <beta, alpha> e^{1...7}.
template <class S>
class KFormT {
 public:
  using Term = std::pair<Blade, S>;

  KFormT() = default;
  explicit KFormT(int degree) : degree_(degree) {}

  static KFormT zero(int degree) { return KFormT(degree); }

  static KFormT monomial(Blade b, S coeff) {
    KFormT f(b.degree());
    f.add_term(b, std::move(coeff));
    return f;
  }

  static KFormT unit(Blade b) { return monomial(b, S(1)); }

  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  S coeff(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade key) { return t.first < key; });
    if (it != terms_.end() && it->first == b) return it->second;
    return S(0);
  }

  void add_term(Blade b, S c) {
    if (b.degree() != degree_) throw std::invalid_argument("blade degree mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade key) { return t.first < key; });
    if (it != terms_.end() && it->first == b) {
      it->second += c;
      if (is_exact_zero(it->second)) terms_.erase(it);
    } else if (!is_exact_zero(c)) {
      terms_.insert(it, Term{b, std::move(c)});
    }
  }

  KFormT& operator+=(const KFormT& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  KFormT& operator-=(const KFormT& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  KFormT& operator*=(const S& s) {
    if (is_exact_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend KFormT operator+(KFormT a, const KFormT& b) { return a += b; }
  friend KFormT operator-(KFormT a, const KFormT& b) { return a -= b; }
  friend KFormT operator*(KFormT a, const S& s) { return a *= s; }
  friend KFormT operator*(const S& s, KFormT a) { return a *= s; }
  KFormT operator-() const {
    KFormT r(degree_);
    r.terms_.reserve(terms_.size());
    for (const auto& [b, c] : terms_) r.terms_.emplace_back(b, -c);
    return r;
  }

  bool is_zero(double tol = kDefaultTol) const {
    for (const auto& [b, c] : terms_)
      if (!scalar_is_zero(c, tol)) return false;
    return true;
  }

  /// Sum of squared coefficients; exact when every coefficient is exact.
  S norm_sq() const {
    S acc(0);
    for (const auto& [b, c] : terms_) acc += c * c;
    return acc;
  }

  double norm() const { return std::sqrt(to_double_norm_sq()); }

  double to_double_norm_sq() const {
    double acc = 0;
    for (const auto& [b, c] : terms_) {
      double d = scalar_to_double(c);
      acc += d * d;
    }
    return acc;
  }

  double max_abs_coeff() const {
    double m = 0;
    for (const auto& [b, c] : terms_) m = std::max(m, std::abs(scalar_to_double(c)));
    return m;
  }

 private:
  static bool is_exact_zero(const S& c) {
    if constexpr (std::is_same_v<S, Scalar>) return c.is_exact_zero();
    else return c == S(0);
  }
  static bool scalar_is_zero(const S& c, double tol) {
    if constexpr (std::is_same_v<S, Scalar>) return c.is_zero(tol);
    else return std::abs(c) <= tol;
  }
  static double scalar_to_double(const S& c) {
    if constexpr (std::is_same_v<S, Scalar>) return c.to_double();
    else return static_cast<double>(c);
  }

  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return is_exact_zero(t.second); }),
                 terms_.end());
  }

  int degree_ = 0;
  std::vector<Term> terms_;  // sorted by blade mask
};

using KForm = KFormT<Scalar>;
using KFormD = KFormT<double>;

/// Graded-anticommutative exterior product. Degrees exceeding 7 produce the
/// zero form of that degree.
template <class S>
KFormT<S> wedge(const KFormT<S>& a, const KFormT<S>& b) {
  KFormT<S> r(a.degree() + b.degree());
  if (a.degree() + b.degree() > 7) return r;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      S c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(Blade(static_cast<std::uint8_t>(ba.mask | bb.mask)), std::move(c));
    }
  }
  return r;
}

/// <a, b> for equal-degree forms; blades are orthonormal.
template <class S>
S inner(const KFormT<S>& a, const KFormT<S>& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner product degree mismatch");
  S acc(0);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() && ib != tb.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      acc += ia->second * ib->second;
      ++ia; ++ib;
    }
  }
  return acc;
}

/// Hodge star on the oriented orthonormal frame: the unique (7-k)-form with
/// beta ^ star(alpha) = <beta, alpha> e^{1...7}. An involution in dim 7.
template <class S>
KFormT<S> hodge_star(const KFormT<S>& a) {
  KFormT<S> r(7 - a.degree());
  for (const auto& [b, c] : a.terms()) {
    Blade comp(static_cast<std::uint8_t>(kFullMask & ~b.mask));
    int s = wedge_sign(b, comp);
    r.add_term(comp, s < 0 ? -c : c);
  }
  return r;
}

/// Interior product with the basis vector e_index.
template <class S>
KFormT<S> contract(const KFormT<S>& a, int index) {
  KFormT<S> r(a.degree() - 1);
  if (a.degree() == 0) throw std::invalid_argument("contraction of a 0-form");
  std::uint8_t bit = static_cast<std::uint8_t>(1u << (index - 1));
  for (const auto& [b, c] : a.terms()) {
    if (!(b.mask & bit)) continue;
    // e^I = sign * e^index ^ e^{I minus index}
    Blade rest(static_cast<std::uint8_t>(b.mask & ~bit));
    int s = wedge_sign(Blade(bit), rest);
    r.add_term(rest, s < 0 ? -c : c);
  }
  return r;
}

/// Exterior derivative extended from prescribed differentials of the seven
/// 1-forms by the graded Leibniz rule:
///   d(e^{i1...ik}) = sum_p (-1)^p d(e^{i_p}) ^ e^{I minus i_p}.
template <class S>
KFormT<S> leibniz_differential(const std::array<KFormT<S>, 7>& d_one_forms, const KFormT<S>& a) {
  KFormT<S> out(a.degree() + 1);
  if (a.degree() >= 7) return out;
  for (const auto& [b, coeff] : a.terms()) {
    int slot = 0;
    for (int i = 1; i <= 7; ++i) {
      if (!b.contains(i)) continue;
      Blade rest(static_cast<std::uint8_t>(b.mask & ~(1u << (i - 1))));
      for (const auto& [db, dc] : d_one_forms[i - 1].terms()) {
        int s = wedge_sign(db, rest);
        if (s == 0) continue;
        if (slot % 2 != 0) s = -s;
        S v = coeff * dc;
        if (s < 0) v = -v;
        out.add_term(Blade(static_cast<std::uint8_t>(db.mask | rest.mask)), std::move(v));
      }
      ++slot;
    }
  }
  return out;
}

/// Pullback along the linear map h with h(e_j) = sum_i rows[i][j] e_i, i.e.
/// e^i -> sum_j rows[i][j] e^j applied multiplicatively over blade factors.
/// `rows` is indexed [i-1][j-1] on the full 7-dim frame.
template <class S, class MatLike>
KFormT<S> substitute(const KFormT<S>& a, const MatLike& rows) {
  KFormT<S> r(a.degree());
  for (const auto& [b, c] : a.terms()) {
    KFormT<S> acc = KFormT<S>::monomial(Blade(0), c);
    for (int i = 1; i <= 7; ++i) {
      if (!b.contains(i)) continue;
      KFormT<S> image(1);
      for (int j = 1; j <= 7; ++j) {
        S m = rows(i - 1, j - 1);
        image.add_term(Blade::of({j}), std::move(m));
      }
      acc = wedge(acc, image);
    }
    r += acc;
  }
  return r;
}

}  // namespace g2forge
