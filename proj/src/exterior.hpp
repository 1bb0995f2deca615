#pragma once

#include <array>

#include "kform.hpp"
#include "matrix.hpp"

namespace g2forge {

/// The calibration 3-form in its normal form on the standard frame:
///   e^{127} + e^{347} + e^{567} + e^{135} - e^{146} - e^{236} - e^{245}.
template <class S = Scalar>
KFormT<S> standard_phi() {
  KFormT<S> phi(3);
  phi.add_term(Blade::of({1, 2, 7}), S(1));
  phi.add_term(Blade::of({3, 4, 7}), S(1));
  phi.add_term(Blade::of({5, 6, 7}), S(1));
  phi.add_term(Blade::of({1, 3, 5}), S(1));
  phi.add_term(Blade::of({1, 4, 6}), S(-1));
  phi.add_term(Blade::of({2, 3, 6}), S(-1));
  phi.add_term(Blade::of({2, 4, 5}), S(-1));
  return phi;
}

/// Index sets of the distinguished splitting: g1 = span{e3..e6} is the
/// 4-dimensional piece (oriented by e^{3456}), g0 = span{e7,e1,e2} the
/// 3-dimensional one (oriented by e^{127}).
struct SplitContext {
  static constexpr std::uint8_t g1_mask = 0b0011'1100;  // e3,e4,e5,e6
  static constexpr std::uint8_t g0_mask = 0b0100'0011;  // e7,e1,e2

  static bool on_g1(Blade b) { return (b.mask & ~g1_mask) == 0; }
  static bool on_g0(Blade b) { return (b.mask & ~g0_mask) == 0; }

  template <class S>
  static bool supported_on_g1(const KFormT<S>& a) {
    for (const auto& [b, c] : a.terms())
      if (!on_g1(b)) return false;
    return true;
  }
  template <class S>
  static bool supported_on_g0(const KFormT<S>& a) {
    for (const auto& [b, c] : a.terms())
      if (!on_g0(b)) return false;
    return true;
  }
};

/// Hodge star of the 4-dim factor, oriented by e^{3456}. Involutive.
template <class S>
KFormT<S> star_g1(const KFormT<S>& a) {
  if (!SplitContext::supported_on_g1(a))
    throw std::invalid_argument("star_g1: form not supported on span{e3..e6}");
  KFormT<S> r(4 - a.degree());
  for (const auto& [b, c] : a.terms()) {
    Blade comp(static_cast<std::uint8_t>(SplitContext::g1_mask & ~b.mask));
    int s = wedge_sign(b, comp);  // e^I ^ e^{Ic} = s * e^{3456}
    r.add_term(comp, s < 0 ? -c : c);
  }
  return r;
}

/// Hodge star of the 3-dim factor, oriented by e^{127}. Involutive.
template <class S>
KFormT<S> star_g0(const KFormT<S>& a) {
  if (!SplitContext::supported_on_g0(a))
    throw std::invalid_argument("star_g0: form not supported on span{e7,e1,e2}");
  KFormT<S> r(3 - a.degree());
  for (const auto& [b, c] : a.terms()) {
    Blade comp(static_cast<std::uint8_t>(SplitContext::g0_mask & ~b.mask));
    int s = wedge_sign(b, comp);  // e^K ^ e^{Kc} = s * e^{127}
    r.add_term(comp, s < 0 ? -c : c);
  }
  return r;
}

/// Full-space star computed through the splitting:
/// star(alpha ^ beta) = (-1)^{ij} star_g1(alpha) ^ star_g0(beta)
/// for alpha of degree i on g1 and beta of degree j on g0.
template <class S>
KFormT<S> split_hodge(const KFormT<S>& a, const KFormT<S>& b) {
  if (!SplitContext::supported_on_g1(a))
    throw std::invalid_argument("split_hodge: first factor leaves span{e3..e6}");
  if (!SplitContext::supported_on_g0(b))
    throw std::invalid_argument("split_hodge: second factor leaves span{e7,e1,e2}");
  KFormT<S> r = wedge(star_g1(a), star_g0(b));
  if ((a.degree() * b.degree()) % 2 != 0) return -r;
  return r;
}

/// Matrix rows/columns of theta actions map to these frame indices.
/// 2x2 acts on {e1,e2}, 4x4 on {e3..e6}, 7x7 on everything.
inline const std::array<int, 7>& theta_index_map(std::size_t dim) {
  static const std::array<int, 7> two{1, 2, 0, 0, 0, 0, 0};
  static const std::array<int, 7> four{3, 4, 5, 6, 0, 0, 0};
  static const std::array<int, 7> seven{1, 2, 3, 4, 5, 6, 7};
  switch (dim) {
    case 2: return two;
    case 4: return four;
    case 7: return seven;
    default: throw std::invalid_argument("theta: matrix must be 2x2, 4x4 or 7x7");
  }
}

/// The representation theta of gl acting on forms as the derivation that
/// extends e^i -> -sum_j M_{ij} e^j on 1-forms of the subspace (and kills
/// 1-forms off it). theta(M)(a^b) = theta(M)a ^ b + a ^ theta(M)b.
template <class S>
KFormT<S> theta_action(const MatrixT<S>& m, const KFormT<S>& a) {
  if (m.rows() != m.cols()) throw std::invalid_argument("theta: matrix must be square");
  const auto& idx = theta_index_map(m.rows());
  std::array<int, 8> row_of{};  // frame index -> matrix row+1, 0 if outside
  for (std::size_t r = 0; r < m.rows(); ++r) row_of[idx[r]] = static_cast<int>(r) + 1;

  KFormT<S> out(a.degree());
  for (const auto& [b, c] : a.terms()) {
    int pos = 0;  // number of blade indices before the active slot
    for (int i = 1; i <= 7; ++i) {
      if (!b.contains(i)) continue;
      int slot = pos++;
      if (!row_of[i]) continue;
      int row = row_of[i] - 1;
      Blade rest(static_cast<std::uint8_t>(b.mask & ~(1u << (i - 1))));
      // e^I = (-1)^slot e^i ^ e^rest; replace e^i by -sum_j M(row,j) e^{idx j}
      for (std::size_t j = 0; j < m.cols(); ++j) {
        int tgt = idx[j];
        if (rest.contains(tgt)) continue;
        int s = wedge_sign(Blade::of({tgt}), rest);
        if (slot % 2 != 0) s = -s;
        S v = c * m(static_cast<std::size_t>(row), j);
        if (s > 0) v = -v;  // overall minus from the dual action
        out.add_term(Blade(static_cast<std::uint8_t>(rest.mask | (1u << (tgt - 1)))),
                     std::move(v));
      }
    }
  }
  return out;
}

/// The six 2-forms on g1 spanning Lambda^2 g1*, in the fixed order
/// (wbar7, wbar1, wbar2, w7, w1, w2):
///   wbar7 = e^34 - e^56   w7 = e^34 + e^56
///   wbar1 = e^35 + e^46   w1 = e^35 - e^46
///   wbar2 = -e^36 + e^45  w2 = -e^36 - e^45
/// Orthogonal, each of squared norm 2; star_g1 fixes the w's and negates
/// the wbar's.
template <class S = Scalar>
const std::array<KFormT<S>, 6>& upsilon_basis() {
  static const std::array<KFormT<S>, 6> basis = [] {
    auto two_form = [](int a1, int a2, S ca, int b1, int b2, S cb) {
      KFormT<S> f(2);
      f.add_term(Blade::of({a1, a2}), ca);
      f.add_term(Blade::of({b1, b2}), cb);
      return f;
    };
    return std::array<KFormT<S>, 6>{
        two_form(3, 4, S(1), 5, 6, S(-1)),   // wbar7
        two_form(3, 5, S(1), 4, 6, S(1)),    // wbar1
        two_form(3, 6, S(-1), 4, 5, S(1)),   // wbar2
        two_form(3, 4, S(1), 5, 6, S(1)),    // w7
        two_form(3, 5, S(1), 4, 6, S(-1)),   // w1
        two_form(3, 6, S(-1), 4, 5, S(-1)),  // w2
    };
  }();
  return basis;
}

template <class S = Scalar>
const KFormT<S>& omega_bar7() { return upsilon_basis<S>()[0]; }
template <class S = Scalar>
const KFormT<S>& omega_bar1() { return upsilon_basis<S>()[1]; }
template <class S = Scalar>
const KFormT<S>& omega_bar2() { return upsilon_basis<S>()[2]; }
template <class S = Scalar>
const KFormT<S>& omega7() { return upsilon_basis<S>()[3]; }
template <class S = Scalar>
const KFormT<S>& omega1() { return upsilon_basis<S>()[4]; }
template <class S = Scalar>
const KFormT<S>& omega2() { return upsilon_basis<S>()[5]; }

}  // namespace g2forge
