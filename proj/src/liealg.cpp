#include "liealg.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "linsolve.hpp"

namespace g2forge {

LieAlgebra::LieAlgebra() { rebuild_differentials(); }

LieAlgebra LieAlgebra::from_structure_constants(
    const std::vector<std::tuple<int, int, int, Scalar>>& entries) {
  LieAlgebra g;
  for (const auto& [i, j, k, v] : entries) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
      throw std::invalid_argument("structure constant index out of range 1..7");
    if (i == j) throw std::invalid_argument("structure constant with i == j");
    g.c_[idx(i, j, k)] += v;
    g.c_[idx(j, i, k)] -= v;
  }
  g.rebuild_differentials();
  return g;
}

std::array<Scalar, 7> LieAlgebra::bracket(const std::array<Scalar, 7>& x,
                                          const std::array<Scalar, 7>& y) const {
  std::array<Scalar, 7> out{};
  for (int i = 1; i <= 7; ++i) {
    if (x[i - 1].is_exact_zero()) continue;
    for (int j = 1; j <= 7; ++j) {
      if (y[j - 1].is_exact_zero()) continue;
      Scalar f = x[i - 1] * y[j - 1];
      for (int k = 1; k <= 7; ++k) {
        const Scalar& ck = c(i, j, k);
        if (!ck.is_exact_zero()) out[k - 1] += f * ck;
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(int i) const {
  Matrix m(7, 7);
  for (int j = 1; j <= 7; ++j)
    for (int k = 1; k <= 7; ++k) m(k - 1, j - 1) = c(i, j, k);
  return m;
}

Scalar LieAlgebra::jacobi_residual() const {
  Scalar worst(0);
  double worst_abs = 0.0;
  auto basis_vec = [](int i) {
    std::array<Scalar, 7> v{};
    v[i - 1] = Scalar(1);
    return v;
  };
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) {
        auto ei = basis_vec(i), ej = basis_vec(j), ek = basis_vec(k);
        auto t1 = bracket(bracket(ei, ej), ek);
        auto t2 = bracket(bracket(ej, ek), ei);
        auto t3 = bracket(bracket(ek, ei), ej);
        for (int m = 0; m < 7; ++m) {
          Scalar s = t1[m] + t2[m] + t3[m];
          double a = std::abs(s.to_double());
          if (a > worst_abs) {
            worst_abs = a;
            worst = s.abs();
          }
        }
      }
  return worst;
}

bool LieAlgebra::all_exact() const {
  for (const Scalar& s : c_)
    if (!s.is_exact()) return false;
  return true;
}

void LieAlgebra::rebuild_differentials() {
  for (int m = 1; m <= 7; ++m) {
    KForm d(2);
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) {
        const Scalar& ck = c(i, j, m);
        if (!ck.is_exact_zero()) d.add_term(Blade::of({i, j}), -ck);
      }
    d_basis_[m - 1] = std::move(d);
  }
}

KForm LieAlgebra::differential(const KForm& a) const {
  return leibniz_differential(d_basis_, a);
}

bool LieAlgebra::is_unimodular(const std::vector<int>& subspace, double tol) const {
  std::array<bool, 8> in{};
  for (int i : subspace) {
    if (i < 1 || i > 7) throw std::invalid_argument("subspace index out of range");
    in[i] = true;
  }
  // Closure under the bracket.
  for (int i : subspace)
    for (int j : subspace)
      for (int k = 1; k <= 7; ++k)
        if (!in[k] && !c(i, j, k).is_zero(tol))
          throw std::invalid_argument("subspace is not closed under the bracket");

  for (int i : subspace) {
    Scalar tr(0);
    for (int j : subspace) tr += c(i, j, j);
    if (!tr.is_zero(tol)) return false;
  }
  return true;
}

bool LieAlgebra::is_unimodular(double tol) const {
  return is_unimodular({1, 2, 3, 4, 5, 6, 7}, tol);
}

DerivationSpace derivation_space(const LieAlgebra& g, bool force_float) {
  // Unknowns D_{mk} laid out as column (m-1)*7 + (k-1); D e_k = sum_m D_{mk} e_m.
  // For each pair i<j and component m:
  //   sum_k c^k_{ij} D_{mk} - sum_k D_{ki} c^m_{kj} - sum_k D_{kj} c^m_{ik} = 0.
  auto col = [](int m, int k) { return (m - 1) * 7 + (k - 1); };
  Matrix sys(21 * 7, 49);
  int row = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      for (int m = 1; m <= 7; ++m) {
        for (int k = 1; k <= 7; ++k) {
          sys(row, col(m, k)) += g.c(i, j, k);
          sys(row, col(k, i)) -= g.c(k, j, m);
          sys(row, col(k, j)) -= g.c(i, k, m);
        }
        ++row;
      }
    }

  DerivationSpace out;
  if (g.all_exact() && !force_float) {
    ExactRref rref(sys);
    for (const auto& v : rref.nullspace()) {
      Matrix d(7, 7);
      for (int m = 1; m <= 7; ++m)
        for (int k = 1; k <= 7; ++k) d(m - 1, k - 1) = v[col(m, k)];
      out.basis.push_back(std::move(d));
    }
    out.exact = true;
    return out;
  }

  FloatNullspace ns = float_nullspace(to_double(sys));
  for (const auto& v : ns.basis) {
    Matrix d(7, 7);
    for (int m = 1; m <= 7; ++m)
      for (int k = 1; k <= 7; ++k) d(m - 1, k - 1) = Scalar(v[col(m, k)]);
    out.basis.push_back(std::move(d));
  }
  out.smallest_retained_sv = ns.smallest_retained_sv;
  out.sv_cutoff = ns.cutoff;
  return out;
}

double derivation_residual(const LieAlgebra& g, const Matrix& d) {
  double worst = 0.0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int m = 1; m <= 7; ++m) {
        Scalar acc(0);
        for (int k = 1; k <= 7; ++k) {
          acc += g.c(i, j, k) * d(m - 1, k - 1);
          acc -= d(k - 1, i - 1) * g.c(k, j, m);
          acc -= d(k - 1, j - 1) * g.c(i, k, m);
        }
        worst = std::max(worst, std::abs(acc.to_double()));
      }
  return worst;
}

}  // namespace g2forge
