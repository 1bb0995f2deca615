#include "family.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "linsolve.hpp"

namespace g2forge {

namespace {

KForm unit(std::initializer_list<int> idx) { return KForm::unit(Blade::of(idx)); }

KForm theta4(const Matrix& m, const KForm& a) { return theta_action(m, a); }

/// Entry in the 3..6 labelling used by the coefficient formulas.
Scalar at(const Matrix& m, int p, int q) { return m(p - 3, q - 3); }

}  // namespace

LieAlgebra family_algebra(const Matrix& a1, const Matrix& a, const Matrix& b, const Matrix& c) {
  std::vector<std::tuple<int, int, int, Scalar>> entries;
  entries.emplace_back(7, 1, 1, a1(0, 0));
  entries.emplace_back(7, 1, 2, a1(1, 0));
  entries.emplace_back(7, 2, 1, a1(0, 1));
  entries.emplace_back(7, 2, 2, a1(1, 1));
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      if (!a(i, j).is_exact_zero()) entries.emplace_back(7, j + 3, i + 3, a(i, j));
      if (!b(i, j).is_exact_zero()) entries.emplace_back(1, j + 3, i + 3, b(i, j));
      if (!c(i, j).is_exact_zero()) entries.emplace_back(2, j + 3, i + 3, c(i, j));
    }
  return LieAlgebra::from_structure_constants(entries);
}

std::vector<std::string> FamilySpec::violations(const Matrix& a1, const Matrix& a,
                                                const Matrix& b, const Matrix& c, double tol) {
  if (a1.rows() != 2 || a1.cols() != 2) throw bad_input("A1 must be 2x2");
  for (auto [m, name] : {std::pair{&a, "A"}, {&b, "B"}, {&c, "C"}})
    if (m->rows() != 4 || m->cols() != 4) throw bad_input(std::string(name) + " must be 4x4");

  std::vector<std::string> out;
  if (!b.trace().is_zero(tol)) out.push_back("tr B != 0");
  if (!c.trace().is_zero(tol)) out.push_back("tr C != 0");

  const Scalar x = a1(0, 0), z = a1(0, 1), y = a1(1, 0), w = a1(1, 1);
  auto is_zero_matrix = [&](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero(tol)) return false;
    return true;
  };
  if (!is_zero_matrix(commutator(a, b) - x * b - y * c)) out.push_back("[A,B] != x B + y C");
  if (!is_zero_matrix(commutator(a, c) - z * b - w * c)) out.push_back("[A,C] != z B + w C");
  if (!is_zero_matrix(commutator(b, c))) out.push_back("[B,C] != 0");

  if (out.empty() && !family_algebra(a1, a, b, c).jacobi_residual().is_zero(tol))
    out.push_back("Jacobi identity fails");
  return out;
}

FamilySpec::FamilySpec(Matrix a1, Matrix a, Matrix b, Matrix c)
    : a1_(std::move(a1)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  auto bad = violations(a1_, a_, b_, c_);
  if (!bad.empty()) {
    std::string msg = "invalid family instance:";
    for (const auto& v : bad) msg += " [" + v + "]";
    throw constraint_error(msg);
  }
  algebra_ = family_algebra(a1_, a_, b_, c_);
}

Matrix theta_upsilon_matrix(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw bad_input("theta on Upsilon expects a 4x4 matrix");
  const auto& basis = upsilon_basis<Scalar>();
  Matrix out(6, 6);
  for (int j = 0; j < 6; ++j) {
    KForm img = theta_action(m, basis[j]);
    for (int i = 0; i < 6; ++i)
      out(i, j) = inner(img, basis[i]) / Scalar(2);  // basis elements have |.|^2 = 2
  }
  return out;
}

DerivedForms specialized_derivative_forms(const FamilySpec& spec) {
  const Matrix& a = spec.a();
  const Matrix& b = spec.b();
  const Matrix& c = spec.c();
  const Matrix at_ = a.transpose(), bt = b.transpose(), ct = c.transpose();
  const Scalar x = spec.x(), y = spec.y(), z = spec.z(), w = spec.w();
  const Scalar tr_a = a.trace(), tr_a1 = spec.a1().trace();

  const KForm &w7 = omega7(), &w1 = omega1(), &w2 = omega2();

  DerivedForms f;

  f.dphi = wedge(theta4(b, w2) - theta4(c, w1), unit({1, 2})) +
           wedge(theta4(b, w7) - theta4(a, w1) + w1 * x + w2 * y, unit({1, 7})) +
           wedge(theta4(c, w7) - theta4(a, w2) + w1 * z + w2 * w, unit({2, 7}));

  const KForm y7 = -theta4(bt, w2) + theta4(ct, w1);
  const KForm y2 = theta4(bt, w7) - theta4(at_, w1) - w1 * (tr_a + x) - w2 * y;
  const KForm y1 = -theta4(ct, w7) + theta4(at_, w2) + w2 * (tr_a + w) + w1 * z;

  f.star_dphi = wedge(y7, unit({7})) + wedge(y2, unit({2})) + wedge(y1, unit({1}));

  const KForm b17 = theta4(b, y7) - theta4(a, y1) + y1 * x + y2 * y;
  const KForm b27 = theta4(c, y7) - theta4(a, y2) + y1 * z + y2 * w;
  const KForm b12 = theta4(b, y2) - theta4(c, y1);

  f.d_star_dphi =
      wedge(b17, unit({1, 7})) + wedge(b27, unit({2, 7})) + wedge(b12, unit({1, 2}));

  f.star_d_star_dphi = wedge(-star_g1(b17), unit({2})) + wedge(star_g1(b27), unit({1})) +
                       wedge(star_g1(b12), unit({7}));

  f.star_phi = unit({3, 4, 5, 6}) + wedge(w7, unit({1, 2})) + wedge(w1, unit({2, 7})) -
               wedge(w2, unit({1, 7}));

  const KForm zform = theta4(a, w7) - w7 * tr_a1 + theta4(b, w1) + theta4(c, w2);
  f.d_star_phi = unit({3, 4, 5, 6, 7}) * (-tr_a) + wedge(zform, unit({1, 2, 7}));
  f.star_d_star_phi = unit({1, 2}) * (-tr_a) + star_g1(zform);

  const KForm xi = w7 * (tr_a1 + tr_a) + theta4(at_, w7) + theta4(bt, w1) + theta4(ct, w2);
  f.d_star_d_star_phi = unit({1, 2, 7}) * (tr_a1 * tr_a) - wedge(theta4(a, xi), unit({7})) -
                        wedge(theta4(b, xi), unit({1})) - wedge(theta4(c, xi), unit({2}));

  return f;
}

KForm family_differential(const FamilySpec& spec, const KForm& form) {
  const Scalar x = spec.x(), y = spec.y(), z = spec.z(), w = spec.w();

  // d on the three 1-forms off g1.
  KForm de1 = wedge(unit({1}) * x + unit({2}) * z, unit({7}));
  KForm de2 = wedge(unit({1}) * y + unit({2}) * w, unit({7}));
  std::array<KForm, 8> d0;
  for (auto& f : d0) f = KForm(2);
  d0[1] = de1;
  d0[2] = de2;

  auto d_g0_blade = [&](Blade b0) {
    KForm out(b0.degree() + 1);
    int slot = 0;
    for (int i : {1, 2, 7}) {
      if (!b0.contains(i)) continue;
      Blade rest(static_cast<std::uint8_t>(b0.mask & ~(1u << (i - 1))));
      for (const auto& [db, dc] : d0[i].terms()) {
        int s = wedge_sign(db, rest);
        if (s == 0) continue;
        if (slot % 2 != 0) s = -s;
        out.add_term(Blade(static_cast<std::uint8_t>(db.mask | rest.mask)), s < 0 ? -dc : dc);
      }
      ++slot;
    }
    return out;
  };

  KForm out(form.degree() + 1);
  if (form.degree() >= 7) return out;
  for (const auto& [blade, coeff] : form.terms()) {
    Blade b1(static_cast<std::uint8_t>(blade.mask & SplitContext::g1_mask));
    Blade b0(static_cast<std::uint8_t>(blade.mask & SplitContext::g0_mask));
    int split_sign = wedge_sign(b1, b0);  // e^I = split_sign * e^{I1} ^ e^{I0}

    // d(e^{I1}) = (-1)^{deg} (theta(A) e^{I1} ^ e^7 + theta(B) e^{I1} ^ e^1
    //                         + theta(C) e^{I1} ^ e^2)
    KForm g1part = KForm::unit(b1);
    KForm dg1 = wedge(theta4(spec.a(), g1part), unit({7})) +
                wedge(theta4(spec.b(), g1part), unit({1})) +
                wedge(theta4(spec.c(), g1part), unit({2}));
    if (b1.degree() % 2 != 0) dg1 = -dg1;

    KForm total = wedge(dg1, KForm::unit(b0));
    KForm second = wedge(g1part, d_g0_blade(b0));
    if (b1.degree() % 2 != 0) second = -second;
    total += second;

    Scalar f = coeff;
    if (split_sign < 0) f = -f;
    out += total * f;
  }
  return out;
}

ClosednessConditions closedness_conditions(const FamilySpec& spec) {
  const KForm &w7 = omega7(), &w1 = omega1(), &w2 = omega2();
  ClosednessConditions out;
  out.residuals[0] =
      theta4(spec.a(), w1) - theta4(spec.b(), w7) - w1 * spec.x() - w2 * spec.y();
  out.residuals[1] =
      theta4(spec.a(), w2) - theta4(spec.c(), w7) - w1 * spec.z() - w2 * spec.w();
  out.residuals[2] = theta4(spec.b(), w2) - theta4(spec.c(), w1);
  return out;
}

CoclosednessConditions coclosedness_conditions(const FamilySpec& spec) {
  const KForm &w7 = omega7(), &w1 = omega1(), &w2 = omega2();
  CoclosednessConditions out;
  out.trace_a = spec.a().trace();
  out.residual = theta4(spec.a(), w7) + theta4(spec.b(), w1) + theta4(spec.c(), w2) -
                 w7 * spec.a1().trace();
  return out;
}

TorsionForms specialized_torsion(const FamilySpec& spec) {
  const Matrix &a = spec.a(), &b = spec.b(), &c = spec.c();
  const Scalar x = spec.x(), y = spec.y(), z = spec.z(), w = spec.w();
  const Scalar tr_a = a.trace(), tr_a1 = spec.a1().trace();

  TorsionForms t;

  // a-group from the pairing <theta(A) w1, w2> (the coefficient display's
  // a-indices are garbled; the pairing itself is unambiguous).
  t.tau0 = frac(2, 7) * (at(a, 3, 4) - at(a, 4, 3) + at(a, 5, 6) - at(a, 6, 5) + at(b, 3, 5) +
                         at(b, 6, 4) - at(b, 5, 3) - at(b, 4, 6) + at(c, 5, 4) + at(c, 6, 3) -
                         at(c, 4, 5) - at(c, 3, 6) + z - y);

  const Scalar lambda2 = frac(-1, 12) * (at(a, 6, 4) + at(a, 3, 5) - at(a, 4, 6) - at(a, 5, 3) +
                                         at(b, 4, 3) + at(b, 6, 5) - at(b, 3, 4) - at(b, 5, 6));
  const Scalar lambda1 = frac(-1, 12) * (at(a, 3, 6) + at(a, 4, 5) - at(a, 6, 3) - at(a, 5, 4) +
                                         at(c, 5, 6) + at(c, 3, 4) - at(c, 6, 5) - at(c, 4, 3));
  const Scalar lambda7 =
      frac(-1, 12) * (at(b, 6, 3) + at(b, 5, 4) - at(b, 3, 6) - at(b, 4, 5) + at(c, 4, 6) +
                      at(c, 5, 3) - at(c, 6, 4) - at(c, 3, 5) + Scalar(2) * (tr_a1 + tr_a));

  t.tau1 = KForm(1);
  t.tau1.add_term(Blade::of({1}), lambda1);
  t.tau1.add_term(Blade::of({2}), lambda2);
  t.tau1.add_term(Blade::of({7}), lambda7);

  const Scalar third = frac(1, 3);
  t.tau2 = KForm(2);
  t.tau2.add_term(Blade::of({1, 2}),
                  third * (tr_a - Scalar(2) * tr_a1 + at(b, 4, 5) + at(b, 3, 6) - at(b, 5, 4) -
                           at(b, 6, 3) + at(c, 3, 5) + at(c, 6, 4) - at(c, 5, 3) - at(c, 4, 6)));
  t.tau2.add_term(Blade::of({1, 7}),
                  third * (at(a, 6, 4) + at(a, 3, 5) - at(a, 4, 6) - at(a, 5, 3) + at(b, 6, 5) +
                           at(b, 4, 3) - at(b, 5, 6) - at(b, 3, 4)));
  t.tau2.add_term(Blade::of({2, 7}),
                  third * (at(a, 5, 4) + at(a, 6, 3) - at(a, 4, 5) - at(a, 3, 6) + at(c, 6, 5) +
                           at(c, 4, 3) - at(c, 5, 6) - at(c, 3, 4)));
  t.tau2.add_term(
      Blade::of({3, 4}),
      third * (tr_a1 - Scalar(2) * at(a, 3, 3) - Scalar(2) * at(a, 4, 4) + at(a, 5, 5) +
               at(a, 6, 6) + Scalar(2) * at(c, 4, 6) - Scalar(2) * at(c, 3, 5) -
               Scalar(2) * at(b, 4, 5) - Scalar(2) * at(b, 3, 6) - at(c, 5, 3) + at(c, 6, 4) -
               at(b, 6, 3) - at(b, 5, 4)));
  t.tau2.add_term(
      Blade::of({3, 5}),
      third * (Scalar(-2) * at(a, 5, 4) + Scalar(2) * at(a, 3, 6) + Scalar(2) * at(c, 5, 6) +
               Scalar(2) * at(c, 3, 4) + at(a, 6, 3) - at(a, 4, 5) + at(c, 6, 5) + at(c, 4, 3) -
               Scalar(3) * at(b, 5, 5) - Scalar(3) * at(b, 3, 3)));
  t.tau2.add_term(
      Blade::of({3, 6}),
      third * (Scalar(-2) * at(a, 6, 4) - Scalar(2) * at(a, 3, 5) - Scalar(2) * at(b, 6, 5) +
               Scalar(2) * at(b, 3, 4) - at(a, 4, 6) - at(a, 5, 3) - at(b, 5, 6) + at(b, 4, 3) +
               Scalar(3) * at(c, 6, 6) + Scalar(3) * at(c, 3, 3)));
  t.tau2.add_term(
      Blade::of({4, 5}),
      third * (at(a, 6, 4) + at(a, 3, 5) + at(b, 6, 5) - at(b, 3, 4) + Scalar(2) * at(a, 4, 6) +
               Scalar(2) * at(a, 5, 3) + Scalar(2) * at(b, 5, 6) - Scalar(2) * at(b, 4, 3) +
               Scalar(3) * at(c, 5, 5) + Scalar(3) * at(c, 4, 4)));
  t.tau2.add_term(
      Blade::of({4, 6}),
      third * (-at(a, 5, 4) + at(a, 3, 6) + at(c, 5, 6) + at(c, 3, 4) + Scalar(2) * at(a, 6, 3) -
               Scalar(2) * at(a, 4, 5) + Scalar(2) * at(c, 6, 5) + Scalar(2) * at(c, 4, 3) +
               Scalar(3) * at(b, 6, 6) + Scalar(3) * at(b, 4, 4)));
  t.tau2.add_term(
      Blade::of({5, 6}),
      third * (tr_a1 + at(a, 3, 3) + at(a, 4, 4) - Scalar(2) * at(a, 5, 5) -
               Scalar(2) * at(a, 6, 6) - at(c, 4, 6) + at(c, 3, 5) + at(b, 4, 5) + at(b, 3, 6) +
               Scalar(2) * at(c, 5, 3) - Scalar(2) * at(c, 6, 4) + Scalar(2) * at(b, 6, 3) +
               Scalar(2) * at(b, 5, 4)));

  const Matrix at_ = a.transpose(), bt = b.transpose(), ct = c.transpose();
  const KForm &w7 = omega7(), &w1 = omega1(), &w2 = omega2();
  const Scalar three(3);
  t.tau3 = unit({1, 2, 7}) * (-t.tau0) +
           wedge(-theta4(bt, w2) + theta4(ct, w1) - w7 * t.tau0 - w2 * (three * lambda1) +
                     w1 * (three * lambda2),
                 unit({7})) +
           wedge(theta4(bt, w7) - theta4(at_, w1) - w1 * (tr_a + x + three * lambda7) +
                     w2 * (-y - t.tau0) + w7 * (three * lambda1),
                 unit({2})) +
           wedge(-theta4(ct, w7) + theta4(at_, w2) + w1 * (z - t.tau0) +
                     w2 * (tr_a + w + three * lambda7) - w7 * (three * lambda2),
                 unit({1}));
  return t;
}

RicciData ricci_operator(const FamilySpec& spec, double tol) {
  const Matrix &a1 = spec.a1(), &a = spec.a(), &b = spec.b(), &c = spec.c();
  const Scalar tr_sum = a1.trace() + a.trace();
  const Matrix sa = a.symmetric_part(), sb = b.symmetric_part(), sc = c.symmetric_part();
  const Matrix sa1 = a1.symmetric_part();

  RicciData out;
  Matrix& r = out.ricci;

  // g1 x g1 block (frame positions e3..e6).
  Matrix rg1 = (commutator(a, a.transpose()) + commutator(b, b.transpose()) +
                commutator(c, c.transpose())) *
                   frac(1, 2) -
               tr_sum * sa;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i + 2, j + 2) = rg1(i, j);

  // g0 x g0 block in positions (e7, e1, e2); ad(e7) contributes both its
  // blocks to the (e7, e7) entry.
  r(6, 6) = -(sa1 * sa1).trace() - (sa * sa).trace();
  r(6, 0) = r(0, 6) = -(sa * b).trace();
  r(6, 1) = r(1, 6) = -(sa * c).trace();
  Matrix r00 = commutator(a1, a1.transpose()) * frac(1, 2) - tr_sum * sa1;
  r(0, 0) = r00(0, 0) - (sb * sb).trace();
  r(0, 1) = r(1, 0) = r00(0, 1) - (sb * c).trace();
  r(1, 1) = r00(1, 1) - (sc * sc).trace();

  out.scalar_curvature = r.trace();
  out.ricci_norm_sq = r.frobenius_sq();
  if (!out.ricci_norm_sq.is_zero(tol * tol))
    out.f_value = out.scalar_curvature * out.scalar_curvature / out.ricci_norm_sq;
  return out;
}

Scalar pinching_functional(const FamilySpec& spec, double tol) {
  RicciData r = ricci_operator(spec, tol);
  if (!r.f_value) throw constraint_error("pinching functional undefined on a flat metric");
  return *r.f_value;
}

FamilySpec builtin_gs(const Scalar& s) {
  Matrix a1 = Matrix::diagonal({frac(3, 8) + s, frac(-1, 8) + s});
  Matrix a = Matrix::diagonal({frac(3, 8) - s, frac(-1, 8) - s, frac(1, 4), frac(3, 4)});
  Matrix b(4, 4), c(4, 4);
  b(2, 1) = Scalar(-1);  // [e1, e4] = -e5
  b(3, 0) = Scalar(-1);  // [e1, e3] = -e6
  c(2, 0) = Scalar(-1);  // [e2, e3] = -e5
  return FamilySpec(a1, a, b, c);
}

FamilySpec builtin_sa(const Scalar& a_param) {
  Scalar q = (Scalar(1) + Scalar(4) * a_param) * frac(1, 4);
  Scalar p = (Scalar(1) - Scalar(4) * a_param) * frac(1, 4);
  Matrix a1 = Matrix::diagonal({q, q});
  Matrix a = Matrix::diagonal({p, p, frac(1, 2), frac(1, 2)});
  Matrix b(4, 4), c(4, 4);
  b(2, 1) = Scalar(-1);  // [e1, e4] = -e5
  b(3, 0) = Scalar(-1);  // [e1, e3] = -e6
  c(2, 0) = Scalar(-1);  // [e2, e3] = -e5
  c(3, 1) = Scalar(1);   // [e2, e4] = e6
  return FamilySpec(a1, a, b, c);
}

FamilySpec builtin_fr() {
  Matrix a1(2, 2);
  Matrix a = Matrix::diagonal({Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)});
  Matrix b(4, 4), c(4, 4);
  b(2, 1) = Scalar(2);   // [e1, e4] = 2 e5
  c(3, 1) = Scalar(-2);  // [e2, e4] = -2 e6
  return FamilySpec(a1, a, b, c);
}

ReferenceSoliton reference_soliton_gs(const Scalar& s) {
  ReferenceSoliton out;
  Scalar s2 = s * s;
  out.c = frac(-15, 8) + Scalar(8) * s2;
  Scalar k32 = frac(1, 32);
  std::array<Scalar, 7> diag = {
      Scalar(45) - Scalar(32) * s - Scalar(64) * s2, Scalar(5) - Scalar(32) * s - Scalar(64) * s2,
      Scalar(45) + Scalar(32) * s - Scalar(64) * s2, Scalar(5) + Scalar(32) * s - Scalar(64) * s2,
      Scalar(50) - Scalar(128) * s2, Scalar(90) - Scalar(128) * s2, Scalar(0)};
  for (int i = 0; i < 7; ++i) out.d(i, i) = k32 * diag[i];
  return out;
}

ReferenceSoliton reference_soliton_sa(const Scalar& a) {
  ReferenceSoliton out;
  Scalar a2 = a * a;
  out.c = frac(-9, 2) + Scalar(8) * a2;
  Scalar k8 = frac(1, 8);
  std::array<Scalar, 7> diag = {
      Scalar(15) - Scalar(8) * a - Scalar(16) * a2, Scalar(15) - Scalar(8) * a - Scalar(16) * a2,
      Scalar(15) + Scalar(8) * a - Scalar(16) * a2, Scalar(15) + Scalar(8) * a - Scalar(16) * a2,
      Scalar(30) - Scalar(32) * a2, Scalar(30) - Scalar(32) * a2, Scalar(0)};
  for (int i = 0; i < 7; ++i) out.d(i, i) = k8 * diag[i];
  return out;
}

ReferenceSoliton reference_soliton_fr() {
  ReferenceSoliton out;
  out.c = Scalar(0);
  std::array<int, 7> diag = {0, 0, -4, 4, 4, 4, 0};
  for (int i = 0; i < 7; ++i) out.d(i, i) = Scalar(diag[i]);
  return out;
}

Scalar pinching_gs(const Scalar& s) {
  Scalar s2 = s * s;
  Scalar num = Scalar(75) + Scalar(64) * s2;
  return num * num / (Scalar(1725) + Scalar(4224) * s2 + Scalar(4096) * s2 * s2);
}

Scalar pinching_sa(const Scalar& a) {
  Scalar a2 = a * a;
  Scalar num = Scalar(27) + Scalar(16) * a2;
  return num * num / (Scalar(153) + Scalar(352) * a2 + Scalar(256) * a2 * a2);
}

Matrix gs_mirror_map() {
  Matrix h(7, 7);
  h(2, 0) = Scalar(1);  // e1 -> e3
  h(3, 1) = Scalar(1);  // e2 -> e4
  h(0, 2) = Scalar(1);  // e3 -> e1
  h(1, 3) = Scalar(1);  // e4 -> e2
  h(4, 4) = Scalar(-1);
  h(5, 5) = Scalar(-1);
  h(6, 6) = Scalar(1);
  return h;
}

std::vector<Scalar> nilradical_center_spectrum(const FamilySpec& spec) {
  const LieAlgebra& g = spec.algebra();
  // Centre of h = span{e1..e6}: X with [X, e_j] = 0 for all j <= 6.
  Matrix sys(42, 6);
  int row = 0;
  for (int j = 1; j <= 6; ++j)
    for (int m = 1; m <= 7; ++m) {
      for (int i = 1; i <= 6; ++i) sys(row, i - 1) = g.c(i, j, m);
      ++row;
    }

  std::vector<std::vector<double>> center;
  if (g.all_exact()) {
    ExactRref rref(sys);
    for (const auto& v : rref.nullspace()) {
      std::vector<double> col(6);
      for (int i = 0; i < 6; ++i) col[i] = v[i].to_double();
      center.push_back(std::move(col));
    }
  } else {
    for (const auto& v : float_nullspace(to_double(sys)).basis) center.push_back(v);
  }
  if (center.empty()) return {};

  // Restrict ad(e7) to the centre and take its eigenvalues (diagnostic only,
  // computed in floats).
  Eigen::MatrixXd cbasis(6, center.size());
  for (std::size_t k = 0; k < center.size(); ++k)
    for (int i = 0; i < 6; ++i) cbasis(i, k) = center[k][i];
  Eigen::MatrixXd ad7(6, 6);
  for (int j = 1; j <= 6; ++j)
    for (int m = 1; m <= 6; ++m) ad7(m - 1, j - 1) = g.c(7, j, m).to_double();
  Eigen::MatrixXd restricted =
      (cbasis.transpose() * cbasis).ldlt().solve(cbasis.transpose() * (ad7 * cbasis));
  Eigen::VectorXcd ev = restricted.eigenvalues();
  std::vector<Scalar> out;
  for (long i = 0; i < ev.size(); ++i) out.push_back(Scalar(ev(i).real()));
  std::sort(out.begin(), out.end(),
            [](const Scalar& a, const Scalar& b) { return a.to_double() < b.to_double(); });
  return out;
}

}  // namespace g2forge
