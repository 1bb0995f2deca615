#include "doctest.h"

#include "exterior.hpp"
#include "metric.hpp"
#include "sampling.hpp"

using namespace g2forge;

namespace {

KForm unit(std::initializer_list<int> idx) { return KForm::unit(Blade::of(idx)); }

bool forms_equal(const KForm& a, const KForm& b, double tol = 1e-12) {
  return (a - b).is_zero(tol);
}

}  // namespace

TEST_CASE("wedge of adjacent 1-forms") {
  CHECK(forms_equal(wedge(unit({1}), unit({2})), unit({1, 2})));
  CHECK(forms_equal(wedge(unit({2}), unit({1})), -unit({1, 2})));
}

TEST_CASE("wedge beyond the top degree is the zero form of that degree") {
  KForm a = unit({1, 2, 3, 4});
  KForm w = wedge(a, a);
  CHECK(w.degree() == 8);
  CHECK(w.empty());
}

TEST_CASE("wedge is graded anticommutative and associative on random forms") {
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    int da = static_cast<int>(rng.next() % 3) + 1;
    int db = static_cast<int>(rng.next() % 3) + 1;
    int dc = static_cast<int>(rng.next() % 2) + 1;
    KForm a = random_kform(rng, da), b = random_kform(rng, db), c = random_kform(rng, dc);
    KForm ab = wedge(a, b), ba = wedge(b, a);
    if ((da * db) % 2 != 0) ba = -ba;
    CHECK(forms_equal(ab, ba));
    CHECK(forms_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c))));
  }
}

TEST_CASE("wbar7 squares to -2 e^3456") {
  KForm sq = wedge(omega_bar7(), omega_bar7());
  KForm expected = unit({3, 4, 5, 6}) * Scalar(-2);
  CHECK(forms_equal(sq, expected));
}

TEST_CASE("phi wedge star phi is 7 vol") {
  KForm phi = standard_phi();
  CHECK(forms_equal(wedge(phi, hodge_star(phi)), unit({1, 2, 3, 4, 5, 6, 7}) * Scalar(7)));
  CHECK(inner(phi, phi) == Scalar(7));
}

TEST_CASE("hodge star basics") {
  CHECK(forms_equal(hodge_star(KForm::unit(Blade(0))), unit({1, 2, 3, 4, 5, 6, 7})));
  CHECK(forms_equal(hodge_star(unit({1})), unit({2, 3, 4, 5, 6, 7})));
}

TEST_CASE("star of phi matches its closed form") {
  KForm expected = unit({3, 4, 5, 6}) + wedge(omega7(), unit({1, 2})) +
                   wedge(omega1(), unit({2, 7})) - wedge(omega2(), unit({1, 7}));
  CHECK(forms_equal(hodge_star(standard_phi()), expected));
}

TEST_CASE("star is an involution on all 128 blades, exactly") {
  for (int m = 0; m < 128; ++m) {
    KForm b = KForm::unit(Blade(static_cast<std::uint8_t>(m)));
    KForm back = hodge_star(hodge_star(b));
    CHECK((back - b).norm_sq().is_exact_zero());
  }
}

TEST_CASE("defining identity beta ^ star(alpha) = <beta, alpha> vol") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int k = static_cast<int>(rng.next() % 8);
    KForm a = random_kform(rng, k), b = random_kform(rng, k);
    KForm lhs = wedge(b, hodge_star(a));
    KForm rhs = unit({1, 2, 3, 4, 5, 6, 7}) * inner(b, a);
    CHECK((lhs - rhs).norm_sq().is_exact_zero());
  }
}

TEST_CASE("inner product requires equal degree") {
  CHECK_THROWS(inner(unit({1}), unit({1, 2})));
}

TEST_CASE("Upsilon basis norms and split star eigenvalues") {
  const auto& ups = upsilon_basis<Scalar>();
  for (int i = 0; i < 6; ++i) {
    CHECK(inner(ups[i], ups[i]) == Scalar(2));
    for (int j = i + 1; j < 6; ++j) CHECK(inner(ups[i], ups[j]).is_exact_zero());
  }
  // Anti-self-dual wbar's, self-dual w's.
  for (int i : {0, 1, 2}) CHECK(forms_equal(star_g1(ups[i]), -ups[i]));
  for (int i : {3, 4, 5}) CHECK(forms_equal(star_g1(ups[i]), ups[i]));
}

TEST_CASE("split stars square to the dimension-forced sign") {
  // In dim 4 the double star is (-1)^{k(4-k)}: the identity on even degrees
  // (all the 2-forms this project runs through it) and minus the identity on
  // odd ones. In dim 3 it is the identity throughout.
  for (int m = 0; m < 128; ++m) {
    Blade b(static_cast<std::uint8_t>(m));
    if (SplitContext::on_g1(b)) {
      KForm f = KForm::unit(b);
      int k = b.degree();
      KForm expect = (k * (4 - k)) % 2 ? -f : f;
      CHECK(forms_equal(star_g1(star_g1(f)), expect));
    }
    if (SplitContext::on_g0(b)) {
      KForm f = KForm::unit(b);
      CHECK(forms_equal(star_g0(star_g0(f)), f));
    }
  }
}

TEST_CASE("split star matches the full star") {
  // star(e^34 ^ e^7) computed splitwise equals star(e^347).
  CHECK(forms_equal(split_hodge(unit({3, 4}), unit({7})), hodge_star(unit({3, 4, 7}))));

  Rng rng(13);
  for (int it = 0; it < 50; ++it) {
    int i = static_cast<int>(rng.next() % 5);   // degree on g1
    int j = static_cast<int>(rng.next() % 4);   // degree on g0
    KForm a(i), b(j);
    for (int m = 0; m < 128; ++m) {
      Blade blade(static_cast<std::uint8_t>(m));
      if (blade.degree() == i && SplitContext::on_g1(blade) && rng.next() % 2)
        a.add_term(blade, rng.small_rational());
      if (blade.degree() == j && SplitContext::on_g0(blade) && rng.next() % 2)
        b.add_term(blade, rng.small_rational());
    }
    CHECK((split_hodge(a, b) - hodge_star(wedge(a, b))).norm_sq().is_exact_zero());
  }
}

TEST_CASE("split star rejects forms off the declared factor") {
  CHECK_THROWS(split_hodge(unit({1, 4}), unit({7})));
  CHECK_THROWS(split_hodge(unit({3, 4}), unit({3})));
}

TEST_CASE("theta of the identity scales a k-form by -k") {
  Rng rng(17);
  Matrix id7 = Matrix::identity(7);
  for (int k = 0; k <= 4; ++k) {
    KForm a = random_kform(rng, k);
    CHECK(forms_equal(theta_action(id7, a), a * Scalar(-k)));
  }
  // On the 4x4 factor the same holds for forms supported on g1.
  Matrix id4 = Matrix::identity(4);
  CHECK(forms_equal(theta_action(id4, omega7()), omega7() * Scalar(-2)));
}

TEST_CASE("theta is a derivation of the wedge") {
  Rng rng(19);
  for (int it = 0; it < 30; ++it) {
    Matrix m = random_matrix(rng, 7);
    KForm a = random_kform(rng, 2), b = random_kform(rng, 2);
    KForm lhs = theta_action(m, wedge(a, b));
    KForm rhs = wedge(theta_action(m, a), b) + wedge(a, theta_action(m, b));
    CHECK((lhs - rhs).norm_sq().is_exact_zero());
  }
}

TEST_CASE("theta of a 2x2 matrix acts on span{e1, e2}") {
  Matrix a1 = Matrix::from_rows({{frac(3, 8), Scalar(2)}, {Scalar(-1), frac(1, 2)}});
  KForm e1 = KForm::unit(Blade::of({1}));
  KForm expect(1);
  expect.add_term(Blade::of({1}), frac(-3, 8));
  expect.add_term(Blade::of({2}), Scalar(-2));
  CHECK((theta_action(a1, e1) - expect).norm_sq().is_exact_zero());
  // 1-forms off the subspace are annihilated.
  CHECK(theta_action(a1, KForm::unit(Blade::of({7}))).empty());
}

TEST_CASE("theta rejects mismatched dimensions") {
  Rng rng(23);
  CHECK_THROWS(theta_action(random_matrix(rng, 3), omega7()));
  Matrix rect(4, 3);
  CHECK_THROWS(theta_action(rect, omega7()));
}

TEST_CASE("star_g1(theta(M)a) = -theta(M^t) star_g1(a) - tr(M) star_g1(a)") {
  Rng rng(29);
  for (int it = 0; it < 100; ++it) {
    Matrix m = random_matrix(rng, 4);
    for (int k : {1, 2, 3}) {
      KForm a(k);
      for (int mask = 0; mask < 128; ++mask) {
        Blade blade(static_cast<std::uint8_t>(mask));
        if (blade.degree() == k && SplitContext::on_g1(blade) && rng.next() % 2)
          a.add_term(blade, rng.small_rational());
      }
      KForm lhs = star_g1(theta_action(m, a));
      KForm sa = star_g1(a);
      KForm rhs = -theta_action(m.transpose(), sa) - sa * m.trace();
      CHECK((lhs - rhs).norm_sq().is_exact_zero());
    }
  }
}

TEST_CASE("theta coefficient rows on the omega forms") {
  Rng rng(31);
  for (int it = 0; it < 50; ++it) {
    Matrix m = random_matrix(rng, 4);
    auto e = [&](int p, int q) { return m(p - 3, q - 3); };  // 3..6 labelling

    KForm w7_row(2);
    w7_row.add_term(Blade::of({3, 4}), -(e(3, 3) + e(4, 4)));
    w7_row.add_term(Blade::of({3, 5}), e(6, 3) - e(4, 5));
    w7_row.add_term(Blade::of({3, 6}), -(e(4, 6) + e(5, 3)));
    w7_row.add_term(Blade::of({4, 5}), e(6, 4) + e(3, 5));
    w7_row.add_term(Blade::of({4, 6}), e(3, 6) - e(5, 4));
    w7_row.add_term(Blade::of({5, 6}), -(e(5, 5) + e(6, 6)));
    CHECK((theta_action(m, omega7()) - w7_row).norm_sq().is_exact_zero());

    KForm w1_row(2);
    w1_row.add_term(Blade::of({3, 4}), -(e(5, 4) + e(6, 3)));
    w1_row.add_term(Blade::of({3, 5}), -(e(3, 3) + e(5, 5)));
    w1_row.add_term(Blade::of({3, 6}), e(4, 3) - e(5, 6));
    w1_row.add_term(Blade::of({4, 5}), e(6, 5) - e(3, 4));
    w1_row.add_term(Blade::of({4, 6}), e(4, 4) + e(6, 6));
    w1_row.add_term(Blade::of({5, 6}), e(3, 6) + e(4, 5));
    CHECK((theta_action(m, omega1()) - w1_row).norm_sq().is_exact_zero());

    KForm w2_row(2);
    w2_row.add_term(Blade::of({3, 4}), e(6, 4) - e(5, 3));
    w2_row.add_term(Blade::of({3, 5}), e(4, 3) + e(6, 5));
    w2_row.add_term(Blade::of({3, 6}), e(3, 3) + e(6, 6));
    w2_row.add_term(Blade::of({4, 5}), e(4, 4) + e(5, 5));
    w2_row.add_term(Blade::of({4, 6}), e(3, 4) + e(5, 6));
    w2_row.add_term(Blade::of({5, 6}), e(3, 5) - e(4, 6));
    CHECK((theta_action(m, omega2()) - w2_row).norm_sq().is_exact_zero());
  }
}

TEST_CASE("contraction and substitution behave") {
  KForm phi = standard_phi();
  // i_{e1} phi = e^27 + e^35 - e^46
  KForm expect(2);
  expect.add_term(Blade::of({2, 7}), Scalar(1));
  expect.add_term(Blade::of({3, 5}), Scalar(1));
  expect.add_term(Blade::of({4, 6}), Scalar(-1));
  CHECK((contract(phi, 1) - expect).norm_sq().is_exact_zero());

  // Pullback along 2*id scales a 3-form by 8.
  Matrix two = Matrix::identity(7) * Scalar(2);
  KForm pulled = substitute(phi, [&](int i, int j) { return two(i, j); });
  CHECK((pulled - phi * Scalar(8)).norm_sq().is_exact_zero());
}

TEST_CASE("metric from the standard 3-form is the identity") {
  MetricTensor m = metric_from_positive_3form(standard_phi());
  CHECK(m.is_identity());
  CHECK(m.volume == Scalar(1));
}

TEST_CASE("metric scales quadratically under dilation pullback") {
  Matrix two = Matrix::identity(7) * Scalar(2);
  KForm pulled = substitute(standard_phi(), [&](int i, int j) { return two(i, j); });
  MetricTensor m = metric_from_positive_3form(pulled);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(m.g(i, j) == ((i == j) ? Scalar(4) : Scalar(0)));
}

TEST_CASE("negating a phi coefficient breaks positivity") {
  KForm phi = standard_phi();
  phi.add_term(Blade::of({1, 2, 7}), Scalar(-2));  // flips the e^127 sign
  CHECK_FALSE(is_positive_3form(phi));
  CHECK_THROWS(metric_from_positive_3form(phi));
}

TEST_CASE("metric star reduces to the orthonormal star for the identity") {
  Rng rng(37);
  MetricTensor id = metric_from_positive_3form(standard_phi());
  for (int it = 0; it < 20; ++it) {
    int k = static_cast<int>(rng.next() % 8);
    KForm a = random_kform(rng, k);
    CHECK((hodge_star_metric(id, a) - hodge_star(a)).norm_sq().is_exact_zero());
  }
}

TEST_CASE("metric star matches the scaling law for t^2 id") {
  // For g = t^2 id the star of a k-blade picks up t^{7-2k}.
  Matrix g = Matrix::identity(7) * Scalar(4);
  MetricTensor m;
  m.g = g;
  m.volume = Scalar(128);  // 2^7
  for (int mask = 0; mask < 128; ++mask) {
    Blade b(static_cast<std::uint8_t>(mask));
    int k = b.degree();
    KForm f = KForm::unit(b);
    Scalar factor = Scalar(1);
    for (int p = 0; p < 7 - 2 * k; ++p) factor *= Scalar(2);
    for (int p = 0; p < 2 * k - 7; ++p) factor /= Scalar(2);
    CHECK((hodge_star_metric(m, f) - hodge_star(f) * factor).norm_sq().is_exact_zero());
  }
}
