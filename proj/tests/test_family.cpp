#include "doctest.h"

#include "errors.hpp"
#include "family.hpp"
#include "sampling.hpp"

using namespace g2forge;

namespace {

KForm unit(std::initializer_list<int> idx) { return KForm::unit(Blade::of(idx)); }

bool exact_zero(const KForm& f) { return f.norm_sq().is_exact_zero(); }

}  // namespace

TEST_CASE("family validation reports violations by name") {
  Matrix a1(2, 2), a(4, 4), b(4, 4), c(4, 4);
  CHECK(FamilySpec::violations(a1, a, b, c).empty());  // abelian is fine

  auto bad_trace = FamilySpec::violations(a1, a, Matrix::identity(4), c);
  REQUIRE(bad_trace.size() >= 1);
  CHECK(bad_trace[0] == "tr B != 0");

  // Traceless B that fails the bracket constraint with a generic A.
  Matrix b2(4, 4);
  b2(0, 1) = Scalar(1);
  b2(1, 0) = Scalar(-1);
  Matrix a2 = Matrix::diagonal({Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
  auto bad_comm = FamilySpec::violations(a1, a2, b2, c);
  REQUIRE(!bad_comm.empty());
  CHECK(bad_comm[0] == "[A,B] != x B + y C");

  CHECK_THROWS_AS(FamilySpec(a1, a, Matrix::identity(4), c), Error);
}

TEST_CASE("builtin instances are valid and closed") {
  for (Scalar s : {Scalar(0), frac(1, 4), frac(5, 8), Scalar(2)}) {
    FamilySpec gs = builtin_gs(s);
    CHECK(closedness_conditions(gs).closed());
    CHECK(exact_zero(gs.algebra().differential(standard_phi())));
  }
  FamilySpec sa = builtin_sa(frac(3, 4));
  CHECK(closedness_conditions(sa).closed());
  FamilySpec fr = builtin_fr();
  CHECK(closedness_conditions(fr).closed());
  CHECK(exact_zero(fr.algebra().differential(standard_phi())));

  // Scaling C breaks closedness.
  FamilySpec gs0 = builtin_gs(Scalar(0));
  FamilySpec doubled(gs0.a1(), gs0.a(), gs0.b(), gs0.c() * Scalar(2));
  CHECK_FALSE(closedness_conditions(doubled).closed());
}

TEST_CASE("theta on Upsilon: block form and trace") {
  Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    Matrix m = random_matrix(rng, 4);
    Matrix th = theta_upsilon_matrix(m);

    // Trace over Lambda^2 g1 equals -3 tr M.
    CHECK((th.trace() + Scalar(3) * m.trace()).is_exact_zero());

    // Diagonal blocks antisymmetric after removing -tr(M)/2 id.
    Scalar half_tr = m.trace() / Scalar(2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Scalar m1ij = th(i, j) + ((i == j) ? half_tr : Scalar(0));
        Scalar m1ji = th(j, i) + ((i == j) ? half_tr : Scalar(0));
        CHECK((m1ij + m1ji).is_exact_zero());
        Scalar m4ij = th(i + 3, j + 3) + ((i == j) ? half_tr : Scalar(0));
        Scalar m4ji = th(j + 3, i + 3) + ((i == j) ? half_tr : Scalar(0));
        CHECK((m4ij + m4ji).is_exact_zero());
        // Off-diagonal blocks are mutual transposes.
        CHECK((th(i, j + 3) - th(j + 3, i)).is_exact_zero());
      }

    // The matrix really represents the action on the basis.
    const auto& ups = upsilon_basis<Scalar>();
    for (int j = 0; j < 6; ++j) {
      KForm img = theta_action(m, ups[j]);
      KForm rebuilt(2);
      for (int i = 0; i < 6; ++i) rebuilt += ups[i] * th(i, j);
      CHECK(exact_zero(img - rebuilt));
    }
  }

  CHECK_THROWS(theta_upsilon_matrix(Matrix(3, 3)));
  Matrix id_th = theta_upsilon_matrix(Matrix::identity(4));
  for (int i = 0; i < 6; ++i) CHECK(id_th(i, i) == Scalar(-2));
}

TEST_CASE("theta(A) fixes omega1 on the gs family") {
  for (Scalar s : {Scalar(0), frac(1, 2)}) {
    FamilySpec gs = builtin_gs(s);
    KForm expect = omega1() * (s - frac(5, 8));
    CHECK(exact_zero(theta_action(gs.a(), omega1()) - expect));
  }
}

TEST_CASE("derivative forms match the generic pipeline on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FamilySpec spec = random_family_spec(seed);
    const LieAlgebra& g = spec.algebra();
    KForm phi = standard_phi();
    DerivedForms f = specialized_derivative_forms(spec);

    KForm dphi = g.differential(phi);
    CHECK(exact_zero(f.dphi - dphi));
    CHECK(exact_zero(f.star_dphi - hodge_star(dphi)));
    CHECK(exact_zero(f.d_star_dphi - g.differential(hodge_star(dphi))));
    CHECK(exact_zero(f.star_d_star_dphi - hodge_star(g.differential(hodge_star(dphi)))));

    KForm star_phi = hodge_star(phi);
    CHECK(exact_zero(f.star_phi - star_phi));
    KForm dstar = g.differential(star_phi);
    CHECK(exact_zero(f.d_star_phi - dstar));
    CHECK(exact_zero(f.star_d_star_phi - hodge_star(dstar)));
    CHECK(exact_zero(f.d_star_d_star_phi - g.differential(hodge_star(dstar))));
  }
}

TEST_CASE("family differential equals the generic differential on all blades") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FamilySpec spec = random_family_spec(seed + 1000);
    for (int m = 0; m < 128; ++m) {
      KForm b = KForm::unit(Blade(static_cast<std::uint8_t>(m)));
      CHECK(exact_zero(family_differential(spec, b) - spec.algebra().differential(b)));
    }
  }
}

TEST_CASE("closedness conditions agree with d phi") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    FamilySpec spec = random_family_spec(seed + 31337);
    bool closed_by_conditions = closedness_conditions(spec).closed();
    bool closed_by_d = spec.algebra().differential(standard_phi()).is_zero(1e-12);
    CHECK(closed_by_conditions == closed_by_d);

    CoclosednessConditions co = coclosedness_conditions(spec);
    bool coclosed_by_d =
        spec.algebra().differential(hodge_star(standard_phi())).is_zero(1e-12);
    CHECK(co.coclosed() == coclosed_by_d);
  }
}

TEST_CASE("gs torsion 2-form has the printed coefficients") {
  for (Scalar s : {Scalar(0), frac(1, 4), frac(5, 8), Scalar(1)}) {
    TorsionForms t = specialized_torsion(builtin_gs(s));
    CHECK(t.tau0.is_exact_zero());
    CHECK(exact_zero(t.tau1));
    CHECK(exact_zero(t.tau3));
    KForm expect(2);
    expect.add_term(Blade::of({1, 2}), (Scalar(5) - Scalar(8) * s) * frac(1, 4));
    expect.add_term(Blade::of({3, 4}), (Scalar(5) + Scalar(8) * s) * frac(1, 4));
    expect.add_term(Blade::of({5, 6}), frac(-5, 2));
    CHECK(exact_zero(t.tau2 - expect));
  }
}

TEST_CASE("ricci operator: printed gs diagonal, block vanishing, flat case") {
  Rng rng(43);
  for (Scalar s : {Scalar(0), frac(1, 4), frac(5, 8)}) {
    RicciData r = ricci_operator(builtin_gs(s));
    Scalar k16 = frac(1, 16);
    std::array<Scalar, 7> expect = {
        k16 * (Scalar(-25) - Scalar(24) * s), k16 * (Scalar(-5) - Scalar(24) * s),
        k16 * (Scalar(-25) + Scalar(24) * s), k16 * (Scalar(-5) + Scalar(24) * s),
        k16 * Scalar(10),                     k16 * Scalar(-10),
        k16 * (Scalar(-15) - Scalar(64) * s * s)};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        Scalar want = (i == j) ? expect[i] : Scalar(0);
        CHECK((r.ricci(i, j) - want).is_exact_zero());
      }
  }

  // Ric(5/8) = -5/2 id + (5/8) Diag(0,2,3,5,5,3,0).
  RicciData r58 = ricci_operator(builtin_gs(frac(5, 8)));
  std::array<int, 7> bump = {0, 2, 3, 5, 5, 3, 0};
  for (int i = 0; i < 7; ++i) {
    Scalar want = frac(-5, 2) + frac(5, 8) * Scalar(bump[i]);
    CHECK((r58.ricci(i, i) - want).is_exact_zero());
  }

  // g0 x g1 block is identically zero on random valid instances.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RicciData r = ricci_operator(random_family_spec(seed + 555));
    for (int g0 : {0, 1, 6})
      for (int g1 = 2; g1 <= 5; ++g1) {
        CHECK(r.ricci(g0, g1).is_exact_zero());
        CHECK(r.ricci(g1, g0).is_exact_zero());
      }
  }

  // Abelian: flat, F undefined.
  FamilySpec flat(Matrix(2, 2), Matrix(4, 4), Matrix(4, 4), Matrix(4, 4));
  RicciData rf = ricci_operator(flat);
  CHECK(rf.flat());
  CHECK_THROWS_AS(pinching_functional(flat), Error);
}

TEST_CASE("pinching functional fixed points") {
  CHECK(pinching_functional(builtin_gs(Scalar(0))) == frac(75, 23));
  CHECK(pinching_functional(builtin_sa(Scalar(0))) == frac(81, 17));
  CHECK(pinching_functional(builtin_gs(frac(5, 8))) == frac(5, 2));

  // Steady point s = sqrt(15)/8 in float mode.
  double s = std::sqrt(15.0) / 8.0;
  Scalar f = pinching_functional(builtin_gs(Scalar(s)));
  CHECK(std::abs(f.to_double() - 135.0 / 49.0) < 1e-12);

  // Closed forms match the block formulas on a grid, and F <= 7.
  for (int i = 0; i <= 12; ++i) {
    Scalar s_exact = Scalar::rational(i, 4);
    Scalar direct = pinching_functional(builtin_gs(s_exact));
    CHECK((direct - pinching_gs(s_exact)).is_exact_zero());
    CHECK(direct.to_double() <= 7.0);
    Scalar a_exact = Scalar::rational(i, 4);
    CHECK((pinching_functional(builtin_sa(a_exact)) - pinching_sa(a_exact)).is_exact_zero());
  }

  // Strictly decreasing in s on a grid.
  double prev = pinching_functional(builtin_gs(Scalar(0))).to_double();
  for (int i = 1; i <= 30; ++i) {
    double cur = pinching_functional(builtin_gs(Scalar::rational(i, 10))).to_double();
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("mirror map intertwines gs(s) and gs(-s) and fixes phi") {
  Matrix h = gs_mirror_map();
  for (Scalar s : {frac(1, 3), frac(5, 8), Scalar(2)}) {
    FamilySpec plus = builtin_gs(s), minus = builtin_gs(-s);
    const LieAlgebra& gp = plus.algebra();
    const LieAlgebra& gm = minus.algebra();
    // h[x, y]_s = [h x, h y]_{-s} on all basis pairs.
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) {
        std::array<Scalar, 7> ei{}, ej{};
        ei[i - 1] = Scalar(1);
        ej[j - 1] = Scalar(1);
        auto lhs = gp.bracket(ei, ej);
        std::array<Scalar, 7> h_lhs{}, hi{}, hj{};
        for (int r = 0; r < 7; ++r)
          for (int k = 0; k < 7; ++k) {
            h_lhs[r] += h(r, k) * lhs[k];
            hi[r] += h(r, k) * ei[k];
            hj[r] += h(r, k) * ej[k];
          }
        auto rhs = gm.bracket(hi, hj);
        for (int r = 0; r < 7; ++r) CHECK((h_lhs[r] - rhs[r]).is_exact_zero());
      }
  }
  // Pullback along h fixes phi exactly.
  KForm pulled = substitute(standard_phi(), [&](int i, int j) { return h(i, j); });
  CHECK(exact_zero(pulled - standard_phi()));
}

TEST_CASE("nilradical centre spectra separate the builtin families") {
  auto gs_spec = nilradical_center_spectrum(builtin_gs(frac(1, 3)));
  REQUIRE(gs_spec.size() == 2);
  CHECK(std::abs(gs_spec[0].to_double() - 0.25) < 1e-9);
  CHECK(std::abs(gs_spec[1].to_double() - 0.75) < 1e-9);

  auto sa_spec = nilradical_center_spectrum(builtin_sa(frac(1, 3)));
  REQUIRE(sa_spec.size() == 2);
  CHECK(std::abs(sa_spec[0].to_double() - 0.5) < 1e-9);
  CHECK(std::abs(sa_spec[1].to_double() - 0.5) < 1e-9);
}
