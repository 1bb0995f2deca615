#include "sampling.hpp"

#include "errors.hpp"
#include "linsolve.hpp"

namespace g2forge {

namespace {

Matrix zero4() { return Matrix(4, 4); }

Matrix traceless(Matrix m) {
  Scalar t = m.trace() / Scalar(static_cast<int>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= t;
  return m;
}

/// B = C = 0 leaves A and A1 unconstrained.
FamilySpec spec_free_a(Rng& rng) {
  return FamilySpec(random_matrix(rng, 2), random_matrix(rng, 4), zero4(), zero4());
}

/// A and C polynomials in a dense traceless B commute with it, so the
/// bracket constraints hold with x = y = z = w = 0.
FamilySpec spec_commuting(Rng& rng) {
  Matrix b = traceless(random_matrix(rng, 4));
  Matrix b2 = b * b, b3 = b2 * b;
  Matrix a = Matrix::identity(4) * rng.small_rational() + b * rng.small_rational() +
             traceless(b2) * rng.small_rational();
  Matrix c = b * rng.small_rational() + traceless(b2) * rng.small_rational() +
             traceless(b3) * rng.small_rational();
  return FamilySpec(Matrix(2, 2), a, b, c);
}

/// Lower-block B, C (mapping span{e3,e4} into span{e5,e6}) with a full A1:
/// pick x, y and the blocks, then solve the two bracket constraints for the
/// remaining unknowns (A11, z, w) exactly and read off A22.
FamilySpec spec_block(Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix b21 = random_matrix(rng, 2);
    Matrix c21 = random_matrix(rng, 2);
    Scalar det = b21(0, 0) * b21(1, 1) - b21(0, 1) * b21(1, 0);
    if (det.is_exact_zero()) continue;
    Matrix b21_inv(2, 2);
    b21_inv(0, 0) = b21(1, 1) / det;
    b21_inv(1, 1) = b21(0, 0) / det;
    b21_inv(0, 1) = -b21(0, 1) / det;
    b21_inv(1, 0) = -b21(1, 0) / det;

    Scalar x = rng.small_rational(), y = rng.small_rational();

    // With A22 = (x B21 + y C21 + B21 A11) B21^{-1}, the second constraint
    //   A22 C21 - C21 A11 = z B21 + w C21
    // is linear in (A11, z, w): 4 equations, 6 unknowns.
    Matrix sys(4, 6);
    std::vector<Scalar> rhs(4, Scalar(0));
    Matrix k = b21_inv * c21;  // A22 C21 = (x B21 + y C21) K + B21 A11 K with K = B21^{-1} C21
    Matrix base = (x * b21 + y * c21) * k;
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        int row = p * 2 + q;
        rhs[row] = -base(p, q);
        // B21 A11 K contribution: sum_{r,s} B21(p,r) A11(r,s) K(s,q)
        for (int r = 0; r < 2; ++r)
          for (int s = 0; s < 2; ++s) sys(row, r * 2 + s) += b21(p, r) * k(s, q);
        // -(C21 A11)(p,q) = -sum_s C21(p,s) A11(s,q)
        for (int s = 0; s < 2; ++s) sys(row, s * 2 + q) -= c21(p, s);
        sys(row, 4) -= b21(p, q);  // -z B21
        sys(row, 5) -= c21(p, q);  // -w C21
      }

    ExactRref solver(sys);
    auto particular = solver.solve(rhs);
    if (!particular) continue;
    auto null_basis = solver.nullspace();
    std::vector<Scalar> sol = *particular;
    for (const auto& dir : null_basis) {
      Scalar coef = rng.small_rational(3);
      for (std::size_t i = 0; i < sol.size(); ++i) sol[i] += coef * dir[i];
    }

    Matrix a11(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) a11(r, s) = sol[r * 2 + s];
    Scalar z = sol[4], w = sol[5];
    Matrix a22 = (x * b21 + y * c21 + b21 * a11) * b21_inv;

    Matrix a1(2, 2);
    a1(0, 0) = x;
    a1(0, 1) = z;
    a1(1, 0) = y;
    a1(1, 1) = w;
    Matrix a(4, 4), b(4, 4), c(4, 4);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        a(r, s) = a11(r, s);
        a(r + 2, s + 2) = a22(r, s);
        a(r + 2, s) = rng.small_rational();  // A21 is unconstrained
        b(r + 2, s) = b21(r, s);
        c(r + 2, s) = c21(r, s);
      }
    if (!FamilySpec::violations(a1, a, b, c).empty()) continue;
    return FamilySpec(a1, a, b, c);
  }
  throw Error(Error::Kind::internal, "block construction failed to converge");
}

}  // namespace

KForm random_kform(Rng& rng, int degree, long max_num) {
  KForm f(degree);
  for (int m = 0; m < 128; ++m) {
    Blade b(static_cast<std::uint8_t>(m));
    if (b.degree() != degree) continue;
    if (rng.next() % 2 == 0) f.add_term(b, rng.small_rational(max_num));
  }
  return f;
}

Matrix random_matrix(Rng& rng, std::size_t n, long max_num) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.small_rational(max_num);
  return m;
}

FamilySpec random_family_spec(std::uint64_t seed) {
  Rng rng(seed * 0x5851F42D4C957F2Dull + 0x14057B7EF767814Full);
  switch (rng.next() % 6) {
    case 0: return spec_free_a(rng);
    case 1: return spec_commuting(rng);
    case 2: return spec_block(rng);
    case 3: return random_closed_diagonal_spec(rng.next());
    case 4: return builtin_gs(rng.small_rational(4));
    default: return builtin_sa(rng.small_rational(4));
  }
}

FamilySpec random_closed_diagonal_spec(std::uint64_t seed) {
  Rng rng(seed ^ 0x9E3779B97F4A7C15ull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Scalar a3, a4, a5, a6, x, w;
    switch (rng.next() % 4) {
      case 0: {  // diagonal torsion with B = C = 0 forced to vanish
        a3 = rng.small_rational();
        a4 = rng.small_rational();
        a5 = rng.small_rational();
        a6 = a4 + a5 - a3;
        x = -(a3 + a5);
        w = -(a4 + a5);
        break;
      }
      case 1: {  // two-parameter pattern through the gs family shape
        a4 = rng.small_rational();
        a5 = rng.small_rational();
        a3 = Scalar(2) * a5 + a4;
        a6 = Scalar(3) * a5;
        x = a5 - a4;
        w = -(a4 + a5);
        break;
      }
      case 2: {  // equal-pair pattern through the sa family shape
        a3 = rng.small_rational();
        a4 = a3;
        a5 = rng.small_rational();
        a6 = a5;
        x = a5 - a4;
        w = x;
        break;
      }
      default: {  // pattern through the fr shape: x = w, paired differences
        a4 = rng.small_rational();
        x = rng.small_rational();
        w = x;
        a5 = a4 + x;
        a6 = a4 + x;
        a3 = -a4 - Scalar(2) * x;
        break;
      }
    }
    Matrix a1 = Matrix::diagonal({x, w});
    Matrix a = Matrix::diagonal({a3, a4, a5, a6});
    Matrix b(4, 4), c(4, 4);
    b(2, 1) = -(a4 + a6 + x);
    b(3, 0) = -(a3 + a5 + x);
    c(2, 0) = -(a3 + a6 + w);
    c(3, 1) = a4 + a5 + w;
    if (!FamilySpec::violations(a1, a, b, c).empty()) continue;
    FamilySpec spec(a1, a, b, c);
    if (!closedness_conditions(spec).closed()) continue;
    return spec;
  }
  throw Error(Error::Kind::internal, "closed diagonal sampler failed to converge");
}

}  // namespace g2forge
