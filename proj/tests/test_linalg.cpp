#include <doctest.h>

#include <random>

#include "skeinalg/errors.hpp"
#include "skeinalg/linalg/elimination.hpp"
#include "skeinalg/linalg/invertible_search.hpp"
#include "skeinalg/linalg/laurent_fraction.hpp"

using namespace skeinalg;

namespace {

Rational q(long p, long d = 1) {
  Rational x(p, d);
  x.canonicalize();
  return x;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

LaurentPoly A(int k) { return LaurentPoly::monomial(k); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4") == q(-4));
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK_THROWS_AS(parse_rational("2/-4"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK(to_string(q(6, -4)) == "-3/2");
  CHECK(to_string(q(5)) == "5");
  CHECK(q(7, 3) * q(3, 7) == 1);
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly d = -A(2) - A(-2);
  CHECK(to_string(d) == "-A^2 - A^-2");
  CHECK(to_string(d, "q") == "-q^2 - q^-2");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(LaurentPoly(1) + A(1)) == "A + 1");
  CHECK((d * d).coefficient(0) == 2);
  CHECK(d - d == LaurentPoly());
  CHECK((A(3) * A(-3)) == LaurentPoly(1));
  CHECK(A(2).pow(-2) == A(-4));
  CHECK((-A(3)).pow(-1) == -A(-3));
  CHECK_THROWS(d.pow(-1));
  CHECK(d.mirror() == d);
  CHECK(A(5).mirror() == A(-5));
  CHECK(divide_exact(d * (A(1) + 3), d) == A(1) + 3);
  CHECK_FALSE(divide_exact(A(1) + 1, A(1) - 1).has_value());
  CHECK(divide_exact(A(2) - A(-2), A(1) - A(-1)) == A(1) + A(-1));
}

TEST_CASE("laurent fractions return to laurent form") {
  const LaurentPoly d = -A(2) - A(-2);
  const LaurentFraction x(d * (A(1) + 1), d);
  REQUIRE(x.as_laurent().has_value());
  CHECK(*x.as_laurent() == A(1) + 1);
  const LaurentFraction inv = LaurentFraction(1) / LaurentFraction(d);
  CHECK_FALSE(inv.as_laurent().has_value());
  CHECK(inv * LaurentFraction(d) == LaurentFraction(1));
}

TEST_CASE("rref examples") {
  const auto id = rref(QMatrix::identity(2));
  CHECK(id.reduced == QMatrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  const auto r = rref(QMatrix::from_rows({{q(2), q(4)}, {q(1), q(2)}}));
  CHECK(r.reduced == QMatrix::from_rows({{q(1), q(2)}, {q(0), q(0)}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref preserves the row space") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const QMatrix m = random_matrix(rng, 5, 7);
    const auto r = rref(m);
    std::vector<QVec> original;
    std::vector<QVec> reduced;
    for (std::size_t i = 0; i < 5; ++i) {
      original.push_back(m.transpose().column(i));
      reduced.push_back(r.reduced.transpose().column(i));
    }
    CHECK(in_span(7, original, reduced));
    CHECK(in_span(7, reduced, original));
  }
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(QMatrix(3, 3)).size() == 3);
  CHECK(kernel_basis(QMatrix::identity(4)).empty());
  const auto k = kernel_basis(QMatrix::from_rows({{q(1), q(1)}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QVec{q(-1), q(1)});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const QMatrix m = random_matrix(rng, 3, 6);
    const auto basis = kernel_basis(m);
    CHECK(basis.size() == 6 - rank(m));
    for (const auto& v : basis) CHECK(is_zero_vector(m * v));
    if (!basis.empty()) CHECK(rank(QMatrix::from_columns(6, basis)) == basis.size());
  }
}

TEST_CASE("solve_linear") {
  const QVec b{q(3), q(-1, 2)};
  const auto s = solve_linear(QMatrix::identity(2), b);
  REQUIRE(s.has_value());
  CHECK(s->particular == b);
  CHECK(s->kernel.empty());
  CHECK_FALSE(solve_linear(QMatrix::from_rows({{q(1), q(0)}, {q(1), q(0)}}), QVec{q(1), q(2)}).has_value());
  const auto u = solve_linear(QMatrix::from_rows({{q(1), q(1)}}), QVec{q(3)});
  REQUIRE(u.has_value());
  CHECK(u->particular == QVec{q(3), q(0)});
  CHECK(u->kernel.size() == 1);
  CHECK_THROWS_AS(solve_linear(QMatrix::identity(2), QVec{q(1)}), ContractViolation);
}

TEST_CASE("quotient_basis") {
  const auto full = quotient_basis<Rational>(3, {});
  CHECK(full.representatives == std::vector<std::size_t>{0, 1, 2});
  CHECK(full.projection == QMatrix::identity(3));
  const auto one = quotient_basis<Rational>(2, {{q(1), q(-1)}});
  CHECK(one.dim() == 1);
  CHECK(one.projection * QVec{q(1), q(0)} == one.projection * QVec{q(0), q(1)});
  const std::vector<QVec> rel{{q(1), q(2), q(0), q(1)}, {q(0), q(1), q(1), q(-1)}};
  const auto two = quotient_basis<Rational>(4, rel);
  CHECK(two.dim() == 2);
  CHECK(two.projection * two.inclusion() == QMatrix::identity(2));
  for (const auto& r : rel) CHECK(is_zero_vector(two.projection * r));
}

TEST_CASE("invertible search") {
  CHECK(find_invertible_in_affine_family(QMatrix::identity(2), {}) == QMatrix::identity(2));
  CHECK_FALSE(find_invertible_in_affine_family(QMatrix(2, 2), {}).has_value());
  const auto s = find_invertible_in_affine_family(QMatrix(2, 2), {QMatrix::identity(2)});
  REQUIRE(s.has_value());
  CHECK((*s)(0, 0) != 0);
  CHECK((*s)(0, 0) == (*s)(1, 1));
  CHECK((*s)(0, 1) == 0);
  // only singular members: span of E11 and E12
  const QMatrix e11 = QMatrix::from_rows({{q(1), q(0)}, {q(0), q(0)}});
  const QMatrix e12 = QMatrix::from_rows({{q(0), q(1)}, {q(0), q(0)}});
  CHECK_FALSE(find_invertible_in_affine_family(QMatrix(2, 2), {e11, e12}).has_value());
  InvertibleSearchOptions opts;
  CHECK(opts.false_negative_bound(4) < 1e-100);
}

TEST_CASE("determinant and inverse") {
  const QMatrix m = QMatrix::from_rows({{q(1), q(2)}, {q(3), q(4)}});
  CHECK(determinant(m) == -2);
  CHECK(inverse(m) * m == QMatrix::identity(2));
  CHECK_FALSE(is_invertible(QMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}})));
  CHECK_THROWS_AS(inverse(QMatrix(2, 2)), ContractViolation);
}

TEST_CASE("elimination over Laurent fractions") {
  using F = LaurentFraction;
  const LaurentPoly d = -A(2) - A(-2);
  const Matrix<F> m = Matrix<F>::from_rows({{F(d), F(1)}, {F(1), F(A(-1))}});
  const auto k = kernel_basis(m);
  // det = d A^-1 - 1, generically nonzero
  CHECK(k.empty());
  const Matrix<F> sing = Matrix<F>::from_rows({{F(d), F(A(1))}, {F(d * A(1)), F(A(2))}});
  const auto ks = kernel_basis(sing);
  REQUIRE(ks.size() == 1);
  for (const auto& v : ks) CHECK(is_zero_vector(sing * v));
}
