#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skeinalg/linalg/matrix.hpp"

namespace skeinalg {

/// Size caps for exhaustive validation. Objects above the caps are rejected rather than
/// validated partially.
struct DimensionLimits {
  std::size_t algebra = 9;
  std::size_t bimodule = 16;
};

/// Finite-dimensional associative unital algebra over Q, given by structure constants
/// c[i][j][k] = coefficient of e_k in e_i * e_j.
///
/// Instances are only produced by `make_algebra` (and helpers built on it), so every Algebra in
/// circulation has passed the associativity and unit checks.
class Algebra {
 public:
  std::size_t dim() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& constants() const { return constants_; }
  const QVec& unit() const { return unit_; }

  QVec basis(std::size_t i) const;
  QVec multiply(const QVec& x, const QVec& y) const;
  /// Matrix of x -> a * x.
  QMatrix left_multiplication(const QVec& a) const;
  /// Matrix of x -> x * b.
  QMatrix right_multiplication(const QVec& b) const;
  /// Left multiplication by basis element e_i (cached).
  const QMatrix& left_basis_multiplication(std::size_t i) const { return left_basis_[i]; }
  const QMatrix& right_basis_multiplication(std::size_t j) const { return right_basis_[j]; }

  bool is_commutative() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_ && a.unit_ == b.unit_;
  }

 private:
  friend std::shared_ptr<const Algebra> make_algebra(std::size_t, std::vector<Rational>, QVec, const DimensionLimits&);
  Algebra() = default;

  std::size_t dim_ = 0;
  std::vector<Rational> constants_;
  QVec unit_;
  std::vector<QMatrix> left_basis_;
  std::vector<QMatrix> right_basis_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Validates and builds an algebra. `constants` has dim^3 entries in (i, j, k) order.
/// Throws ValidationError naming the offending index tuple on associativity or unit failure.
AlgebraPtr make_algebra(std::size_t dim, std::vector<Rational> constants, QVec unit, const DimensionLimits& limits = {});

/// End(K^n) on the elementary-matrix basis E(i,j) at index i*n + j, E(i,j) E(k,l) = [j==k] E(i,l).
/// Results are memoized per n.
AlgebraPtr matrix_algebra(std::size_t n);

/// The ground field Q as a one-dimensional algebra.
inline AlgebraPtr ground_field() { return matrix_algebra(1); }

/// Q^n with coordinatewise product.
AlgebraPtr diagonal_algebra(std::size_t n);

/// Q[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
AlgebraPtr truncated_polynomial_algebra(std::size_t n);

/// Upper-triangular 2x2 matrices on the basis E11, E12, E22.
AlgebraPtr upper_triangular_algebra();

/// Identifies the same algebra either by pointer or by equal structure constants.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Row-major flattening of an n x n matrix as an element of matrix_algebra(n).
QVec flatten(const QMatrix& m);
QMatrix unflatten(const QVec& v, std::size_t rows, std::size_t cols);

/// Unital algebra homomorphism; `matrix` is dim(target) x dim(source).
struct AlgebraHom {
  AlgebraPtr source;
  AlgebraPtr target;
  QMatrix matrix;

  QVec operator()(const QVec& a) const { return matrix * a; }
};

/// Validates multiplicativity on all basis pairs and unitality. Throws ValidationError.
AlgebraHom make_algebra_hom(AlgebraPtr source, AlgebraPtr target, QMatrix matrix);

AlgebraHom identity_hom(const AlgebraPtr& a);
/// g after f.
AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f);

/// The automorphism a -> u^-1 a u of End(K^n).
///
/// With the source algebra acting on the left of a modulation, this is the homomorphism whose
/// modulation is the regular bimodule pointed by u (and the one End sends u to).
AlgebraHom conjugation_hom(const QMatrix& u);

/// Inner automorphism a -> b^-1 a b of an arbitrary algebra, for invertible b.
AlgebraHom inner_automorphism(const AlgebraPtr& algebra, const QVec& b);

/// Two-sided inverse of an element, if it exists.
std::optional<QVec> algebra_inverse(const Algebra& algebra, const QVec& b);

}  // namespace skeinalg
