#include "skeinalg/algebra/algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "skeinalg/errors.hpp"
#include "skeinalg/linalg/elimination.hpp"
#include "skeinalg/linalg/invertible_search.hpp"

namespace skeinalg {

QVec Algebra::basis(std::size_t i) const {
  QVec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

QVec Algebra::multiply(const QVec& x, const QVec& y) const { return left_multiplication(x) * y; }

QMatrix Algebra::left_multiplication(const QVec& a) const {
  if (a.size() != dim_) throw ContractViolation("left_multiplication: element has wrong length");
  QMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(a[i])) continue;
    m += left_basis_[i] * a[i];
  }
  return m;
}

QMatrix Algebra::right_multiplication(const QVec& b) const {
  if (b.size() != dim_) throw ContractViolation("right_multiplication: element has wrong length");
  QMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (is_zero(b[j])) continue;
    m += right_basis_[j] * b[j];
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != constant(j, i, k)) return false;
  return true;
}

AlgebraPtr make_algebra(std::size_t dim, std::vector<Rational> constants, QVec unit, const DimensionLimits& limits) {
  if (dim == 0) throw ValidationError("algebra dimension must be positive");
  if (dim > limits.algebra) {
    throw ValidationError("algebra dimension " + std::to_string(dim) + " exceeds the configured cap " +
                          std::to_string(limits.algebra));
  }
  if (constants.size() != dim * dim * dim) throw ValidationError("structure constants must have dim^3 entries");
  if (unit.size() != dim) throw ValidationError("unit vector must have dim entries");

  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
    return constants[(i * dim + j) * dim + k];
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          Rational lhs = 0;
          Rational rhs = 0;
          for (std::size_t m = 0; m < dim; ++m) {
            lhs += c(i, j, m) * c(m, k, l);
            rhs += c(j, k, m) * c(i, m, l);
          }
          if (lhs != rhs) {
            std::ostringstream msg;
            msg << "associativity fails at (i,j,k,l) = (" << i << "," << j << "," << k << "," << l << ")";
            throw ValidationError(msg.str());
          }
        }
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      Rational left = 0;
      Rational right = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        left += unit[i] * c(i, j, k);
        right += unit[i] * c(j, i, k);
      }
      const Rational expected = (j == k) ? 1 : 0;
      if (left != expected || right != expected) {
        std::ostringstream msg;
        msg << "unit law fails for basis element " << j << " at coordinate " << k;
        throw ValidationError(msg.str());
      }
    }

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->dim_ = dim;
  alg->constants_ = std::move(constants);
  alg->unit_ = std::move(unit);
  alg->left_basis_.assign(dim, QMatrix(dim, dim));
  alg->right_basis_.assign(dim, QMatrix(dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational& v = alg->constant(i, j, k);
        if (is_zero(v)) continue;
        alg->left_basis_[i](k, j) = v;   // e_i * e_j
        alg->right_basis_[j](k, i) = v;  // e_i * e_j viewed as e_i acted on by e_j
      }
  return alg;
}

AlgebraPtr matrix_algebra(std::size_t n) {
  if (n == 0) throw ContractViolation("matrix_algebra: n must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, AlgebraPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const std::size_t d = n * n;
  std::vector<Rational> constants(d * d * d, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) constants[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1;
  QVec unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  auto alg = make_algebra(d, std::move(constants), std::move(unit), DimensionLimits{d, 0});
  cache.emplace(n, alg);
  return alg;
}

AlgebraPtr diagonal_algebra(std::size_t n) {
  std::vector<Rational> constants(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) constants[(i * n + i) * n + i] = 1;
  return make_algebra(n, std::move(constants), QVec(n, 1), DimensionLimits{std::max<std::size_t>(n, 1), 0});
}

AlgebraPtr truncated_polynomial_algebra(std::size_t n) {
  std::vector<Rational> constants(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) constants[(i * n + j) * n + (i + j)] = 1;
  QVec unit(n, 0);
  unit.at(0) = 1;
  return make_algebra(n, std::move(constants), std::move(unit), DimensionLimits{std::max<std::size_t>(n, 1), 0});
}

AlgebraPtr upper_triangular_algebra() {
  // basis 0 = E11, 1 = E12, 2 = E22
  std::vector<Rational> constants(27, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { constants[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);  // E11 E11 = E11
  set(0, 1, 1);  // E11 E12 = E12
  set(1, 2, 1);  // E12 E22 = E12
  set(2, 2, 2);  // E22 E22 = E22
  return make_algebra(3, std::move(constants), QVec{1, 0, 1});
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

QVec flatten(const QMatrix& m) { return m.data(); }

QMatrix unflatten(const QVec& v, std::size_t rows, std::size_t cols) { return QMatrix(rows, cols, v); }

AlgebraHom make_algebra_hom(AlgebraPtr source, AlgebraPtr target, QMatrix matrix) {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) {
    throw ValidationError("homomorphism matrix must be dim(target) x dim(source)");
  }
  AlgebraHom f{std::move(source), std::move(target), std::move(matrix)};
  const std::size_t n = f.source->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVec lhs = f(f.source->multiply(f.source->basis(i), f.source->basis(j)));
      const QVec rhs = f.target->multiply(f(f.source->basis(i)), f(f.source->basis(j)));
      if (lhs != rhs) {
        throw ValidationError("homomorphism is not multiplicative at basis pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  if (f(f.source->unit()) != f.target->unit()) throw ValidationError("homomorphism does not preserve the unit");
  return f;
}

AlgebraHom identity_hom(const AlgebraPtr& a) { return AlgebraHom{a, a, QMatrix::identity(a->dim())}; }

AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
  if (!same_algebra(f.target, g.source)) throw ContractViolation("compose: homomorphisms are not composable");
  return AlgebraHom{f.source, g.target, g.matrix * f.matrix};
}

AlgebraHom conjugation_hom(const QMatrix& u) {
  if (!u.square() || u.rows() == 0) throw ContractViolation("conjugation_hom: u must be square and nonempty");
  const QMatrix u_inv = inverse(u);
  const std::size_t n = u.rows();
  auto algebra = matrix_algebra(n);
  QMatrix m(n * n, n * n);
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    QMatrix e(n, n);
    e(idx / n, idx % n) = 1;
    const QVec image = flatten(u_inv * e * u);
    for (std::size_t r = 0; r < n * n; ++r) m(r, idx) = image[r];
  }
  return AlgebraHom{algebra, algebra, std::move(m)};
}

std::optional<QVec> algebra_inverse(const Algebra& algebra, const QVec& b) {
  const QMatrix lb = algebra.left_multiplication(b);
  if (!is_invertible(lb)) return std::nullopt;
  // In a finite-dimensional algebra a left-invertible element is invertible.
  return inverse(lb) * algebra.unit();
}

AlgebraHom inner_automorphism(const AlgebraPtr& algebra, const QVec& b) {
  const auto b_inv = algebra_inverse(*algebra, b);
  if (!b_inv) throw ContractViolation("inner_automorphism: element is not invertible");
  // a -> b^-1 a b = L(b^-1) R(b) a
  QMatrix m = algebra->left_multiplication(*b_inv) * algebra->right_multiplication(b);
  return AlgebraHom{algebra, algebra, std::move(m)};
}

}  // namespace skeinalg
