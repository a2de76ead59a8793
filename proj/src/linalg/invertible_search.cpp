#include "skeinalg/linalg/invertible_search.hpp"

#include <cmath>
#include <random>

#include "skeinalg/linalg/elimination.hpp"

namespace skeinalg {

double InvertibleSearchOptions::false_negative_bound(std::size_t n) const {
  const double per_trial = static_cast<double>(n) / (2.0 * static_cast<double>(coordinate_bound) + 1.0);
  return std::pow(std::min(per_trial, 1.0), trials);
}

Rational determinant(QMatrix m) {
  if (!m.square()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && is_zero(m(r, c))) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Rational factor = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

bool is_invertible(const QMatrix& m) { return m.square() && rank(m) == m.rows(); }

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw ContractViolation("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto [reduced, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ContractViolation("inverse of a singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
  return inv;
}

std::optional<QMatrix> find_invertible_in_affine_family(const QMatrix& particular,
                                                        const std::vector<QMatrix>& directions,
                                                        const InvertibleSearchOptions& options) {
  if (!particular.square()) throw ContractViolation("find_invertible_in_affine_family: non-square matrix");
  for (const auto& d : directions) {
    if (d.rows() != particular.rows() || d.cols() != particular.cols()) {
      throw ContractViolation("find_invertible_in_affine_family: direction shape mismatch");
    }
  }
  if (particular.rows() == 0) return particular;
  if (is_invertible(particular)) return particular;
  if (directions.empty()) return std::nullopt;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> coord(-options.coordinate_bound, options.coordinate_bound);
  for (int trial = 0; trial < options.trials; ++trial) {
    QMatrix candidate = particular;
    for (const auto& d : directions) {
      const Rational t(coord(rng));
      if (is_zero(t)) continue;
      candidate += d * t;
    }
    if (is_invertible(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace skeinalg
