#pragma once

#include <optional>
#include <vector>

#include "skeinalg/linalg/matrix.hpp"

namespace skeinalg {

template <typename T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row-echelon form by Gauss-Jordan elimination. The pivot is the first nonzero entry
/// found scanning rows top-down in the current column; with exact scalars no numerical pivoting
/// is needed, and the fixed rule keeps results deterministic.
template <typename T>
RrefResult<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && is_zero(m(r, c))) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    const T inv = T(1) / m(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(m(pivot_row, j))) m(pivot_row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || is_zero(m(i, c))) continue;
      const T factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (is_zero(m(pivot_row, j))) continue;
        m(i, j) -= factor * m(pivot_row, j);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of the null space, one vector per free column: free variable set to 1, other free
/// variables 0, pivots solved from the reduced form.
template <typename T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!is_zero(reduced(r, free))) v[pivots[r]] = -reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
struct LinearSolution {
  Vec<T> particular;
  std::vector<Vec<T>> kernel;
};

/// Solves m x = b. Returns nothing when the system is inconsistent.
template <typename T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& m, const Vec<T>& b) {
  if (b.size() != m.rows()) throw ContractViolation("solve_linear: right-hand side length does not match rows");
  const std::size_t cols = m.cols();
  Matrix<T> augmented(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) augmented(i, j) = m(i, j);
    augmented(i, cols) = b[i];
  }
  const auto [reduced, pivots] = rref(std::move(augmented));
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec<T> x(cols, T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, cols);
  return LinearSolution<T>{std::move(x), kernel_basis(m)};
}

template <typename T>
struct QuotientBasis {
  std::vector<std::size_t> representatives;  // ambient coordinates spanning a complement
  Matrix<T> projection;                      // quotient_dim x ambient_dim

  std::size_t dim() const { return representatives.size(); }
  /// ambient_dim x quotient_dim matrix sending quotient basis vector i to e_{representatives[i]}.
  Matrix<T> inclusion() const {
    Matrix<T> s(projection.cols(), representatives.size());
    for (std::size_t i = 0; i < representatives.size(); ++i) s(representatives[i], i) = T(1);
    return s;
  }
};

/// Realizes V / span(relations) for V of dimension `ambient_dim`. The representatives are the
/// non-pivot coordinates of the reduced relation row space; a pivot coordinate x_p is rewritten
/// as -sum_k R[p][k] x_k over the representatives k.
template <typename T>
QuotientBasis<T> quotient_basis(std::size_t ambient_dim, const std::vector<Vec<T>>& relations) {
  Matrix<T> rel(relations.size(), ambient_dim);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].size() != ambient_dim) throw ContractViolation("quotient_basis: relation length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) rel(i, j) = relations[i][j];
  }
  const auto [reduced, pivots] = rref(std::move(rel));
  std::vector<long> pivot_row(ambient_dim, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);

  QuotientBasis<T> q;
  std::vector<long> rep_index(ambient_dim, -1);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (pivot_row[j] < 0) {
      rep_index[j] = static_cast<long>(q.representatives.size());
      q.representatives.push_back(j);
    }
  }
  q.projection = Matrix<T>(q.representatives.size(), ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (rep_index[j] >= 0) {
      q.projection(static_cast<std::size_t>(rep_index[j]), j) = T(1);
    } else {
      const auto r = static_cast<std::size_t>(pivot_row[j]);
      for (std::size_t k = 0; k < q.representatives.size(); ++k) {
        const T& entry = reduced(r, q.representatives[k]);
        if (!is_zero(entry)) q.projection(k, j) = -entry;
      }
    }
  }
  return q;
}

/// True when every vector of `candidates` lies in the span of `basis` (all of length n).
template <typename T>
bool in_span(std::size_t n, const std::vector<Vec<T>>& basis, const std::vector<Vec<T>>& candidates) {
  const std::size_t r = rank(Matrix<T>::from_columns(n, basis));
  std::vector<Vec<T>> joined = basis;
  joined.insert(joined.end(), candidates.begin(), candidates.end());
  return rank(Matrix<T>::from_columns(n, joined)) == r;
}

}  // namespace skeinalg
