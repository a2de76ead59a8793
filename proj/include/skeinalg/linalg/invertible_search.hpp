#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skeinalg/linalg/matrix.hpp"

namespace skeinalg {

/// Parameters of the randomized invertibility search.
///
/// Each trial evaluates det(P + sum_i t_i D_i) at integer coordinates t_i drawn uniformly from
/// [-coordinate_bound, coordinate_bound]. When that determinant is not identically zero as a
/// polynomial in the t_i (total degree <= n), Schwartz-Zippel bounds the chance that one trial
/// lands on a root by n / (2 * coordinate_bound + 1); `trials` independent trials all fail with
/// probability at most that bound raised to `trials`.
struct InvertibleSearchOptions {
  int trials = 32;
  std::int64_t coordinate_bound = 1'000'000;
  std::uint64_t seed = 0x5eed5eedULL;

  /// Upper bound on the false-negative probability for matrices of size n.
  double false_negative_bound(std::size_t n) const;
};

bool is_invertible(const QMatrix& m);
/// Exact inverse; throws ContractViolation when singular.
QMatrix inverse(const QMatrix& m);
Rational determinant(QMatrix m);

/// Searches particular + span(directions) for a matrix with nonzero determinant.
///
/// A returned matrix is certified exactly. Absence is one-sided: see InvertibleSearchOptions.
/// Deterministic for a fixed seed. The particular point itself is tried before any random trial.
std::optional<QMatrix> find_invertible_in_affine_family(const QMatrix& particular,
                                                        const std::vector<QMatrix>& directions,
                                                        const InvertibleSearchOptions& options = {});

}  // namespace skeinalg
