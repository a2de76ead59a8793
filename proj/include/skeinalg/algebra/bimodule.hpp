#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeinalg/algebra/algebra.hpp"
#include "skeinalg/linalg/invertible_search.hpp"

namespace skeinalg {

/// Side conventions used throughout this module:
///  - left_action(i) is the matrix of m -> e_i |> m for the i-th basis element of the left algebra;
///  - right_action(j) is the matrix of m -> m <| e_j, so right_action(i) * right_action(j) = right_action of e_j e_i;
///  - modulate(f : A -> B) is the A-B-bimodule B with a |> x = f(a) x and x <| b = x b;
///  - end_morphism(f : V -> W) is hom(V, W) with End(W) acting on the left by post-composition
///    and End(V) on the right by pre-composition, so End is contravariant and composes as
///    end(g o f) ~ end(g) (x)_{End W} end(f).
class PointedBimodule {
 public:
  const AlgebraPtr& left_algebra() const { return left_; }
  const AlgebraPtr& right_algebra() const { return right_; }
  std::size_t dim() const { return dim_; }
  const QMatrix& left_action(std::size_t i) const { return left_action_[i]; }
  const QMatrix& right_action(std::size_t j) const { return right_action_[j]; }
  const std::vector<QMatrix>& left_actions() const { return left_action_; }
  const std::vector<QMatrix>& right_actions() const { return right_action_; }
  const QVec& pointing() const { return pointing_; }

  /// Matrix of m -> a |> m for an arbitrary element a.
  QMatrix act_left(const QVec& a) const;
  /// Matrix of m -> m <| b for an arbitrary element b.
  QMatrix act_right(const QVec& b) const;

  /// Same bimodule, different pointing.
  PointedBimodule with_pointing(QVec pointing) const;

  friend bool operator==(const PointedBimodule& a, const PointedBimodule& b);

 private:
  friend PointedBimodule make_bimodule(AlgebraPtr, AlgebraPtr, std::vector<QMatrix>, std::vector<QMatrix>, QVec,
                                       const DimensionLimits&);
  PointedBimodule() = default;

  AlgebraPtr left_;
  AlgebraPtr right_;
  std::size_t dim_ = 0;
  std::vector<QMatrix> left_action_;
  std::vector<QMatrix> right_action_;
  QVec pointing_;
};

/// Validates and builds a pointed bimodule: unital left action, unital right action with
/// reversed multiplication, and commuting actions, all checked on every basis pair.
PointedBimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<QMatrix> left_action,
                              std::vector<QMatrix> right_action, QVec pointing, const DimensionLimits& limits = {});

/// A as an A-A-bimodule, pointed by `pointing` (default: the unit).
PointedBimodule regular_bimodule(const AlgebraPtr& algebra, std::optional<QVec> pointing = std::nullopt);

/// The pointed bimodule (_f B, 1_B).
PointedBimodule modulate(const AlgebraHom& f);

/// M (x)_B N together with the bookkeeping needed to write explicit maps out of it.
struct TensorProduct {
  PointedBimodule module;
  /// For quotient basis vector t, the pair (p, q) such that it is the class of e_p (x) e_q.
  std::vector<std::pair<std::size_t, std::size_t>> representatives;
  /// dim(module) x (dim M * dim N) projection onto quotient coordinates.
  QMatrix projection;
};

/// Composition of 1-morphisms: (M (x)_B N, class of 1_M (x) 1_N). Throws ContractViolation when
/// M's right algebra differs from N's left algebra.
TensorProduct tensor_over_detailed(const PointedBimodule& m, const PointedBimodule& n, const DimensionLimits& limits = {});
PointedBimodule tensor_over(const PointedBimodule& m, const PointedBimodule& n, const DimensionLimits& limits = {});

/// True when `map` (dim N x dim M) intertwines both actions.
bool is_bimodule_map(const QMatrix& map, const PointedBimodule& source, const PointedBimodule& target);
/// Bimodule map that also sends pointing to pointing.
bool is_pointed_map(const QMatrix& map, const PointedBimodule& source, const PointedBimodule& target);
/// Invertible pointed bimodule map.
bool is_pointed_iso(const QMatrix& map, const PointedBimodule& source, const PointedBimodule& target);

/// Affine space of bimodule maps source -> target, optionally constrained to preserve pointings.
struct IntertwinerFamily {
  QMatrix particular;
  std::vector<QMatrix> directions;
};
std::optional<IntertwinerFamily> intertwiners(const PointedBimodule& source, const PointedBimodule& target,
                                              bool preserve_pointing);

/// Pointed isomorphism search (2-isomorphism in the pointed bicategory). Positive answers are
/// verified exactly; absence carries the randomized-completeness bound of the search options.
std::optional<QMatrix> bimodule_iso_pointed(const PointedBimodule& m, const PointedBimodule& n,
                                            const InvertibleSearchOptions& options = {});
/// Same, ignoring pointings (isomorphism in the Morita bicategory).
std::optional<QMatrix> bimodule_iso_unpointed(const PointedBimodule& m, const PointedBimodule& n,
                                              const InvertibleSearchOptions& options = {});

/// Invertible b in B with b f(a) = g(a) b for every a, searched directly inside B.
std::optional<QVec> find_conjugator(const AlgebraHom& f, const AlgebraHom& g, const InvertibleSearchOptions& options = {});

}  // namespace skeinalg
