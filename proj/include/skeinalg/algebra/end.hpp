#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinalg/algebra/bimodule.hpp"

namespace skeinalg {

/// hom(V, W) as an End(W)-End(V)-bimodule pointed by f (a dimW x dimV matrix).
/// Basis: E(i,j) of hom(V, W) at index i*dimV + j. Rejects dimV == 0 or dimW == 0.
PointedBimodule end_morphism(const QMatrix& f, std::size_t dim_v, std::size_t dim_w);
inline PointedBimodule end_morphism(const QMatrix& f) { return end_morphism(f, f.cols(), f.rows()); }

/// Outcome of comparing end(g o f) with end(g) (x) end(f) through the explicit witness b (x) a -> b o a.
struct EndCompositionReport {
  bool ok = false;
  std::string message;
  std::optional<QMatrix> witness;  // tensor product -> hom(V, X), when it verified
};

/// Checks contravariant functoriality of End for f : V -> W and g : W -> X.
EndCompositionReport end_compose_check(const QMatrix& f, const QMatrix& g);

/// Linear map out of a tensor product given on representative pairs: column t is image(p, q)
/// where (p, q) = representatives[t].
template <typename Image>
QMatrix map_from_representatives(const TensorProduct& tensor, std::size_t target_dim, Image&& image) {
  QMatrix out(target_dim, tensor.representatives.size());
  for (std::size_t t = 0; t < tensor.representatives.size(); ++t) {
    const auto [p, q] = tensor.representatives[t];
    const QVec col = image(p, q);
    for (std::size_t r = 0; r < target_dim; ++r) out(r, t) = col[r];
  }
  return out;
}

/// {a in End(K^n) : a v = 0} as a basis of vectors in matrix_algebra(n) coordinates.
std::vector<QVec> annihilator_left(std::size_t n, const QVec& v);
/// {a in End(K^n) : w o a = 0} for a covector w.
std::vector<QVec> annihilator_right(std::size_t n, const QVec& w);

/// True when the two lists span the same subspace of Q^n.
bool same_subspace(std::size_t n, const std::vector<QVec>& a, const std::vector<QVec>& b);

enum class IdealSide { left, right };

/// A/I for a left ideal (an A-K-bimodule) or I\A for a right ideal (a K-A-bimodule), pointed by
/// the class of 1_A. Throws ValidationError with an escaping product when the span is not an ideal.
PointedBimodule ideal_quotient_module(const AlgebraPtr& algebra, const std::vector<QVec>& ideal_basis, IdealSide side);

/// V = hom(K, V) as an End(V)-K-bimodule pointed by v.
PointedBimodule state_module(const QVec& v);
/// V* = hom(V, K) as a K-End(V)-bimodule pointed by w.
PointedBimodule costate_module(const QVec& w);

}  // namespace skeinalg
