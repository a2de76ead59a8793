#include "skeinalg/algebra/bimodule.hpp"

#include <sstream>

#include "skeinalg/errors.hpp"
#include "skeinalg/linalg/elimination.hpp"

namespace skeinalg {

namespace {

QMatrix combine(const std::vector<QMatrix>& basis_matrices, const QVec& coeffs, std::size_t dim) {
  QMatrix out(dim, dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (is_zero(coeffs[i])) continue;
    out += basis_matrices[i] * coeffs[i];
  }
  return out;
}

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_same_sides(const PointedBimodule& m, const PointedBimodule& n) {
  if (!same_algebra(m.left_algebra(), n.left_algebra()) || !same_algebra(m.right_algebra(), n.right_algebra())) {
    throw ContractViolation("bimodules are over different algebras");
  }
}

}  // namespace

QMatrix PointedBimodule::act_left(const QVec& a) const {
  if (a.size() != left_->dim()) throw ContractViolation("act_left: element has wrong length");
  return combine(left_action_, a, dim_);
}

QMatrix PointedBimodule::act_right(const QVec& b) const {
  if (b.size() != right_->dim()) throw ContractViolation("act_right: element has wrong length");
  return combine(right_action_, b, dim_);
}

PointedBimodule PointedBimodule::with_pointing(QVec pointing) const {
  if (pointing.size() != dim_) throw ContractViolation("with_pointing: pointing has wrong length");
  PointedBimodule copy = *this;
  copy.pointing_ = std::move(pointing);
  return copy;
}

bool operator==(const PointedBimodule& a, const PointedBimodule& b) {
  return same_algebra(a.left_, b.left_) && same_algebra(a.right_, b.right_) && a.dim_ == b.dim_ &&
         a.left_action_ == b.left_action_ && a.right_action_ == b.right_action_ && a.pointing_ == b.pointing_;
}

PointedBimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<QMatrix> left_action,
                              std::vector<QMatrix> right_action, QVec pointing, const DimensionLimits& limits) {
  const std::size_t m = pointing.size();
  if (m > limits.bimodule) {
    throw ValidationError("bimodule dimension " + std::to_string(m) + " exceeds the configured cap " +
                          std::to_string(limits.bimodule));
  }
  if (left_action.size() != left->dim()) throw ValidationError("need one left-action matrix per left basis element");
  if (right_action.size() != right->dim()) throw ValidationError("need one right-action matrix per right basis element");
  for (const auto& mat : left_action)
    if (mat.rows() != m || mat.cols() != m) throw ValidationError("left-action matrix has wrong shape");
  for (const auto& mat : right_action)
    if (mat.rows() != m || mat.cols() != m) throw ValidationError("right-action matrix has wrong shape");

  const QMatrix id = QMatrix::identity(m);
  if (combine(left_action, left->unit(), m) != id) throw ValidationError("left action is not unital");
  if (combine(right_action, right->unit(), m) != id) throw ValidationError("right action is not unital");
  for (std::size_t i = 0; i < left->dim(); ++i)
    for (std::size_t j = 0; j < left->dim(); ++j) {
      const QVec prod = left->multiply(left->basis(i), left->basis(j));
      if (left_action[i] * left_action[j] != combine(left_action, prod, m)) {
        throw ValidationError("left action fails L(e_i)L(e_j) = L(e_i e_j) at " + pair_text(i, j));
      }
    }
  for (std::size_t i = 0; i < right->dim(); ++i)
    for (std::size_t j = 0; j < right->dim(); ++j) {
      const QVec prod = right->multiply(right->basis(j), right->basis(i));
      if (right_action[i] * right_action[j] != combine(right_action, prod, m)) {
        throw ValidationError("right action fails R(e_i)R(e_j) = R(e_j e_i) at " + pair_text(i, j));
      }
    }
  for (std::size_t i = 0; i < left->dim(); ++i)
    for (std::size_t j = 0; j < right->dim(); ++j) {
      if (left_action[i] * right_action[j] != right_action[j] * left_action[i]) {
        throw ValidationError("left and right actions do not commute at " + pair_text(i, j));
      }
    }

  PointedBimodule b;
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  b.dim_ = m;
  b.left_action_ = std::move(left_action);
  b.right_action_ = std::move(right_action);
  b.pointing_ = std::move(pointing);
  return b;
}

PointedBimodule regular_bimodule(const AlgebraPtr& algebra, std::optional<QVec> pointing) {
  std::vector<QMatrix> left;
  std::vector<QMatrix> right;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    left.push_back(algebra->left_basis_multiplication(i));
    right.push_back(algebra->right_basis_multiplication(i));
  }
  QVec point = pointing ? std::move(*pointing) : algebra->unit();
  if (point.size() != algebra->dim()) throw ContractViolation("regular_bimodule: pointing has wrong length");
  return make_bimodule(algebra, algebra, std::move(left), std::move(right), std::move(point),
                       DimensionLimits{algebra->dim(), algebra->dim()});
}

PointedBimodule modulate(const AlgebraHom& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  std::vector<QMatrix> left;
  for (std::size_t i = 0; i < a->dim(); ++i) left.push_back(b->left_multiplication(f(a->basis(i))));
  std::vector<QMatrix> right;
  for (std::size_t j = 0; j < b->dim(); ++j) right.push_back(b->right_basis_multiplication(j));
  return make_bimodule(a, b, std::move(left), std::move(right), b->unit(), DimensionLimits{0, b->dim()});
}

TensorProduct tensor_over_detailed(const PointedBimodule& m, const PointedBimodule& n, const DimensionLimits& limits) {
  if (!same_algebra(m.right_algebra(), n.left_algebra())) {
    throw ContractViolation("tensor_over: right algebra of the first bimodule differs from left algebra of the second");
  }
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const std::size_t ambient = dm * dn;
  const std::size_t db = m.right_algebra()->dim();

  // (p <| b) (x) q - p (x) (b |> q) for every basis triple.
  std::vector<QVec> relations;
  for (std::size_t b = 0; b < db; ++b) {
    const QMatrix& rm = m.right_action(b);
    const QMatrix& ln = n.left_action(b);
    for (std::size_t p = 0; p < dm; ++p)
      for (std::size_t q = 0; q < dn; ++q) {
        QVec rel(ambient, 0);
        for (std::size_t k = 0; k < dm; ++k)
          if (!is_zero(rm(k, p))) rel[k * dn + q] += rm(k, p);
        for (std::size_t l = 0; l < dn; ++l)
          if (!is_zero(ln(l, q))) rel[p * dn + l] -= ln(l, q);
        if (!is_zero_vector(rel)) relations.push_back(std::move(rel));
      }
  }
  auto quotient = quotient_basis(ambient, relations);
  const std::size_t d = quotient.dim();
  const QMatrix& proj = quotient.projection;

  auto add_projected_column = [&](QMatrix& target, std::size_t t, std::size_t coord, const Rational& scale) {
    for (std::size_t s = 0; s < d; ++s)
      if (!is_zero(proj(s, coord))) target(s, t) += proj(s, coord) * scale;
  };

  std::vector<std::pair<std::size_t, std::size_t>> reps;
  for (auto coord : quotient.representatives) reps.emplace_back(coord / dn, coord % dn);

  std::vector<QMatrix> left;
  for (std::size_t i = 0; i < m.left_algebra()->dim(); ++i) {
    const QMatrix& lm = m.left_action(i);
    QMatrix induced(d, d);
    for (std::size_t t = 0; t < d; ++t) {
      const auto [r, q] = reps[t];
      for (std::size_t k = 0; k < dm; ++k)
        if (!is_zero(lm(k, r))) add_projected_column(induced, t, k * dn + q, lm(k, r));
    }
    left.push_back(std::move(induced));
  }
  std::vector<QMatrix> right;
  for (std::size_t j = 0; j < n.right_algebra()->dim(); ++j) {
    const QMatrix& rn = n.right_action(j);
    QMatrix induced(d, d);
    for (std::size_t t = 0; t < d; ++t) {
      const auto [r, q] = reps[t];
      for (std::size_t l = 0; l < dn; ++l)
        if (!is_zero(rn(l, q))) add_projected_column(induced, t, r * dn + l, rn(l, q));
    }
    right.push_back(std::move(induced));
  }
  QVec point(d, 0);
  for (std::size_t r = 0; r < dm; ++r) {
    if (is_zero(m.pointing()[r])) continue;
    for (std::size_t q = 0; q < dn; ++q) {
      if (is_zero(n.pointing()[q])) continue;
      const Rational w = m.pointing()[r] * n.pointing()[q];
      for (std::size_t s = 0; s < d; ++s)
        if (!is_zero(proj(s, r * dn + q))) point[s] += proj(s, r * dn + q) * w;
    }
  }
  PointedBimodule module =
      make_bimodule(m.left_algebra(), n.right_algebra(), std::move(left), std::move(right), std::move(point), limits);
  return TensorProduct{std::move(module), std::move(reps), proj};
}

PointedBimodule tensor_over(const PointedBimodule& m, const PointedBimodule& n, const DimensionLimits& limits) {
  return tensor_over_detailed(m, n, limits).module;
}

bool is_bimodule_map(const QMatrix& map, const PointedBimodule& source, const PointedBimodule& target) {
  require_same_sides(source, target);
  if (map.rows() != target.dim() || map.cols() != source.dim()) return false;
  for (std::size_t i = 0; i < source.left_algebra()->dim(); ++i)
    if (target.left_action(i) * map != map * source.left_action(i)) return false;
  for (std::size_t j = 0; j < source.right_algebra()->dim(); ++j)
    if (target.right_action(j) * map != map * source.right_action(j)) return false;
  return true;
}

bool is_pointed_map(const QMatrix& map, const PointedBimodule& source, const PointedBimodule& target) {
  return is_bimodule_map(map, source, target) && map * source.pointing() == target.pointing();
}

bool is_pointed_iso(const QMatrix& map, const PointedBimodule& source, const PointedBimodule& target) {
  return is_pointed_map(map, source, target) && is_invertible(map);
}

std::optional<IntertwinerFamily> intertwiners(const PointedBimodule& source, const PointedBimodule& target,
                                              bool preserve_pointing) {
  require_same_sides(source, target);
  const std::size_t ds = source.dim();
  const std::size_t dt = target.dim();
  const std::size_t unknowns = ds * dt;
  auto var = [ds](std::size_t i, std::size_t j) { return i * ds + j; };

  std::vector<std::vector<Rational>> rows;
  auto add_commutation = [&](const QMatrix& t_act, const QMatrix& s_act) {
    // (t_act X - X s_act)(i, j) = 0
    for (std::size_t i = 0; i < dt; ++i)
      for (std::size_t j = 0; j < ds; ++j) {
        std::vector<Rational> row(unknowns + 1, 0);
        for (std::size_t k = 0; k < dt; ++k)
          if (!is_zero(t_act(i, k))) row[var(k, j)] += t_act(i, k);
        for (std::size_t k = 0; k < ds; ++k)
          if (!is_zero(s_act(k, j))) row[var(i, k)] -= s_act(k, j);
        bool nonzero = false;
        for (const auto& x : row) nonzero = nonzero || !is_zero(x);
        if (nonzero) rows.push_back(std::move(row));
      }
  };
  for (std::size_t i = 0; i < source.left_algebra()->dim(); ++i)
    add_commutation(target.left_action(i), source.left_action(i));
  for (std::size_t j = 0; j < source.right_algebra()->dim(); ++j)
    add_commutation(target.right_action(j), source.right_action(j));
  if (preserve_pointing) {
    for (std::size_t i = 0; i < dt; ++i) {
      std::vector<Rational> row(unknowns + 1, 0);
      for (std::size_t j = 0; j < ds; ++j) row[var(i, j)] = source.pointing()[j];
      row[unknowns] = target.pointing()[i];
      rows.push_back(std::move(row));
    }
  }

  QMatrix system(rows.size(), unknowns);
  QVec rhs(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
    rhs[r] = rows[r][unknowns];
  }
  auto solution = solve_linear(system, rhs);
  if (!solution) return std::nullopt;
  IntertwinerFamily family{unflatten(solution->particular, dt, ds), {}};
  for (const auto& k : solution->kernel) family.directions.push_back(unflatten(k, dt, ds));
  return family;
}

std::optional<QMatrix> bimodule_iso_pointed(const PointedBimodule& m, const PointedBimodule& n,
                                            const InvertibleSearchOptions& options) {
  require_same_sides(m, n);
  if (m.dim() != n.dim()) return std::nullopt;
  auto family = intertwiners(m, n, true);
  if (!family) return std::nullopt;
  auto map = find_invertible_in_affine_family(family->particular, family->directions, options);
  if (map && !is_pointed_iso(*map, m, n)) throw std::logic_error("bimodule_iso_pointed: witness failed verification");
  return map;
}

std::optional<QMatrix> bimodule_iso_unpointed(const PointedBimodule& m, const PointedBimodule& n,
                                              const InvertibleSearchOptions& options) {
  require_same_sides(m, n);
  if (m.dim() != n.dim()) return std::nullopt;
  auto family = intertwiners(m, n, false);
  auto map = find_invertible_in_affine_family(family->particular, family->directions, options);
  if (map && !(is_bimodule_map(*map, m, n) && is_invertible(*map))) {
    throw std::logic_error("bimodule_iso_unpointed: witness failed verification");
  }
  return map;
}

std::optional<QVec> find_conjugator(const AlgebraHom& f, const AlgebraHom& g, const InvertibleSearchOptions& options) {
  if (!same_algebra(f.source, g.source) || !same_algebra(f.target, g.target)) {
    throw ContractViolation("find_conjugator: homomorphisms have different source or target");
  }
  const auto& a = *f.source;
  const auto& b = *f.target;
  const std::size_t n = b.dim();
  // (R(f(a)) - L(g(a))) x = 0 for every basis a.
  QMatrix system(a.dim() * n, n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const QMatrix block = b.right_multiplication(f(a.basis(i))) - b.left_multiplication(g(a.basis(i)));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) system(i * n + r, c) = block(r, c);
  }
  std::vector<QMatrix> directions;
  for (const auto& k : kernel_basis(system)) directions.push_back(b.left_multiplication(k));
  auto lb = find_invertible_in_affine_family(QMatrix(n, n), directions, options);
  if (!lb) return std::nullopt;
  return *lb * b.unit();
}

}  // namespace skeinalg
