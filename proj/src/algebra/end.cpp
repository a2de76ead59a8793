#include "skeinalg/algebra/end.hpp"

#include "skeinalg/errors.hpp"
#include "skeinalg/linalg/elimination.hpp"

namespace skeinalg {

namespace {

QMatrix elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  QMatrix e(rows, cols);
  e(i, j) = 1;
  return e;
}

}  // namespace

PointedBimodule end_morphism(const QMatrix& f, std::size_t dim_v, std::size_t dim_w) {
  if (dim_v == 0 || dim_w == 0) throw ContractViolation("end_morphism: zero-dimensional spaces are not supported");
  if (f.rows() != dim_w || f.cols() != dim_v) throw ContractViolation("end_morphism: f must be dimW x dimV");
  const std::size_t dim = dim_v * dim_w;
  // Post-composition by E_W(k,l) and pre-composition by E_V(k,l) on the basis E(i,j).
  std::vector<QMatrix> left;
  for (std::size_t k = 0; k < dim_w; ++k)
    for (std::size_t l = 0; l < dim_w; ++l) {
      QMatrix act(dim, dim);
      for (std::size_t j = 0; j < dim_v; ++j) act(k * dim_v + j, l * dim_v + j) = 1;
      left.push_back(std::move(act));
    }
  std::vector<QMatrix> right;
  for (std::size_t k = 0; k < dim_v; ++k)
    for (std::size_t l = 0; l < dim_v; ++l) {
      QMatrix act(dim, dim);
      for (std::size_t i = 0; i < dim_w; ++i) act(i * dim_v + l, i * dim_v + k) = 1;
      right.push_back(std::move(act));
    }
  return make_bimodule(matrix_algebra(dim_w), matrix_algebra(dim_v), std::move(left), std::move(right), flatten(f),
                       DimensionLimits{0, dim});
}

EndCompositionReport end_compose_check(const QMatrix& f, const QMatrix& g) {
  if (g.cols() != f.rows()) throw ContractViolation("end_compose_check: g o f is not defined");
  const std::size_t dv = f.cols();
  const std::size_t dw = f.rows();
  const std::size_t dx = g.rows();
  const PointedBimodule direct = end_morphism(g * f, dv, dx);
  const TensorProduct composite = tensor_over_detailed(end_morphism(g, dw, dx), end_morphism(f, dv, dw));

  EndCompositionReport report;
  if (composite.module.dim() != direct.dim()) {
    report.message = "dimension mismatch: tensor product has dim " + std::to_string(composite.module.dim()) +
                     ", hom(V,X) has dim " + std::to_string(direct.dim());
    return report;
  }
  QMatrix witness = map_from_representatives(composite, direct.dim(), [&](std::size_t p, std::size_t q) {
    const QMatrix b = elementary(dx, dw, p / dw, p % dw);
    const QMatrix a = elementary(dw, dv, q / dv, q % dv);
    return flatten(b * a);
  });
  if (!is_pointed_iso(witness, composite.module, direct)) {
    report.message = "composition witness b (x) a -> b o a is not a pointed isomorphism";
    return report;
  }
  report.ok = true;
  report.message = "end(g o f) ~ end(g) (x) end(f)";
  report.witness = std::move(witness);
  return report;
}

std::vector<QVec> annihilator_left(std::size_t n, const QVec& v) {
  if (v.size() != n) throw ContractViolation("annihilator_left: vector has wrong length");
  // evaluation a -> a v; E(i,j) -> v_j e_i
  QMatrix eval(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) eval(i, i * n + j) = v[j];
  return kernel_basis(eval);
}

std::vector<QVec> annihilator_right(std::size_t n, const QVec& w) {
  if (w.size() != n) throw ContractViolation("annihilator_right: covector has wrong length");
  // a -> w a; E(i,j) -> w_i e_j^T
  QMatrix eval(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) eval(j, i * n + j) = w[i];
  return kernel_basis(eval);
}

bool same_subspace(std::size_t n, const std::vector<QVec>& a, const std::vector<QVec>& b) {
  auto reduced = [n](const std::vector<QVec>& vs) {
    QMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i].at(j);
    auto r = rref(std::move(m));
    QMatrix nonzero(r.pivots.size(), n);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) nonzero(i, j) = r.reduced(i, j);
    return nonzero;
  };
  return reduced(a) == reduced(b);
}

PointedBimodule ideal_quotient_module(const AlgebraPtr& algebra, const std::vector<QVec>& ideal_basis, IdealSide side) {
  const std::size_t n = algebra->dim();
  for (const auto& x : ideal_basis)
    if (x.size() != n) throw ContractViolation("ideal_quotient_module: ideal vector has wrong length");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < ideal_basis.size(); ++k) {
      const QVec prod = side == IdealSide::left ? algebra->multiply(algebra->basis(i), ideal_basis[k])
                                                : algebra->multiply(ideal_basis[k], algebra->basis(i));
      if (!in_span(n, ideal_basis, std::vector<QVec>{prod})) {
        const std::string where = side == IdealSide::left ? "e_" + std::to_string(i) + " * x_" + std::to_string(k)
                                                          : "x_" + std::to_string(k) + " * e_" + std::to_string(i);
        throw ValidationError("span is not a " + std::string(side == IdealSide::left ? "left" : "right") +
                              " ideal: product " + where + " escapes it");
      }
    }

  const auto quotient = quotient_basis(n, ideal_basis);
  const QMatrix inclusion = quotient.inclusion();
  const std::size_t d = quotient.dim();
  std::vector<QMatrix> algebra_side;
  for (std::size_t i = 0; i < n; ++i) {
    const QMatrix& act =
        side == IdealSide::left ? algebra->left_basis_multiplication(i) : algebra->right_basis_multiplication(i);
    algebra_side.push_back(quotient.projection * act * inclusion);
  }
  std::vector<QMatrix> scalar_side{QMatrix::identity(d)};
  QVec point = quotient.projection * algebra->unit();
  DimensionLimits limits{0, d};
  if (side == IdealSide::left) {
    return make_bimodule(algebra, ground_field(), std::move(algebra_side), std::move(scalar_side), std::move(point), limits);
  }
  return make_bimodule(ground_field(), algebra, std::move(scalar_side), std::move(algebra_side), std::move(point), limits);
}

PointedBimodule state_module(const QVec& v) { return end_morphism(QMatrix(v.size(), 1, v), 1, v.size()); }

PointedBimodule costate_module(const QVec& w) { return end_morphism(QMatrix(1, w.size(), w), w.size(), 1); }

}  // namespace skeinalg
