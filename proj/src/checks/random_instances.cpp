#include "skeinalg/checks/random_instances.hpp"

#include "skeinalg/linalg/invertible_search.hpp"

namespace skeinalg::checks {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational q(long p) { return Rational(p); }

/// Unital homomorphism D_m -> D_n sending coordinate i of the target to source coordinate pick[i].
AlgebraHom diagonal_hom(std::size_t m, const std::vector<std::size_t>& pick) {
  QMatrix mat(pick.size(), m);
  for (std::size_t i = 0; i < pick.size(); ++i) mat(i, pick[i]) = 1;
  return make_algebra_hom(diagonal_algebra(m), diagonal_algebra(pick.size()), mat);
}

std::vector<std::size_t> random_pick(Rng& rng, std::size_t m, std::size_t n) {
  std::vector<std::size_t> pick(n);
  for (auto& p : pick) p = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1));
  return pick;
}

/// Q[x]/x^2 -> M2 with x -> N.
AlgebraHom dual_numbers_to_m2(const QMatrix& n) {
  const auto m2 = matrix_algebra(2);
  return make_algebra_hom(truncated_polynomial_algebra(2), m2, QMatrix::from_columns(4, {m2->unit(), flatten(n)}));
}

/// Nonzero square-zero 2x2 matrix p q^T with q orthogonal to p.
QMatrix random_square_zero(Rng& rng) {
  QVec p;
  do {
    p = {random_rational(rng), random_rational(rng)};
  } while (p[0] == 0 && p[1] == 0);
  const Rational s = random_scalar(rng);
  const QVec qv{-p[1] * s, p[0] * s};
  QMatrix n(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) n(i, j) = p[i] * qv[j];
  return n;
}

/// Q[x]/x^k -> Q[x]/x^k, x -> c1 x + c2 x^2 (+ ...).
AlgebraHom polynomial_substitution(std::size_t k, const QVec& image_of_x) {
  const auto p = truncated_polynomial_algebra(k);
  QMatrix mat(k, k);
  QVec power = p->unit();
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) mat(i, j) = power[i];
    power = p->multiply(power, image_of_x);
  }
  return make_algebra_hom(p, p, mat);
}

QVec random_upper_triangular_unit(Rng& rng) {
  // basis E11, E12, E22; invertible iff both diagonal entries are nonzero
  return {random_scalar(rng), random_rational(rng), random_scalar(rng)};
}

AlgebraHom t2_diagonal_projection() {
  const auto t = upper_triangular_algebra();
  return make_algebra_hom(t, t, QMatrix::from_rows({{q(1), q(0), q(0)}, {q(0), q(0), q(0)}, {q(0), q(0), q(1)}}));
}

AlgebraHom t2_character(std::size_t which) {
  QMatrix m(1, 3);
  m(0, which == 0 ? 0 : 2) = 1;
  return make_algebra_hom(upper_triangular_algebra(), ground_field(), m);
}

}  // namespace

Rational random_rational(Rng& rng, long bound) {
  const long den = uniform(rng, 1, 3);
  Rational x(uniform(rng, -bound * den, bound * den), den);
  x.canonicalize();
  return x;
}

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound);
  return m;
}

QMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    QMatrix m = random_matrix(rng, n, n, bound);
    if (is_invertible(m)) return m;
  }
}

Rational random_scalar(Rng& rng) {
  for (;;) {
    Rational x = random_rational(rng);
    if (x != 0) return x;
  }
}

tqft::System random_system(Rng& rng, std::size_t dim, bool singular) {
  tqft::System s;
  s.dim = dim;
  s.step = random_matrix(rng, dim, dim);
  if (singular) {
    // last row becomes a combination of the others (zero when dim == 1)
    const Rational c = random_rational(rng);
    for (std::size_t j = 0; j < dim; ++j) s.step(dim - 1, j) = dim > 1 ? c * s.step(0, j) : Rational(0);
  }
  for (const char* label : {"0", "1"}) {
    s.states[label] = random_matrix(rng, dim, 1).column(0);
    s.costates[label] = random_matrix(rng, 1, dim).transpose().column(0);
    s.observables[std::string("a") + label] = random_matrix(rng, dim, dim);
  }
  return s;
}

tqft::SpacetimeWord random_point_word(Rng& rng, const tqft::System& system, std::size_t length) {
  std::vector<tqft::Generator> gens;
  for (std::size_t i = 0; i < length; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      gens.push_back({tqft::GeneratorKind::evolution, uniform(rng, 1, 3), {}});
    } else {
      auto it = system.observables.begin();
      std::advance(it, uniform(rng, 0, static_cast<long>(system.observables.size()) - 1));
      gens.push_back({tqft::GeneratorKind::observable, 0, it->first});
    }
  }
  return tqft::SpacetimeWord(std::move(gens));
}

tqft::SpacetimeWord random_closed_word(Rng& rng, const tqft::System& system, std::size_t max_length) {
  const auto length = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_length)));
  auto pick = [&](const std::map<std::string, QVec>& m) {
    auto it = m.begin();
    std::advance(it, uniform(rng, 0, static_cast<long>(m.size()) - 1));
    return it->first;
  };
  std::vector<tqft::Generator> gens{{tqft::GeneratorKind::costate, 0, pick(system.costates)}};
  const auto middle = random_point_word(rng, system, length - 2).generators();
  gens.insert(gens.end(), middle.begin(), middle.end());
  gens.push_back({tqft::GeneratorKind::state, 0, pick(system.states)});
  return tqft::SpacetimeWord(std::move(gens));
}

HomPair random_hom_pair(Rng& rng) {
  switch (uniform(rng, 0, 6)) {
    case 0: {
      const AlgebraHom f = conjugation_hom(random_invertible(rng, 2));
      const AlgebraHom g = conjugation_hom(random_invertible(rng, 2));
      return {"M2 conjugations", f, g, true};
    }
    case 1: {
      const bool f_swaps = uniform(rng, 0, 1) == 0;
      const bool g_swaps = uniform(rng, 0, 1) == 0;
      const std::vector<std::size_t> id{0, 1};
      const std::vector<std::size_t> swap{1, 0};
      return {"Q2 permutations", diagonal_hom(2, f_swaps ? swap : id), diagonal_hom(2, g_swaps ? swap : id),
              f_swaps == g_swaps};
    }
    case 2: {
      const auto pf = random_pick(rng, 2, 3);
      const auto pg = uniform(rng, 0, 2) == 0 ? pf : random_pick(rng, 2, 3);
      return {"Q2 -> Q3 idempotent maps", diagonal_hom(2, pf), diagonal_hom(2, pg), pf == pg};
    }
    case 3: {
      const bool f_zero = uniform(rng, 0, 2) == 0;
      const bool g_zero = uniform(rng, 0, 2) == 0;
      const AlgebraHom f = dual_numbers_to_m2(f_zero ? QMatrix(2, 2) : random_square_zero(rng));
      const AlgebraHom g = dual_numbers_to_m2(g_zero ? QMatrix(2, 2) : random_square_zero(rng));
      return {"Q[x]/x^2 -> M2", f, g, f_zero == g_zero};
    }
    case 4: {
      const std::size_t k = static_cast<std::size_t>(uniform(rng, 2, 3));
      auto image = [&](bool reuse, const QVec& previous) {
        if (reuse) return previous;
        QVec x(k, Rational(0));
        x[1] = random_rational(rng);
        if (k == 3) x[2] = random_rational(rng);
        return x;
      };
      const QVec xf = image(false, {});
      const QVec xg = image(uniform(rng, 0, 2) == 0, xf);
      return {"truncated polynomial maps", polynomial_substitution(k, xf), polynomial_substitution(k, xg), xf == xg};
    }
    case 5: {
      const auto t = upper_triangular_algebra();
      const AlgebraHom base = uniform(rng, 0, 1) == 0 ? identity_hom(t) : t2_diagonal_projection();
      const AlgebraHom f = compose(inner_automorphism(t, random_upper_triangular_unit(rng)), base);
      switch (uniform(rng, 0, 2)) {
        case 0:
          return {"T2 conjugations", f, compose(inner_automorphism(t, random_upper_triangular_unit(rng)), base), true};
        case 1: {
          const AlgebraHom other = base.matrix == QMatrix::identity(3) ? t2_diagonal_projection() : identity_hom(t);
          return {"T2 conjugations", f, compose(inner_automorphism(t, random_upper_triangular_unit(rng)), other), false};
        }
        default:
          return {"T2 conjugations", f, f, true};
      }
    }
    default: {
      const std::size_t a = static_cast<std::size_t>(uniform(rng, 0, 1));
      const std::size_t b = static_cast<std::size_t>(uniform(rng, 0, 1));
      return {"T2 characters", t2_character(a), t2_character(b), a == b};
    }
  }
}

std::pair<AlgebraHom, AlgebraHom> random_composable_homs(Rng& rng) {
  const auto t = upper_triangular_algebra();
  switch (uniform(rng, 0, 4)) {
    case 0:
      return {diagonal_hom(1, {0, 0}), diagonal_hom(2, random_pick(rng, 2, 3))};
    case 1:
      return {diagonal_hom(2, random_pick(rng, 2, 2)), diagonal_hom(2, random_pick(rng, 2, 3))};
    case 2: {
      const std::size_t k = 3;
      QVec x1(k, Rational(0));
      QVec x2(k, Rational(0));
      x1[1] = random_rational(rng);
      x1[2] = random_rational(rng);
      x2[1] = random_rational(rng);
      x2[2] = random_rational(rng);
      return {polynomial_substitution(k, x1), polynomial_substitution(k, x2)};
    }
    case 3: {
      QMatrix to_t(3, 2);
      to_t(0, 0) = to_t(2, 0) = 1;
      to_t(1, 1) = random_rational(rng);  // x -> c E12
      const AlgebraHom f = make_algebra_hom(truncated_polynomial_algebra(2), t, to_t);
      return {f, inner_automorphism(t, random_upper_triangular_unit(rng))};
    }
    default: {
      const AlgebraHom f = inner_automorphism(t, random_upper_triangular_unit(rng));
      const AlgebraHom g = uniform(rng, 0, 1) == 0 ? t2_diagonal_projection()
                                                    : compose(t2_diagonal_projection(),
                                                              inner_automorphism(t, random_upper_triangular_unit(rng)));
      return {f, g};
    }
  }
}

skein::BraidWord random_braid(Rng& rng, std::size_t strands, std::size_t max_length) {
  skein::BraidWord w;
  if (strands < 2) return w;
  const auto length = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_length)));
  for (std::size_t i = 0; i < length; ++i) {
    const int g = static_cast<int>(uniform(rng, 1, static_cast<long>(strands) - 1));
    w.push_back(uniform(rng, 0, 1) == 0 ? g : -g);
  }
  return w;
}

}  // namespace skeinalg::checks
