#pragma once

#include <random>

#include "skeinalg/algebra/bimodule.hpp"
#include "skeinalg/skein/tangle.hpp"
#include "skeinalg/tqft/tqft.hpp"

namespace skeinalg::checks {

using Rng = std::mt19937_64;

/// Uniform rational in [-bound, bound] with denominator at most 3.
Rational random_rational(Rng& rng, long bound = 3);
QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 3);
QMatrix random_invertible(Rng& rng, std::size_t n, long bound = 3);
/// Nonzero rational scalar.
Rational random_scalar(Rng& rng);

/// Two states, two costates and two observables on K^dim. A singular system gets a step of rank < dim.
tqft::System random_system(Rng& rng, std::size_t dim, bool singular);
/// Closed word w[.] X ... X v[.] with 2 <= length <= max_length, middle letters u(t) / a[k].
tqft::SpacetimeWord random_closed_word(Rng& rng, const tqft::System& system, std::size_t max_length);
/// pt -> pt word of the given length.
tqft::SpacetimeWord random_point_word(Rng& rng, const tqft::System& system, std::size_t length);

/// Two unital homomorphisms A -> B together with whether they are conjugate in B, known by
/// construction.
struct HomPair {
  std::string family;
  AlgebraHom f;
  AlgebraHom g;
  bool conjugate = false;
};

/// Draws from a fixed catalog of homomorphisms between algebras of dimension <= 4.
HomPair random_hom_pair(Rng& rng);

/// Composable f : A -> B, g : B -> C between algebras of dimension <= 3.
std::pair<AlgebraHom, AlgebraHom> random_composable_homs(Rng& rng);

skein::BraidWord random_braid(Rng& rng, std::size_t strands, std::size_t max_length);

}  // namespace skeinalg::checks
