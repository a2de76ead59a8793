#pragma once

#include <string>
#include <vector>

#include "skeinalg/skein/tangle.hpp"

namespace skeinalg::skein {

/// One claimed TLMorphism identity; both sides kept so a failure can be printed.
struct IdentityCheck {
  std::string name;
  TLMorphism lhs;
  TLMorphism rhs;

  bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool ok() const;
  std::vector<IdentityCheck> failures() const;
  /// Multi-line listing of the failed identities with both sides.
  std::string describe_failures() const;
};

/// Right-hand kink on one strand (strand passes over its own returning arc).
SliceTangle right_kink();
/// Mirror-placed kink closing to the left.
SliceTangle left_kink();
/// The 2-cable of right_kink: a 360-degree twist of a double ribbon.
SliceTangle cabled_right_kink();

/// Ribbon structure of TL as identities between interpreted tangles:
///   Yang-Baxter on every adjacent triple of n <= n_max strands, R2 on every adjacent pair,
///   full-twist naturality on two strands, and the quadratic twist equation on one strand.
/// Throws ContractViolation when n_max exceeds `bound` or is below 2.
IdentityReport ribbon_axiom_checks(std::size_t n_max, std::size_t bound = 4);

/// e_i^2 = delta e_i, e_i e_{i+-1} e_i = e_i and far commutation in TL_n for 2 <= n <= n_max.
IdentityReport tl_relation_checks(std::size_t n_max);

}  // namespace skeinalg::skein
