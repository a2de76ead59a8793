#pragma once

#include <cstddef>

#include "skeinalg/skein/tangle.hpp"

namespace skeinalg::skein {

inline constexpr std::size_t kMaxStateSumCrossings = 30;

/// Kauffman bracket of a closed, coupon-free tangle as the sum over all 2^c smoothings of
/// A^(#A - #B) * delta^(#loops), times the twist scalars. Independent of the TL evaluator.
/// Throws ShapeError for open tangles or coupons, ContractViolation above kMaxStateSumCrossings.
LaurentPoly bracket_state_sum_serial(const SliceTangle& tangle);

/// Same sum with the states split across OpenMP threads. Falls back to the serial loop when
/// built without OpenMP.
LaurentPoly bracket_state_sum_parallel(const SliceTangle& tangle);

}  // namespace skeinalg::skein
