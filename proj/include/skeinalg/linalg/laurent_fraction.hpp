#pragma once

#include <optional>
#include <string>

#include "skeinalg/linalg/laurent.hpp"

namespace skeinalg {

/// Element of the fraction field Q(A) represented as numerator / denominator over Z[A, A^-1].
///
/// Representations are not unique; equality cross-multiplies. After every operation the pair is
/// cleared back to denominator 1 whenever the division is exact, so results that stay inside
/// Z[A, A^-1] come back in Laurent form.
class LaurentFraction {
 public:
  LaurentFraction() : num_(0), den_(1) {}
  LaurentFraction(long c) : num_(c), den_(1) {}                  // NOLINT(google-explicit-constructor)
  LaurentFraction(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentFraction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// The Laurent polynomial this fraction equals, if any.
  std::optional<LaurentPoly> as_laurent() const;

  LaurentFraction& operator+=(const LaurentFraction& rhs);
  LaurentFraction& operator-=(const LaurentFraction& rhs);
  LaurentFraction& operator*=(const LaurentFraction& rhs);
  LaurentFraction& operator/=(const LaurentFraction& rhs);
  LaurentFraction operator-() const { return {-num_, den_}; }

  friend LaurentFraction operator+(LaurentFraction a, const LaurentFraction& b) { return a += b; }
  friend LaurentFraction operator-(LaurentFraction a, const LaurentFraction& b) { return a -= b; }
  friend LaurentFraction operator*(LaurentFraction a, const LaurentFraction& b) { return a *= b; }
  friend LaurentFraction operator/(LaurentFraction a, const LaurentFraction& b) { return a /= b; }
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const LaurentFraction& x) { return x.is_zero(); }

std::string to_string(const LaurentFraction& x, std::string_view variable = "A");

}  // namespace skeinalg
