#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "skeinalg/linalg/rational.hpp"

namespace skeinalg {

/// Element of Z[A, A^-1], stored sparsely as exponent -> coefficient with no zero coefficients.
///
/// The variable name is a presentation detail only: arithmetic and equality act on coefficients,
/// and `to_string` takes the symbol to print.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): scalars embed implicitly
  explicit LaurentPoly(Terms terms);

  /// c * A^exponent
  static LaurentPoly monomial(int exponent, Integer coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of A^exponent (zero when absent).
  Integer coefficient(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  /// Substitution A -> A^-1.
  LaurentPoly mirror() const;
  /// Integer power; negative exponents are allowed only for units (+-A^k).
  LaurentPoly pow(int exponent) const;
  /// True when the value is +-A^k.
  bool is_unit() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  void add_term(int exponent, const Integer& coefficient);
  Terms terms_;
};

/// Exact division in Z[A, A^-1]: returns q with q * divisor == dividend, or nothing when no such q exists.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Human-readable form, highest exponent first: "-A^2 - A^-2". Zero prints as "0".
std::string to_string(const LaurentPoly& p, std::string_view variable = "A");

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace skeinalg
