#include "skeinalg/linalg/laurent_fraction.hpp"

#include "skeinalg/errors.hpp"

namespace skeinalg {

LaurentFraction::LaurentFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ContractViolation("zero denominator in LaurentFraction");
  normalize();
}

void LaurentFraction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (auto q = divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(1);
    return;
  }
  // Strip the monomial content of the denominator; A^k is a unit.
  const int shift = den_.min_exponent();
  if (shift != 0) {
    const LaurentPoly unit = LaurentPoly::monomial(-shift);
    num_ *= unit;
    den_ *= unit;
  }
  if (sgn(den_.coefficient(den_.max_exponent())) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::optional<LaurentPoly> LaurentFraction::as_laurent() const { return divide_exact(num_, den_); }

LaurentFraction& LaurentFraction::operator+=(const LaurentFraction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator-=(const LaurentFraction& rhs) { return *this += -rhs; }

LaurentFraction& LaurentFraction::operator*=(const LaurentFraction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator/=(const LaurentFraction& rhs) {
  if (rhs.is_zero()) throw ContractViolation("division by zero in LaurentFraction");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::string to_string(const LaurentFraction& x, std::string_view variable) {
  if (x.denominator() == LaurentPoly(1)) return to_string(x.numerator(), variable);
  return "(" + to_string(x.numerator(), variable) + ")/(" + to_string(x.denominator(), variable) + ")";
}

}  // namespace skeinalg
