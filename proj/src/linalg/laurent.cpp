#include "skeinalg/linalg/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "skeinalg/errors.hpp"

namespace skeinalg {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw ContractViolation("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw ContractViolation("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Integer& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_unit()) throw ContractViolation("negative power of a non-unit Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    Integer sign = (-exponent) % 2 == 0 ? Integer(1) : c;
    return monomial(e * exponent, sign);
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  unsigned n = static_cast<unsigned>(exponent);
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n != 0) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      Integer prod = c1 * c2;
      out.add_term(e1 + e2, prod);
    }
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw ContractViolation("division by zero Laurent polynomial");
  if (dividend.is_zero()) return LaurentPoly{};
  // Long division from the top degree; every step must stay integral and the remainder must vanish.
  LaurentPoly remainder = dividend;
  LaurentPoly quotient;
  const int lead_exp = divisor.max_exponent();
  const Integer lead = divisor.coefficient(lead_exp);
  const int span = divisor.max_exponent() - divisor.min_exponent();
  while (!remainder.is_zero()) {
    if (remainder.max_exponent() - remainder.min_exponent() < span) return std::nullopt;
    const int top = remainder.max_exponent();
    const Integer top_coeff = remainder.coefficient(top);
    if (!mpz_divisible_p(top_coeff.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer q = top_coeff / lead;
    LaurentPoly step = LaurentPoly::monomial(top - lead_exp, q);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string to_string(const LaurentPoly& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_coeff = (mag == 1);
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit_coeff) out << mag.get_str() << "*";
    out << variable;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace skeinalg
