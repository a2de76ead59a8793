#include "skeinalg/skein/tl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "skeinalg/errors.hpp"

namespace skeinalg::skein {

LaurentPoly loop_value() {
#ifdef SKEINALG_MUTATE_LOOP_VALUE
  // Deliberately wrong constant for the mutation test; see README "Mutation check".
  return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, 1);
#else
  return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
#endif
}

LaurentPoly twist_scalar(int sign) { return LaurentPoly::monomial(sign > 0 ? 3 : -3, -1); }

namespace {

std::size_t circular_position(std::size_t point, std::size_t n_bottom, std::size_t n_top) {
  return point < n_bottom ? point : n_bottom + (n_top - 1 - (point - n_bottom));
}

std::size_t point_at_position(std::size_t pos, std::size_t n_bottom, std::size_t n_top) {
  return pos < n_bottom ? pos : n_bottom + (n_top - 1 - (pos - n_bottom));
}

bool is_planar_matching(std::size_t n_bottom, std::size_t n_top, const std::vector<std::uint16_t>& partners) {
  const std::size_t n = partners.size();
  std::vector<std::size_t> pos_partner(n);
  for (std::size_t p = 0; p < n; ++p) {
    pos_partner[circular_position(p, n_bottom, n_top)] = circular_position(partners[p], n_bottom, n_top);
  }
  // Balanced parentheses: an arc opens at its first endpoint and must close innermost-first.
  std::vector<std::size_t> open;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (pos_partner[pos] > pos) {
      open.push_back(pos);
    } else {
      if (open.empty() || open.back() != pos_partner[pos]) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

}  // namespace

TLDiagram::TLDiagram(std::size_t n_bottom, std::size_t n_top, std::vector<std::uint16_t> partners)
    : n_bottom_(n_bottom), n_top_(n_top), partners_(std::move(partners)) {
  const std::size_t n = n_bottom_ + n_top_;
  if (partners_.size() != n) throw ContractViolation("TLDiagram: partner list has wrong length");
  for (std::size_t p = 0; p < n; ++p) {
    if (partners_[p] >= n || partners_[p] == p || partners_[partners_[p]] != p) {
      throw ContractViolation("TLDiagram: partner list is not a perfect matching");
    }
  }
  if (!is_planar_matching(n_bottom_, n_top_, partners_)) throw ContractViolation("TLDiagram: matching is not planar");
}

std::size_t TLDiagram::through_strands() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_bottom_; ++i)
    if (partners_[i] >= n_bottom_) ++count;
  return count;
}

std::pair<TLDiagram, std::size_t> stack(const TLDiagram& lower, const TLDiagram& upper) {
  const std::size_t a = lower.n_bottom();
  const std::size_t b = lower.n_top();
  const std::size_t c = upper.n_top();
  if (upper.n_bottom() != b) throw ShapeError("stack: middle widths differ");

  std::vector<std::uint16_t> result(a + c);
  std::vector<bool> middle_seen(b, false);

  // Follow the strand leaving `point` of the given diagram until it reaches an outer point.
  auto follow = [&](bool in_lower, std::size_t point) -> std::size_t {
    while (true) {
      if (in_lower) {
        const std::size_t q = lower.partner(point);
        if (q < a) return q;
        const std::size_t m = q - a;
        middle_seen[m] = true;
        in_lower = false;
        point = m;
      } else {
        const std::size_t q = upper.partner(point);
        if (q >= b) return a + (q - b);
        middle_seen[q] = true;
        in_lower = true;
        point = a + q;
      }
    }
  };
  for (std::size_t i = 0; i < a; ++i) result[i] = static_cast<std::uint16_t>(follow(true, i));
  for (std::size_t j = 0; j < c; ++j) result[a + j] = static_cast<std::uint16_t>(follow(false, b + j));

  std::size_t loops = 0;
  for (std::size_t m = 0; m < b; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    std::size_t cur = m;
    do {
      middle_seen[cur] = true;
      const std::size_t up = upper.partner(cur);  // a closed loop never leaves the middle layer
      middle_seen[up] = true;
      cur = lower.partner(a + up) - a;
    } while (cur != m);
  }
  return {TLDiagram(a, c, std::move(result)), loops};
}

TLDiagram juxtapose(const TLDiagram& left, const TLDiagram& right) {
  const std::size_t a = left.n_bottom();
  const std::size_t b = left.n_top();
  const std::size_t c = right.n_bottom();
  const std::size_t d = right.n_top();
  const std::size_t bottoms = a + c;
  auto map_left = [&](std::size_t p) { return p < a ? p : bottoms + (p - a); };
  auto map_right = [&](std::size_t p) { return p < c ? a + p : bottoms + b + (p - c); };
  std::vector<std::uint16_t> partners(a + b + c + d);
  for (std::size_t p = 0; p < a + b; ++p) partners[map_left(p)] = static_cast<std::uint16_t>(map_left(left.partner(p)));
  for (std::size_t p = 0; p < c + d; ++p) {
    partners[map_right(p)] = static_cast<std::uint16_t>(map_right(right.partner(p)));
  }
  return TLDiagram(bottoms, b + d, std::move(partners));
}

namespace {

// Noncrossing perfect matchings of circular positions [lo, hi): lo pairs with some k leaving
// even-sized intervals inside and outside.
void enumerate_range(std::vector<std::size_t>& pos_partner, std::vector<std::pair<std::size_t, std::size_t>>& stack_ranges,
                     const std::function<void()>& emit) {
  while (!stack_ranges.empty() && stack_ranges.back().first >= stack_ranges.back().second) stack_ranges.pop_back();
  if (stack_ranges.empty()) {
    emit();
    return;
  }
  const auto [lo, hi] = stack_ranges.back();
  stack_ranges.pop_back();
  for (std::size_t k = lo + 1; k < hi; k += 2) {
    pos_partner[lo] = k;
    pos_partner[k] = lo;
    auto saved = stack_ranges;
    stack_ranges.emplace_back(k + 1, hi);
    stack_ranges.emplace_back(lo + 1, k);
    enumerate_range(pos_partner, stack_ranges, emit);
    stack_ranges = std::move(saved);
  }
}

}  // namespace

std::vector<TLDiagram> tl_basis(std::size_t n_bottom, std::size_t n_top) {
  const std::size_t n = n_bottom + n_top;
  std::vector<TLDiagram> out;
  if (n % 2 != 0) return out;
  std::vector<std::size_t> pos_partner(n);
  std::vector<std::pair<std::size_t, std::size_t>> ranges{{0, n}};
  enumerate_range(pos_partner, ranges, [&] {
    std::vector<std::uint16_t> partners(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      partners[point_at_position(pos, n_bottom, n_top)] =
          static_cast<std::uint16_t>(point_at_position(pos_partner[pos], n_bottom, n_top));
    }
    out.emplace_back(n_bottom, n_top, std::move(partners));
  });
  std::sort(out.begin(), out.end());
  return out;
}

TLMorphism::TLMorphism(const TLDiagram& d, LaurentPoly coefficient) : n_bottom_(d.n_bottom()), n_top_(d.n_top()) {
  add(d, coefficient);
}

TLMorphism TLMorphism::identity(std::size_t n) {
  std::vector<std::uint16_t> partners(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    partners[i] = static_cast<std::uint16_t>(n + i);
    partners[n + i] = static_cast<std::uint16_t>(i);
  }
  return TLMorphism(TLDiagram(n, n, std::move(partners)));
}

TLMorphism TLMorphism::cup() { return TLMorphism(TLDiagram(0, 2, {1, 0})); }

TLMorphism TLMorphism::cap() { return TLMorphism(TLDiagram(2, 0, {1, 0})); }

TLMorphism TLMorphism::generator(std::size_t n, std::size_t at) {
  if (at + 1 >= n) throw ContractViolation("TL generator position out of range");
  const TLMorphism e = tl_compose(cap(), cup());
  return tl_tensor(tl_tensor(identity(at), e), identity(n - at - 2));
}

TLMorphism TLMorphism::scalar(LaurentPoly value) { return TLMorphism(TLDiagram(0, 0, {}), std::move(value)); }

LaurentPoly TLMorphism::coefficient(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TLMorphism::add(const TLDiagram& d, const LaurentPoly& coefficient) {
  if (d.n_bottom() != n_bottom_ || d.n_top() != n_top_) throw ShapeError("TLMorphism::add: diagram has wrong shape");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLMorphism& TLMorphism::operator+=(const TLMorphism& rhs) {
  if (rhs.n_bottom_ != n_bottom_ || rhs.n_top_ != n_top_) throw ShapeError("TLMorphism sum: shapes differ");
  for (const auto& [d, c] : rhs.terms_) add(d, c);
  return *this;
}

TLMorphism& TLMorphism::operator-=(const TLMorphism& rhs) {
  if (rhs.n_bottom_ != n_bottom_ || rhs.n_top_ != n_top_) throw ShapeError("TLMorphism difference: shapes differ");
  for (const auto& [d, c] : rhs.terms_) add(d, -c);
  return *this;
}

TLMorphism& TLMorphism::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= scalar;
  return *this;
}

TLMorphism tl_compose(const TLMorphism& f, const TLMorphism& g) {
  if (f.n_top() != g.n_bottom()) {
    throw ShapeError("tl_compose: width mismatch (" + std::to_string(f.n_top()) + " vs " + std::to_string(g.n_bottom()) +
                     ")");
  }
  TLMorphism out(f.n_bottom(), g.n_top());
  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_powers{LaurentPoly(1)};
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto [d, loops] = stack(df, dg);
      while (delta_powers.size() <= loops) delta_powers.push_back(delta_powers.back() * delta);
      out.add(d, cf * cg * delta_powers[loops]);
    }
  }
  return out;
}

TLMorphism tl_tensor(const TLMorphism& f, const TLMorphism& g) {
  TLMorphism out(f.n_bottom() + g.n_bottom(), f.n_top() + g.n_top());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add(juxtapose(df, dg), cf * cg);
  return out;
}

TLMorphism crossing_resolution(int sign) {
  const LaurentPoly a = LaurentPoly::monomial(1);
  const LaurentPoly a_inv = LaurentPoly::monomial(-1);
  const TLMorphism id = TLMorphism::identity(2);
  const TLMorphism e = TLMorphism::generator(2, 0);
  return sign > 0 ? id * a + e * a_inv : id * a_inv + e * a;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void check_square(const TLMorphism& m, const char* who) {
  if (m.n_bottom() != m.n_top()) throw ShapeError(std::string(who) + ": morphism is not square");
}

}  // namespace

LaurentPoly plane_closure(const TLMorphism& m) {
  check_square(m, "plane_closure");
  const std::size_t n = m.n_bottom();
  const LaurentPoly delta = loop_value();
  LaurentPoly total;
  for (const auto& [d, c] : m.terms()) {
    std::vector<std::size_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t components = 2 * n;
    auto unite = [&](std::size_t x, std::size_t y) {
      x = find_root(parent, x);
      y = find_root(parent, y);
      if (x != y) {
        parent[x] = y;
        --components;
      }
    };
    for (std::size_t p = 0; p < 2 * n; ++p) unite(p, d.partner(p));
    for (std::size_t i = 0; i < n; ++i) unite(i, n + i);
    total += c * delta.pow(static_cast<int>(components));
  }
  return total;
}

AnnularClass AnnularClass::z_power(int k, LaurentPoly coefficient) {
  AnnularClass out;
  out.add(k, coefficient);
  return out;
}

LaurentPoly AnnularClass::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void AnnularClass::add(int k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

AnnularClass& AnnularClass::operator+=(const AnnularClass& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) add(k, c);
  return *this;
}

AnnularClass operator*(const AnnularClass& a, const AnnularClass& b) {
  AnnularClass out;
  for (const auto& [i, ci] : a.coeffs_)
    for (const auto& [j, cj] : b.coeffs_) out.add(i + j, ci * cj);
  return out;
}

std::string to_string(const AnnularClass& c, std::string_view variable) {
  if (c.coefficients().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c.coefficients().rbegin(); it != c.coefficients().rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(it->second, variable) << ")";
    if (it->first != 0) out << "*z" << (it->first == 1 ? "" : "^" + std::to_string(it->first));
  }
  return out.str();
}

AnnularClass annulus_closure_eval(const TLMorphism& m) {
  check_square(m, "annulus_closure_eval");
  const std::size_t n = m.n_bottom();
  const LaurentPoly delta = loop_value();
  AnnularClass total;
  for (const auto& [d, c] : m.terms()) {
    // The closing arc for strand i runs from top point n+i around the core to bottom point i;
    // crossing it top-to-bottom counts +1, bottom-to-top counts -1.
    std::vector<bool> seen(2 * n, false);
    int contractible = 0;
    int core = 0;
    for (std::size_t start = 0; start < 2 * n; ++start) {
      if (seen[start]) continue;
      long winding = 0;
      std::size_t p = start;
      do {
        seen[p] = true;
        const std::size_t q = d.partner(p);
        seen[q] = true;
        if (q >= n) {
          winding += 1;
          p = q - n;
        } else {
          winding -= 1;
          p = q + n;
        }
      } while (p != start);
      if (winding == 0) {
        ++contractible;
      } else {
        ++core;
      }
    }
    total.add(core, c * delta.pow(contractible));
  }
  return total;
}

std::string to_string(const TLDiagram& d) {
  std::ostringstream out;
  out << "[" << d.n_bottom() << "->" << d.n_top() << ":";
  for (std::size_t p = 0; p < d.size(); ++p) {
    if (d.partner(p) < p) continue;
    auto name = [&](std::size_t x) { return d.is_top(x) ? "t" + std::to_string(x - d.n_bottom()) : "b" + std::to_string(x); };
    out << " " << name(p) << "-" << name(d.partner(p));
  }
  out << "]";
  return out.str();
}

std::string to_string(const TLMorphism& m, std::string_view variable) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : m.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c, variable) << ")" << to_string(d);
  }
  return out.str();
}

}  // namespace skeinalg::skein
