#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skeinalg/linalg/laurent.hpp"

namespace skeinalg::skein {

/// Kauffman loop value delta = -A^2 - A^-2.
LaurentPoly loop_value();
/// Scalar of a positive (+1) or negative (-1) 360-degree twist on one strand: -A^{+-3}.
LaurentPoly twist_scalar(int sign);

/// Planar perfect matching between n_bottom bottom points and n_top top points.
///
/// Boundary indices: bottom point i (left to right) is i, top point j (left to right) is
/// n_bottom + j. Planarity is checked on the circular order bottom left-to-right followed by
/// top right-to-left.
class TLDiagram {
 public:
  /// Throws ContractViolation unless `partners` is an involutive, fixed-point-free, noncrossing matching.
  TLDiagram(std::size_t n_bottom, std::size_t n_top, std::vector<std::uint16_t> partners);

  std::size_t n_bottom() const { return n_bottom_; }
  std::size_t n_top() const { return n_top_; }
  std::size_t size() const { return partners_.size(); }
  std::size_t partner(std::size_t point) const { return partners_[point]; }
  const std::vector<std::uint16_t>& partners() const { return partners_; }
  bool is_top(std::size_t point) const { return point >= n_bottom_; }

  /// Number of strands joining bottom to top.
  std::size_t through_strands() const;

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;
  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;

 private:
  std::size_t n_bottom_;
  std::size_t n_top_;
  std::vector<std::uint16_t> partners_;
};

/// Stacks `upper` on top of `lower`; returns the loop-free diagram and the number of closed loops removed.
std::pair<TLDiagram, std::size_t> stack(const TLDiagram& lower, const TLDiagram& upper);
/// Side-by-side placement with `left` on the left.
TLDiagram juxtapose(const TLDiagram& left, const TLDiagram& right);

/// All planar matchings in lexicographic order of partner lists. Empty when the total is odd.
std::vector<TLDiagram> tl_basis(std::size_t n_bottom, std::size_t n_top);

/// Element of hom_TL(n_bottom, n_top): Z[A, A^-1]-combination of loop-free diagrams.
class TLMorphism {
 public:
  TLMorphism(std::size_t n_bottom, std::size_t n_top) : n_bottom_(n_bottom), n_top_(n_top) {}
  explicit TLMorphism(const TLDiagram& d, LaurentPoly coefficient = 1);

  static TLMorphism identity(std::size_t n);
  /// Cup creating two top points (TL(0,2)).
  static TLMorphism cup();
  /// Cap joining two bottom points (TL(2,0)).
  static TLMorphism cap();
  /// Generator e on strands (at, at+1) of n strands: cap then cup.
  static TLMorphism generator(std::size_t n, std::size_t at);
  /// Scalar multiple of the empty diagram.
  static TLMorphism scalar(LaurentPoly value);

  std::size_t n_bottom() const { return n_bottom_; }
  std::size_t n_top() const { return n_top_; }
  const std::map<TLDiagram, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const TLDiagram& d) const;

  void add(const TLDiagram& d, const LaurentPoly& coefficient);

  TLMorphism& operator+=(const TLMorphism& rhs);
  TLMorphism& operator-=(const TLMorphism& rhs);
  TLMorphism& operator*=(const LaurentPoly& scalar);
  friend TLMorphism operator+(TLMorphism a, const TLMorphism& b) { return a += b; }
  friend TLMorphism operator-(TLMorphism a, const TLMorphism& b) { return a -= b; }
  friend TLMorphism operator*(TLMorphism a, const LaurentPoly& s) { return a *= s; }
  friend TLMorphism operator*(const LaurentPoly& s, TLMorphism a) { return a *= s; }
  friend bool operator==(const TLMorphism&, const TLMorphism&) = default;

 private:
  std::size_t n_bottom_;
  std::size_t n_top_;
  std::map<TLDiagram, LaurentPoly> terms_;
};

/// Stacks g on top of f (f : a -> b first, then g : b -> c). Each closed loop contributes delta.
/// Throws ShapeError on a width mismatch.
TLMorphism tl_compose(const TLMorphism& f, const TLMorphism& g);
/// Side-by-side tensor product, f on the left.
TLMorphism tl_tensor(const TLMorphism& f, const TLMorphism& g);

/// Kauffman resolution of a crossing: + -> A id + A^-1 e, - -> A^-1 id + A e.
TLMorphism crossing_resolution(int sign);

/// Closure in the plane: top point i joined to bottom point i around the right side.
LaurentPoly plane_closure(const TLMorphism& m);

/// Annulus skein element sum_k c_k z^k, z = core-parallel curve.
class AnnularClass {
 public:
  AnnularClass() = default;
  static AnnularClass z_power(int k, LaurentPoly coefficient = 1);

  const std::map<int, LaurentPoly>& coefficients() const { return coeffs_; }
  LaurentPoly coefficient(int k) const;
  void add(int k, const LaurentPoly& c);

  AnnularClass& operator+=(const AnnularClass& rhs);
  friend AnnularClass operator*(const AnnularClass& a, const AnnularClass& b);
  friend bool operator==(const AnnularClass&, const AnnularClass&) = default;

 private:
  std::map<int, LaurentPoly> coeffs_;
};

std::string to_string(const AnnularClass& c, std::string_view variable = "A");

/// Closes top i to bottom i around the core of an annulus. Contractible components (zero net
/// traversal of the closing arcs) give delta, core-parallel ones give z.
AnnularClass annulus_closure_eval(const TLMorphism& m);

std::string to_string(const TLDiagram& d);
std::string to_string(const TLMorphism& m, std::string_view variable = "A");

}  // namespace skeinalg::skein
