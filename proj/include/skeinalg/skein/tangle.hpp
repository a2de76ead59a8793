#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skeinalg/skein/tl.hpp"

namespace skeinalg::skein {

enum class EventKind { id, cup, cap, cross_pos, cross_neg, twist_pos, twist_neg, coupon };

/// One elementary piece of a horizontal slice.
struct Event {
  EventKind kind = EventKind::id;
  std::shared_ptr<const TLMorphism> coupon;  // set only for EventKind::coupon

  static Event of(EventKind kind) { return Event{kind, nullptr}; }
  static Event make_coupon(TLMorphism m) { return Event{EventKind::coupon, std::make_shared<const TLMorphism>(std::move(m))}; }

  std::size_t inputs() const;
  std::size_t outputs() const;
  /// +1 / -1 for crossings, 0 otherwise.
  int crossing_sign() const;
};

using Slice = std::vector<Event>;

/// A ribbon tangle in Morse position: slices read bottom to top, each the side-by-side tensor
/// of its events. Slice k's outputs feed slice k+1's inputs.
struct SliceTangle {
  std::size_t strands_in = 0;
  std::vector<Slice> slices;

  /// Widths after each slice; throws ShapeError naming the first slice whose inputs do not
  /// match the incoming width.
  std::vector<std::size_t> widths() const;
  std::size_t strands_out() const;
  bool closed() const { return strands_in == 0 && strands_out() == 0; }
  std::size_t crossing_count() const;
  /// Sum of event crossing signs. Equals the oriented writhe when every strand runs upward (braids).
  int writhe() const;
  /// Writhe after orienting each component: a crossing's sign flips when exactly one of its
  /// strands runs downward. Open arcs are oriented from their first boundary point.
  /// Throws ShapeError for tangles with coupons.
  int oriented_writhe() const;
  bool has_coupons() const;

  /// This tangle followed by `upper` on top. Throws ShapeError on a width mismatch.
  SliceTangle then(const SliceTangle& upper) const;
};

/// `event` at strand position `at` of a slice whose incoming width is `width`, padded with identities.
Slice padded(Event event, std::size_t at, std::size_t width);

/// Folds the slices through tl_compose. Throws ShapeError with the slice index on bad widths.
TLMorphism interpret_tangle(const SliceTangle& tangle);
/// Morphism of one slice (tensor of its events).
TLMorphism interpret_slice(const Slice& slice);

/// Coefficient of the empty diagram in interpret_tangle; empty diagram normalized to 1.
/// Throws ShapeError for an open tangle.
LaurentPoly kauffman_bracket(const SliceTangle& tangle);

/// Braid letters are signed 1-based generator indices: +i is sigma_i, -i its inverse.
using BraidWord = std::vector<int>;

/// One slice per letter; sigma_i^{+-1} is a cross+- between strands i-1 and i (0-based).
/// Throws ShapeError when an index is outside [1, strands - 1].
SliceTangle braid_to_slices(const BraidWord& word, std::size_t strands);

/// Closed tangle: strands nested cups, the braid on the left half, nested caps.
/// Its bracket equals plane_closure(interpret(braid_to_slices(word, strands))).
SliceTangle braid_closure(const BraidWord& word, std::size_t strands);

/// Parses "s1 s2^-1 s1"; letters separated by whitespace. Throws ParseError.
BraidWord parse_braid(std::string_view text);
std::string braid_to_string(const BraidWord& word);
/// Smallest strand count that accommodates every letter (at least 1).
std::size_t braid_strands(const BraidWord& word);

/// (-A^3)^(-writhe) * bracket.
LaurentPoly normalize_writhe(const LaurentPoly& bracket, int writhe);

}  // namespace skeinalg::skein
