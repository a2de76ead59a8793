#include "skeinalg/skein/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "skeinalg/errors.hpp"

namespace skeinalg::skein {

std::size_t Event::inputs() const {
  switch (kind) {
    case EventKind::cup:
      return 0;
    case EventKind::cap:
    case EventKind::cross_pos:
    case EventKind::cross_neg:
      return 2;
    case EventKind::coupon:
      return coupon->n_bottom();
    default:
      return 1;
  }
}

std::size_t Event::outputs() const {
  switch (kind) {
    case EventKind::cap:
      return 0;
    case EventKind::cup:
    case EventKind::cross_pos:
    case EventKind::cross_neg:
      return 2;
    case EventKind::coupon:
      return coupon->n_top();
    default:
      return 1;
  }
}

int Event::crossing_sign() const {
  if (kind == EventKind::cross_pos) return 1;
  if (kind == EventKind::cross_neg) return -1;
  return 0;
}

std::vector<std::size_t> SliceTangle::widths() const {
  std::vector<std::size_t> out;
  std::size_t width = strands_in;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    std::size_t in = 0;
    std::size_t outw = 0;
    for (const auto& e : slices[k]) {
      if (e.kind == EventKind::coupon && !e.coupon) throw ShapeError("slice " + std::to_string(k) + ": coupon without morphism");
      in += e.inputs();
      outw += e.outputs();
    }
    if (in != width) {
      throw ShapeError("slice " + std::to_string(k) + " expects " + std::to_string(in) + " strands but receives " +
                       std::to_string(width));
    }
    width = outw;
    out.push_back(width);
  }
  return out;
}

std::size_t SliceTangle::strands_out() const {
  const auto w = widths();
  return w.empty() ? strands_in : w.back();
}

std::size_t SliceTangle::crossing_count() const {
  std::size_t n = 0;
  for (const auto& s : slices)
    for (const auto& e : s) n += e.crossing_sign() != 0 ? 1 : 0;
  return n;
}

int SliceTangle::writhe() const {
  int w = 0;
  for (const auto& s : slices)
    for (const auto& e : s) w += e.crossing_sign();
  return w;
}

int SliceTangle::oriented_writhe() const {
  if (has_coupons()) throw ShapeError("oriented writhe is undefined for tangles with coupons");
  const auto w = widths();
  // Endpoint (level, position) -> node id; level k sits below slice k.
  std::vector<std::size_t> offset{0, strands_in};
  for (std::size_t width : w) offset.push_back(offset.back() + width);
  const std::size_t nodes = offset.back();
  auto node = [&](std::size_t level, std::size_t pos) { return offset[level] + pos; };

  struct Edge {
    std::size_t a, b;  // a is the lower end for vertical edges
    std::size_t crossing;  // index into signs, or npos
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Edge> edges;
  std::vector<int> signs;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    std::size_t in = 0;
    std::size_t out = 0;
    for (const auto& e : slices[k]) {
      switch (e.kind) {
        case EventKind::cup:
          edges.push_back({node(k + 1, out), node(k + 1, out + 1), npos});
          break;
        case EventKind::cap:
          edges.push_back({node(k, in), node(k, in + 1), npos});
          break;
        case EventKind::cross_pos:
        case EventKind::cross_neg:
          signs.push_back(e.crossing_sign());
          edges.push_back({node(k, in), node(k + 1, out + 1), signs.size() - 1});
          edges.push_back({node(k, in + 1), node(k + 1, out), signs.size() - 1});
          break;
        default:
          edges.push_back({node(k, in), node(k + 1, out), npos});
      }
      in += e.inputs();
      out += e.outputs();
    }
  }
  std::vector<std::vector<std::size_t>> incident(nodes);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].a].push_back(i);
    incident[edges[i].b].push_back(i);
  }
  auto level_of = [&](std::size_t n) {
    return static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), n) - offset.begin()) - 1;
  };
  std::vector<int> direction(signs.size(), 1);  // product of the two strand directions
  std::vector<bool> used(edges.size(), false);
  auto walk = [&](std::size_t start) {
    std::size_t at = start;
    for (;;) {
      std::size_t next_edge = npos;
      for (std::size_t e : incident[at])
        if (!used[e]) next_edge = e;
      if (next_edge == npos) return;
      used[next_edge] = true;
      const Edge& e = edges[next_edge];
      const std::size_t to = e.a == at ? e.b : e.a;
      if (e.crossing != npos) direction[e.crossing] *= level_of(to) > level_of(at) ? 1 : -1;
      at = to;
    }
  };
  for (std::size_t n = 0; n < nodes; ++n)
    if (incident[n].size() == 1) walk(n);
  for (std::size_t n = 0; n < nodes; ++n) walk(n);
  int total = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) total += signs[i] * direction[i];
  return total;
}

bool SliceTangle::has_coupons() const {
  for (const auto& s : slices)
    for (const auto& e : s)
      if (e.kind == EventKind::coupon) return true;
  return false;
}

SliceTangle SliceTangle::then(const SliceTangle& upper) const {
  if (strands_out() != upper.strands_in) throw ShapeError("cannot stack tangles: widths differ");
  SliceTangle out = *this;
  out.slices.insert(out.slices.end(), upper.slices.begin(), upper.slices.end());
  return out;
}

Slice padded(Event event, std::size_t at, std::size_t width) {
  if (at + event.inputs() > width) throw ShapeError("event at position " + std::to_string(at) + " does not fit width " + std::to_string(width));
  Slice s(at, Event::of(EventKind::id));
  const std::size_t right = width - at - event.inputs();
  s.push_back(std::move(event));
  s.insert(s.end(), right, Event::of(EventKind::id));
  return s;
}

namespace {

TLMorphism event_morphism(const Event& e) {
  switch (e.kind) {
    case EventKind::id:
      return TLMorphism::identity(1);
    case EventKind::cup:
      return TLMorphism::cup();
    case EventKind::cap:
      return TLMorphism::cap();
    case EventKind::cross_pos:
      return crossing_resolution(+1);
    case EventKind::cross_neg:
      return crossing_resolution(-1);
    case EventKind::twist_pos:
      return TLMorphism::identity(1) * twist_scalar(+1);
    case EventKind::twist_neg:
      return TLMorphism::identity(1) * twist_scalar(-1);
    case EventKind::coupon:
      return *e.coupon;
  }
  throw std::logic_error("unreachable event kind");
}

}  // namespace

TLMorphism interpret_slice(const Slice& slice) {
  TLMorphism out = TLMorphism::scalar(1);
  for (const auto& e : slice) out = tl_tensor(out, event_morphism(e));
  return out;
}

TLMorphism interpret_tangle(const SliceTangle& tangle) {
  tangle.widths();  // bookkeeping check with slice index
  TLMorphism result = TLMorphism::identity(tangle.strands_in);
  for (const auto& slice : tangle.slices) result = tl_compose(result, interpret_slice(slice));
  return result;
}

LaurentPoly kauffman_bracket(const SliceTangle& tangle) {
  if (!tangle.closed()) {
    throw ShapeError("kauffman_bracket needs a closed tangle; this one has " + std::to_string(tangle.strands_in) +
                     " strands in and " + std::to_string(tangle.strands_out()) + " out");
  }
  return interpret_tangle(tangle).coefficient(TLDiagram(0, 0, {}));
}

SliceTangle braid_to_slices(const BraidWord& word, std::size_t strands) {
  SliceTangle t{strands, {}};
  for (int letter : word) {
    const auto index = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    if (letter == 0 || index >= strands) {
      throw ShapeError("braid generator " + std::to_string(letter) + " out of range for " + std::to_string(strands) +
                       " strands");
    }
    t.slices.push_back(padded(Event::of(letter > 0 ? EventKind::cross_pos : EventKind::cross_neg), index - 1, strands));
  }
  return t;
}

SliceTangle braid_closure(const BraidWord& word, std::size_t strands) {
  SliceTangle t{0, {}};
  for (std::size_t k = 0; k < strands; ++k) t.slices.push_back(padded(Event::of(EventKind::cup), k, 2 * k));
  const SliceTangle braid = braid_to_slices(word, strands);
  for (const auto& s : braid.slices) {
    Slice wide = s;
    wide.insert(wide.end(), strands, Event::of(EventKind::id));
    t.slices.push_back(std::move(wide));
  }
  for (std::size_t k = strands; k-- > 0;) t.slices.push_back(padded(Event::of(EventKind::cap), k, 2 * (k + 1)));
  return t;
}

BraidWord parse_braid(std::string_view text) {
  BraidWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S')) throw ParseError("bad braid letter '" + token + "'");
    std::size_t pos = 1;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == 1 || pos - 1 > 6) throw ParseError("bad braid letter '" + token + "'");
    const int index = std::stoi(token.substr(1, pos - 1));
    if (index <= 0) throw ParseError("braid generator indices start at 1: '" + token + "'");
    int sign = 1;
    if (pos < token.size()) {
      if (token.substr(pos) != "^-1") throw ParseError("bad braid exponent in '" + token + "'");
      sign = -1;
    }
    word.push_back(sign * index);
  }
  return word;
}

std::string braid_to_string(const BraidWord& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << " ";
    out << "s" << (word[i] < 0 ? -word[i] : word[i]) << (word[i] < 0 ? "^-1" : "");
  }
  return out.str();
}

std::size_t braid_strands(const BraidWord& word) {
  std::size_t n = 1;
  for (int letter : word) n = std::max(n, static_cast<std::size_t>(letter < 0 ? -letter : letter) + 1);
  return n;
}

LaurentPoly normalize_writhe(const LaurentPoly& bracket, int writhe) {
  return bracket * twist_scalar(+1).pow(-writhe);
}

}  // namespace skeinalg::skein
