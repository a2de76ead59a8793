#include "skeinalg/skein/state_sum.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

#include "skeinalg/errors.hpp"

namespace skeinalg::skein {

namespace {

using Node = std::uint32_t;

struct UnionFind {
  std::vector<Node> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Node{0}); }

  Node find(Node x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(Node a, Node b) { parent[find(a)] = find(b); }

  std::size_t components() {
    std::size_t n = 0;
    for (Node i = 0; i < parent.size(); ++i) n += find(i) == i ? 1 : 0;
    return n;
  }
};

struct Crossing {
  Node in0, in1, out0, out1;
  int sign;
};

/// The tangle flattened to a graph: fixed arcs already merged, crossings left open.
struct Skeleton {
  UnionFind base{0};
  std::vector<Crossing> crossings;
  LaurentPoly twist_factor{1};
  std::size_t max_loops = 0;
};

Skeleton build_skeleton(const SliceTangle& tangle) {
  if (!tangle.closed()) throw ShapeError("state sum needs a closed tangle");
  if (tangle.has_coupons()) throw ShapeError("state sum does not accept coupons");
  if (tangle.crossing_count() > kMaxStateSumCrossings) {
    throw ContractViolation("state sum limited to " + std::to_string(kMaxStateSumCrossings) + " crossings");
  }

  // Node (level, position): level 0 is the bottom boundary, level k+1 the outputs of slice k.
  const auto widths = tangle.widths();
  std::vector<Node> offset{0};
  std::size_t width = tangle.strands_in;
  offset.push_back(static_cast<Node>(width));
  for (std::size_t w : widths) offset.push_back(offset.back() + static_cast<Node>(w));

  Skeleton sk;
  sk.base = UnionFind(offset.back());
  sk.max_loops = offset.back() / 2 + 1;
  for (std::size_t k = 0; k < tangle.slices.size(); ++k) {
    Node in = offset[k];
    Node out = offset[k + 1];
    for (const auto& e : tangle.slices[k]) {
      switch (e.kind) {
        case EventKind::id:
          sk.base.unite(in, out);
          break;
        case EventKind::twist_pos:
        case EventKind::twist_neg:
          sk.base.unite(in, out);
          sk.twist_factor = sk.twist_factor * twist_scalar(e.kind == EventKind::twist_pos ? 1 : -1);
          break;
        case EventKind::cup:
          sk.base.unite(out, out + 1);
          break;
        case EventKind::cap:
          sk.base.unite(in, in + 1);
          break;
        case EventKind::cross_pos:
        case EventKind::cross_neg:
          sk.crossings.push_back(Crossing{in, in + 1, out, out + 1, e.crossing_sign()});
          break;
        case EventKind::coupon:
          break;
      }
      in += static_cast<Node>(e.inputs());
      out += static_cast<Node>(e.outputs());
    }
  }
  return sk;
}

/// counts[a_exponent + c][loops] over the given state range.
using Counts = std::vector<std::vector<std::int64_t>>;

Counts empty_counts(const Skeleton& sk) {
  return Counts(2 * sk.crossings.size() + 1, std::vector<std::int64_t>(sk.max_loops + 1, 0));
}

void accumulate_state(const Skeleton& sk, std::uint64_t state, Counts& counts) {
  UnionFind uf = sk.base;
  int exponent = 0;
  for (std::size_t i = 0; i < sk.crossings.size(); ++i) {
    const Crossing& c = sk.crossings[i];
    const bool b_smoothing = (state >> i) & 1U;
    exponent += b_smoothing ? -1 : 1;
    // cross+ smooths to id under A, cross- to e.
    const bool vertical = (c.sign > 0) != b_smoothing;
    if (vertical) {
      uf.unite(c.in0, c.out0);
      uf.unite(c.in1, c.out1);
    } else {
      uf.unite(c.in0, c.in1);
      uf.unite(c.out0, c.out1);
    }
  }
  const auto c = static_cast<int>(sk.crossings.size());
  ++counts[static_cast<std::size_t>(exponent + c)][uf.components()];
}

LaurentPoly assemble(const Skeleton& sk, const Counts& counts) {
  const auto c = static_cast<int>(sk.crossings.size());
  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_powers{LaurentPoly(1)};
  for (std::size_t l = 1; l <= sk.max_loops; ++l) delta_powers.push_back(delta_powers.back() * delta);
  LaurentPoly total;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    for (std::size_t l = 0; l < counts[e].size(); ++l) {
      if (counts[e][l] == 0) continue;
      total = total + LaurentPoly::monomial(static_cast<int>(e) - c, mpz_class(static_cast<long>(counts[e][l]))) *
                          delta_powers[l];
    }
  }
  return total * sk.twist_factor;
}

}  // namespace

LaurentPoly bracket_state_sum_serial(const SliceTangle& tangle) {
  const Skeleton sk = build_skeleton(tangle);
  Counts counts = empty_counts(sk);
  const std::uint64_t states = std::uint64_t{1} << sk.crossings.size();
  for (std::uint64_t s = 0; s < states; ++s) accumulate_state(sk, s, counts);
  return assemble(sk, counts);
}

LaurentPoly bracket_state_sum_parallel(const SliceTangle& tangle) {
#ifdef _OPENMP
  const Skeleton sk = build_skeleton(tangle);
  Counts counts = empty_counts(sk);
  const auto states = static_cast<std::int64_t>(std::uint64_t{1} << sk.crossings.size());
#pragma omp parallel
  {
    Counts local = empty_counts(sk);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < states; ++s) accumulate_state(sk, static_cast<std::uint64_t>(s), local);
#pragma omp critical
    for (std::size_t e = 0; e < counts.size(); ++e)
      for (std::size_t l = 0; l < counts[e].size(); ++l) counts[e][l] += local[e][l];
  }
  return assemble(sk, counts);
#else
  return bracket_state_sum_serial(tangle);
#endif
}

}  // namespace skeinalg::skein
