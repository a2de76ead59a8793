#include <doctest.h>

#include <algorithm>
#include <random>

#include "skeinalg/errors.hpp"
#include "skeinalg/skein/ribbon.hpp"
#include "skeinalg/skein/state_sum.hpp"
#include "skeinalg/skein/tangle.hpp"

using namespace skeinalg;
using namespace skeinalg::skein;

namespace {

LaurentPoly A(int k) { return LaurentPoly::monomial(k); }

const LaurentPoly kDelta = -A(2) - A(-2);

TLDiagram empty_diagram() { return TLDiagram(0, 0, {}); }

/// Brute force: every fixed-point-free involution on n points, kept if no two chords interleave
/// on the circle.
std::size_t count_noncrossing(std::size_t points) {
  std::size_t count = 0;
  std::vector<int> partner(points, -1);
  auto rec = [&](auto&& self) -> void {
    auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
      for (std::size_t a = 0; a < points; ++a)
        for (std::size_t b = 0; b < points; ++b) {
          const auto pa = static_cast<std::size_t>(partner[a]);
          const auto pb = static_cast<std::size_t>(partner[b]);
          if (a < pa && b < pb && a < b && b < pa && pa < pb) return;
        }
      ++count;
      return;
    }
    const auto i = static_cast<std::size_t>(first - partner.begin());
    for (std::size_t j = i + 1; j < points; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = static_cast<int>(j);
      partner[j] = static_cast<int>(i);
      self(self);
      partner[i] = partner[j] = -1;
    }
  };
  rec(rec);
  return count;
}

SliceTangle unknot() { return SliceTangle{0, {{Event::of(EventKind::cup)}, {Event::of(EventKind::cap)}}}; }

TLMorphism random_morphism(std::mt19937_64& rng, std::size_t nb, std::size_t nt) {
  const auto basis = tl_basis(nb, nt);
  TLMorphism m(nb, nt);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> expo(-3, 3);
  for (const auto& d : basis) m.add(d, LaurentPoly::monomial(expo(rng), coeff(rng)) + LaurentPoly(coeff(rng)));
  return m;
}

}  // namespace

TEST_CASE("loop value and twist") {
  CHECK(loop_value() == kDelta);
  CHECK(twist_scalar(1) == -A(3));
  CHECK(twist_scalar(-1) == -A(-3));
}

TEST_CASE("tl_basis sizes") {
  CHECK(tl_basis(1, 1).size() == 1);
  CHECK(tl_basis(2, 0).size() == 1);
  CHECK(tl_basis(3, 3).size() == 5);
  CHECK(tl_basis(3, 2).empty());
  CHECK(tl_basis(0, 0).size() == 1);
  for (std::size_t total = 0; total <= 10; total += 2) {
    const std::size_t brute = count_noncrossing(total);
    for (std::size_t nb = 0; nb <= total; ++nb) CHECK(tl_basis(nb, total - nb).size() == brute);
  }
  CHECK(count_noncrossing(6) == 5);
  CHECK(count_noncrossing(10) == 42);
}

TEST_CASE("tl_basis is sorted and distinct") {
  const auto basis = tl_basis(4, 2);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(TLDiagram(2, 2, {3, 2, 1, 0}), ContractViolation);  // crossing
  CHECK_THROWS_AS(TLDiagram(1, 1, {0, 1}), ContractViolation);
  CHECK(TLDiagram(2, 2, {2, 3, 0, 1}).through_strands() == 2);
  CHECK(TLMorphism::identity(2).terms().begin()->first == TLDiagram(2, 2, {2, 3, 0, 1}));
}

TEST_CASE("tl_compose basics") {
  const TLMorphism e = TLMorphism::generator(2, 0);
  CHECK(tl_compose(e, e) == e * kDelta);
  CHECK(tl_compose(TLMorphism::cup(), TLMorphism::cap()) == TLMorphism::scalar(kDelta));
  std::mt19937_64 rng(7);
  const TLMorphism f = random_morphism(rng, 2, 4);
  CHECK(tl_compose(TLMorphism::identity(2), f) == f);
  CHECK(tl_compose(f, TLMorphism::identity(4)) == f);
  CHECK_THROWS_AS(tl_compose(TLMorphism::identity(2), TLMorphism::identity(3)), ShapeError);
}

TEST_CASE("tl_tensor basics") {
  CHECK(tl_tensor(TLMorphism::identity(1), TLMorphism::identity(1)) == TLMorphism::identity(2));
  CHECK(tl_tensor(TLMorphism::generator(2, 0), TLMorphism::identity(1)) == TLMorphism::generator(3, 0));
  CHECK(tl_tensor(TLMorphism::identity(1), TLMorphism::generator(2, 0)) == TLMorphism::generator(3, 1));
}

TEST_CASE("tl_tensor bilinearity by hand expansion") {
  const TLMorphism id2 = TLMorphism::identity(2);
  const TLMorphism e = TLMorphism::generator(2, 0);
  const TLMorphism f = id2 * A(1) + e * LaurentPoly(3);
  const TLMorphism g = id2 * LaurentPoly(-2) + e * A(-2);
  const TLMorphism expected = tl_tensor(id2, id2) * (A(1) * LaurentPoly(-2)) + tl_tensor(id2, e) * (A(1) * A(-2)) +
                              tl_tensor(e, id2) * LaurentPoly(-6) + tl_tensor(e, e) * (LaurentPoly(3) * A(-2));
  CHECK(tl_tensor(f, g) == expected);
}

TEST_CASE("composition properties on random morphisms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_morphism(rng, 1, 3);
    const auto f2 = random_morphism(rng, 1, 3);
    const auto g = random_morphism(rng, 3, 1);
    const auto h = random_morphism(rng, 1, 3);
    CHECK(tl_compose(tl_compose(f, g), h) == tl_compose(f, tl_compose(g, h)));
    CHECK(tl_compose(f + f2, g) == tl_compose(f, g) + tl_compose(f2, g));
    // interchange
    const auto p = random_morphism(rng, 2, 2);
    const auto q = random_morphism(rng, 2, 2);
    const auto p2 = random_morphism(rng, 2, 2);
    const auto q2 = random_morphism(rng, 2, 2);
    CHECK(tl_compose(tl_tensor(p, q), tl_tensor(p2, q2)) == tl_tensor(tl_compose(p, p2), tl_compose(q, q2)));
  }
}

TEST_CASE("crossing resolution") {
  const TLMorphism id2 = TLMorphism::identity(2);
  const TLMorphism e = TLMorphism::generator(2, 0);
  CHECK(crossing_resolution(1) == id2 * A(1) + e * A(-1));
  CHECK(crossing_resolution(-1) == id2 * A(-1) + e * A(1));
  CHECK(tl_compose(crossing_resolution(1), crossing_resolution(-1)) == id2);
}

TEST_CASE("interpret_tangle examples") {
  CHECK(interpret_tangle(unknot()) == TLMorphism::scalar(kDelta));
  // snake: cup on the right of a strand, then cap on the left
  const SliceTangle snake{1,
                          {{Event::of(EventKind::id), Event::of(EventKind::cup)},
                           {Event::of(EventKind::cap), Event::of(EventKind::id)}}};
  CHECK(interpret_tangle(snake) == TLMorphism::identity(1));
  const SliceTangle twists{1, {{Event::of(EventKind::twist_pos)}, {Event::of(EventKind::twist_neg)}}};
  CHECK(interpret_tangle(twists) == TLMorphism::identity(1));
  const SliceTangle coupon{2, {{Event::make_coupon(TLMorphism::generator(2, 0))}}};
  CHECK(interpret_tangle(coupon) == TLMorphism::generator(2, 0));
}

TEST_CASE("width bookkeeping errors name the slice") {
  const SliceTangle bad{2, {{Event::of(EventKind::cap)}, {Event::of(EventKind::id)}}};
  try {
    interpret_tangle(bad);
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(std::string(e.what()).find("slice 1") != std::string::npos);
  }
}

TEST_CASE("kauffman_bracket") {
  CHECK(kauffman_bracket(unknot()) == kDelta);
  CHECK(kauffman_bracket(unknot().then(unknot())) == kDelta * kDelta);
  // trefoil: hand-expanded 8-state sum, frozen
  const LaurentPoly trefoil = A(7) + A(3) + A(-1) - A(-9);
  CHECK(kauffman_bracket(braid_closure({1, 1, 1}, 2)) == trefoil);
  CHECK(kauffman_bracket(braid_closure({-1, -1, -1}, 2)) == trefoil.mirror());
  CHECK(bracket_state_sum_serial(braid_closure({1, 1, 1}, 2)) == trefoil);
  CHECK_THROWS_AS(kauffman_bracket(braid_to_slices({1}, 2)), ShapeError);
}

TEST_CASE("plane closure") {
  CHECK(plane_closure(TLMorphism::identity(2)) == kDelta * kDelta);
  CHECK(plane_closure(TLMorphism::generator(2, 0)) == kDelta);
  const LaurentPoly sigma = plane_closure(interpret_tangle(braid_to_slices({1}, 2)));
  CHECK(sigma == A(1) * kDelta * kDelta + A(-1) * kDelta);
  CHECK(sigma == -A(3) * kDelta);
  CHECK(sigma == kauffman_bracket(braid_closure({1}, 2)));
}

TEST_CASE("braid_to_slices") {
  CHECK(interpret_tangle(braid_to_slices({}, 2)) == TLMorphism::identity(2));
  CHECK(braid_to_slices({1}, 2).slices.size() == 1);
  CHECK_THROWS_AS(braid_to_slices({3}, 3), ShapeError);
  CHECK_THROWS_AS(braid_to_slices({0}, 3), ShapeError);
  CHECK(parse_braid("s1 s2^-1  s1") == BraidWord{1, -2, 1});
  CHECK(braid_to_string({1, -2}) == "s1 s2^-1");
  CHECK_THROWS_AS(parse_braid("s0"), ParseError);
  CHECK_THROWS_AS(parse_braid("t1"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^2"), ParseError);
  CHECK(braid_strands({1, -3}) == 4);
}

TEST_CASE("writhe normalization") {
  const auto t = braid_closure({1, 1, 1}, 2);
  CHECK(t.writhe() == 3);
  const LaurentPoly n = normalize_writhe(kauffman_bracket(t), t.writhe());
  CHECK(n == (A(7) + A(3) + A(-1) - A(-9)) * -A(-9));
}

TEST_CASE("annulus closure") {
  CHECK(annulus_closure_eval(TLMorphism::identity(1)) == AnnularClass::z_power(1));
  CHECK(annulus_closure_eval(TLMorphism::identity(2)) == AnnularClass::z_power(2));
  CHECK(annulus_closure_eval(TLMorphism::generator(2, 0)) == AnnularClass::z_power(0, kDelta));
  CHECK(annulus_closure_eval(TLMorphism::identity(0)) == AnnularClass::z_power(0));
}

TEST_CASE("state sum agrees with the compositional evaluator") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    BraidWord w;
    const std::size_t len = rng() % 9;
    for (std::size_t i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % (n - 1));
      w.push_back(rng() % 2 ? g : -g);
    }
    const auto t = braid_closure(w, n);
    const LaurentPoly direct = kauffman_bracket(t);
    CHECK(bracket_state_sum_serial(t) == direct);
    CHECK(bracket_state_sum_parallel(t) == direct);
  }
  SliceTangle twisted = unknot();
  twisted.slices.insert(twisted.slices.begin() + 1, Slice{Event::of(EventKind::twist_pos), Event::of(EventKind::id)});
  CHECK(bracket_state_sum_serial(twisted) == -A(3) * kDelta);
  CHECK(kauffman_bracket(twisted) == -A(3) * kDelta);
}

TEST_CASE("state sum rejects coupons and open tangles") {
  CHECK_THROWS_AS(bracket_state_sum_serial(braid_to_slices({1}, 2)), ShapeError);
  SliceTangle c{0, {{Event::make_coupon(TLMorphism::cup())}, {Event::of(EventKind::cap)}}};
  CHECK_THROWS_AS(bracket_state_sum_serial(c), ShapeError);
}

TEST_CASE("kinks evaluate to the twist scalar") {
  CHECK(interpret_tangle(right_kink()) == TLMorphism::identity(1) * -A(3));
  CHECK(interpret_tangle(left_kink()) == TLMorphism::identity(1) * -A(3));
  CHECK(cabled_right_kink().crossing_count() == 4);
  CHECK(cabled_right_kink().strands_out() == 2);
}

TEST_CASE("ribbon axioms") {
  const IdentityReport r = ribbon_axiom_checks(4);
  INFO(r.describe_failures());
  CHECK(r.ok());
  CHECK(r.checks.size() == 3 + 12 + 3);
  CHECK_THROWS_AS(ribbon_axiom_checks(5), ContractViolation);
  CHECK_NOTHROW(ribbon_axiom_checks(5, 5));
}

TEST_CASE("full twist of two strands by hand") {
  // (A id + A^-1 e)^2 = A^2 id + (2 + A^-2 delta) e, times the two twist scalars
  const TLMorphism id2 = TLMorphism::identity(2);
  const TLMorphism e = TLMorphism::generator(2, 0);
  const TLMorphism beta2 = id2 * A(2) + e * (LaurentPoly(2) + A(-2) * kDelta);
  const TLMorphism expected = beta2 * A(6);
  CHECK(interpret_tangle(cabled_right_kink()) == expected);
}

TEST_CASE("TL relations") {
  const IdentityReport r = tl_relation_checks(5);
  INFO(r.describe_failures());
  CHECK(r.ok());
  CHECK_FALSE(r.checks.empty());
}

TEST_CASE("oriented writhe") {
  // Curl made by crossing the two legs of a cup on one strand of the unknot.
  SliceTangle curl{0, {{Event::of(EventKind::cup)},
                       {Event::of(EventKind::id), Event::of(EventKind::cup), Event::of(EventKind::id)},
                       padded(Event::of(EventKind::cross_pos), 1, 4),
                       padded(Event::of(EventKind::cap), 2, 4),
                       {Event::of(EventKind::cap)}}};
  CHECK(curl.writhe() == 1);
  CHECK(curl.oriented_writhe() == -1);
  CHECK(kauffman_bracket(curl) == loop_value() * twist_scalar(-1));
  CHECK(normalize_writhe(kauffman_bracket(curl), curl.oriented_writhe()) == loop_value());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    BraidWord word;
    for (int k = 0; k < 4 && n > 1; ++k) {
      const int g = 1 + static_cast<int>(rng() % (n - 1));
      word.push_back(rng() % 2 ? g : -g);
    }
    const SliceTangle closed = braid_closure(word, n);
    CHECK(closed.oriented_writhe() == closed.writhe());
    const LaurentPoly invariant = normalize_writhe(kauffman_bracket(closed), closed.oriented_writhe());
    // Splice a curl into strand 0 just above the cups.
    const std::size_t w = 2 * n;
    SliceTangle kinked{0, {}};
    kinked.slices.assign(closed.slices.begin(), closed.slices.begin() + static_cast<long>(n));
    Slice open{Event::of(EventKind::id), Event::of(EventKind::cup)};
    open.insert(open.end(), w - 1, Event::of(EventKind::id));
    kinked.slices.push_back(open);
    // Either strand 0 crosses the left leg, or the legs cross each other; the cap then joins the other pair.
    const std::size_t at = rng() % 2;
    kinked.slices.push_back(padded(Event::of(rng() % 2 ? EventKind::cross_pos : EventKind::cross_neg), at, w + 2));
    kinked.slices.push_back(padded(Event::of(EventKind::cap), 1 - at, w + 2));
    kinked.slices.insert(kinked.slices.end(), closed.slices.begin() + static_cast<long>(n), closed.slices.end());
    CHECK(normalize_writhe(kauffman_bracket(kinked), kinked.oriented_writhe()) == invariant);
  }
}
