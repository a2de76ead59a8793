#include <doctest.h>

#include <random>

#include "skeinalg/algebra/end.hpp"
#include "skeinalg/errors.hpp"
#include "skeinalg/tqft/tqft.hpp"

using namespace skeinalg;
using namespace skeinalg::tqft;

namespace {

Rational q(long p) { return Rational(p); }

System example_system() {
  System s;
  s.dim = 2;
  s.step = QMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}});
  s.states["0"] = {q(0), q(1)};
  s.costates["0"] = {q(0), q(1)};
  s.observables["n"] = QMatrix::from_rows({{q(2), q(0)}, {q(1), q(-1)}});
  return s;
}

System singular_system() {
  System s = example_system();
  s.step = QMatrix::from_rows({{q(1), q(0)}, {q(0), q(0)}});
  s.states["1"] = {q(1), q(3)};
  s.costates["1"] = {q(-2), q(1)};
  return s;
}

}  // namespace

TEST_CASE("parse_word") {
  const SpacetimeWord w = parse_word("w[0] . u(2) . v[0]");
  CHECK(w.size() == 3);
  CHECK(w.closed());
  CHECK(to_string(w) == "w[0].u(2).v[0]");
  CHECK_THROWS_AS(parse_word("v[0] . v[0]"), ComposabilityError);
  const SpacetimeWord uu = parse_word("u(1).u(2)");
  CHECK(uu.source() == Boundary::point);
  CHECK(uu.target() == Boundary::point);
  CHECK_THROWS_AS(parse_word("u(0)"), ParseError);
  CHECK_THROWS_AS(parse_word("u(-1)"), ParseError);
  CHECK_THROWS_AS(parse_word("x[0]"), ParseError);
  CHECK_THROWS_AS(parse_word("u(1)."), ParseError);
  CHECK(parse_word("  ").empty());
  try {
    parse_word("u(1).q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("eval_schrodinger") {
  const System s = example_system();
  CHECK(eval_schrodinger(s, parse_word("u(1).u(2)")) == eval_schrodinger(s, parse_word("u(3)")));
  CHECK(eval_schrodinger(s, parse_word("u(3)")) == s.step * s.step * s.step);
  CHECK(eval_schrodinger(s, SpacetimeWord()) == QMatrix::identity(2));
  CHECK(eval_schrodinger(s, parse_word("w[0].u(1).v[0]"))(0, 0) == 1);
  CHECK_THROWS_AS(eval_schrodinger(s, parse_word("w[0].v[7]")), LabelError);
}

TEST_CASE("eval_heisenberg") {
  const System s = example_system();
  CHECK(eval_heisenberg(s, SpacetimeWord()) == regular_bimodule(matrix_algebra(2)));
  const PointedBimodule v = eval_heisenberg(s, parse_word("v[0]"));
  CHECK(v == state_module(s.states.at("0")));
  const PointedBimodule closed = eval_heisenberg(s, parse_word("w[0].u(1).v[0]"));
  CHECK(closed.dim() == 1);
  CHECK(closed.pointing()[0] == 1);
  CHECK(bimodule_iso_pointed(eval_heisenberg(s, parse_word("u(1).u(2)")), eval_heisenberg(s, parse_word("u(3)")))
            .has_value());
  CHECK_THROWS_AS(eval_heisenberg(s, parse_word("a[zz]")), LabelError);
}

TEST_CASE("compare_pictures") {
  const System s = example_system();
  const auto plain = compare_pictures(s, parse_word("w[0].v[0]"));
  CHECK(plain.agree);
  CHECK(plain.schrodinger == 1);
  const System z = singular_system();
  for (const char* text : {"w[1].u(1).v[1]", "w[1].a[n].u(2).v[0]", "w[0].u(1).a[n].u(1).v[1]"}) {
    const auto r = compare_pictures(z, parse_word(text));
    CHECK(r.agree);
  }
  CHECK_THROWS_AS(compare_pictures(s, parse_word("u(1)")), ContractViolation);
}

TEST_CASE("functoriality on splits") {
  const System z = singular_system();
  const SpacetimeWord left = parse_word("w[1].a[n]");
  const SpacetimeWord right = parse_word("u(2).v[1]");
  const SpacetimeWord whole = left.then_after(right);
  CHECK(eval_schrodinger(z, whole) == eval_schrodinger(z, left) * eval_schrodinger(z, right));
  const PointedBimodule composed = tensor_over(eval_heisenberg(z, left), eval_heisenberg(z, right));
  CHECK(bimodule_iso_pointed(composed, eval_heisenberg(z, whole)).has_value());
}

TEST_CASE("disjoint unions multiply") {
  const System z = singular_system();
  const std::vector<SpacetimeWord> words{parse_word("w[1].v[1]"), parse_word("w[0].u(1).v[1]")};
  const Rational expected = eval_schrodinger(z, words[0])(0, 0) * eval_schrodinger(z, words[1])(0, 0);
  CHECK(eval_disjoint_schrodinger(z, words) == expected);
  CHECK(eval_disjoint_heisenberg(z, words) == expected);
}

TEST_CASE("projective rescaling") {
  System s = singular_system();
  const Rational before = eval_schrodinger(s, parse_word("w[1].u(2).v[1]"))(0, 0);
  s.states["1"] = {q(3), q(9)};
  s.costates["1"] = {Rational(-1), Rational(1, 2)};
  s.step = s.step * Rational(5);
  const Rational after = eval_schrodinger(s, parse_word("w[1].u(2).v[1]"))(0, 0);
  CHECK(after == before * 3 * Rational(1, 2) * 25);
  CHECK(compare_pictures(s, parse_word("w[1].u(2).v[1]")).heisenberg == after);
}

TEST_CASE("validate") {
  System s = example_system();
  CHECK_NOTHROW(validate(s));
  s.states["bad"] = {q(1)};
  CHECK_THROWS_AS(validate(s), ValidationError);
  System zero;
  CHECK_THROWS_AS(validate(zero), ValidationError);
}

TEST_CASE("system from Heisenberg data") {
  const auto m2 = matrix_algebra(2);
  HeisenbergData id{m2, identity_hom(m2), {}, {}, {}};
  const HeisenbergTable t = system_from_heisenberg_data(id, 3);
  REQUIRE(t.evolution.size() == 3);
  for (const auto& b : t.evolution) CHECK(bimodule_iso_pointed(b, regular_bimodule(m2)).has_value());

  const QMatrix u = QMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}});
  HeisenbergData conj{m2, conjugation_hom(u), {}, {}, {}};
  const QVec e1{q(1), q(0)};
  conj.left_ideals["ann"] = annihilator_left(2, e1);
  conj.elements["u"] = flatten(u);
  const HeisenbergTable c = system_from_heisenberg_data(conj, 2);
  CHECK(bimodule_iso_pointed(c.evolution[0], end_morphism(u)).has_value());
  CHECK(bimodule_iso_pointed(c.evolution[1], end_morphism(u * u)).has_value());
  CHECK(c.left_ideals.at("ann").dim() == 2);
  CHECK(c.left_ideals.at("ann").pointing() != QVec(2, q(0)));
  CHECK(c.elements.at("u") == regular_bimodule(m2, flatten(u)));
}
