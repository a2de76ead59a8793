#include <doctest.h>

#include "skeinalg/errors.hpp"
#include "skeinalg/io/json_io.hpp"

using namespace skeinalg;
using io::Json;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("rationals") {
  CHECK(io::rational_from_json(Json("-6/4")) == Rational(-3, 2));
  CHECK(io::rational_from_json(Json(7)) == Rational(7));
  CHECK(io::to_json(Rational(5, 3)) == Json("5/3"));
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("x")), ParseError);
}

TEST_CASE("matrices") {
  const QMatrix m = io::matrix_from_json(Json::parse(R"([["1", "2/3"], [0, "-1"]])"));
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == Rational(2, 3));
  CHECK(io::matrix_from_json(reparse(io::to_json(m))) == m);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1"], ["1", "2"]])")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1"]])"), 2, 1), ParseError);
}

TEST_CASE("algebras") {
  const AlgebraPtr m2 = io::builtin_algebra("M2");
  CHECK(m2->dim() == 4);
  const AlgebraPtr back = io::algebra_from_json(reparse(io::to_json(*m2)));
  CHECK(same_algebra(back, m2));
  CHECK(io::builtin_algebra("T2")->dim() == 3);
  CHECK(io::builtin_algebra("P3")->dim() == 3);
  CHECK(io::builtin_algebra("Q7") == nullptr);
  CHECK_THROWS_AS(io::algebra_from_json(Json("Q7")), ParseError);

  Json bad = io::to_json(*io::builtin_algebra("D2"));
  bad["unit"] = Json::array({"1", "0"});
  CHECK_THROWS_AS(io::algebra_from_json(bad), ValidationError);
  bad.erase("mult");
  CHECK_THROWS_AS(io::algebra_from_json(bad), ParseError);
}

TEST_CASE("homomorphisms and bimodules") {
  const AlgebraHom swap = io::hom_from_json(Json::parse(R"({"source": "D2", "target": "D2", "matrix": [[0, 1], [1, 0]]})"));
  const AlgebraHom back = io::hom_from_json(reparse(io::to_json(swap)));
  CHECK(back.matrix == swap.matrix);
  CHECK(same_algebra(back.target, swap.target));

  const PointedBimodule m = modulate(swap);
  CHECK(io::bimodule_from_json(reparse(io::to_json(m))) == m);

  Json broken = io::to_json(m);
  broken["point"] = Json::array({"1"});
  CHECK_THROWS_AS(io::bimodule_from_json(broken), ParseError);

  CHECK_THROWS_AS(io::hom_from_json(Json::parse(R"({"source": "D2", "target": "D2", "matrix": [[1, 1], [0, 1]]})")),
                  ValidationError);
}

TEST_CASE("systems") {
  const tqft::System s = io::system_from_json(Json::parse(R"({
    "dim": 2, "step": [["1", "1"], ["0", "1"]],
    "states": {"0": ["0", "1"]}, "costates": {"0": ["0", "1"]}, "observables": {}})"));
  CHECK(s.dim == 2);
  CHECK(s.states.at("0")[1] == 1);
  const tqft::System back = io::system_from_json(reparse(io::to_json(s)));
  CHECK(back.step == s.step);
  CHECK(back.costates == s.costates);
  CHECK_THROWS(io::system_from_json(Json::parse(R"({"dim": 2, "step": [["1"]]})")));
}

TEST_CASE("laurent polynomials") {
  LaurentPoly p = LaurentPoly::monomial(-3, 2) + LaurentPoly::monomial(4, -1);
  CHECK(io::laurent_from_json(reparse(io::to_json(p))) == p);
  const LaurentPoly big = LaurentPoly::monomial(1, Integer("123456789012345678901234567890"));
  CHECK(io::to_json(big)["1"].is_string());
  CHECK(io::laurent_from_json(reparse(io::to_json(big))) == big);
  CHECK_THROWS_AS(io::laurent_from_json(Json::parse(R"({"x": 1})")), ParseError);
}

TEST_CASE("tangles") {
  const skein::SliceTangle t = io::tangle_from_json(Json::parse(R"({
    "strands_in": 0,
    "slices": [["cup"], {"events": ["id", "cup", "id"]}, ["cross-", {"at": 1}], ["cap", {"at": 0}], ["cap"]]})"));
  CHECK(t.slices.size() == 5);
  CHECK(t.slices[2].size() == 3);
  CHECK(t.closed());
  const skein::SliceTangle back = io::tangle_from_json(reparse(io::to_json(t)));
  CHECK(skein::kauffman_bracket(back) == skein::kauffman_bracket(t));
  CHECK(back.writhe() == t.writhe());

  const skein::TLMorphism e = skein::TLMorphism::generator(2, 0);
  Json coupon = Json::parse(R"({"strands_in": 2, "slices": [["coupon", {"at": 0}]]})");
  coupon["slices"][0][1]["morphism"] = io::to_json(e);
  CHECK(skein::interpret_tangle(io::tangle_from_json(coupon)) == e);
  CHECK(io::tl_morphism_from_json(reparse(io::to_json(e))) == e);

  CHECK_THROWS_AS(io::tangle_from_json(Json::parse(R"({"strands_in": 0, "slices": [["spin"]]})")), ParseError);
  CHECK_THROWS_AS(io::tangle_from_json(Json::parse(R"({"slices": []})")), ParseError);
}
