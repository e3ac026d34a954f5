#include <string>
#include <vector>

#include "cuspcount/errors.hpp"
#include "cuspcount/serialize.hpp"
#include "doctest.h"

using namespace cuspcount;

namespace {

PerturbedRational pr(std::vector<Rational> coeffs) {
  return PerturbedRational(std::move(coeffs));
}

}  // namespace

TEST_CASE("shape grammar accepts the documented forms") {
  const EllipsoidShape plain = parse_shape("8,13,22");
  REQUIRE(plain.n() == 3);
  CHECK(plain.entry(1) == PerturbedRational(8));
  CHECK(plain.entry(3) == PerturbedRational(22));

  const EllipsoidShape up = parse_shape("2,3+");
  CHECK(up.entry(2) == pr({Rational(3), Rational(1)}));

  const EllipsoidShape down = parse_shape("2,3-");
  CHECK(down.entry(2) == pr({Rational(3), Rational(-1)}));

  const EllipsoidShape one_eight = parse_shape("1,8+");
  CHECK(one_eight.entry(1) == PerturbedRational(1));
  CHECK(one_eight.entry(2) == pr({Rational(8), Rational(1)}));

  const EllipsoidShape frac = parse_shape("51/23,2");
  CHECK(frac.entry(1) == PerturbedRational(Rational(Int(51), Int(23))));

  const EllipsoidShape terms = parse_shape("2, 3 + 2*eps");
  CHECK(terms.entry(2) == pr({Rational(3), Rational(2)}));

  const EllipsoidShape nested = parse_shape("1,1+1*eps,1+1*eps^2");
  CHECK(nested.entry(2) == pr({Rational(1), Rational(1)}));
  CHECK(nested.entry(3) == pr({Rational(1), Rational(0), Rational(1)}));

  const EllipsoidShape mixed = parse_shape("4-1/2*eps+1*eps^3");
  CHECK(mixed.entry(1) == pr({Rational(4), Rational(-1, 2), Rational(0),
                              Rational(1)}));
}

TEST_CASE("shape grammar rejects malformed text") {
  CHECK_THROWS_AS(parse_shape(""), ParseError);
  CHECK_THROWS_AS(parse_shape("2,,3"), ParseError);
  CHECK_THROWS_AS(parse_shape("2,3++"), ParseError);
  CHECK_THROWS_AS(parse_shape("abc"), ParseError);
  CHECK_THROWS_AS(parse_shape("2;3"), ParseError);
  CHECK_THROWS_AS(parse_shape("3+2eps"), ParseError);
  CHECK_THROWS_AS(parse_shape("3+2*delta"), ParseError);
  CHECK_THROWS_AS(parse_shape("3+1*eps^0"), ParseError);
  CHECK_THROWS_AS(parse_shape("3+1*eps^200"), ParseError);
  CHECK_THROWS_AS(parse_shape("1/"), ParseError);

  try {
    parse_shape("2,3x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_shape("0,1"), DomainError);
}

TEST_CASE("class spec grammar") {
  CHECK(parse_class_spec("5l-2e") == std::make_pair(5LL, -2LL));
  CHECK(parse_class_spec("l") == std::make_pair(1LL, 0LL));
  CHECK(parse_class_spec("2L") == std::make_pair(2LL, 0LL));
  CHECK(parse_class_spec("l+e") == std::make_pair(1LL, 1LL));
  CHECK(parse_class_spec("-e") == std::make_pair(0LL, -1LL));
  CHECK(parse_class_spec(" 3 l - 2 e ") == std::make_pair(3LL, -2LL));

  CHECK_THROWS_AS(parse_class_spec(""), ParseError);
  CHECK_THROWS_AS(parse_class_spec("5x"), ParseError);
  CHECK_THROWS_AS(parse_class_spec("5l-"), ParseError);
  CHECK_THROWS_AS(parse_class_spec("le"), ParseError);
}

TEST_CASE("perturbed values round trip through json") {
  const PerturbedRational v =
      pr({Rational(Int(51), Int(23)), Rational(1)});
  const OrderedJson j = perturbed_to_json(v);
  CHECK(j.dump() == R"({"coeffs":["51/23","1"]})");
  CHECK(perturbed_from_json(j) == v);

  const PerturbedRational zero;
  CHECK(perturbed_to_json(zero).dump() == R"({"coeffs":[]})");
  CHECK(perturbed_from_json(perturbed_to_json(zero)) == zero);

  CHECK_THROWS_AS(perturbed_from_json(OrderedJson::array()), ParseError);
  CHECK_THROWS_AS(perturbed_from_json(OrderedJson{{"coeffs", 3}}), ParseError);
  OrderedJson bad{{"coeffs", OrderedJson::array({1, 2})}};
  CHECK_THROWS_AS(perturbed_from_json(bad), ParseError);
}

TEST_CASE("shapes round trip through json") {
  const EllipsoidShape a = parse_shape("2,3+,7/2");
  const OrderedJson j = shape_to_json(a);
  const EllipsoidShape b = shape_from_json(j);
  REQUIRE(b.n() == a.n());
  for (int axis = 1; axis <= a.n(); ++axis) {
    CHECK(a.entry(axis) == b.entry(axis));
  }
  CHECK(j.dump() ==
        R"([{"coeffs":["2"]},{"coeffs":["3","1"]},{"coeffs":["7/2"]}])");
  CHECK_THROWS_AS(shape_from_json(OrderedJson::object()), ParseError);
}

TEST_CASE("orbits round trip through json") {
  ReebOrbit o;
  o.axis = 3;
  o.mult = 1;
  const OrderedJson j = orbit_to_json(o);
  CHECK(j.dump() == R"({"axis":3,"mult":1})");
  CHECK(orbit_from_json(j) == o);

  CHECK_THROWS_AS(orbit_from_json(OrderedJson{{"axis", 1}}), ParseError);
  CHECK_THROWS_AS(orbit_from_json(OrderedJson{{"axis", 0}, {"mult", 1}}),
                  ParseError);
  CHECK_THROWS_AS(orbit_from_json(OrderedJson{{"axis", 1}, {"mult", "2"}}),
                  ParseError);
}
