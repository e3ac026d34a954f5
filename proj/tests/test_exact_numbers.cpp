#include <random>

#include "cuspcount/perturbed.hpp"
#include "doctest.h"

using namespace cuspcount;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

PerturbedRational pr(std::initializer_list<Rational> cs) {
  return PerturbedRational(std::vector<Rational>(cs));
}

// Sampling oracle: floor(x/y) stabilizes once d is below every breakpoint of
// the quotient. Evaluates at d = 10^-t for growing t and requires agreement.
Int sampled_floor(const PerturbedRational& x, const PerturbedRational& y) {
  Int last = 0;
  bool have = false;
  for (int t = 12; t <= 24; t += 6) {
    Rational d(Int(1), boost::multiprecision::pow(Int(10), t));
    Rational q = x.eval(d) / y.eval(d);
    Int f = q.floor();
    if (have && f != last) have = false;
    if (!have) {
      last = f;
      have = true;
      continue;
    }
    return f;
  }
  return last;
}

std::mt19937 rng(20260815);

Rational random_rat(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return Rational(Int(num(rng)), Int(den(rng)));
}

PerturbedRational random_pr(int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(random_rat(12, 8));
  return PerturbedRational(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(rat(4, 6) == rat(2, 3));
  CHECK(rat(-4, -6) == rat(2, 3));
  CHECK(rat(4, -6) == rat(-2, 3));
  CHECK(rat(0, 5) == rat(0));
  CHECK(rat(0).den() == 1);
  CHECK((rat(1, 2) + rat(1, 3)) == rat(5, 6));
  CHECK((rat(1, 2) * rat(2, 5)) == rat(1, 5));
  CHECK((rat(1, 2) / rat(3, 4)) == rat(2, 3));
  CHECK(rat(7, 2).floor() == 3);
  CHECK(rat(-7, 2).floor() == -4);
  CHECK(rat(-6, 2).floor() == -3);
  CHECK(rat(51, 23).str() == "51/23");
  CHECK(rat(-3).str() == "-3");
  CHECK(Rational::parse("51/23") == rat(51, 23));
  CHECK(Rational::parse("-7/14") == rat(-1, 2));
  CHECK(Rational::parse("5") == rat(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
  CHECK(rat(1, 3).decimal(6) == "0.333333");
  CHECK(rat(-1, 3).decimal(3) == "-0.333");
  CHECK(rat(2).decimal(2) == "2.00");
}

TEST_CASE("perturbed canonical form and arithmetic") {
  PerturbedRational a = pr({rat(3), rat(1)});             // 3 + d
  PerturbedRational b = pr({rat(2), rat(-1)});            // 2 - d
  CHECK((a + b) == PerturbedRational(5));
  CHECK((a + b).degree() == 0);
  PerturbedRational c = pr({rat(3), rat(-1)});            // 3 - d
  CHECK((a * c) == pr({rat(9), rat(0), rat(-1)}));        // 9 - d^2
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(PerturbedRational().str() == "0");
  CHECK(a.str() == "3+1*eps");
  CHECK(c.str() == "3-1*eps");
  CHECK(pr({rat(0), rat(0), rat(-2, 3)}).str() == "-2/3*eps^2");
  CHECK(pr({rat(1, 2)}).str() == "1/2");
  CHECK(a.div_rational(rat(2)) == pr({rat(3, 2), rat(1, 2)}));
}

TEST_CASE("perturbed order: delta below every positive rational") {
  PerturbedRational d = PerturbedRational::delta();
  CHECK(d > PerturbedRational(0));
  CHECK(d < PerturbedRational(rat(1, 1000000)));
  CHECK(PerturbedRational::delta(2) < d);
  CHECK(pr({rat(3)}) < pr({rat(3), rat(1)}));
  CHECK(pr({rat(3), rat(1)}) < pr({rat(3), rat(2)}));
  CHECK(pr({rat(3), rat(2)}) < pr({rat(4), rat(-5)}));
  CHECK(pr({rat(6)}) < pr({rat(6), rat(2)}));
}

TEST_CASE("order agrees with evaluation at small delta") {
  for (int trial = 0; trial < 300; ++trial) {
    PerturbedRational x = random_pr(3), y = random_pr(3);
    int c = x.cmp(y);
    Rational d(Int(1), boost::multiprecision::pow(Int(10), 24));
    int ce = x.eval(d).cmp(y.eval(d));
    CHECK(c == ce);
  }
}

TEST_CASE("arithmetic agrees with evaluation") {
  Rational d = rat(3, 7);
  for (int trial = 0; trial < 200; ++trial) {
    PerturbedRational x = random_pr(3), y = random_pr(3);
    CHECK((x + y).eval(d) == x.eval(d) + y.eval(d));
    CHECK((x - y).eval(d) == x.eval(d) - y.eval(d));
    CHECK((x * y).eval(d) == x.eval(d) * y.eval(d));
  }
}

TEST_CASE("floor_ratio pinned values") {
  PerturbedRational six(6), seven(7), three(3);
  PerturbedRational three_plus = pr({rat(3), rat(1)});
  PerturbedRational three_minus = pr({rat(3), rat(-1)});
  CHECK(floor_ratio(six, three_plus) == 1);
  CHECK(floor_ratio(six, three_minus) == 2);
  CHECK(floor_ratio(seven, three) == 2);
  CHECK(floor_ratio(pr({rat(6), rat(1)}), three) == 2);
  CHECK(floor_ratio(pr({rat(6), rat(-1)}), three) == 1);
  CHECK(floor_ratio(six, three) == 2);
  CHECK(floor_ratio(pr({rat(-6), rat(1)}), three) == -2);
  CHECK(floor_ratio(pr({rat(-6), rat(-1)}), three) == -3);
}

TEST_CASE("floor_ratio domain errors") {
  PerturbedRational six(6);
  CHECK_THROWS_AS(floor_ratio(six, PerturbedRational(-1)), DomainError);
  CHECK_THROWS_AS(floor_ratio(six, PerturbedRational(0)), DomainError);
  CHECK_THROWS_AS(floor_ratio(six, pr({rat(-1), rat(1)})), DomainError);
  CHECK_THROWS_AS(floor_ratio(six, PerturbedRational::delta(2)),
                  UnsupportedDegree);
  CHECK_THROWS_AS(floor_ratio(PerturbedRational::delta(2), six),
                  UnsupportedDegree);
}

TEST_CASE("floor_quotient handles vanishing constant terms") {
  PerturbedRational d = PerturbedRational::delta();
  PerturbedRational d2 = PerturbedRational::delta(2);
  CHECK(floor_quotient(d2, d) == 0);
  CHECK(floor_quotient(-d2, d) == -1);
  CHECK(floor_quotient(d * PerturbedRational(3), d * PerturbedRational(2)) == 1);
  CHECK_THROWS_AS(floor_quotient(PerturbedRational(1), d), DomainError);
  CHECK_THROWS_AS(floor_quotient(d, d2), DomainError);
  CHECK(floor_quotient(PerturbedRational(), d) == 0);
}

TEST_CASE("floor_ratio matches sampling oracle on degree <= 1") {
  int done = 0;
  while (done < 400) {
    PerturbedRational x = random_pr(1), y = random_pr(1);
    if (y.sign() <= 0 || y.constant_term().is_zero()) continue;
    CHECK(floor_ratio(x, y) == sampled_floor(x, y));
    ++done;
  }
}

TEST_CASE("floor_quotient matches sampling oracle on degree <= 3") {
  int done = 0;
  while (done < 400) {
    PerturbedRational x = random_pr(3), y = random_pr(3);
    if (y.sign() <= 0 || y.constant_term().is_zero()) continue;
    CHECK(floor_quotient(x, y) == sampled_floor(x, y));
    ++done;
  }
}

TEST_CASE("ceil_quotient") {
  PerturbedRational six(6);
  PerturbedRational three_plus = pr({rat(3), rat(1)});
  PerturbedRational three_minus = pr({rat(3), rat(-1)});
  CHECK(ceil_quotient(six, three_plus) == 2);
  CHECK(ceil_quotient(six, three_minus) == 3);
  CHECK(ceil_quotient(pr({rat(6), rat(1)}), PerturbedRational(3)) == 3);
  CHECK(ceil_quotient(PerturbedRational(7), PerturbedRational(3)) == 3);
}
