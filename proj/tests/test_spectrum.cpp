#include "cuspcount/spectrum.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace cuspcount;
using cusptest::exhaustive_delta_path;
using cusptest::random_tiefree_shape;
using cusptest::sorted_multiples;

namespace {

PerturbedRational pr(std::initializer_list<Rational> cs) {
  return PerturbedRational(std::vector<Rational>(cs));
}

EllipsoidShape shape(std::initializer_list<PerturbedRational> es) {
  return EllipsoidShape(std::vector<PerturbedRational>(es));
}

EllipsoidShape two_three_plus() {
  return shape({PerturbedRational(2), pr({Rational(3), Rational(1)})});
}

EllipsoidShape q_p_perturbed(long long q, long long p, int sign) {
  return shape({PerturbedRational(q), pr({Rational(p), Rational(sign)})});
}

std::mt19937 rng(987654321);

}  // namespace

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(shape({}), DomainError);
  CHECK_THROWS_AS(shape({PerturbedRational(0)}), DomainError);
  CHECK_THROWS_AS(shape({PerturbedRational(2), PerturbedRational(-1)}),
                  DomainError);
  // An entry of bare eps is positive in the infinitesimal order.
  CHECK_NOTHROW(shape({PerturbedRational::delta(), PerturbedRational(1)}));
  EllipsoidShape a = two_three_plus();
  CHECK(a.n() == 2);
  CHECK_THROWS_AS(a.entry(0), DomainError);
  CHECK_THROWS_AS(a.entry(3), DomainError);
}

TEST_CASE("action") {
  EllipsoidShape a = two_three_plus();
  CHECK(action(a, {1, 3}) == PerturbedRational(6));
  CHECK(action(a, {2, 2}) == pr({Rational(6), Rational(2)}));
  CHECK_THROWS_AS(action(a, {3, 1}), DomainError);
  CHECK_THROWS_AS(action(a, {1, 0}), DomainError);
}

TEST_CASE("capacity table for (2, 3+eps)") {
  EllipsoidShape a = two_three_plus();
  std::vector<PerturbedRational> want = {
      PerturbedRational(2), pr({Rational(3), Rational(1)}),
      PerturbedRational(4), PerturbedRational(6),
      pr({Rational(6), Rational(2)}), PerturbedRational(8)};
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(capacity(a, static_cast<long long>(i + 1)) == want[i]);
}

TEST_CASE("orbit_at table for (2, 3+eps)") {
  EllipsoidShape a = two_three_plus();
  std::vector<ReebOrbit> want = {{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 2}, {1, 4}};
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(orbit_at(a, static_cast<long long>(i + 1)) == want[i]);
}

TEST_CASE("capacity at p+q-1 for perturbed (q, p) shapes") {
  struct Case {
    long long p, q;
  } cases[] = {{3, 2}, {5, 3}, {7, 2}, {13, 8}, {2, 1}};
  for (auto [p, q] : cases) {
    CAPTURE(p);
    CAPTURE(q);
    EllipsoidShape plus = q_p_perturbed(q, p, +1);
    EllipsoidShape minus = q_p_perturbed(q, p, -1);
    CHECK(capacity(plus, p + q - 1) == PerturbedRational(p * q));
    CHECK(orbit_at(plus, p + q - 1) == ReebOrbit{1, p});
    CHECK(capacity(minus, p + q - 1) ==
          pr({Rational(p * q), Rational(-q)}));
    CHECK(orbit_at(minus, p + q - 1) == ReebOrbit{2, q});
  }
}

TEST_CASE("(8,13,22) spectrum head") {
  EllipsoidShape a = shape(
      {PerturbedRational(8), PerturbedRational(13), PerturbedRational(22)});
  CHECK(capacity(a, 1) == PerturbedRational(8));
  CHECK(capacity(a, 2) == PerturbedRational(13));
  CHECK(capacity(a, 3) == PerturbedRational(16));
  CHECK(capacity(a, 4) == PerturbedRational(22));
  CHECK(orbit_at(a, 4) == ReebOrbit{3, 1});
}

TEST_CASE("ties are detected lazily") {
  EllipsoidShape a =
      shape({PerturbedRational(1), PerturbedRational(2)});
  CHECK(capacity(a, 1) == PerturbedRational(1));
  CHECK_THROWS_AS(capacity(a, 2), TieInSpectrum);
  CHECK_THROWS_AS(orbit_at(a, 2), TieInSpectrum);

  EllipsoidShape b =
      shape({PerturbedRational(2), PerturbedRational(4), PerturbedRational(7)});
  CHECK(capacity(b, 1) == PerturbedRational(2));
  CHECK_THROWS_AS(capacity(b, 3), TieInSpectrum);

  // Same integers, perturbed apart: no tie anywhere.
  EllipsoidShape c = shape({PerturbedRational(2),
                            pr({Rational(4), Rational(1)}),
                            PerturbedRational(7)});
  CHECK(capacity(c, 3) == pr({Rational(4), Rational(1)}));
}

TEST_CASE("capacity matches sort oracle on random tie-free shapes") {
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    EllipsoidShape a = random_tiefree_shape(rng, n);
    auto sorted = sorted_multiples(a, 30);
    for (long long k = 1; k <= 30; ++k)
      CHECK(capacity(a, k) == sorted[static_cast<size_t>(k) - 1]);
  }
}

TEST_CASE("rank_of inverts orbit_at") {
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    EllipsoidShape a = random_tiefree_shape(rng, n);
    for (long long k = 1; k <= 25; ++k)
      CHECK(rank_of(a, orbit_at(a, k)) == k);
  }
  EllipsoidShape t = shape({PerturbedRational(1), PerturbedRational(2)});
  CHECK_THROWS_AS(rank_of(t, {1, 2}), TieInSpectrum);
}

TEST_CASE("delta_path table for (2, 3+eps)") {
  EllipsoidShape a = two_three_plus();
  std::vector<LatticeTuple> want = {{1, 1}, {2, 1}, {2, 2}, {3, 2},
                                    {4, 2}, {4, 3}, {5, 3}, {5, 4}};
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(delta_path(a, static_cast<long long>(i + 1)) == want[i]);
}

TEST_CASE("delta_path single axis") {
  EllipsoidShape a = shape({pr({Rational(5), Rational(1)})});
  CHECK(delta_path(a, 1) == LatticeTuple{1});
  CHECK(delta_path(a, 7) == LatticeTuple{7});
}

TEST_CASE("delta_path matches exhaustive oracle") {
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 3;
    EllipsoidShape a = random_tiefree_shape(rng, n);
    for (long long k = 1; k <= 12; ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(delta_path(a, k) == exhaustive_delta_path(a, k));
    }
  }
}

TEST_CASE("delta_path duality with the spectrum") {
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    EllipsoidShape a = random_tiefree_shape(rng, n);
    for (long long k = 1; k <= 12; ++k) {
      LatticeTuple v = delta_path(a, k);
      PerturbedRational m = action(a, {1, v[0]});
      for (int s = 2; s <= n; ++s) {
        PerturbedRational w = action(a, {s, v[static_cast<size_t>(s) - 1]});
        if (w < m) m = w;
      }
      CHECK(m == capacity(a, k));
    }
  }
}

TEST_CASE("delta_path ambiguity") {
  EllipsoidShape a = shape({PerturbedRational(1), PerturbedRational(1)});
  CHECK(delta_path(a, 1) == LatticeTuple{1, 1});
  CHECK_THROWS_AS(delta_path(a, 2), AmbiguousMaximizer);
}

TEST_CASE("orbit_from_negative_tuple") {
  EllipsoidShape a = shape(
      {PerturbedRational(8), PerturbedRational(13), PerturbedRational(22)});
  CHECK(orbit_from_negative_tuple(a, {3, 2, 1}) == ReebOrbit{3, 1});
  CHECK(orbit_from_negative_tuple(a, {1, 1, 1}) == ReebOrbit{1, 1});
  EllipsoidShape b = two_three_plus();
  CHECK(orbit_from_negative_tuple(b, {2, 1}) == ReebOrbit{2, 1});
  EllipsoidShape c = shape({PerturbedRational(2), PerturbedRational(3)});
  CHECK_THROWS_AS(orbit_from_negative_tuple(c, {3, 2}), AmbiguousMinimizer);
  CHECK_THROWS_AS(orbit_from_negative_tuple(a, {1, 1}), DomainError);
  CHECK_THROWS_AS(orbit_from_negative_tuple(a, {1, 0, 1}), DomainError);
}

TEST_CASE("cz_index pinned values") {
  EllipsoidShape a = two_three_plus();
  CHECK(cz_index(a, {1, 1}) == 3);
  CHECK(cz_index(a, {1, 2}) == 7);
  CHECK(cz_index(a, {1, 3}) == 9);
  CHECK(cz_index(a, {2, 1}) == 5);

  EllipsoidShape b = shape(
      {PerturbedRational(8), PerturbedRational(13), PerturbedRational(22)});
  CHECK(cz_index(b, {3, 1}) == 10);
}

TEST_CASE("cz_index on the doubly perturbed round shape") {
  EllipsoidShape a = shape({PerturbedRational(1),
                            pr({Rational(1), Rational(1)}),
                            PerturbedRational(1) + PerturbedRational::delta(2)});
  for (long long k = 1; k <= 6; ++k)
    CHECK(cz_index(a, {1, k}) == 6 * k - 2);
}

TEST_CASE("cz_index at spectrum ranks is n-1+2k") {
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    EllipsoidShape a = random_tiefree_shape(rng, n);
    for (long long k = 1; k <= 25; ++k)
      CHECK(cz_index(a, orbit_at(a, k)) == n - 1 + 2 * k);
  }
}

TEST_CASE("scaling covariance") {
  Rational lams[] = {Rational(2), Rational(Int(1), Int(3)),
                     Rational(Int(7), Int(5))};
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + trial % 3;
    EllipsoidShape a = random_tiefree_shape(rng, n);
    for (const Rational& lam : lams) {
      EllipsoidShape b = scale_shape(a, lam);
      for (long long k = 1; k <= 10; ++k) {
        CHECK(capacity(b, k) ==
              capacity(a, k) * PerturbedRational(lam));
        CHECK(orbit_at(b, k) == orbit_at(a, k));
        CHECK(delta_path(b, k) == delta_path(a, k));
        CHECK(cz_index(b, orbit_at(b, k)) == cz_index(a, orbit_at(a, k)));
      }
    }
  }
  CHECK_THROWS_AS(scale_shape(two_three_plus(), Rational(0)), DomainError);
  CHECK_THROWS_AS(scale_shape(two_three_plus(), Rational(-2)), DomainError);
}
