#include <cstdlib>
#include <numeric>
#include <vector>

#include "cuspcount/blowup_homology.hpp"
#include "cuspcount/errors.hpp"
#include "cuspcount/hirzebruch_f1.hpp"
#include "doctest.h"

using namespace cuspcount;

TEST_CASE("seed sequence") {
  const std::vector<long long> want = {1, 1, 1,  1,  2,  4,   5,
                                       11, 23, 29, 64, 134, 169};
  CHECK(seed_sequence(13) == want);
  CHECK(seed_sequence(1) == std::vector<long long>{1});
  CHECK_THROWS_AS(seed_sequence(0), DomainError);
}

TEST_CASE("staircase quadruples") {
  struct Row {
    int j;
    long long p, q, d, m;
    int eps;
  };
  const Row rows[] = {
      {1, 1, 1, 1, 1, 1},      {2, 2, 1, 1, 0, -1},
      {3, 4, 1, 2, 1, 1},      {4, 5, 1, 2, 0, -1},
      {5, 11, 2, 5, 2, 1},     {6, 23, 4, 10, 3, -1},
      {7, 29, 5, 13, 5, 1},    {8, 64, 11, 28, 9, -1},
      {9, 134, 23, 59, 20, 1}, {10, 169, 29, 74, 24, -1},
  };
  for (const Row& r : rows) {
    const StairQuadruple s = quadruple(r.j);
    CHECK(s.p == r.p);
    CHECK(s.q == r.q);
    CHECK(s.d == r.d);
    CHECK(s.m == r.m);
    CHECK(s.eps == r.eps);
    CHECK(3 * s.d - s.m == s.p + s.q);
    CHECK(std::gcd(s.p, s.q) == 1);
  }
  CHECK_THROWS_AS(quadruple(0), DomainError);
}

TEST_CASE("unique class recovery") {
  for (int j = 1; j <= 10; ++j) {
    const StairQuadruple s = quadruple(j);
    const DmResult dm = unique_dm(s.p, s.q);
    REQUIRE(dm.found);
    CHECK(dm.reason == DmReason::Found);
    CHECK(dm.d == s.d);
    CHECK(dm.m == s.m);
    CHECK(dm.eps == s.eps);
  }

  CHECK(unique_dm(3, 1).found == false);
  CHECK(unique_dm(3, 1).reason == DmReason::NoIntegralSolution);
  CHECK(unique_dm(7, 1).found == false);
  CHECK(unique_dm(7, 1).reason == DmReason::NoIntegralSolution);

  const DmResult out = unique_dm(8, 1);
  CHECK(out.found);
  CHECK(out.d == 4);
  CHECK(out.m == 3);
  CHECK(out.eps == 1);

  CHECK(unique_dm(5, 2).reason == DmReason::NotSquare);
  CHECK(unique_dm(20, 3).reason == DmReason::NotSquare);
  CHECK_THROWS_AS(unique_dm(0, 1), DomainError);
}

TEST_CASE("any recovered class is numerically exceptional") {
  for (long long p = 1; p <= 30; ++p) {
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const DmResult dm = unique_dm(p, q);
      if (!dm.found) continue;
      CHECK(3 * dm.d - dm.m == p + q);
      const BlowupClass t =
          proper_transform_class(make_f1_class(dm.d, -dm.m), p, q);
      CHECK(is_numerically_exceptional(t));
    }
  }
}

TEST_CASE("shift moves three steps up the staircase") {
  CHECK(apply_S(1, 1) == std::make_pair(5LL, 1LL));
  for (int j = 1; j <= 12; ++j) {
    const StairQuadruple lo = quadruple(j);
    const StairQuadruple hi = quadruple(j + 3);
    CHECK(apply_S(lo.p, lo.q) == std::make_pair(hi.p, hi.q));
  }
  CHECK_THROWS_AS(apply_S(1, 0), DomainError);
}

TEST_CASE("reflection") {
  CHECK(apply_R(7, 1) == std::make_pair(7LL, 1LL));
  CHECK(apply_R(8, 1) == std::make_pair(13LL, 2LL));
  CHECK(apply_R(13, 2) == std::make_pair(8LL, 1LL));
  CHECK_THROWS_AS(apply_R(11, 2), RatioTooSmall);
  CHECK_THROWS_AS(apply_R(6, 1), RatioTooSmall);
  CHECK_THROWS_AS(apply_R(1, 0), DomainError);
}

TEST_CASE("enumeration at tiny bound") {
  const auto entries = enumerate_perf(1);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].p == 1);
  CHECK(entries[0].q == 1);
  CHECK(entries[0].d == 1);
  CHECK(entries[0].m == 1);
  CHECK(entries[0].j == 1);
  CHECK(entries[0].in_range);
  CHECK_THROWS_AS(enumerate_perf(0), DomainError);
}

TEST_CASE("enumeration matches the recursion in range") {
  const auto entries = enumerate_perf(11);
  std::vector<PerfEntry> in_range;
  for (const PerfEntry& e : entries) {
    if (e.in_range) in_range.push_back(e);
  }
  REQUIRE(in_range.size() == 5);
  for (int j = 1; j <= 5; ++j) {
    const StairQuadruple s = quadruple(j);
    const PerfEntry& e = in_range[static_cast<std::size_t>(j - 1)];
    CHECK(e.j == j);
    CHECK(e.p == s.p);
    CHECK(e.q == s.q);
    CHECK(e.d == s.d);
    CHECK(e.m == s.m);
  }

  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    CHECK(entries[i].p * entries[i + 1].q < entries[i + 1].p * entries[i].q);
  }
  for (const PerfEntry& e : entries) {
    CHECK(std::gcd(e.p, e.q) == 1);
    CHECK(is_perfect_exceptional(make_f1_class(e.d, -e.m), e.p, e.q));
    CHECK(e.in_range == (e.p * e.p - 6 * e.p * e.q + e.q * e.q < 0));
  }
}

TEST_CASE("enumeration agrees with a direct scan") {
  const long long max_p = 30;
  const auto entries = enumerate_perf(max_p);
  std::vector<std::pair<long long, long long>> got;
  for (const PerfEntry& e : entries) got.emplace_back(e.p, e.q);

  std::vector<std::pair<long long, long long>> want;
  for (long long p = 1; p <= max_p; ++p) {
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const DmResult dm = unique_dm(p, q);
      if (!dm.found) continue;
      if (is_perfect_exceptional(make_f1_class(dm.d, -dm.m), p, q)) {
        want.emplace_back(p, q);
      }
    }
  }
  CHECK(got.size() == want.size());
  for (const auto& pq : want) {
    CHECK(std::count(got.begin(), got.end(), pq) == 1);
  }
}

TEST_CASE("sharded enumeration is deterministic") {
  const auto base = enumerate_perf(14);
  setenv("CUSPCOUNT_THREADS", "3", 1);
  const auto sharded = enumerate_perf(14);
  unsetenv("CUSPCOUNT_THREADS");
  REQUIRE(base.size() == sharded.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i].p == sharded[i].p);
    CHECK(base[i].q == sharded[i].q);
    CHECK(base[i].d == sharded[i].d);
    CHECK(base[i].m == sharded[i].m);
    CHECK(base[i].j == sharded[i].j);
    CHECK(base[i].in_range == sharded[i].in_range);
  }
}

TEST_CASE("reflection maps steep entries to entries") {
  const auto entries = enumerate_perf(25);
  std::vector<std::pair<long long, long long>> pairs;
  for (const PerfEntry& e : entries) pairs.emplace_back(e.p, e.q);
  for (const PerfEntry& e : entries) {
    if (e.p <= 6 * e.q) continue;
    const auto image = apply_R(e.p, e.q);
    if (image.first > 25) continue;
    WARN(std::count(pairs.begin(), pairs.end(), image) == 1);
  }
}
