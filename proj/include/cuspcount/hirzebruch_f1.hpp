#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cuspcount {

// One step of the unicuspidal staircase on the one point blowup: a curve of
// class d*l - m*e with a single (p, q) cusp.
struct StairQuadruple {
  long long p = 0;
  long long q = 0;
  long long d = 0;
  long long m = 0;
  int eps = 1;
};

enum class DmReason { Found, NotSquare, NoIntegralSolution };

struct DmResult {
  bool found = false;
  long long d = 0;
  long long m = 0;
  int eps = 0;
  DmReason reason = DmReason::NoIntegralSolution;
};

struct PerfEntry {
  long long p = 0;
  long long q = 0;
  long long d = 0;
  long long m = 0;
  std::optional<int> j;
  bool in_range = false;
};

// a_1..a_count with seeds 1,1,1,1,2,4 and a_{j+6} = 6 a_{j+3} - a_j.
std::vector<long long> seed_sequence(int count);

// p = a_{j+3}, q = a_j, eps = (-1)^{j+1}; d and m solve the adjunction and
// self-intersection constraints for that sign.
StairQuadruple quadruple(int j);

// Integral (d, m) for a (p, q) cusp class on the one point blowup, trying
// both signs of the square root; at most one sign can land on integers.
DmResult unique_dm(long long p, long long q);

std::pair<long long, long long> apply_S(long long p, long long q);

// Defined only for p > 6q; fixes (7, 1).
std::pair<long long, long long> apply_R(long long p, long long q);

// All coprime p <= max_p, q <= p whose unique (d, m) class certifies as
// perfect exceptional, sorted by exact ratio p/q. Honors CUSPCOUNT_THREADS.
std::vector<PerfEntry> enumerate_perf(long long max_p);

}  // namespace cuspcount
