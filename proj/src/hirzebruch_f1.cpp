#include "cuspcount/hirzebruch_f1.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "cuspcount/blowup_homology.hpp"
#include "cuspcount/errors.hpp"

namespace cuspcount {

namespace {

long long isqrt_floor(long long v) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// d = (3p + 3q + eps*t) / 8, m = (p + q + 3*eps*t) / 8 when both divide.
std::optional<std::pair<long long, long long>> dm_for_sign(long long p,
                                                           long long q,
                                                           long long t,
                                                           int eps) {
  const long long dn = 3 * p + 3 * q + eps * t;
  const long long mn = p + q + 3 * eps * t;
  if (dn % 8 != 0 || mn % 8 != 0) return std::nullopt;
  return std::make_pair(dn / 8, mn / 8);
}

int thread_count() {
  const char* env = std::getenv("CUSPCOUNT_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return static_cast<int>(std::clamp(v, 1L, 64L));
}

}  // namespace

std::vector<long long> seed_sequence(int count) {
  if (count < 1) throw DomainError("sequence length must be positive");
  static const long long seeds[6] = {1, 1, 1, 1, 2, 4};
  std::vector<long long> a;
  a.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i < 6) {
      a.push_back(seeds[i]);
    } else {
      a.push_back(6 * a[static_cast<std::size_t>(i - 3)] -
                  a[static_cast<std::size_t>(i - 6)]);
    }
  }
  return a;
}

StairQuadruple quadruple(int j) {
  if (j < 1) throw DomainError("index must be positive");
  const std::vector<long long> a = seed_sequence(j + 3);
  StairQuadruple out;
  out.p = a[static_cast<std::size_t>(j + 2)];
  out.q = a[static_cast<std::size_t>(j - 1)];
  out.eps = (j % 2 == 1) ? 1 : -1;
  const long long disc = out.p * out.p - 6 * out.p * out.q + out.q * out.q + 8;
  if (disc < 0) throw NonIntegralData("negative discriminant");
  const long long t = isqrt_floor(disc);
  if (t * t != disc) throw NonIntegralData("discriminant is not a square");
  const auto dm = dm_for_sign(out.p, out.q, t, out.eps);
  if (!dm) throw NonIntegralData("class coefficients are not integers");
  out.d = dm->first;
  out.m = dm->second;
  return out;
}

DmResult unique_dm(long long p, long long q) {
  if (p < 1 || q < 1) throw DomainError("cusp orders must be positive");
  DmResult res;
  const long long disc = p * p - 6 * p * q + q * q + 8;
  if (disc < 0) {
    res.reason = DmReason::NotSquare;
    return res;
  }
  const long long t = isqrt_floor(disc);
  if (t * t != disc) {
    res.reason = DmReason::NotSquare;
    return res;
  }
  for (int eps : {1, -1}) {
    if (eps == -1 && t == 0) continue;
    const auto dm = dm_for_sign(p, q, t, eps);
    if (!dm) continue;
    if (res.found) {
      throw std::logic_error("two integral classes for one cusp");
    }
    res.found = true;
    res.d = dm->first;
    res.m = dm->second;
    res.eps = eps;
    res.reason = DmReason::Found;
  }
  return res;
}

std::pair<long long, long long> apply_S(long long p, long long q) {
  if (p < 1 || q < 1) throw DomainError("cusp orders must be positive");
  return {6 * p - q, p};
}

std::pair<long long, long long> apply_R(long long p, long long q) {
  if (p < 1 || q < 1) throw DomainError("cusp orders must be positive");
  if (p <= 6 * q) throw RatioTooSmall("needs p > 6q");
  return {6 * p - 35 * q, p - 6 * q};
}

std::vector<PerfEntry> enumerate_perf(long long max_p) {
  if (max_p < 1) throw DomainError("bound must be positive");

  std::map<std::pair<long long, long long>, int> recursion;
  for (int j = 1;; ++j) {
    const StairQuadruple s = quadruple(j);
    if (s.p > max_p) break;
    recursion[{s.p, s.q}] = j;
  }

  const int threads = thread_count();
  std::vector<std::vector<PerfEntry>> slots(static_cast<std::size_t>(max_p) +
                                            1);
  auto work = [&](long long start) {
    for (long long p = start; p <= max_p; p += threads) {
      for (long long q = 1; q <= p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const DmResult dm = unique_dm(p, q);
        if (!dm.found) continue;
        if (!is_perfect_exceptional(make_f1_class(dm.d, -dm.m), p, q)) {
          continue;
        }
        PerfEntry e;
        e.p = p;
        e.q = q;
        e.d = dm.d;
        e.m = dm.m;
        const auto hit = recursion.find({p, q});
        if (hit != recursion.end()) e.j = hit->second;
        e.in_range = p * p - 6 * p * q + q * q < 0;
        slots[static_cast<std::size_t>(p)].push_back(e);
      }
    }
  };
  if (threads == 1) {
    work(1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back(work, static_cast<long long>(t) + 1);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<PerfEntry> out;
  for (long long p = 1; p <= max_p; ++p) {
    for (const PerfEntry& e : slots[static_cast<std::size_t>(p)]) {
      out.push_back(e);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PerfEntry& a, const PerfEntry& b) {
                     return a.p * b.q < b.p * a.q;
                   });
  return out;
}

}  // namespace cuspcount
