#include "cuspcount/blowup_homology.hpp"

#include <algorithm>
#include <string>

#include "cuspcount/cusp_resolution.hpp"
#include "cuspcount/errors.hpp"

namespace cuspcount {

namespace {

void require_valid(const BlowupClass& a) {
  const std::size_t want = a.base == SurfaceBase::CP2 ? 1 : 2;
  if (a.base_coeffs.size() != want) {
    throw DomainError("base coefficient count does not match the surface");
  }
}

CremonaState normalized(long long d, std::vector<long long> exc) {
  exc.erase(std::remove(exc.begin(), exc.end(), 0LL), exc.end());
  std::sort(exc.begin(), exc.end(), std::greater<long long>());
  return {d, std::move(exc)};
}

}  // namespace

BlowupClass make_cp2_class(long long d, std::vector<long long> exc) {
  return {SurfaceBase::CP2, {d}, std::move(exc)};
}

BlowupClass make_f1_class(long long d, long long e_coef,
                          std::vector<long long> exc) {
  return {SurfaceBase::F1, {d, e_coef}, std::move(exc)};
}

long long intersect(const BlowupClass& a, const BlowupClass& b) {
  require_valid(a);
  require_valid(b);
  if (a.base != b.base) {
    throw DomainError("classes live over different bases");
  }
  if (a.exc.size() != b.exc.size()) {
    throw DomainError("classes live in different blowups");
  }
  long long out = a.base_coeffs[0] * b.base_coeffs[0];
  if (a.base == SurfaceBase::F1) {
    out -= a.base_coeffs[1] * b.base_coeffs[1];
  }
  for (std::size_t i = 0; i < a.exc.size(); ++i) {
    out -= a.exc[i] * b.exc[i];
  }
  return out;
}

long long chern(const BlowupClass& a) {
  require_valid(a);
  long long out = 3 * a.base_coeffs[0];
  if (a.base == SurfaceBase::F1) {
    out += a.base_coeffs[1];
  }
  for (long long k : a.exc) {
    out -= k;
  }
  return out;
}

BlowupClass proper_transform_class(const BlowupClass& a, long long p,
                                   long long q) {
  require_valid(a);
  BlowupClass out = a;
  for (long long m : weight_sequence(p, q)) {
    out.exc.push_back(m);
  }
  return out;
}

bool is_numerically_exceptional(const BlowupClass& a) {
  return chern(a) == 1 && intersect(a, a) == -1;
}

BlowupClass f1_to_cp2(const BlowupClass& a) {
  require_valid(a);
  if (a.base != SurfaceBase::F1) {
    throw DomainError("expected a class over F1");
  }
  BlowupClass out;
  out.base = SurfaceBase::CP2;
  out.base_coeffs = {a.base_coeffs[0]};
  out.exc.reserve(a.exc.size() + 1);
  out.exc.push_back(-a.base_coeffs[1]);
  out.exc.insert(out.exc.end(), a.exc.begin(), a.exc.end());
  return out;
}

CremonaResult cremona_reduce(const BlowupClass& a) {
  require_valid(a);
  if (a.base != SurfaceBase::CP2) {
    throw DomainError("Cremona reduction needs a class over CP2");
  }
  CremonaResult res;
  CremonaState cur = normalized(a.base_coeffs[0], a.exc);
  res.trace.push_back(cur);
  while (true) {
    if (cur.d == 0 && cur.exc.size() == 1 && cur.exc[0] == -1) {
      res.representable = true;
      res.reason = "reduced to an exceptional class";
      return res;
    }
    if (cur.d <= 0) {
      res.reason = "degree dropped to " + std::to_string(cur.d);
      return res;
    }
    if (!cur.exc.empty() && cur.exc.back() < 0) {
      res.reason = "negative multiplicity " + std::to_string(cur.exc.back());
      return res;
    }
    long long m[3] = {0, 0, 0};
    for (std::size_t i = 0; i < 3 && i < cur.exc.size(); ++i) {
      m[i] = cur.exc[i];
    }
    const long long sum = m[0] + m[1] + m[2];
    if (sum <= cur.d) {
      res.reason = "no Cremona move lowers the degree";
      return res;
    }
    std::vector<long long> exc = cur.exc;
    exc.resize(std::max<std::size_t>(exc.size(), 3), 0);
    exc[0] = cur.d - m[1] - m[2];
    exc[1] = cur.d - m[0] - m[2];
    exc[2] = cur.d - m[0] - m[1];
    cur = normalized(2 * cur.d - sum, std::move(exc));
    res.trace.push_back(cur);
  }
}

bool is_perfect_exceptional(const BlowupClass& a, long long p, long long q) {
  BlowupClass tilde = proper_transform_class(a, p, q);
  if (!is_numerically_exceptional(tilde)) {
    return false;
  }
  if (tilde.base == SurfaceBase::F1) {
    tilde = f1_to_cp2(tilde);
  }
  return cremona_reduce(tilde).representable;
}

}  // namespace cuspcount
