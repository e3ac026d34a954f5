#include "cuspcount/formal_curves.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cuspcount {

PerturbedRational symp_energy(const EllipsoidShape& a,
                              const SymplectizationCurve& curve) {
  PerturbedRational e;
  for (const auto& orb : curve.positive_ends) e += action(a, orb);
  for (const auto& orb : curve.negative_ends) e -= action(a, orb);
  return e;
}

long long symp_index(const EllipsoidShape& a,
                     const SymplectizationCurve& curve) {
  if (curve.positive_ends.empty())
    throw DomainError("symplectization curve needs a positive end");
  long long kp = static_cast<long long>(curve.positive_ends.size());
  long long km = static_cast<long long>(curve.negative_ends.size());
  long long ind = (a.n() - 3) * (2 - kp - km);
  for (const auto& orb : curve.positive_ends) ind += cz_index(a, orb);
  for (const auto& orb : curve.negative_ends) ind -= cz_index(a, orb);
  return ind;
}

PerturbedRational cob_energy(const EllipsoidShape& a,
                             const CobordismCurve& curve) {
  PerturbedRational e = curve.klass.area;
  for (const auto& orb : curve.negative_ends) e -= action(a, orb);
  return e;
}

long long cob_index(const EllipsoidShape& a, const CobordismCurve& curve) {
  long long k = static_cast<long long>(curve.negative_ends.size());
  long long ind = (a.n() - 3) * (2 - k) + 2 * curve.klass.chern;
  for (const auto& orb : curve.negative_ends) ind -= cz_index(a, orb);
  return ind;
}

bool is_trivial_cylinder(const SymplectizationCurve& curve) {
  return curve.positive_ends.size() == 1 && curve.negative_ends.size() == 1 &&
         curve.positive_ends[0] == curve.negative_ends[0];
}

namespace {

struct AssumptionTables {
  // caps[i] = M_i for 1 <= i <= top.
  std::vector<PerturbedRational> caps;
  // best[k][s] = max over multisets of k ranks summing to s of sum M_i,
  // choice[k][s] = a maximizing first rank (for witness extraction).
  std::vector<std::vector<PerturbedRational>> best;
  std::vector<std::vector<long long>> choice;
  long long top = 0;
};

AssumptionTables build_tables(const EllipsoidShape& a, long long c1) {
  if (c1 < 2) throw DomainError("chern number must be >= 2");
  AssumptionTables t;
  t.top = c1 - 1;
  t.caps.assign(static_cast<size_t>(t.top) + 1, PerturbedRational());
  for (long long i = 1; i <= t.top; ++i)
    t.caps[static_cast<size_t>(i)] = capacity(a, i);

  long long kmax = (t.top + 1) / 2;  // k parts need sum >= k, sum + k - 1 <= top
  t.best.assign(static_cast<size_t>(kmax) + 1, {});
  t.choice.assign(static_cast<size_t>(kmax) + 1, {});
  if (kmax < 1) return t;

  long long smax = t.top;  // sums beyond top - k + 1 are never queried
  for (long long k = 1; k <= kmax; ++k) {
    t.best[static_cast<size_t>(k)].assign(static_cast<size_t>(smax) + 1,
                                          PerturbedRational());
    t.choice[static_cast<size_t>(k)].assign(static_cast<size_t>(smax) + 1, 0);
  }
  for (long long s = 1; s <= smax; ++s) {
    t.best[1][static_cast<size_t>(s)] = t.caps[static_cast<size_t>(s)];
    t.choice[1][static_cast<size_t>(s)] = s;
  }
  for (long long k = 2; k <= kmax; ++k)
    for (long long s = k; s <= smax; ++s) {
      bool have = false;
      PerturbedRational bestv;
      long long besti = 0;
      for (long long i = 1; i <= s - k + 1; ++i) {
        PerturbedRational v = t.caps[static_cast<size_t>(i)] +
                              t.best[static_cast<size_t>(k - 1)]
                                    [static_cast<size_t>(s - i)];
        if (!have || v > bestv) {
          have = true;
          bestv = v;
          besti = i;
        }
      }
      t.best[static_cast<size_t>(k)][static_cast<size_t>(s)] = bestv;
      t.choice[static_cast<size_t>(k)][static_cast<size_t>(s)] = besti;
    }
  return t;
}

std::vector<long long> extract_witness(const AssumptionTables& t, long long k,
                                       long long s) {
  std::vector<long long> w;
  while (k >= 1) {
    long long i = t.choice[static_cast<size_t>(k)][static_cast<size_t>(s)];
    w.push_back(i);
    s -= i;
    --k;
  }
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

AssumptionReport check_assumption_A(const EllipsoidShape& a, long long c1) {
  AssumptionTables t = build_tables(a, c1);
  long long kmax = static_cast<long long>(t.best.size()) - 1;
  for (long long k = 2; k <= kmax; ++k)
    for (long long s = k; s + k - 1 <= t.top; ++s) {
      const PerturbedRational& lhs =
          t.best[static_cast<size_t>(k)][static_cast<size_t>(s)];
      if (lhs > t.caps[static_cast<size_t>(s + k - 1)])
        return {false, extract_witness(t, k, s)};
    }
  return {true, {}};
}

AssumptionReport check_assumption_B(const EllipsoidShape& a, long long c1) {
  AssumptionTables t = build_tables(a, c1);
  long long kmax = static_cast<long long>(t.best.size()) - 1;
  for (long long k = 2; k <= kmax; ++k) {
    long long s = t.top - k + 1;
    if (s < k) continue;
    const PerturbedRational& lhs =
        t.best[static_cast<size_t>(k)][static_cast<size_t>(s)];
    if (!(lhs < t.caps[static_cast<size_t>(t.top)]))
      return {false, extract_witness(t, k, s)};
  }
  return {true, {}};
}

bool check_assumption_C(const HomologySurrogate& klass,
                        const ReebOrbit& orbit) {
  if (orbit.mult < 1) throw DomainError("orbit multiplicity must be >= 1");
  if (klass.divisibility < 1) throw DomainError("divisibility must be >= 1");
  return gcd_ll(Int(klass.divisibility), Int(orbit.mult)) == 1;
}

bool sufficient_A(const EllipsoidShape& a, long long c1) {
  if (c1 < 2) throw DomainError("chern number must be >= 2");
  if (a.n() == 2) return true;
  EllipsoidShape head(
      std::vector<PerturbedRational>{a.entry(1), a.entry(2)});
  PerturbedRational bar = capacity(head, c1 - 1);
  for (int s = 3; s <= a.n(); ++s)
    if (!(a.entry(s) > bar)) return false;
  return true;
}

bool sufficient_B(const EllipsoidShape& a, long long c1) {
  if (c1 < 2) throw DomainError("chern number must be >= 2");
  if (a.n() < 2) return false;
  const PerturbedRational& a1 = a.entry(1);
  const PerturbedRational& a2 = a.entry(2);
  if (a1.degree() != 0 || a2.degree() != 1) return false;
  Rational r1 = a1.constant_term(), r2 = a2.constant_term();
  if (r2.sign() <= 0) return false;
  Rational ratio = r2 / r1;  // p/q in lowest terms
  Int p = ratio.num(), q = ratio.den();
  if (p + q != c1) return false;
  Rational lambda = Rational(q) / r1;
  PerturbedRational pq(Rational(p * q));
  for (int s = 3; s <= a.n(); ++s)
    if (!(a.entry(s) * PerturbedRational(lambda) > pq)) return false;
  return true;
}

std::vector<SymplectizationCurve> enumerate_symp_curves(
    const EllipsoidShape& a, const ReebOrbit& neg, long long max_index,
    long long node_budget) {
  long long m = rank_of(a, neg);
  // index = 2*(sum(ranks) + k - 1 - m), so the search space is the finite
  // set of rank multisets with sum + k <= bound.
  long long half = max_index >= 0 ? max_index / 2 : -((-max_index + 1) / 2);
  long long bound = m + 1 + half;
  std::vector<SymplectizationCurve> out;
  if (bound < 2) return out;

  std::vector<PerturbedRational> caps(static_cast<size_t>(bound));
  std::vector<ReebOrbit> orbits(static_cast<size_t>(bound));
  for (long long i = 1; i <= bound - 1; ++i) {
    caps[static_cast<size_t>(i)] = capacity(a, i);
    orbits[static_cast<size_t>(i)] = orbit_at(a, i);
  }
  PerturbedRational neg_action = action(a, neg);

  std::vector<long long> ranks;
  long long nodes = 0;
  auto rec = [&](auto&& self, long long max_rank, long long used,
                 const PerturbedRational& pos_action) -> void {
    if (++nodes > node_budget)
      throw SearchBudgetExceeded("curve enumeration exceeded " +
                                 std::to_string(node_budget) + " nodes");
    if (!ranks.empty() && pos_action >= neg_action) {
      SymplectizationCurve c;
      for (long long r : ranks)
        c.positive_ends.push_back(orbits[static_cast<size_t>(r)]);
      std::sort(c.positive_ends.begin(), c.positive_ends.end());
      c.negative_ends.push_back(neg);
      out.push_back(std::move(c));
    }
    // One more end of rank r costs r + 1 of the budget.
    for (long long r = 1; r <= std::min(max_rank, bound - used - 1); ++r) {
      ranks.push_back(r);
      self(self, r, used + r + 1, pos_action + caps[static_cast<size_t>(r)]);
      ranks.pop_back();
    }
  };
  rec(rec, bound, 0, PerturbedRational());

  std::sort(out.begin(), out.end(), [](const SymplectizationCurve& x,
                                       const SymplectizationCurve& y) {
    if (x.positive_ends.size() != y.positive_ends.size())
      return x.positive_ends.size() < y.positive_ends.size();
    return x.positive_ends < y.positive_ends;
  });
  return out;
}

bool constraint_index_ok(const LatticeTuple& m, long long c1, int n) {
  if (static_cast<int>(m.size()) != n)
    throw DomainError("tuple length must match dimension");
  long long sum = std::accumulate(m.begin(), m.end(), 0LL);
  return sum == c1 + n - 2;
}

namespace {

void validate_parts(const LatticeTuple& m,
                    const std::vector<LatticeTuple>& parts) {
  if (m.empty()) throw DomainError("empty tuple");
  for (long long x : m)
    if (x < 1) throw DomainError("tuple entries must be >= 1");
  for (const auto& p : parts) {
    if (p.size() != m.size())
      throw DomainError("part length must match tuple length");
    for (long long x : p)
      if (x < 1) throw DomainError("part entries must be >= 1");
  }
}

// Difference sum_i min_s(a_s part_i_s) - min_s(a_s m_s) at an integer
// direction, exact.
Rational pl_difference(const std::vector<Rational>& a, const LatticeTuple& m,
                       const std::vector<LatticeTuple>& parts) {
  auto weighted_min = [&](const LatticeTuple& v) {
    Rational best = a[0] * Rational(v[0]);
    for (size_t s = 1; s < v.size(); ++s) {
      Rational w = a[s] * Rational(v[s]);
      if (w < best) best = w;
    }
    return best;
  };
  Rational acc(0);
  for (const auto& p : parts) acc += weighted_min(p);
  return acc - weighted_min(m);
}

std::vector<Rational> reduce_direction(std::vector<Rational> a) {
  Int num_gcd(0), den_lcm(1);
  for (const auto& r : a) {
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, r.den()) * r.den();
  }
  std::vector<Rational> out;
  for (const auto& r : a) out.push_back(r * Rational(den_lcm));
  for (const auto& r : out)
    num_gcd = boost::multiprecision::gcd(num_gcd, r.num());
  if (num_gcd > 1)
    for (auto& r : out) r = r / Rational(num_gcd);
  return out;
}

HiddenConstraintReport hidden_two_axis(const LatticeTuple& m,
                                       const std::vector<LatticeTuple>& parts) {
  long long p = m[0], q = m[1];
  Int sum_p(0), sum_q(0);
  for (const auto& part : parts) {
    sum_p += part[0];
    sum_q += part[1];
  }

  // Breakpoints of t -> sum_i min(t p_i, q_i) - min(t p, q) at t = q_i/p_i
  // and q/p, with a = (t, 1) scaled to integers (q_i, p_i).
  std::vector<Rational> bps;
  for (const auto& part : parts) bps.emplace_back(Int(part[1]), Int(part[0]));
  bps.emplace_back(Int(q), Int(p));

  for (const auto& t : bps) {
    std::vector<Rational> a = {Rational(t.num()), Rational(t.den())};
    if (pl_difference(a, m, parts).sign() < 0)
      return {false, reduce_direction(a)};
  }
  Rational tmin = *std::min_element(bps.begin(), bps.end());
  Rational tmax = *std::max_element(bps.begin(), bps.end());
  if (sum_p < p) {
    // Slope toward t -> 0 is sum_p - p; any direction below every
    // breakpoint witnesses the failure.
    std::vector<Rational> a = {Rational(tmin.num()), Rational(tmin.den() * 2)};
    return {false, reduce_direction(a)};
  }
  if (sum_q < q) {
    std::vector<Rational> a = {Rational(tmax.num() * 2), Rational(tmax.den())};
    return {false, reduce_direction(a)};
  }
  return {true, {}};
}

// Linear form c . a compared against 0.
struct LinForm {
  std::vector<Rational> c;
  bool strict = false;
};

bool coeffs_all_zero(const LinForm& f) {
  for (const auto& r : f.c)
    if (!r.is_zero()) return false;
  return true;
}

// Fourier-Motzkin feasibility of {c . a < 0 or <= 0}; variables eliminated
// from the highest index down. Returns a strictly feasible point if any.
bool fm_feasible(std::vector<LinForm> sys, size_t nvars,
                 std::vector<Rational>* witness) {
  std::vector<std::vector<LinForm>> stages;
  for (size_t level = nvars; level-- > 1;) {
    // sys currently involves variables 0..level.
    stages.push_back(sys);
    std::vector<LinForm> next;
    std::vector<const LinForm*> uppers, lowers;
    for (const auto& f : sys) {
      int sgn = f.c[level].sign();
      if (sgn == 0) {
        if (coeffs_all_zero(f) && f.strict) return false;
        next.push_back(f);
      } else if (sgn > 0) {
        uppers.push_back(&f);
      } else {
        lowers.push_back(&f);
      }
    }
    for (const auto* u : uppers)
      for (const auto* l : lowers) {
        LinForm combined;
        combined.strict = u->strict || l->strict;
        combined.c.assign(level + 1, Rational(0));
        Rational wu = -l->c[level], wl = u->c[level];
        for (size_t j = 0; j <= level; ++j)
          combined.c[j] = u->c[j] * wu + l->c[j] * wl;
        if (coeffs_all_zero(combined)) {
          if (combined.strict) return false;
          continue;
        }
        combined.c.resize(level);
        next.push_back(std::move(combined));
      }
    for (auto& f : next) f.c.resize(level);
    sys = std::move(next);
  }

  // Single variable a_0 with a_0 > 0 among the constraints.
  for (const auto& f : sys) {
    int sgn = f.c[0].sign();
    if (sgn > 0) return false;
    if (sgn == 0 && f.strict) return false;
  }
  if (!witness) return true;

  std::vector<Rational> a(nvars, Rational(0));
  a[0] = Rational(1);
  for (size_t level = 1; level < nvars; ++level) {
    const auto& stage = stages[stages.size() - level];
    bool have_lo = false, have_hi = false, lo_strict = false, hi_strict = false;
    Rational lo, hi;
    for (const auto& f : stage) {
      if (f.c[level].is_zero()) continue;
      Rational rest(0);
      for (size_t j = 0; j < level; ++j) rest += f.c[j] * a[j];
      Rational val = -rest / f.c[level];
      if (f.c[level].sign() > 0) {
        if (!have_hi || val < hi || (val == hi && f.strict)) {
          hi = val;
          hi_strict = f.strict || (have_hi && val == hi && hi_strict);
          have_hi = true;
        }
      } else {
        if (!have_lo || val > lo || (val == lo && f.strict)) {
          lo = val;
          lo_strict = f.strict || (have_lo && val == lo && lo_strict);
          have_lo = true;
        }
      }
    }
    if (!have_lo) {
      a[level] = have_hi ? hi - Rational(1) : Rational(1);
    } else if (!have_hi) {
      a[level] = lo + Rational(1);
    } else if (lo < hi) {
      a[level] = (lo + hi) / Rational(2);
    } else {
      a[level] = lo;  // lo == hi, both bounds nonstrict (else FM had failed)
    }
  }
  *witness = std::move(a);
  return true;
}

HiddenConstraintReport hidden_multi_axis(const LatticeTuple& m,
                                         const std::vector<LatticeTuple>& parts) {
  size_t n = m.size(), k = parts.size();
  // Argmin assignment: sigma[i] for each part, tau for m. A cone is the set
  // of positive directions where those axes attain the minima; the instance
  // fails exactly when some cone contains a negative-difference point.
  std::vector<size_t> assign(k + 1, 0);
  while (true) {
    std::vector<LinForm> sys;
    for (size_t s = 0; s < n; ++s) {
      LinForm pos;
      pos.c.assign(n, Rational(0));
      pos.c[s] = Rational(-1);
      pos.strict = true;
      sys.push_back(std::move(pos));
    }
    LinForm diff;
    diff.c.assign(n, Rational(0));
    diff.strict = true;
    for (size_t i = 0; i < k; ++i) {
      size_t si = assign[i];
      for (size_t s = 0; s < n; ++s) {
        if (s == si) continue;
        LinForm f;
        f.c.assign(n, Rational(0));
        f.c[si] = Rational(parts[i][si]);
        f.c[s] = Rational(-parts[i][s]);
        sys.push_back(std::move(f));
      }
      diff.c[si] += Rational(parts[i][si]);
    }
    size_t tau = assign[k];
    for (size_t s = 0; s < n; ++s) {
      if (s == tau) continue;
      LinForm f;
      f.c.assign(n, Rational(0));
      f.c[tau] = Rational(m[tau]);
      f.c[s] = Rational(-m[s]);
      sys.push_back(std::move(f));
    }
    diff.c[tau] -= Rational(m[tau]);
    sys.push_back(std::move(diff));

    std::vector<Rational> witness;
    if (fm_feasible(std::move(sys), n, &witness)) {
      witness = reduce_direction(std::move(witness));
      if (pl_difference(witness, m, parts).sign() >= 0)
        throw std::logic_error("cone witness fails exact re-check");
      return {false, witness};
    }

    size_t pos = 0;
    while (pos <= k && ++assign[pos] == n) {
      assign[pos] = 0;
      ++pos;
    }
    if (pos > k) break;
  }
  return {true, {}};
}

}  // namespace

HiddenConstraintReport hidden_constraint_admissible(
    const LatticeTuple& m, const std::vector<LatticeTuple>& parts) {
  validate_parts(m, parts);
  if (m.size() == 1) {
    Int sum(0);
    for (const auto& p : parts) sum += p[0];
    if (sum >= m[0]) return {true, {}};
    return {false, {Rational(1)}};
  }
  if (m.size() == 2) return hidden_two_axis(m, parts);
  return hidden_multi_axis(m, parts);
}

bool degeneration_sum_bound(const LatticeTuple& m,
                            const std::vector<LatticeTuple>& parts,
                            bool gcd_coprime) {
  if (m.size() != 2) throw DomainError("sum bound is a two-axis statement");
  validate_parts(m, parts);
  if (!gcd_coprime) return true;
  if (gcd_ll(Int(m[0]), Int(m[1])) != 1)
    throw NotCoprime("tuple asserted coprime is not");
  if (parts.size() < 2) return true;
  if (!hidden_constraint_admissible(m, parts).admissible) return true;
  Int total(0);
  for (const auto& p : parts) total += Int(p[0]) + Int(p[1]);
  return total >= Int(m[0]) + Int(m[1]) + 1;
}

}  // namespace cuspcount
