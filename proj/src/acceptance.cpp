#include "cuspcount/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cuspcount/blowup_homology.hpp"
#include "cuspcount/cusp_resolution.hpp"
#include "cuspcount/formal_curves.hpp"
#include "cuspcount/hirzebruch_f1.hpp"
#include "cuspcount/obstructions.hpp"
#include "cuspcount/serialize.hpp"
#include "cuspcount/spectrum.hpp"

namespace cuspcount {

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void that(bool cond, const std::string& msg) {
    if (ok && !cond) {
      ok = false;
      detail = msg;
    }
  }
};

CriterionResult run(int id, const std::string& name,
                    const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.that(false, std::string("exception: ") + e.what());
  }
  return {id, name, c.ok, c.detail};
}

// Shape u_s + (s+1) delta with integer u_s, no two axes rationally
// proportional, so every spectrum value and maximizer is unique.
struct IntShape {
  std::vector<long long> u;

  int n() const { return static_cast<int>(u.size()); }

  EllipsoidShape shape() const {
    std::vector<PerturbedRational> axes;
    for (int s = 0; s < n(); ++s) {
      axes.emplace_back(std::vector<Rational>{Rational(u[static_cast<size_t>(s)]),
                                              Rational(s + 1)});
    }
    return EllipsoidShape(std::move(axes));
  }
};

IntShape random_int_shape(std::mt19937& rng, int n, int max_entry) {
  std::uniform_int_distribution<long long> pick(1, max_entry);
  while (true) {
    IntShape s;
    for (int i = 0; i < n; ++i) s.u.push_back(pick(rng));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (s.u[static_cast<size_t>(i)] * (j + 1) ==
            s.u[static_cast<size_t>(j)] * (i + 1)) {
          ok = false;
        }
      }
    }
    if (ok) return s;
  }
}

// Value u*i + w*i*delta as an ordered pair; lexicographic order matches the
// order of the perturbed values for small delta.
struct PairVal {
  long long c0 = 0;
  long long c1 = 0;
  bool operator<(const PairVal& o) const {
    return c0 != o.c0 ? c0 < o.c0 : c1 < o.c1;
  }
  bool operator==(const PairVal& o) const { return c0 == o.c0 && c1 == o.c1; }
};

PairVal axis_multiple(const IntShape& s, int axis, long long i) {
  return {s.u[static_cast<size_t>(axis)] * i, (axis + 1) * i};
}

PairVal pair_of(const PerturbedRational& v, Check& c) {
  c.that(v.degree() <= 1, "value has unexpected perturbation degree");
  PairVal out;
  for (int d = 0; d <= v.degree() && d <= 1; ++d) {
    const Rational coef = v.coeff(d);
    c.that(coef.is_integer(), "value has a fractional coefficient");
    const long long val = coef.num().convert_to<long long>();
    (d == 0 ? out.c0 : out.c1) = val;
  }
  return out;
}

PairVal oracle_capacity(const IntShape& s, long long k) {
  std::vector<PairVal> all;
  for (int axis = 0; axis < s.n(); ++axis) {
    for (long long i = 1; i <= k; ++i) all.push_back(axis_multiple(s, axis, i));
  }
  std::sort(all.begin(), all.end());
  return all[static_cast<size_t>(k - 1)];
}

// Max over compositions of n+k-1 into n positive parts of the min weighted
// entry; plain exhaustive search.
PairVal oracle_path_value(const IntShape& s, long long k) {
  const int n = s.n();
  const long long total = n + k - 1;
  PairVal best{-1, 0};
  std::function<void(int, long long, PairVal)> rec = [&](int axis,
                                                         long long left,
                                                         PairVal cur) {
    if (axis == n - 1) {
      PairVal v = axis_multiple(s, axis, left);
      if (cur < v) v = cur;
      if (best < v) best = v;
      return;
    }
    for (long long i = 1; left - i >= n - 1 - axis; ++i) {
      PairVal v = axis_multiple(s, axis, i);
      if (cur < v) v = cur;
      rec(axis + 1, left - i, v);
    }
  };
  PairVal top{(1LL << 62), 0};
  rec(0, total, top);
  return best;
}

Rational min_weighted(const LatticeTuple& t, const std::vector<Rational>& dir) {
  Rational best = Rational(t[0]) * dir[0];
  for (std::size_t s = 1; s < t.size(); ++s) {
    const Rational v = Rational(t[static_cast<long long>(s)]) * dir[s];
    if (v < best) best = v;
  }
  return best;
}

long long min_weighted_int(const LatticeTuple& t, long long i, long long j) {
  return std::min(t[0] * i, t[1] * j);
}

void criterion1(Check& c) {
  const EllipsoidShape a = parse_shape("2,3+");
  const long long want[8][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 2},
                                {4, 2}, {4, 3}, {5, 3}, {5, 4}};
  for (long long k = 1; k <= 8; ++k) {
    const LatticeTuple got = delta_path(a, k);
    const LatticeTuple exp = {want[k - 1][0], want[k - 1][1]};
    c.that(got == exp, "path differs at k=" + std::to_string(k));
  }
}

void criterion2(Check& c) {
  const std::vector<long long> want = {23, 23, 5, 5, 5, 5, 3, 2, 1, 1};
  c.that(weight_sequence(51, 23) == want, "weight sequence differs");
  const HjExpansions hj = hj_expansions(51, 23);
  std::vector<long long> hor, ver;
  for (long long v : hj.hor) hor.push_back(-v);
  for (long long v : hj.ver) ver.push_back(-v);
  c.that(hor == std::vector<long long>{-2, -6, -3, -2},
         "horizontal self-intersections differ");
  c.that(ver == std::vector<long long>{-2, -2, -2, -3, -3},
         "vertical self-intersections differ");
}

void criterion3and4(Check& cz_check, Check& dual_check) {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const IntShape is = random_int_shape(rng, n, 50);
    const EllipsoidShape a = is.shape();
    for (long long k = 1; k <= 40; ++k) {
      const ReebOrbit o = orbit_at(a, k);
      cz_check.that(cz_index(a, o) == n - 1 + 2 * k,
                    "index differs at n=" + std::to_string(n) +
                        " k=" + std::to_string(k));

      const PairVal mk_oracle = oracle_capacity(is, k);
      const PairVal path_oracle = oracle_path_value(is, k);
      const PairVal mk_impl = pair_of(capacity(a, k), dual_check);
      const LatticeTuple d = delta_path(a, k);
      PairVal path_impl{(1LL << 62), 0};
      for (int s = 0; s < n; ++s) {
        const PairVal v = axis_multiple(is, s, d[static_cast<size_t>(s)]);
        if (v < path_impl) path_impl = v;
      }
      const std::string where =
          " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      dual_check.that(mk_oracle == mk_impl, "capacity oracle differs" + where);
      dual_check.that(path_oracle == path_impl, "path oracle differs" + where);
      dual_check.that(path_impl == mk_impl, "duality fails" + where);
    }
  }
}

void criterion5(Check& c) {
  const EllipsoidShape a = parse_shape("8,13,22");
  const ReebOrbit o = orbit_at(a, 4);
  c.that(o.axis == 3 && o.mult == 1, "rank four orbit differs");
  c.that(capacity(a, 4) == PerturbedRational(22), "rank four capacity differs");
  c.that(check_assumption_A(a, 5).holds, "first assumption fails");
  c.that(check_assumption_B(a, 5).holds, "second assumption fails");
  HomologySurrogate k;
  k.area = PerturbedRational(44);
  k.chern = 5;
  k.divisibility = 1;
  c.that(check_assumption_C(k, o), "third assumption fails");
  c.that(!sufficient_A(a, 5), "first sufficient test unexpectedly passes");
  c.that(!sufficient_B(a, 5), "second sufficient test unexpectedly passes");
}

void criterion6(Check& c) {
  for (long long p = 2; p <= 15; ++p) {
    for (long long q = 1; q < p; ++q) {
      if (p + q > 16 || std::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        std::vector<PerturbedRational> axes = {
            PerturbedRational(q),
            PerturbedRational(std::vector<Rational>{Rational(p),
                                                    Rational(sign)})};
        const EllipsoidShape a(std::move(axes));
        const std::string where = " at (" + std::to_string(p) + "," +
                                  std::to_string(q) + "," +
                                  (sign > 0 ? "+" : "-") + ")";
        c.that(check_assumption_A(a, p + q).holds,
               "first assumption fails" + where);
        c.that(check_assumption_B(a, p + q).holds,
               "second assumption fails" + where);
        const ReebOrbit neg = orbit_at(a, p + q - 1);
        const auto curves = enumerate_symp_curves(a, neg, 0);
        c.that(curves.size() == 1, "curve count differs" + where);
        if (!curves.empty()) {
          c.that(is_trivial_cylinder(curves[0]),
                 "nontrivial curve survives" + where);
        }
      }
    }
  }
}

void criterion7(Check& c) {
  const EllipsoidShape a = parse_shape("1,1+1*eps,1+1*eps^2");
  for (long long k = 2; k <= 6; ++k) {
    const ReebOrbit cover{1, k};
    c.that(cz_index(a, cover) == 6 * k - 2,
           "cover index differs at k=" + std::to_string(k));
    SymplectizationCurve curve;
    curve.positive_ends.assign(static_cast<size_t>(k), ReebOrbit{1, 1});
    curve.negative_ends = {cover};
    c.that(symp_index(a, curve) == 2 - 2 * k,
           "curve index differs at k=" + std::to_string(k));
  }
}

Rational eval_cf_plus(const std::vector<long long>& cf) {
  Rational v(cf.back());
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    v = Rational(*it) + Rational(1) / v;
  }
  return v;
}

Rational eval_cf_minus(const std::vector<long long>& cf) {
  Rational v(cf.back());
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    v = Rational(*it) - Rational(1) / v;
  }
  return v;
}

void criterion8(Check& c) {
  for (long long p = 1; p <= 200; ++p) {
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::string where =
          " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      long long sum = 0;
      for (long long m : weight_sequence(p, q)) sum += m * m;
      c.that(sum == p * q, "square areas differ" + where);
      c.that(eval_cf_plus(cf_plus(p, q)) == Rational(p) / Rational(q),
             "plus expansion differs" + where);
      if (p > q) {
        const HjExpansions hj = hj_expansions(p, q);
        c.that(eval_cf_minus(hj.hor) == Rational(p) / Rational(p - q),
               "horizontal expansion differs" + where);
        if (q == 1) {
          c.that(hj.ver.empty(), "vertical expansion not empty" + where);
        } else {
          c.that(eval_cf_minus(hj.ver) == Rational(q) / Rational(q - p % q),
                 "vertical expansion differs" + where);
        }
      }
    }
  }
}

void criterion9(Check& c) {
  const HiddenConstraintReport pinned =
      hidden_constraint_admissible({3, 2}, {{2, 1}, {1, 1}});
  c.that(!pinned.admissible, "pinned instance admissible");
  c.that(pinned.witness.size() == 2, "pinned witness missing");
  if (pinned.witness.size() == 2) {
    const Rational lhs = min_weighted({2, 1}, pinned.witness) +
                         min_weighted({1, 1}, pinned.witness);
    const Rational rhs = min_weighted({3, 2}, pinned.witness);
    c.that(lhs < rhs, "pinned witness does not separate");
    c.that(pinned.witness[0].sign() > 0 && pinned.witness[1].sign() > 0,
           "pinned witness not positive");
  }

  for (long long p = 1; p + 1 <= 10; ++p) {
    for (long long q = 1; p + q <= 10; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const LatticeTuple m = {p, q};
      const long long budget = p + q;
      std::vector<LatticeTuple> parts;
      std::function<void(long long, long long, long long)> rec =
          [&](long long min_u, long long min_v, long long left) {
            if (parts.size() >= 2) {
              const std::string where = " at (" + std::to_string(p) + "," +
                                        std::to_string(q) + ") with " +
                                        std::to_string(parts.size()) +
                                        " parts";
              const HiddenConstraintReport rep =
                  hidden_constraint_admissible(m, parts);
              c.that(!rep.admissible, "low splitting admissible" + where);
              if (!rep.admissible && rep.witness.size() == 2) {
                Rational lhs(0);
                for (const LatticeTuple& t : parts) {
                  lhs += min_weighted(t, rep.witness);
                }
                c.that(lhs < min_weighted(m, rep.witness),
                       "witness does not separate" + where);
              }
              bool grid_hit = false;
              for (long long i = 1; i <= 2 * budget && !grid_hit; ++i) {
                for (long long j = 1; j <= 2 * budget && !grid_hit; ++j) {
                  long long lhs = 0;
                  for (const LatticeTuple& t : parts) {
                    lhs += min_weighted_int(t, i, j);
                  }
                  if (lhs < min_weighted_int(m, i, j)) grid_hit = true;
                }
              }
              c.that(grid_hit, "grid oracle finds no violation" + where);
              c.that(degeneration_sum_bound(m, parts, true),
                     "sum bound claim fails" + where);
            }
            for (long long u = min_u; u + 1 <= left; ++u) {
              for (long long v = (u == min_u ? min_v : 1); u + v <= left;
                   ++v) {
                parts.push_back({u, v});
                rec(u, v, left - u - v);
                parts.pop_back();
              }
            }
          };
      rec(1, 1, budget);
    }
  }
}

void criterion10(Check& c) {
  for (int j = 1; j <= 10; ++j) {
    const StairQuadruple s = quadruple(j);
    const std::string where = " at j=" + std::to_string(j);
    c.that(3 * s.d - s.m == s.p + s.q, "adjunction sum differs" + where);
    const BlowupClass a = make_f1_class(s.d, -s.m);
    c.that(is_perfect_exceptional(a, s.p, s.q), "class not perfect" + where);
    const DmResult dm = unique_dm(s.p, s.q);
    c.that(dm.found && dm.d == s.d && dm.m == s.m && dm.eps == s.eps,
           "unique class recovery differs" + where);
    c.that(double_points(intersect(a, a), chern(a), s.p, s.q) == 0,
           "double point count differs" + where);
    if (j <= 7) {
      const StairQuadruple t = quadruple(j + 3);
      c.that(apply_S(s.p, s.q) == std::make_pair(t.p, t.q),
             "shift misses the next step" + where);
    }
  }
}

void criterion11(Check& c) {
  std::mt19937 rng(4117);
  std::uniform_int_distribution<long long> pp(2, 40);
  std::uniform_int_distribution<long long> dd(0, 9);
  std::uniform_int_distribution<long long> kk(-2, 3);
  std::uniform_int_distribution<int> nexc(0, 3);
  std::set<std::pair<long long, long long>> seen;
  while (seen.size() < 20) {
    const long long p = pp(rng);
    std::uniform_int_distribution<long long> qq(1, p - 1);
    const long long q = qq(rng);
    if (std::gcd(p, q) != 1 || !seen.insert({p, q}).second) continue;

    BlowupClass a = seen.size() % 2 == 0 ? make_cp2_class(dd(rng))
                                         : make_f1_class(dd(rng), kk(rng));
    const int ne = nexc(rng);
    for (int i = 0; i < ne; ++i) a.exc.push_back(kk(rng));

    const BlowupClass tilde = proper_transform_class(a, p, q);
    const DivisorChain chain = chain_classes(p, q);
    const std::size_t L = chain.classes.size();
    const std::size_t base = tilde.exc.size() - L;
    const std::string where =
        " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
    for (std::size_t i = 0; i < L; ++i) {
      long long pairing = 0;
      for (std::size_t j = 0; j < L; ++j) {
        pairing += chain.classes[i][j] * tilde.exc[base + j];
      }
      const long long want = i + 1 == L ? 1 : 0;
      c.that(pairing == want,
             "pairing differs" + where + " i=" + std::to_string(i + 1));
    }
  }
}

void criterion12(Check& c) {
  HomologySurrogate k;
  k.area = PerturbedRational(44);
  k.chern = 5;
  const auto rec = embedding_bound(k, parse_shape("8,13,22"));
  c.that(rec.bound == PerturbedRational(2) &&
             rec.bound_den == PerturbedRational(1) && rec.limit == Rational(2),
         "pinned bound differs");

  std::mt19937 rng(90125);
  std::uniform_int_distribution<long long> area(1, 60);
  std::uniform_int_distribution<long long> c1(2, 8);
  const Rational lambdas[] = {Rational(3, 2), Rational(2, 7), Rational(5),
                              Rational(1, 3), Rational(7, 4)};
  for (int trial = 0; trial < 50; ++trial) {
    const IntShape is = random_int_shape(rng, 2 + trial % 2, 50);
    const EllipsoidShape a = is.shape();
    HomologySurrogate klass;
    klass.area = PerturbedRational(area(rng));
    klass.chern = c1(rng);
    const Rational lam = lambdas[trial % 5];
    const auto base = embedding_bound(klass, a);
    const auto scaled = embedding_bound(klass, scale_shape(a, lam));
    const std::string where = " at trial " + std::to_string(trial);
    c.that(scaled.limit == base.limit / lam, "limit scaling fails" + where);
    if (base.bound_den == PerturbedRational(1)) {
      c.that(scaled.bound == base.bound.div_rational(lam),
             "bound scaling fails" + where);
    } else {
      c.that(scaled.bound == base.bound &&
                 scaled.bound_den == base.bound_den * PerturbedRational(lam),
             "fraction scaling fails" + where);
    }
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(run(1, "delta path table", criterion1));
  out.push_back(run(2, "weight sequence and chain self-intersections",
                    criterion2));
  Check cz, dual;
  try {
    criterion3and4(cz, dual);
  } catch (const std::exception& e) {
    const std::string msg = std::string("exception: ") + e.what();
    cz.that(false, msg);
    dual.that(false, msg);
  }
  out.push_back({3, "Conley-Zehnder identity on random shapes", cz.ok,
                 cz.detail});
  out.push_back({4, "path and spectrum duality", dual.ok, dual.detail});
  out.push_back(run(5, "three axis example beats the sufficient tests",
                    criterion5));
  out.push_back(run(6, "assumptions and lone trivial cylinder", criterion6));
  out.push_back(run(7, "branched cover indices", criterion7));
  out.push_back(run(8, "square areas and continued fractions", criterion8));
  out.push_back(run(9, "hidden constraint exhaustive violations", criterion9));
  out.push_back(run(10, "staircase quadruples certify as perfect",
                    criterion10));
  out.push_back(run(11, "proper transform meets the chain tail once",
                    criterion11));
  out.push_back(run(12, "embedding bound arithmetic and scaling",
                    criterion12));
  return out;
}

}  // namespace cuspcount
