#pragma once

#include <vector>

#include "cuspcount/spectrum.hpp"

namespace cuspcount {

// Just enough homology bookkeeping for index and energy formulas.
struct HomologySurrogate {
  PerturbedRational area;
  long long chern = 0;
  long long divisibility = 1;
};

// Formal curve in the symplectization: tuples of positive and negative
// orbit ends. positive_ends must be nonempty.
struct SymplectizationCurve {
  std::vector<ReebOrbit> positive_ends;
  std::vector<ReebOrbit> negative_ends;

  bool operator==(const SymplectizationCurve& o) const {
    return positive_ends == o.positive_ends && negative_ends == o.negative_ends;
  }
};

// Formal curve in a filling cobordism: homology class plus negative ends.
struct CobordismCurve {
  HomologySurrogate klass;
  std::vector<ReebOrbit> negative_ends;
};

PerturbedRational symp_energy(const EllipsoidShape& a,
                              const SymplectizationCurve& curve);
long long symp_index(const EllipsoidShape& a,
                     const SymplectizationCurve& curve);

PerturbedRational cob_energy(const EllipsoidShape& a,
                             const CobordismCurve& curve);
long long cob_index(const EllipsoidShape& a, const CobordismCurve& curve);

bool is_trivial_cylinder(const SymplectizationCurve& curve);

struct AssumptionReport {
  bool holds = true;
  // Violating multiset of spectrum ranks, empty when holds.
  std::vector<long long> witness;
};

// For every multiset {i_1..i_k}, k >= 2, with sum(i_s) + k - 1 <= c1 - 1:
// sum_s M_{i_s} <= M_{sum + k - 1}.
AssumptionReport check_assumption_A(const EllipsoidShape& a, long long c1);

// Strict inequality on the stratum sum(i_s) + k - 1 == c1 - 1.
AssumptionReport check_assumption_B(const EllipsoidShape& a, long long c1);

// No common divisibility between the class and the orbit covering.
bool check_assumption_C(const HomologySurrogate& klass, const ReebOrbit& orbit);

// a_3..a_n all exceed the two-entry spectrum value M^{(a1,a2)}_{c1-1};
// vacuous for n = 2.
bool sufficient_A(const EllipsoidShape& a, long long c1);

// Shape matches (q, p +- eps, rest) up to scaling with gcd(p,q) = 1,
// p + q = c1, and every rest entry > pq.
bool sufficient_B(const EllipsoidShape& a, long long c1);

// All formal curves (up to end reordering) with the single negative end
// `neg`, energy >= 0 and index <= max_index. Deterministic order.
std::vector<SymplectizationCurve> enumerate_symp_curves(
    const EllipsoidShape& a, const ReebOrbit& neg, long long max_index,
    long long node_budget = 5000000);

// sum(m_s) == c1 + n - 2.
bool constraint_index_ok(const LatticeTuple& m, long long c1, int n);

struct HiddenConstraintReport {
  bool admissible = true;
  // Positive rational direction with sum_i min_s(a_s m^i_s) < min_s(a_s m_s),
  // scaled to integers; empty when admissible.
  std::vector<Rational> witness;
};

// Decides whether sum_i min_s(a_s m^i_s) >= min_s(a_s m_s) for every
// positive direction a. n = 2 walks the breakpoints of the piecewise-linear
// difference; n >= 3 eliminates variables over every argmin-assignment cone.
HiddenConstraintReport hidden_constraint_admissible(
    const LatticeTuple& m, const std::vector<LatticeTuple>& parts);

// Instance check of: admissible degenerations with k >= 2 parts and
// coprime m = (p, q) satisfy sum_i(p_i + q_i) >= p + q + 1. True when the
// hypotheses do not apply.
bool degeneration_sum_bound(const LatticeTuple& m,
                            const std::vector<LatticeTuple>& parts,
                            bool gcd_coprime);

}  // namespace cuspcount
