#include "cuspcount/spectrum.hpp"

#include <algorithm>
#include <queue>

namespace cuspcount {

EllipsoidShape::EllipsoidShape(std::vector<PerturbedRational> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("shape needs at least one entry");
  for (const auto& e : entries_)
    if (e.sign() <= 0) throw DomainError("shape entries must be positive");
}

const PerturbedRational& EllipsoidShape::entry(int axis) const {
  if (axis < 1 || axis > n()) throw DomainError("axis out of range");
  return entries_[static_cast<size_t>(axis) - 1];
}

PerturbedRational action(const EllipsoidShape& a, const ReebOrbit& orbit) {
  if (orbit.mult < 1) throw DomainError("orbit multiplicity must be >= 1");
  return a.entry(orbit.axis) * PerturbedRational(orbit.mult);
}

EllipsoidShape scale_shape(const EllipsoidShape& a, const Rational& lambda) {
  if (lambda.sign() <= 0) throw DomainError("scale factor must be positive");
  std::vector<PerturbedRational> scaled;
  scaled.reserve(a.entries().size());
  for (const auto& e : a.entries()) scaled.push_back(e * PerturbedRational(lambda));
  return EllipsoidShape(std::move(scaled));
}

namespace {

struct MergeEntry {
  PerturbedRational value;
  int axis;
  long long mult;
};

struct MergeOrder {
  // Min-heap on value; axis breaks heap ordering deterministically but never
  // hides a tie (equal values across axes are detected at pop time).
  bool operator()(const MergeEntry& l, const MergeEntry& r) const {
    int c = l.value.cmp(r.value);
    if (c != 0) return c > 0;
    return l.axis > r.axis;
  }
};

// Walks the merged spectrum; reports the k-th entry. Ties at or straddling
// rank k poison the query.
MergeEntry spectrum_entry(const EllipsoidShape& a, long long k) {
  if (k < 1) throw DomainError("spectrum rank must be >= 1");
  std::priority_queue<MergeEntry, std::vector<MergeEntry>, MergeOrder> heap;
  for (int axis = 1; axis <= a.n(); ++axis)
    heap.push({a.entry(axis), axis, 1});
  for (long long rank = 1;; ++rank) {
    MergeEntry cur = heap.top();
    heap.pop();
    heap.push({cur.value + a.entry(cur.axis), cur.axis, cur.mult + 1});
    if (heap.top().value == cur.value)
      throw TieInSpectrum("spectrum tie at rank " + std::to_string(rank) +
                          ": entries are rationally dependent (consider an "
                          "eps perturbation)");
    if (rank == k) return cur;
  }
}

}  // namespace

PerturbedRational capacity(const EllipsoidShape& a, long long k) {
  return spectrum_entry(a, k).value;
}

ReebOrbit orbit_at(const EllipsoidShape& a, long long k) {
  MergeEntry e = spectrum_entry(a, k);
  return ReebOrbit{e.axis, e.mult};
}

long long rank_of(const EllipsoidShape& a, const ReebOrbit& orbit) {
  PerturbedRational act = action(a, orbit);
  long long rank = 0;
  for (int s = 1; s <= a.n(); ++s) {
    Int count = floor_quotient(act, a.entry(s));
    if (count < 0) count = 0;
    if (s != orbit.axis && count >= 1 &&
        a.entry(s) * PerturbedRational(Rational(count)) == act)
      throw TieInSpectrum("action of axis " + std::to_string(orbit.axis) +
                          " orbit collides with axis " + std::to_string(s));
    rank += count.convert_to<long long>();
  }
  return rank;
}

LatticeTuple delta_path(const EllipsoidShape& a, long long k) {
  if (k < 1) throw DomainError("path index must be >= 1");
  int n = a.n();
  long long total = n + k - 1;

  LatticeTuple cur(static_cast<size_t>(n), 1);
  LatticeTuple best_tuple;
  PerturbedRational best;
  bool have_best = false, tied = false;
  LatticeTuple tied_tuple;

  // DFS over compositions of `total` into n parts >= 1; partial_min only
  // decreases along a branch, so branches strictly below `best` are dead.
  auto rec = [&](auto&& self, int axis, long long remaining,
                 const PerturbedRational& partial_min, bool has_min) -> void {
    if (axis == n) {
      cur[static_cast<size_t>(axis) - 1] = remaining;
      PerturbedRational v = a.entry(axis) * PerturbedRational(remaining);
      PerturbedRational m = has_min && partial_min < v ? partial_min : v;
      if (!have_best || m > best) {
        best = m;
        best_tuple = cur;
        have_best = true;
        tied = false;
      } else if (m == best) {
        tied = true;
        tied_tuple = cur;
      }
      return;
    }
    long long max_here = remaining - (n - axis);
    for (long long i = 1; i <= max_here; ++i) {
      cur[static_cast<size_t>(axis) - 1] = i;
      PerturbedRational v = a.entry(axis) * PerturbedRational(i);
      PerturbedRational m = has_min && partial_min < v ? partial_min : v;
      if (have_best && m < best) {
        // Larger i only grows this axis value; the min stays capped by
        // partial_min, so once even this axis value drops below best the
        // whole branch is dead only for small i. Continue scanning: v grows
        // with i. Prune only when the cap itself is below best.
        if (has_min && partial_min < best) return;
        continue;
      }
      self(self, axis + 1, remaining - i, m, true);
    }
  };
  rec(rec, 1, total, PerturbedRational(), false);

  if (tied) {
    std::string msg = "two tuples realize the same maximum: (";
    for (size_t i = 0; i < best_tuple.size(); ++i)
      msg += (i ? "," : "") + std::to_string(best_tuple[i]);
    msg += ") and (";
    for (size_t i = 0; i < tied_tuple.size(); ++i)
      msg += (i ? "," : "") + std::to_string(tied_tuple[i]);
    msg += ")";
    throw AmbiguousMaximizer(msg);
  }
  return best_tuple;
}

ReebOrbit orbit_from_negative_tuple(const EllipsoidShape& a,
                                    const LatticeTuple& v) {
  if (static_cast<int>(v.size()) != a.n())
    throw DomainError("tuple length must match shape dimension");
  for (long long x : v)
    if (x < 1) throw DomainError("tuple entries must be >= 1");
  int best_axis = 1;
  PerturbedRational best = a.entry(1) * PerturbedRational(v[0]);
  for (int s = 2; s <= a.n(); ++s) {
    PerturbedRational val =
        a.entry(s) * PerturbedRational(v[static_cast<size_t>(s) - 1]);
    int c = val.cmp(best);
    if (c == 0)
      throw AmbiguousMinimizer("axes " + std::to_string(best_axis) + " and " +
                               std::to_string(s) +
                               " both realize the minimum action");
    if (c < 0) {
      best = val;
      best_axis = s;
    }
  }
  // A later axis could still tie an earlier non-minimal one; only ties at
  // the minimum matter, so re-scan for equality against the winner.
  for (int s = 1; s <= a.n(); ++s) {
    if (s == best_axis) continue;
    PerturbedRational val =
        a.entry(s) * PerturbedRational(v[static_cast<size_t>(s) - 1]);
    if (val == best)
      throw AmbiguousMinimizer("axes " + std::to_string(best_axis) + " and " +
                               std::to_string(s) +
                               " both realize the minimum action");
  }
  return ReebOrbit{best_axis, v[static_cast<size_t>(best_axis) - 1]};
}

long long cz_index(const EllipsoidShape& a, const ReebOrbit& orbit) {
  if (orbit.mult < 1) throw DomainError("orbit multiplicity must be >= 1");
  PerturbedRational num =
      a.entry(orbit.axis) * PerturbedRational(orbit.mult);
  long long floors = 0;
  for (int s = 1; s <= a.n(); ++s) {
    if (s == orbit.axis) continue;
    floors += floor_quotient(num, a.entry(s)).convert_to<long long>();
  }
  return (a.n() - 1) + 2 * orbit.mult + 2 * floors;
}

}  // namespace cuspcount
