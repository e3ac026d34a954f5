#pragma once

#include <vector>

#include "cuspcount/perturbed.hpp"

namespace cuspcount {

// Ellipsoid shape (a_1, ..., a_n); every entry > 0 in the infinitesimal
// order. Entries may carry eps terms to break rational dependencies.
class EllipsoidShape {
 public:
  explicit EllipsoidShape(std::vector<PerturbedRational> entries);

  int n() const { return static_cast<int>(entries_.size()); }
  const PerturbedRational& entry(int axis) const;  // 1-based
  const std::vector<PerturbedRational>& entries() const { return entries_; }

 private:
  std::vector<PerturbedRational> entries_;
};

// mult-fold cover of the planar Reeb circle on coordinate axis `axis`
// (1-based).
struct ReebOrbit {
  int axis = 1;
  long long mult = 1;

  bool operator==(const ReebOrbit& o) const {
    return axis == o.axis && mult == o.mult;
  }
  bool operator!=(const ReebOrbit& o) const { return !(*this == o); }
  bool operator<(const ReebOrbit& o) const {
    return axis != o.axis ? axis < o.axis : mult < o.mult;
  }
};

using LatticeTuple = std::vector<long long>;

PerturbedRational action(const EllipsoidShape& a, const ReebOrbit& orbit);

EllipsoidShape scale_shape(const EllipsoidShape& a, const Rational& lambda);

// k-th smallest element of the multiset {i * a_j : i >= 1, 1 <= j <= n}
// (1-based k). Equal values at or straddling rank k raise TieInSpectrum.
PerturbedRational capacity(const EllipsoidShape& a, long long k);

// The orbit whose action realizes capacity(a, k).
ReebOrbit orbit_at(const EllipsoidShape& a, long long k);

// Position of action(orbit) in the spectrum; inverse of orbit_at.
long long rank_of(const EllipsoidShape& a, const ReebOrbit& orbit);

// The unique tuple (i_1, ..., i_n), entries >= 1 summing to n + k - 1,
// maximizing min_s a_s * i_s. Exact ties raise AmbiguousMaximizer.
LatticeTuple delta_path(const EllipsoidShape& a, long long k);

// Orbit nu_i^{v_i} at the axis minimizing a_i * v_i; ties raise
// AmbiguousMinimizer.
ReebOrbit orbit_from_negative_tuple(const EllipsoidShape& a,
                                    const LatticeTuple& v);

// (n - 1) + 2j + 2 * sum_{s != axis} floor(a_axis * j / a_s), floors taken
// in the infinitesimal order (exact sign analysis, any eps degree).
long long cz_index(const EllipsoidShape& a, const ReebOrbit& orbit);

}  // namespace cuspcount
