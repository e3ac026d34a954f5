#pragma once

#include <string>
#include <vector>

#include "cuspcount/formal_curves.hpp"
#include "cuspcount/spectrum.hpp"

namespace cuspcount {

// Upper bound on the stable embedding constant: area / action of the orbit
// at rank chern - 1. bound / bound_den is exact; bound_den is 1 whenever the
// quotient is a polynomial in the perturbation, otherwise the pair keeps the
// full fraction. limit is the value as the perturbation vanishes.
struct ObstructionRecord {
  HomologySurrogate klass;
  EllipsoidShape shape;
  ReebOrbit orbit;
  PerturbedRational action;
  PerturbedRational bound;
  PerturbedRational bound_den;
  Rational limit;
  bool nonvanishing_certified = true;
};

ObstructionRecord embedding_bound(const HomologySurrogate& klass,
                                  const EllipsoidShape& a,
                                  bool nonvanishing_certified = true);

struct StaircaseEntry {
  HomologySurrogate klass;
  long long p = 0;
  long long q = 0;
  int sign = 1;
};

struct StaircaseRow {
  Rational ratio;
  Rational bound;
};

// One row per distinct p/q; equal ratios keep the larger bound; rows sorted
// by ratio. Each entry runs against the shape (q, p + sign*delta).
std::vector<StaircaseRow> staircase_profile(
    const std::vector<StaircaseEntry>& entries);

// Columns: exact ratio, exact bound, bound truncated to 12 decimals.
std::string staircase_csv(const std::vector<StaircaseRow>& rows);

}  // namespace cuspcount
