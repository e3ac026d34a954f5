#pragma once

#include <string>
#include <vector>

#include "cuspcount/rational.hpp"

namespace cuspcount {

enum class SurfaceBase { CP2, F1 };

// Homology class in an iterated blowup. base_coeffs is [d] over CP2
// (class d*L) or [d, c] over F1 (class d*l + c*e). exc holds k_1..k_L with
// the class B - k_1 e_1 - ... - k_L e_L.
struct BlowupClass {
  SurfaceBase base = SurfaceBase::CP2;
  std::vector<long long> base_coeffs;
  std::vector<long long> exc;
};

struct CremonaState {
  long long d = 0;
  std::vector<long long> exc;
};

struct CremonaResult {
  bool representable = false;
  // States after each move, normalized; last state explains a failure.
  std::vector<CremonaState> trace;
  std::string reason;
};

BlowupClass make_cp2_class(long long d, std::vector<long long> exc = {});
BlowupClass make_f1_class(long long d, long long e_coef,
                          std::vector<long long> exc = {});

long long intersect(const BlowupClass& a, const BlowupClass& b);
long long chern(const BlowupClass& a);

// Subtracts weight_sequence(p, q) along fresh exceptional directions.
BlowupClass proper_transform_class(const BlowupClass& a, long long p,
                                   long long q);

// chern = 1 and self-intersection = -1.
bool is_numerically_exceptional(const BlowupClass& a);

// d*l + c*e over F1 becomes d*L - c'*e_0 with e_0 a fresh first
// exceptional direction.
BlowupClass f1_to_cp2(const BlowupClass& a);

// Reduces by Cremona moves on the three largest exceptional coefficients;
// representable when the terminal state is a single e_i.
CremonaResult cremona_reduce(const BlowupClass& a);

// proper_transform_class is numerically exceptional and Cremona-reduces
// to an exceptional direction.
bool is_perfect_exceptional(const BlowupClass& a, long long p, long long q);

}  // namespace cuspcount
