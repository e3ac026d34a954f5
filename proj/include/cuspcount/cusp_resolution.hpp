#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuspcount/rational.hpp"

namespace cuspcount {

enum class SquareRole { Horizontal, Vertical, Last };

struct BoxSquare {
  long long size = 1;
  long long x = 0;
  long long y = 0;
  SquareRole role = SquareRole::Last;
};

// Square decomposition of Rect(p, q): repeatedly cut the largest square
// flush with the left side (wide case) or the bottom side (tall case).
struct BoxDiagram {
  long long p = 1;
  long long q = 1;
  std::vector<BoxSquare> squares;
};

// Exceptional divisor chain of the embedded cusp resolution. classes[i]
// holds the e_1..e_L coefficients of [F_i]; products[i][j] is the
// intersection matrix under diag(-1,...,-1).
struct DivisorChain {
  long long p = 1;
  long long q = 1;
  std::vector<long long> weights;
  std::vector<SquareRole> roles;
  std::vector<std::vector<long long>> classes;
  std::vector<long long> self_ints;
  std::vector<std::vector<long long>> products;
};

struct HjExpansions {
  std::vector<long long> hor;
  std::vector<long long> ver;
};

enum class RenderFormat { Ascii, Svg };

// Side lengths of the squares of Box(p, q), in construction order.
std::vector<long long> weight_sequence(long long p, long long q);

BoxDiagram box_diagram(long long p, long long q);

// Plus continued fraction of p/q (p >= q): run lengths of the grouped
// weight sequence.
std::vector<long long> cf_plus(long long p, long long q);

// Absolute self-intersections of the horizontal and vertical chains.
// [hor] evaluates as a minus continued fraction to p/(p-q), [ver] to
// q/(q - p mod q); ver is empty for q = 1.
HjExpansions hj_expansions(long long p, long long q);

DivisorChain chain_classes(long long p, long long q);

// Cabling parameters from Newton-Puiseux pairs: s_1 = r_1 and
// s_i = r_i - r_{i-1} p_i + p_{i-1} p_i s_{i-1}.
std::vector<std::pair<long long, long long>> puiseux_to_cabling(
    const std::vector<std::pair<long long, long long>>& pairs);

// (2 + self_int - c1 - (p-1)(q-1)) / 2.
long long double_points(long long self_int, long long c1, long long p,
                        long long q);

std::string render_box(long long p, long long q, RenderFormat format,
                       long long scale = 10);

}  // namespace cuspcount
