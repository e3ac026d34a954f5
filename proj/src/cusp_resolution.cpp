#include "cuspcount/cusp_resolution.hpp"

#include <algorithm>

#include "cuspcount/errors.hpp"

namespace cuspcount {

namespace {

void require_coprime(long long p, long long q) {
  if (p < 1 || q < 1) throw DomainError("cusp parameters must be >= 1");
  if (gcd_ll(Int(p), Int(q)) != 1)
    throw NotCoprime("cusp parameters must be coprime");
}

// Run-length view of the weight sequence: runs[t] = {size, count}, sizes
// strictly decreasing, last size 1.
std::vector<std::pair<long long, long long>> weight_runs(long long p,
                                                         long long q) {
  std::vector<std::pair<long long, long long>> runs;
  long long w = std::max(p, q), h = std::min(p, q);
  while (h > 0) {
    runs.push_back({h, w / h});
    long long r = w % h;
    w = h;
    h = r;
  }
  return runs;
}

}  // namespace

std::vector<long long> weight_sequence(long long p, long long q) {
  require_coprime(p, q);
  std::vector<long long> weights;
  for (const auto& [size, count] : weight_runs(p, q))
    weights.insert(weights.end(), static_cast<size_t>(count), size);
  return weights;
}

BoxDiagram box_diagram(long long p, long long q) {
  require_coprime(p, q);
  BoxDiagram box;
  box.p = p;
  box.q = q;
  long long x = 0, y = 0;
  while (true) {
    long long w = p - x, h = q - y;
    if (w == h) {
      box.squares.push_back({w, x, y, SquareRole::Last});
      break;
    }
    if (w > h) {
      box.squares.push_back({h, x, y, SquareRole::Horizontal});
      x += h;
    } else {
      box.squares.push_back({w, x, y, SquareRole::Vertical});
      y += w;
    }
  }
  return box;
}

std::vector<long long> cf_plus(long long p, long long q) {
  require_coprime(p, q);
  if (p < q) throw DomainError("plus continued fraction needs p >= q");
  std::vector<long long> cf;
  for (const auto& run : weight_runs(p, q)) cf.push_back(run.second);
  return cf;
}

DivisorChain chain_classes(long long p, long long q) {
  BoxDiagram box = box_diagram(p, q);
  size_t L = box.squares.size();
  DivisorChain chain;
  chain.p = p;
  chain.q = q;
  for (const auto& s : box.squares) {
    chain.weights.push_back(s.size);
    chain.roles.push_back(s.role);
  }
  chain.classes.assign(L, std::vector<long long>(L, 0));
  for (size_t i = 0; i < L; ++i) {
    const BoxSquare& a = box.squares[i];
    chain.classes[i][i] = 1;
    long long adj = 0;
    for (size_t j = i + 1; j < L; ++j) {
      const BoxSquare& b = box.squares[j];
      // Shares a positive-length segment of a's right or top edge.
      bool right = b.x == a.x + a.size && b.y < a.y + a.size &&
                   b.y + b.size > a.y;
      bool above = b.y == a.y + a.size && b.x < a.x + a.size &&
                   b.x + b.size > a.x;
      if (right || above) {
        chain.classes[i][j] = -1;
        ++adj;
      }
    }
    chain.self_ints.push_back(-1 - adj);
  }
  chain.products.assign(L, std::vector<long long>(L, 0));
  for (size_t i = 0; i < L; ++i)
    for (size_t j = i; j < L; ++j) {
      long long v = 0;
      for (size_t k = 0; k < L; ++k)
        v -= chain.classes[i][k] * chain.classes[j][k];
      chain.products[i][j] = chain.products[j][i] = v;
    }
  return chain;
}

HjExpansions hj_expansions(long long p, long long q) {
  require_coprime(p, q);
  if (p <= q) throw DomainError("expansions need p > q >= 1");
  auto runs = weight_runs(p, q);
  size_t nruns = runs.size();
  HjExpansions out;
  // Run t alternates horizontal/vertical starting horizontal (p > q). The
  // i-th square of a run meets only its successor, except the run's last
  // square, which meets the whole next run and, when two runs follow, the
  // first square after that. The final square of all is skipped.
  for (size_t t = 0; t < nruns; ++t) {
    auto& side = (t % 2 == 0) ? out.hor : out.ver;
    long long count = runs[t].second;
    for (long long i = 0; i < count; ++i) {
      bool last_square = t + 1 == nruns && i + 1 == count;
      if (last_square) continue;
      long long adj;
      if (i + 1 < count)
        adj = 1;
      else
        adj = runs[t + 1].second + (t + 2 < nruns ? 1 : 0);
      side.push_back(1 + adj);
    }
  }
  return out;
}

std::vector<std::pair<long long, long long>> puiseux_to_cabling(
    const std::vector<std::pair<long long, long long>>& pairs) {
  if (pairs.empty()) throw DomainError("need at least one pair");
  std::vector<std::pair<long long, long long>> out;
  long long prev_p = 0, prev_r = 0, prev_s = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [pi, ri] = pairs[i];
    if (pi < 2) throw DomainError("multiplicity must be >= 2");
    if (gcd_ll(Int(pi), Int(ri)) != 1)
      throw DomainError("pair entries must be coprime");
    long long floor_i = (i == 0) ? pi : prev_r * pi;
    if (ri <= floor_i)
      throw DomainError("exponents must increase in normal form");
    long long si = (i == 0) ? ri : ri - prev_r * pi + prev_p * pi * prev_s;
    out.push_back({pi, si});
    prev_p = pi;
    prev_r = ri;
    prev_s = si;
  }
  return out;
}

long long double_points(long long self_int, long long c1, long long p,
                        long long q) {
  require_coprime(p, q);
  long long num = 2 + self_int - c1 - (p - 1) * (q - 1);
  if (num % 2 != 0) throw NonIntegral("double point count is not an integer");
  long long count = num / 2;
  if (count < 0) throw NegativeCount("double point count is negative");
  return count;
}

std::string render_box(long long p, long long q, RenderFormat format,
                       long long scale) {
  BoxDiagram box = box_diagram(p, q);
  if (format == RenderFormat::Ascii) {
    // Lattice (x, y), y up, maps to row 2(q - y), column 2x. Edges first,
    // corners second, so junctions always render '+'.
    size_t rows = static_cast<size_t>(2 * q + 1);
    size_t cols = static_cast<size_t>(2 * p + 1);
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    for (const auto& s : box.squares) {
      size_t top = static_cast<size_t>(2 * (q - s.y - s.size));
      size_t bot = static_cast<size_t>(2 * (q - s.y));
      size_t left = static_cast<size_t>(2 * s.x);
      size_t right = static_cast<size_t>(2 * (s.x + s.size));
      for (size_t c = left; c <= right; ++c) {
        canvas[top][c] = '-';
        canvas[bot][c] = '-';
      }
      for (size_t r = top; r <= bot; ++r) {
        canvas[r][left] = '|';
        canvas[r][right] = '|';
      }
    }
    for (const auto& s : box.squares) {
      size_t top = static_cast<size_t>(2 * (q - s.y - s.size));
      size_t bot = static_cast<size_t>(2 * (q - s.y));
      size_t left = static_cast<size_t>(2 * s.x);
      size_t right = static_cast<size_t>(2 * (s.x + s.size));
      canvas[top][left] = canvas[top][right] = '+';
      canvas[bot][left] = canvas[bot][right] = '+';
    }
    std::string out;
    for (const auto& line : canvas) {
      out += line;
      out += '\n';
    }
    return out;
  }
  if (scale < 1) throw DomainError("scale must be >= 1");
  long long w = p * scale, h = q * scale;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(w) + "\" height=\"" + std::to_string(h) +
                    "\" viewBox=\"0 0 " + std::to_string(w) + " " +
                    std::to_string(h) + "\">\n";
  for (const auto& s : box.squares) {
    long long sx = s.x * scale;
    long long sy = (q - s.y - s.size) * scale;
    long long side = s.size * scale;
    const char* fill = s.role == SquareRole::Horizontal ? "#dbeafe"
                       : s.role == SquareRole::Vertical ? "#dcfce7"
                                                        : "#fee2e2";
    svg += "  <rect x=\"" + std::to_string(sx) + "\" y=\"" +
           std::to_string(sy) + "\" width=\"" + std::to_string(side) +
           "\" height=\"" + std::to_string(side) + "\" fill=\"" + fill +
           "\" stroke=\"#1f2937\" stroke-width=\"1\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cuspcount
