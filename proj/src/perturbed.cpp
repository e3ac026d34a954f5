#include "cuspcount/perturbed.hpp"

namespace cuspcount {

std::string PerturbedRational::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (i == 0) {
      out = c.str();
      continue;
    }
    std::string mag = (c.sign() < 0 ? (-c).str() : c.str());
    out += (c.sign() < 0 ? "-" : (out.empty() ? "" : "+"));
    out += mag + "*eps";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

static size_t lowest_nonzero(const PerturbedRational& p) {
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return i;
  return c.size();
}

static PerturbedRational shift_down(const PerturbedRational& p, size_t k) {
  const auto& c = p.coeffs();
  std::vector<Rational> out(c.begin() + static_cast<long>(k), c.end());
  return PerturbedRational(std::move(out));
}

Int floor_quotient(const PerturbedRational& x, const PerturbedRational& y) {
  if (y.sign() <= 0) throw DomainError("floor_quotient requires y > 0");
  if (x.is_zero()) return 0;
  size_t i = lowest_nonzero(x), j = lowest_nonzero(y);
  if (i < j)
    throw DomainError("floor_quotient diverges: y vanishes at 0 faster than x");
  if (i > j) return x.sign() > 0 ? Int(0) : Int(-1);
  PerturbedRational xs = shift_down(x, i), ys = shift_down(y, j);
  Rational c = xs.constant_term() / ys.constant_term();
  if (!c.is_integer()) return c.floor();
  Int n = c.num();
  PerturbedRational z = xs - PerturbedRational(Rational(n)) * ys;
  return z.sign() >= 0 ? n : n - 1;
}

Int floor_ratio(const PerturbedRational& x, const PerturbedRational& y) {
  if (x.degree() > 1 || y.degree() > 1)
    throw UnsupportedDegree("floor_ratio operands must have degree <= 1");
  if (y.sign() <= 0) throw DomainError("floor_ratio requires y > 0");
  return floor_quotient(x, y);
}

Int ceil_quotient(const PerturbedRational& x, const PerturbedRational& y) {
  return -floor_quotient(-x, y);
}

}  // namespace cuspcount
