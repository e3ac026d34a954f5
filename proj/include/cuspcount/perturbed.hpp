#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cuspcount/rational.hpp"

namespace cuspcount {

// Polynomial c0 + c1*d + c2*d^2 + ... in a positive infinitesimal d, with
// exact rational coefficients. Ordered lexicographically on (c0, c1, ...),
// which is the order of values for all sufficiently small d > 0.
// Canonical form: trailing zero coefficients trimmed (zero == empty vector).
class PerturbedRational {
 public:
  PerturbedRational() = default;
  PerturbedRational(long long c0) { coeffs_.assign(1, Rational(c0)); trim(); }
  PerturbedRational(const Rational& c0) { coeffs_.assign(1, c0); trim(); }
  explicit PerturbedRational(std::vector<Rational> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }
  PerturbedRational(std::initializer_list<Rational> coeffs)
      : coeffs_(coeffs) {
    trim();
  }

  static PerturbedRational delta(int power = 1) {
    std::vector<Rational> c(static_cast<size_t>(power) + 1, Rational(0));
    c.back() = Rational(1);
    return PerturbedRational(std::move(c));
  }

  // Degree in d; zero has degree -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return degree() <= 0; }

  Rational coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  // Value at d = 0.
  Rational constant_term() const { return coeff(0); }

  // Sign for all sufficiently small d > 0: sign of the lowest nonzero
  // coefficient.
  int sign() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return c.sign();
    return 0;
  }

  PerturbedRational operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return PerturbedRational(std::move(c));
  }
  PerturbedRational operator+(const PerturbedRational& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return PerturbedRational(std::move(c));
  }
  PerturbedRational operator-(const PerturbedRational& o) const {
    return *this + (-o);
  }
  PerturbedRational operator*(const PerturbedRational& o) const {
    if (is_zero() || o.is_zero()) return PerturbedRational();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      for (size_t j = 0; j < o.coeffs_.size(); ++j)
        c[i + j] += coeffs_[i] * o.coeffs_[j];
    return PerturbedRational(std::move(c));
  }
  PerturbedRational& operator+=(const PerturbedRational& o) { return *this = *this + o; }
  PerturbedRational& operator-=(const PerturbedRational& o) { return *this = *this - o; }
  PerturbedRational& operator*=(const PerturbedRational& o) { return *this = *this * o; }

  // Division by a nonzero plain rational (closed in Q[d], unlike general
  // division).
  PerturbedRational div_rational(const Rational& r) const {
    if (r.is_zero()) throw DomainError("division by zero rational");
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / r;
    return PerturbedRational(std::move(c));
  }

  int cmp(const PerturbedRational& o) const {
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (size_t i = 0; i < n; ++i) {
      int c = coeff(i).cmp(o.coeff(i));
      if (c != 0) return c;
    }
    return 0;
  }
  bool operator==(const PerturbedRational& o) const { return cmp(o) == 0; }
  bool operator!=(const PerturbedRational& o) const { return cmp(o) != 0; }
  bool operator<(const PerturbedRational& o) const { return cmp(o) < 0; }
  bool operator<=(const PerturbedRational& o) const { return cmp(o) <= 0; }
  bool operator>(const PerturbedRational& o) const { return cmp(o) > 0; }
  bool operator>=(const PerturbedRational& o) const { return cmp(o) >= 0; }

  // Evaluation at a concrete rational d, for sampling oracles in tests.
  Rational eval(const Rational& d) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * d + coeffs_[i];
    return acc;
  }

  // Human-readable form, e.g. "3+1*eps" or "51/23". Zero renders as "0".
  std::string str() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// floor(x/y) for all sufficiently small d > 0, any polynomial degree.
// Requires y > 0. Diverging quotients (y vanishing at d=0 to higher order
// than x) are a DomainError.
Int floor_quotient(const PerturbedRational& x, const PerturbedRational& y);

// Spec surface: same as floor_quotient, but operands must have degree <= 1
// (UnsupportedDegree otherwise).
Int floor_ratio(const PerturbedRational& x, const PerturbedRational& y);

// ceil(x/y) under the same contract as floor_quotient.
Int ceil_quotient(const PerturbedRational& x, const PerturbedRational& y);

}  // namespace cuspcount
