#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "cuspcount/errors.hpp"

namespace cuspcount {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    reduce();
  }

  // Accepts "num", "num/den", optional leading '-'.
  static Rational parse(const std::string& text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Int floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  Rational operator-() const { return Rational(raw{}, -num_, den_); }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  int cmp(const Rational& o) const {
    Int lhs = num_ * o.den_, rhs = o.num_ * den_;
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
  }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return cmp(o) < 0; }
  bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
  bool operator>(const Rational& o) const { return cmp(o) > 0; }
  bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

  // "n" when integral, otherwise "num/den".
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Fixed-point decimal with the given number of fractional digits, truncated
  // toward zero. Deterministic rendering for CSV output.
  std::string decimal(int digits) const;

 private:
  struct raw {};
  Rational(raw, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_, den_;
};

inline Int gcd_ll(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

}  // namespace cuspcount
