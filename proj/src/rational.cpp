#include "cuspcount/rational.hpp"

#include <cctype>

namespace cuspcount {

static bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(ns) || !all_digits(ds))
    throw ParseError("malformed rational: '" + text + "'");
  Int n(ns), d(ds);
  if (d == 0) throw ParseError("zero denominator in rational: '" + text + "'");
  if (neg) n = -n;
  return Rational(n, d);
}

std::string Rational::decimal(int digits) const {
  Int n = num_ < 0 ? Int(-num_) : num_;
  Int whole = n / den_;
  Int rem = n % den_;
  std::string out = (num_ < 0 ? "-" : "") + whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  return out;
}

}  // namespace cuspcount
