#include "cuspcount/serialize.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "cuspcount/errors.hpp"

namespace cuspcount {

namespace {

constexpr int kMaxDeltaPower = 64;

[[noreturn]] void fail_at(std::size_t pos, const std::string& why) {
  throw ParseError("position " + std::to_string(pos) + ": " + why);
}

class TextScanner {
 public:
  explicit TextScanner(const std::string& t) : t_(t) {}

  bool eof() const { return pos_ >= t_.size(); }
  char peek() const { return t_[pos_]; }
  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume(char c) {
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) fail_at(pos_, "expected " + what);
  }

  long long integer(const std::string& what) {
    const std::size_t start = pos_;
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    if (digits.empty()) fail_at(start, "expected " + what);
    if (digits.size() > 18) fail_at(start, what + " is too large");
    return std::stoll(digits);
  }

  // [-] digits [/ digits]
  Rational rational(bool allow_sign) {
    const std::size_t start = pos_;
    std::string raw;
    if (allow_sign && consume('-')) raw.push_back('-');
    bool any = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      raw.push_back(peek());
      ++pos_;
      any = true;
    }
    if (!any) fail_at(start, "expected a number");
    if (consume('/')) {
      raw.push_back('/');
      bool denom = false;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        raw.push_back(peek());
        ++pos_;
        denom = true;
      }
      if (!denom) fail_at(pos_, "expected a denominator");
    }
    return Rational::parse(raw);
  }

  void keyword(const std::string& word) {
    const std::size_t start = pos_;
    for (char c : word) {
      if (!consume(c)) fail_at(start, "expected \"" + word + "\"");
    }
  }

 private:
  const std::string& t_;
  std::size_t pos_ = 0;
};

PerturbedRational parse_axis(TextScanner& sc) {
  sc.skip_ws();
  std::vector<Rational> coeffs = {sc.rational(true)};
  while (true) {
    sc.skip_ws();
    if (sc.eof() || sc.peek() == ',') break;
    int sign;
    if (sc.consume('+')) {
      sign = 1;
    } else if (sc.consume('-')) {
      sign = -1;
    } else {
      fail_at(sc.pos(), "expected '+', '-', or ','");
    }
    sc.skip_ws();
    if (sc.eof() || sc.peek() == ',') {
      if (coeffs.size() < 2) coeffs.resize(2, Rational(0));
      coeffs[1] += Rational(sign);
      break;
    }
    const Rational k = sc.rational(false);
    sc.skip_ws();
    sc.expect('*', "'*'");
    sc.skip_ws();
    sc.keyword("eps");
    long long power = 1;
    if (sc.consume('^')) {
      power = sc.integer("an exponent");
      if (power < 1 || power > kMaxDeltaPower) {
        fail_at(sc.pos(), "perturbation power out of range");
      }
    }
    const auto idx = static_cast<std::size_t>(power);
    if (coeffs.size() <= idx) coeffs.resize(idx + 1, Rational(0));
    coeffs[idx] += Rational(sign) * k;
  }
  return PerturbedRational(std::move(coeffs));
}

}  // namespace

EllipsoidShape parse_shape(const std::string& text) {
  TextScanner sc(text);
  std::vector<PerturbedRational> axes;
  sc.skip_ws();
  if (sc.eof()) fail_at(0, "empty shape");
  axes.push_back(parse_axis(sc));
  sc.skip_ws();
  while (!sc.eof()) {
    sc.expect(',', "','");
    axes.push_back(parse_axis(sc));
    sc.skip_ws();
  }
  return EllipsoidShape(std::move(axes));
}

std::pair<long long, long long> parse_class_spec(const std::string& text) {
  TextScanner sc(text);
  long long lc = 0;
  long long ec = 0;
  bool first = true;
  sc.skip_ws();
  if (sc.eof()) fail_at(0, "empty class");
  while (true) {
    sc.skip_ws();
    if (sc.eof()) break;
    int sign = 1;
    if (sc.consume('-')) {
      sign = -1;
    } else if (sc.consume('+')) {
      sign = 1;
    } else if (!first) {
      fail_at(sc.pos(), "expected '+' or '-'");
    }
    sc.skip_ws();
    long long coef = 1;
    if (!sc.eof() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coef = sc.integer("a coefficient");
    }
    sc.skip_ws();
    if (sc.consume('l') || sc.consume('L')) {
      lc += sign * coef;
    } else if (sc.consume('e') || sc.consume('E')) {
      ec += sign * coef;
    } else {
      fail_at(sc.pos(), "expected 'l' or 'e'");
    }
    first = false;
  }
  return {lc, ec};
}

OrderedJson perturbed_to_json(const PerturbedRational& v) {
  OrderedJson coeffs = OrderedJson::array();
  for (int i = 0; i <= v.degree(); ++i) coeffs.push_back(v.coeff(i).str());
  return OrderedJson{{"coeffs", std::move(coeffs)}};
}

PerturbedRational perturbed_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ParseError("expected an object with a \"coeffs\" array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("coefficients must be strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return PerturbedRational(std::move(coeffs));
}

OrderedJson shape_to_json(const EllipsoidShape& a) {
  OrderedJson out = OrderedJson::array();
  for (int axis = 1; axis <= a.n(); ++axis) {
    out.push_back(perturbed_to_json(a.entry(axis)));
  }
  return out;
}

EllipsoidShape shape_from_json(const OrderedJson& j) {
  if (!j.is_array()) throw ParseError("expected an array of axis entries");
  std::vector<PerturbedRational> axes;
  for (const auto& e : j) axes.push_back(perturbed_from_json(e));
  return EllipsoidShape(std::move(axes));
}

OrderedJson orbit_to_json(const ReebOrbit& o) {
  return OrderedJson{{"axis", o.axis}, {"mult", o.mult}};
}

ReebOrbit orbit_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("axis") || !j.contains("mult") ||
      !j["axis"].is_number_integer() || !j["mult"].is_number_integer()) {
    throw ParseError("expected an object with integer \"axis\" and \"mult\"");
  }
  ReebOrbit o;
  o.axis = j["axis"].get<int>();
  o.mult = j["mult"].get<long long>();
  if (o.axis < 1 || o.mult < 1) {
    throw ParseError("axis and mult must be positive");
  }
  return o;
}

}  // namespace cuspcount
