#include "cuspcount/obstructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cuspcount/errors.hpp"

namespace cuspcount {

ObstructionRecord embedding_bound(const HomologySurrogate& klass,
                                  const EllipsoidShape& a,
                                  bool nonvanishing_certified) {
  if (klass.chern < 2) {
    throw DomainError("bound needs a class with chern number at least 2");
  }
  ObstructionRecord rec{klass,
                        a,
                        orbit_at(a, klass.chern - 1),
                        PerturbedRational(),
                        PerturbedRational(),
                        PerturbedRational(1),
                        Rational(),
                        nonvanishing_certified};
  rec.action = action(a, rec.orbit);
  if (rec.action.degree() == 0) {
    rec.bound = klass.area.div_rational(rec.action.constant_term());
  } else {
    rec.bound = klass.area;
    rec.bound_den = rec.action;
  }
  if (rec.bound_den.constant_term() == Rational(0)) {
    throw DomainError("orbit action vanishes with the perturbation");
  }
  rec.limit = rec.bound.constant_term() / rec.bound_den.constant_term();
  return rec;
}

std::vector<StaircaseRow> staircase_profile(
    const std::vector<StaircaseEntry>& entries) {
  std::map<Rational, Rational> best;
  for (const StaircaseEntry& e : entries) {
    if (e.p < 1 || e.q < 1) throw DomainError("cusp orders must be positive");
    if (std::gcd(e.p, e.q) != 1) throw NotCoprime("cusp orders share a factor");
    if (e.sign != 1 && e.sign != -1) throw DomainError("sign must be +1 or -1");
    if (e.klass.chern != e.p + e.q) {
      throw DomainError("chern number must equal the sum of the cusp orders");
    }
    std::vector<PerturbedRational> axes = {
        PerturbedRational(e.q),
        PerturbedRational(std::vector<Rational>{Rational(e.p),
                                                Rational(e.sign)})};
    const ObstructionRecord rec =
        embedding_bound(e.klass, EllipsoidShape(std::move(axes)));
    const Rational ratio = Rational(e.p) / Rational(e.q);
    auto it = best.find(ratio);
    if (it == best.end()) {
      best.emplace(ratio, rec.limit);
    } else if (it->second < rec.limit) {
      it->second = rec.limit;
    }
  }
  std::vector<StaircaseRow> rows;
  rows.reserve(best.size());
  for (const auto& [ratio, bound] : best) rows.push_back({ratio, bound});
  return rows;
}

std::string staircase_csv(const std::vector<StaircaseRow>& rows) {
  std::string out = "ratio,bound,decimal\n";
  for (const StaircaseRow& r : rows) {
    out += r.ratio.str();
    out += ',';
    out += r.bound.str();
    out += ',';
    out += r.bound.decimal(12);
    out += '\n';
  }
  return out;
}

}  // namespace cuspcount
