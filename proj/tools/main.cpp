#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuspcount/acceptance.hpp"
#include "cuspcount/blowup_homology.hpp"
#include "cuspcount/cusp_resolution.hpp"
#include "cuspcount/errors.hpp"
#include "cuspcount/formal_curves.hpp"
#include "cuspcount/hirzebruch_f1.hpp"
#include "cuspcount/obstructions.hpp"
#include "cuspcount/serialize.hpp"
#include "cuspcount/spectrum.hpp"

namespace {

using cuspcount::OrderedJson;

void emit(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

void emit_bare(const OrderedJson& j) { std::cout << j.dump() << "\n"; }

OrderedJson parse_json_text(const std::string& text) {
  try {
    return OrderedJson::parse(text);
  } catch (const std::exception& e) {
    throw cuspcount::ParseError(std::string("invalid json: ") + e.what());
  }
}

std::vector<cuspcount::ReebOrbit> parse_orbit_list(const std::string& text) {
  const OrderedJson j = parse_json_text(text);
  if (!j.is_array()) {
    throw cuspcount::ParseError("expected a json array of orbits");
  }
  std::vector<cuspcount::ReebOrbit> out;
  for (const auto& e : j) out.push_back(cuspcount::orbit_from_json(e));
  return out;
}

cuspcount::LatticeTuple parse_tuple(const std::string& text) {
  cuspcount::LatticeTuple out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw cuspcount::ParseError("expected a comma separated integer tuple");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::string role_name(cuspcount::SquareRole role) {
  switch (role) {
    case cuspcount::SquareRole::Horizontal:
      return "horizontal";
    case cuspcount::SquareRole::Vertical:
      return "vertical";
    default:
      return "last";
  }
}

OrderedJson class_to_json(const cuspcount::BlowupClass& a) {
  OrderedJson j;
  j["base"] = a.base == cuspcount::SurfaceBase::CP2 ? "cp2" : "f1";
  j["base_coeffs"] = a.base_coeffs;
  j["exc"] = a.exc;
  return j;
}

OrderedJson cremona_to_json(const cuspcount::CremonaResult& crem) {
  OrderedJson trace = OrderedJson::array();
  for (const cuspcount::CremonaState& s : crem.trace) {
    trace.push_back(OrderedJson{{"d", s.d}, {"exc", s.exc}});
  }
  return OrderedJson{{"representable", crem.representable},
                     {"reason", crem.reason},
                     {"trace", trace}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cuspcount::DomainError("cannot open " + path);
  out << content;
  if (!out) throw cuspcount::DomainError("cannot write " + path);
}

int run_repro() {
  int failed = 0;
  for (const auto& r : cuspcount::run_acceptance()) {
    std::printf("[%s] %2d %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cuspcount;

  CLI::App app{"exact invariants of ellipsoid spectra, cusp resolutions, and"
               " perfect exceptional classes"};
  app.footer("Environment: CUSPCOUNT_THREADS caps worker threads.");
  bool repro = false;
  app.add_flag("--repro", repro, "run the full acceptance suite");

  std::string shape_text;
  long long rank = 1;

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "capacities at ranks 1..k");
  spectrum_cmd->add_option("--shape", shape_text)->required();
  spectrum_cmd->add_option("--k", rank)->required()
      ->check(CLI::PositiveNumber);
  spectrum_cmd->callback([&] {
    const EllipsoidShape a = parse_shape(shape_text);
    OrderedJson caps = OrderedJson::array();
    for (long long k = 1; k <= rank; ++k) {
      caps.push_back(perturbed_to_json(capacity(a, k)));
    }
    emit(OrderedJson{{"shape", shape_to_json(a)}, {"capacities", caps}});
  });

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit realizing rank k");
  orbit_cmd->add_option("--shape", shape_text)->required();
  orbit_cmd->add_option("--k", rank)->required()->check(CLI::PositiveNumber);
  orbit_cmd->callback([&] {
    const EllipsoidShape a = parse_shape(shape_text);
    const ReebOrbit o = orbit_at(a, rank);
    emit(OrderedJson{{"k", rank},
                     {"orbit", orbit_to_json(o)},
                     {"action", perturbed_to_json(action(a, o))}});
  });

  auto* path_cmd =
      app.add_subcommand("delta-path", "maximizing lattice tuple at rank k");
  path_cmd->add_option("--shape", shape_text)->required();
  path_cmd->add_option("--k", rank)->required()->check(CLI::PositiveNumber);
  path_cmd->callback([&] {
    const EllipsoidShape a = parse_shape(shape_text);
    emit_bare(OrderedJson(delta_path(a, rank)));
  });

  long long axis = 1;
  long long mult = 1;
  auto* cz_cmd = app.add_subcommand("cz", "Conley-Zehnder index of an orbit");
  cz_cmd->add_option("--shape", shape_text)->required();
  cz_cmd->add_option("--axis", axis)->required()->check(CLI::PositiveNumber);
  cz_cmd->add_option("--mult", mult)->required()->check(CLI::PositiveNumber);
  cz_cmd->callback([&] {
    const EllipsoidShape a = parse_shape(shape_text);
    ReebOrbit o;
    o.axis = static_cast<int>(axis);
    o.mult = mult;
    emit(OrderedJson{{"orbit", orbit_to_json(o)}, {"cz", cz_index(a, o)}});
  });

  std::string positive_text = "[]";
  std::string negative_text = "[]";
  std::string area_text;
  long long chern_arg = 0;
  long long div_arg = 1;
  auto* index_cmd = app.add_subcommand(
      "formal-index", "index and energy of a formal curve");
  index_cmd->add_option("--shape", shape_text)->required();
  index_cmd->add_option("--positive", positive_text,
                        "json array of symplectization positive ends");
  index_cmd->add_option("--negative", negative_text,
                        "json array of negative ends");
  auto* area_opt = index_cmd->add_option(
      "--area", area_text, "class area; switches to a filling curve");
  auto* chern_opt = index_cmd->add_option("--chern", chern_arg);
  index_cmd->add_option("--div", div_arg);
  index_cmd->callback([&] {
    const EllipsoidShape a = parse_shape(shape_text);
    const auto negative = parse_orbit_list(negative_text);
    if (*area_opt || *chern_opt) {
      if (!(*area_opt && *chern_opt)) {
        throw ParseError("a filling curve needs both --area and --chern");
      }
      CobordismCurve curve;
      curve.klass.area = PerturbedRational(Rational::parse(area_text));
      curve.klass.chern = chern_arg;
      curve.klass.divisibility = div_arg;
      curve.negative_ends = negative;
      emit(OrderedJson{
          {"mode", "filling"},
          {"index", cob_index(a, curve)},
          {"energy", perturbed_to_json(cob_energy(a, curve))}});
      return;
    }
    SymplectizationCurve curve;
    curve.positive_ends = parse_orbit_list(positive_text);
    curve.negative_ends = negative;
    emit(OrderedJson{
        {"mode", "symplectization"},
        {"index", symp_index(a, curve)},
        {"energy", perturbed_to_json(symp_energy(a, curve))}});
  });

  long long c1_arg = 2;
  auto* assume_cmd = app.add_subcommand(
      "check-assumptions", "degeneration assumptions for a shape and c1");
  assume_cmd->add_option("--shape", shape_text)->required();
  assume_cmd->add_option("--c1", c1_arg)->required();
  assume_cmd->callback([&] {
    const EllipsoidShape a = parse_shape(shape_text);
    const AssumptionReport ra = check_assumption_A(a, c1_arg);
    const AssumptionReport rb = check_assumption_B(a, c1_arg);
    emit(OrderedJson{{"A", ra.holds},
                     {"B", rb.holds},
                     {"witness", !ra.holds ? ra.witness : rb.witness}});
  });

  std::string m_text;
  std::vector<std::string> part_texts;
  auto* hidden_cmd = app.add_subcommand(
      "hidden-constraint", "admissibility of a splitting into parts");
  hidden_cmd->add_option("--m", m_text, "target tuple, e.g. 3,2")->required();
  hidden_cmd->add_option("--part", part_texts, "one part tuple per flag")
      ->required();
  hidden_cmd->callback([&] {
    std::vector<LatticeTuple> parts;
    for (const std::string& t : part_texts) parts.push_back(parse_tuple(t));
    const HiddenConstraintReport rep =
        hidden_constraint_admissible(parse_tuple(m_text), parts);
    OrderedJson witness = OrderedJson::array();
    for (const Rational& w : rep.witness) witness.push_back(w.str());
    emit(OrderedJson{{"admissible", rep.admissible}, {"witness", witness}});
  });

  long long p_arg = 1;
  long long q_arg = 1;
  auto* weights_cmd =
      app.add_subcommand("weights", "weight sequence of a p,q cusp");
  weights_cmd->add_option("p", p_arg)->required();
  weights_cmd->add_option("q", q_arg)->required();
  weights_cmd->callback(
      [&] { emit_bare(OrderedJson(weight_sequence(p_arg, q_arg))); });

  std::string box_format = "ascii";
  std::string svg_path;
  long long scale_arg = 10;
  auto* box_cmd = app.add_subcommand("box", "square decomposition diagram");
  box_cmd->add_option("p", p_arg)->required();
  box_cmd->add_option("q", q_arg)->required();
  box_cmd->add_option("--format", box_format)
      ->check(CLI::IsMember({"ascii", "svg", "json"}));
  box_cmd->add_option("--svg", svg_path, "also write the svg to a file");
  box_cmd->add_option("--scale", scale_arg, "svg pixels per unit");
  box_cmd->callback([&] {
    if (!svg_path.empty()) {
      write_file(svg_path,
                 render_box(p_arg, q_arg, RenderFormat::Svg, scale_arg));
    }
    if (box_format == "ascii") {
      std::cout << render_box(p_arg, q_arg, RenderFormat::Ascii);
    } else if (box_format == "svg") {
      std::cout << render_box(p_arg, q_arg, RenderFormat::Svg, scale_arg);
    } else {
      const BoxDiagram d = box_diagram(p_arg, q_arg);
      OrderedJson squares = OrderedJson::array();
      for (const BoxSquare& s : d.squares) {
        squares.push_back(OrderedJson{{"size", s.size},
                                      {"x", s.x},
                                      {"y", s.y},
                                      {"role", role_name(s.role)}});
      }
      emit(OrderedJson{{"p", d.p}, {"q", d.q}, {"squares", squares}});
    }
  });

  auto* resolve_cmd =
      app.add_subcommand("resolve", "exceptional divisor chain of a cusp");
  resolve_cmd->add_option("p", p_arg)->required();
  resolve_cmd->add_option("q", q_arg)->required();
  resolve_cmd->callback([&] {
    const DivisorChain chain = chain_classes(p_arg, q_arg);
    OrderedJson roles = OrderedJson::array();
    for (SquareRole r : chain.roles) roles.push_back(role_name(r));
    OrderedJson adjacency = OrderedJson::array();
    for (std::size_t i = 0; i < chain.classes.size(); ++i) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t j = 0; j < chain.classes[i].size(); ++j) {
        if (i != j && chain.classes[i][j] == -1) row.push_back(j + 1);
      }
      adjacency.push_back(row);
    }
    emit(OrderedJson{{"p", chain.p},
                     {"q", chain.q},
                     {"weights", chain.weights},
                     {"roles", roles},
                     {"classes", chain.classes},
                     {"self_ints", chain.self_ints},
                     {"adjacency", adjacency},
                     {"products", chain.products}});
  });

  std::string base_text = "f1";
  std::string class_text;
  std::vector<long long> cusp_args;
  auto* perfect_cmd = app.add_subcommand(
      "perfect", "certify a class as perfect for a given cusp");
  perfect_cmd->add_option("--base", base_text)
      ->check(CLI::IsMember({"f1", "cp2"}));
  perfect_cmd->add_option("--class", class_text, "e.g. 5l-2e")->required();
  perfect_cmd->add_option("--cusp", cusp_args, "cusp orders p q")
      ->expected(2)
      ->required();
  perfect_cmd->callback([&] {
    const auto [lc, ec] = parse_class_spec(class_text);
    BlowupClass a;
    if (base_text == "f1") {
      a = make_f1_class(lc, ec);
    } else {
      if (ec != 0) throw DomainError("the plane has no e class");
      a = make_cp2_class(lc);
    }
    const long long p = cusp_args[0];
    const long long q = cusp_args[1];
    BlowupClass tilde = proper_transform_class(a, p, q);
    const bool numerically = is_numerically_exceptional(tilde);
    if (tilde.base == SurfaceBase::F1) tilde = f1_to_cp2(tilde);
    const CremonaResult crem = cremona_reduce(tilde);
    emit(OrderedJson{{"perfect", numerically && crem.representable},
                     {"numerically_exceptional", numerically},
                     {"proper_transform", class_to_json(tilde)},
                     {"cremona", cremona_to_json(crem)}});
  });

  long long max_p = 1;
  auto* stair_enum_cmd = app.add_subcommand(
      "f1-staircase", "perfect classes on the one point blowup");
  stair_enum_cmd->add_option("--max-p", max_p)->required()
      ->check(CLI::PositiveNumber);
  stair_enum_cmd->callback([&] {
    OrderedJson out = OrderedJson::array();
    for (const PerfEntry& e : enumerate_perf(max_p)) {
      OrderedJson row{{"p", e.p}, {"q", e.q}, {"d", e.d}, {"m", e.m}};
      if (e.j) {
        row["j"] = *e.j;
      } else {
        row["j"] = nullptr;
      }
      row["in_range"] = e.in_range;
      BlowupClass tilde =
          proper_transform_class(make_f1_class(e.d, -e.m), e.p, e.q);
      row["certificate"] = cremona_to_json(cremona_reduce(f1_to_cp2(tilde)));
      out.push_back(row);
    }
    emit(out);
  });

  bool uncertified = false;
  auto* obstruction_cmd = app.add_subcommand(
      "obstruction", "stable embedding bound from a class and a shape");
  obstruction_cmd->add_option("--area", area_text)->required();
  obstruction_cmd->add_option("--c1", c1_arg)->required();
  obstruction_cmd->add_option("--shape", shape_text)->required();
  obstruction_cmd->add_option("--div", div_arg);
  obstruction_cmd->add_flag("--uncertified", uncertified,
                            "mark the count as not certified nonvanishing");
  obstruction_cmd->callback([&] {
    HomologySurrogate klass;
    klass.area = PerturbedRational(Rational::parse(area_text));
    klass.chern = c1_arg;
    klass.divisibility = div_arg;
    const ObstructionRecord rec =
        embedding_bound(klass, parse_shape(shape_text), !uncertified);
    emit(OrderedJson{{"orbit", orbit_to_json(rec.orbit)},
                     {"action", perturbed_to_json(rec.action)},
                     {"bound", perturbed_to_json(rec.bound)},
                     {"bound_den", perturbed_to_json(rec.bound_den)},
                     {"limit", rec.limit.str()},
                     {"nonvanishing_certified", rec.nonvanishing_certified}});
  });

  long long area_l = 3;
  long long area_e = 1;
  int sign_arg = 1;
  std::string out_path;
  std::string stair_format = "csv";
  auto* stair_cmd = app.add_subcommand(
      "staircase", "bound profile of the staircase classes");
  stair_cmd->add_option("--base", base_text)->check(CLI::IsMember({"f1"}));
  stair_cmd->add_option("--max-p", max_p)->required()
      ->check(CLI::PositiveNumber);
  stair_cmd->add_option("--area-l", area_l, "area of the line class");
  stair_cmd->add_option("--area-e", area_e, "area of the exceptional class");
  stair_cmd->add_option("--sign", sign_arg, "perturbation sign, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  stair_cmd->add_option("--out", out_path, "write the table to a file");
  stair_cmd->add_option("--format", stair_format)
      ->check(CLI::IsMember({"csv", "json"}));
  stair_cmd->callback([&] {
    std::vector<StaircaseEntry> entries;
    for (const PerfEntry& e : enumerate_perf(max_p)) {
      StaircaseEntry entry;
      entry.klass.area = PerturbedRational(area_l * e.d - area_e * e.m);
      entry.klass.chern = e.p + e.q;
      entry.p = e.p;
      entry.q = e.q;
      entry.sign = sign_arg;
      entries.push_back(entry);
    }
    const auto rows = staircase_profile(entries);
    if (stair_format == "json") {
      OrderedJson out = OrderedJson::array();
      for (const StaircaseRow& r : rows) {
        out.push_back(OrderedJson{{"ratio", r.ratio.str()},
                                  {"bound", r.bound.str()},
                                  {"decimal", r.bound.decimal(12)}});
      }
      emit(out);
      return;
    }
    const std::string csv = staircase_csv(rows);
    if (out_path.empty()) {
      std::cout << csv;
    } else {
      write_file(out_path, csv);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (repro) return run_repro();
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return 2;
  }
  return 0;
}
