#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/chord.hpp"
#include "ribbon/flags.hpp"
#include "ribbon/generate.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/topology.hpp"
#include "ribbon/universality.hpp"

namespace ribbon::cli {
namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RibbonGraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

json class_json(const CanonicalClass& c) {
  return json{{"i", c.i}, {"j", c.j}, {"k", c.k}, {"l", c.l}, {"m", c.m}};
}

json slot_json(const Slot& s) { return json{{"vertex", s.vertex}, {"position", s.position}}; }

void print_poly(std::ostream& out, const BRPoly& p, bool as_json) {
  out << (as_json ? to_json(p) : to_text(p)) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of ribbon graphs with flags", "ribbon"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string file_b;

  auto* info = app.add_subcommand("info", "Topological invariants as JSON");
  info->add_option("file", file, "Graph file, '-' for stdin")->required();

  std::string method = "state-sum";
  std::string variant = "R";
  bool as_json = false;
  bool parallel = false;
  unsigned threads = 0;
  auto* poly = app.add_subcommand("poly", "Polynomial of a graph");
  poly->add_option("file", file)->required();
  poly->add_option("--method", method)->check(CLI::IsMember({"state-sum", "recurrence"}));
  poly->add_option("--variant", variant)->check(CLI::IsMember({"R", "Rprime"}));
  poly->add_flag("--json", as_json);
  poly->add_flag("--parallel", parallel);
  poly->add_option("--threads", threads);

  int ci = 0, cj = 0, ck = 0, cl = 0, cm = 0;
  auto* coeff = app.add_subcommand("coeff", "Coefficient of (Y-1)^i Z^j S^k T^l W^m as a polynomial in X");
  coeff->add_option("file", file)->required();
  coeff->add_option("--i", ci)->required();
  coeff->add_option("--j", cj)->required();
  coeff->add_option("--k", ck)->required();
  coeff->add_option("--l", cl)->required();
  coeff->add_option("--m", cm)->required()->check(CLI::Range(0, 1));
  coeff->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check", "Verify the cut/contraction identity at every edge");
  check->add_option("file", file)->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical class of a connected graph or chord diagram");
  canonical->add_option("file", file)->required();

  std::size_t budget = 10000;
  std::string mode = "strict";
  auto* equiv = app.add_subcommand("equiv", "Flag-equivalence by bounded search");
  equiv->add_option("a", file)->required();
  equiv->add_option("b", file_b)->required();
  equiv->add_option("--budget", budget);
  equiv->add_option("--mode", mode)->check(CLI::IsMember({"strict", "relaxed"}));

  int max_n = 3;
  int max_flags = 4;
  int max_components = 1;
  auto* lambda = app.add_subcommand("lambda", "Universality coefficients of R");
  lambda->add_option("--max-n", max_n)->check(CLI::Range(0, 6));
  lambda->add_option("--max-flags", max_flags)->check(CLI::Range(0, 8));
  lambda->add_option("--max-components", max_components)->check(CLI::Range(1, 4));

  GenerateOptions gen_opts;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Random graph");
  gen->add_option("--vertices", gen_opts.vertices)->check(CLI::Range(1, 1000));
  gen->add_option("--edges", gen_opts.edges)->check(CLI::Range(0, 1000));
  gen->add_option("--flags", gen_opts.flags)->check(CLI::Range(0, 1000));
  auto* seed_opt = gen->add_option("--seed", seed);
  gen->add_option("--twist-prob", gen_opts.twist_prob)->check(CLI::Range(0.0, 1.0));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (info->parsed()) {
      const auto g = load_graph(file);
      out << to_json(basic_invariants(g), boundary_graph(g)) << '\n';
      return 0;
    }
    if (poly->parsed()) {
      const auto g = load_graph(file);
      BRPoly p = method == "recurrence" ? recurrence_r(g) : state_sum_r(g, {parallel, threads});
      if (variant == "Rprime") p = substitute_s_inv_z(p);
      print_poly(out, p, as_json);
      return 0;
    }
    if (coeff->parsed()) {
      print_poly(out, coeff_rijklm(load_graph(file), ci, cj, ck, cl, cm), as_json);
      return 0;
    }
    if (check->parsed()) {
      const auto g = load_graph(file);
      json rows = json::array();
      bool ok = true;
      for (const auto& [e, t] : g.edges()) {
        const auto r = check_edge_identity(g, e);
        ok = ok && (!r.applicable || r.holds);
        json row{{"edge", e}, {"class", describe(r.cls)}, {"rule", r.rule}};
        row["holds"] = r.applicable ? json(r.holds) : json(nullptr);
        rows.push_back(std::move(row));
      }
      out << json{{"edges", rows}, {"ok", ok}}.dump() << '\n';
      return ok ? 0 : 1;
    }
    if (canonical->parsed()) {
      const std::string text = slurp(file);
      RibbonGraph rosette;
      if (text.find("word:") != std::string::npos) {
        rosette = diagram_to_rosette(parse_diagram(text));
      } else {
        const auto g = parse_graph(text);
        if (component_count(g) != 1) throw InputError("canonical needs a connected graph");
        rosette = to_rosette(g);
      }
      const auto rep = canonical_representative(rosette);
      json signs = json::object();
      for (const auto& [c, t] : rep.signs) signs[c] = t == Twist::twisted ? "-" : "+";
      out << json{{"class", class_json(canonical_class(rosette))}, {"word", rep.word}, {"signs", signs}}.dump()
          << '\n';
      return 0;
    }
    if (equiv->parsed()) {
      const auto a = load_graph(file);
      const auto b = load_graph(file_b);
      const auto r = flag_equivalent(a, b, budget, mode == "relaxed" ? MoveMode::relaxed : MoveMode::strict);
      json moves = json::array();
      for (const auto& mv : r.witness) {
        moves.push_back(json{{"flag", mv.flag},
                             {"kind", to_string(mv.kind)},
                             {"from", slot_json(mv.source)},
                             {"to", slot_json(mv.target)}});
      }
      out << json{{"result", to_string(r.verdict)}, {"moves", moves}, {"states", r.states}}.dump() << '\n';
      return r.verdict == Verdict::no ? 1 : 0;
    }
    if (lambda->parsed()) {
      const PhiOracle<BRPoly> phi = [](const RibbonGraph& g) { return state_sum_r(g); };
      const auto table = extract_lambdas<BRPoly>(phi, BRPoly::var_x(), max_n, max_flags, max_components);
      json rows = json::array();
      for (const auto& [sig, value] : table.entries) {
        rows.push_back(json{{"i", sig.i},
                            {"j", sig.j},
                            {"k", sig.k},
                            {"l", sig.l},
                            {"m", sig.m},
                            {"value", json::parse(to_json(value))}});
      }
      out << rows.dump() << '\n';
      return 0;
    }
    if (gen->parsed()) {
      if (seed_opt->count() == 0) seed = std::random_device{}();
      out << "# seed: " << seed << '\n' << serialize_graph(random_graph(gen_opts, seed));
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ribbon::cli
