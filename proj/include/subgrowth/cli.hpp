#pragma once

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subgrowth/acceptance.hpp"
#include "subgrowth/catalog.hpp"
#include "subgrowth/gog.hpp"
#include "subgrowth/growth.hpp"
#include "subgrowth/oracle.hpp"

namespace subgrowth::cli {

using nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInputError = 1, kCapExceeded = 2 };

inline ordered_json to_json(const Rational& r) {
  return ordered_json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  bool json = false;
  bool slow = false;
  std::size_t max_group_order = 10000;
  std::size_t max_n = 8;
  unsigned threads = 1;

  Caps caps() const {
    Caps c;
    c.max_group_order = max_group_order;
    c.max_typesum_n = max_n;
    c.max_enumerate_n = slow ? 6 : 5;
    c.threads = threads;
    return c;
  }
};

inline GraphOfGroups load(const std::string& path, const Options& opt) {
  return parse_gog(read_input(path), opt.caps());
}

inline std::string type_text(const GraphOfGroups& g, const TypePartition& t) {
  std::string s;
  for (std::size_t v = 0; v < t.xi.size(); ++v) {
    s += (v ? " " : "") + g.vertices()[v].name + ":";
    for (std::size_t i = 0; i < t.xi[v].size(); ++i) s += (i ? "," : "") + std::to_string(t.xi[v][i]);
  }
  return s;
}

inline void cmd_mu(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
  GrowthReport r = mu(g, opt.caps());
  if (opt.json)
    out << ordered_json{{"mu", to_json(r.mu)}}.dump(2) << "\n";
  else
    out << r.mu.get_str() << "\n";
}

inline void cmd_chi(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
  EulerData e = euler_characteristic(g);
  if (opt.json)
    out << ordered_json{{"chi", to_json(e.chi)}}.dump(2) << "\n";
  else
    out << e.chi.get_str() << "\n";
}

inline void cmd_report(const GraphOfGroups& g, const Options& opt, const std::string& dump_path, std::size_t slope_n,
                       std::ostream& out) {
  std::ofstream dump;
  if (!dump_path.empty()) {
    dump.open(dump_path);
    if (!dump) throw InputError("cannot write '" + dump_path + "'");
  }
  GrowthReport r = mu(g, opt.caps(), dump_path.empty() ? nullptr : &dump);
  GrowthModel m = build_growth_model(g, opt.caps());
  std::vector<SlopeRow> slope;
  if (slope_n >= 2) slope = slope_diagnostic(g, slope_n, opt.caps());

  if (opt.json) {
    ordered_json j;
    j["mu"] = to_json(r.mu);
    j["chi"] = to_json(r.chi);
    j["mu_free"] = to_json(r.mu_free);
    if (r.expected_mu) {
      j["expected_mu"] = to_json(*r.expected_mu);
      j["expected_mu_matches"] = !r.expected_mismatch();
    }
    ordered_json verts = ordered_json::array();
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      const auto& cat = m.vertex_catalogs[v];
      ordered_json classes = ordered_json::array();
      for (std::size_t i = 0; i < cat.size(); ++i) {
        if (sgn(r.optimizer[v][i]) == 0) continue;
        classes.push_back({{"class", i + 1},
                           {"subgroup", subgroup_generators_text(cat.lattice, cat.stabilizer(i))},
                           {"index", cat.classes[i].degree},
                           {"weight", to_json(r.optimizer[v][i])}});
      }
      verts.push_back({{"vertex", g.vertices()[v].name}, {"sigma", to_json(r.sigma[v])}, {"dominant", classes}});
    }
    j["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (std::size_t k = 0; k < g.edges().size(); ++k)
      edges.push_back({{"edge", g.edges()[k].name}, {"tau", to_json(r.tau[k])}});
    j["edges"] = edges;
    j["lp"] = {{"variables", r.variables},
               {"constraints", r.constraints},
               {"pivots", r.pivots},
               {"redundant_rows", r.redundant_rows}};
    if (!slope.empty()) {
      ordered_json rows = ordered_json::array();
      for (const auto& s : slope) rows.push_back({{"n", s.n}, {"slope_float", s.slope}});
      j["slope_diagnostic"] = rows;
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "mu\t" << r.mu.get_str() << "\n"
      << "chi\t" << r.chi.get_str() << "\n"
      << "mu_free\t" << r.mu_free.get_str() << "\n";
  if (r.expected_mu)
    out << "expected_mu\t" << r.expected_mu->get_str() << "\t"
        << (r.expected_mismatch() ? "MISMATCH (computed " + r.mu.get_str() + ")" : "ok") << "\n";
  out << "dominant configuration:\n";
  std::istringstream dom(r.dominant);
  for (std::string line; std::getline(dom, line);) out << "  " << line << "\n";
  for (std::size_t k = 0; k < g.edges().size(); ++k) out << "tau\t" << g.edges()[k].name << "\t" << r.tau[k].get_str() << "\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    out << "sigma\t" << g.vertices()[v].name << "\t" << r.sigma[v].get_str() << "\n";
  out << "lp\tvariables=" << r.variables << " constraints=" << r.constraints << " pivots=" << r.pivots
      << " redundant_rows=" << r.redundant_rows << "\n";
  if (!slope.empty()) {
    out << "slope diagnostic (floating point, log|Hom|/(n log n) - 1):\n";
    for (const auto& s : slope) {
      std::ostringstream v;
      v.precision(6);
      v << std::fixed << s.slope + 0.0;
      out << "  n=" << s.n << "\t" << v.str() << "\n";
    }
  }
}

inline void cmd_catalog(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
  GrowthModel m = build_growth_model(g, opt.caps());
  ordered_json j = ordered_json::array();
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& cat = m.vertex_catalogs[v];
    // restriction matrices of the edges at this vertex
    std::vector<std::pair<std::string, const RestrictionMatrix*>> mats;
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const auto& e = g.edges()[k];
      if (e.x == v) mats.emplace_back(e.name + (e.is_loop() ? ".left" : ""), &m.into_x[k]);
      if (e.y == v) mats.emplace_back(e.name + (e.is_loop() ? ".right" : ""), &m.into_y[k]);
    }
    if (opt.json) {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < cat.size(); ++i) {
        ordered_json row{{"class", i + 1},
                         {"subgroup", subgroup_generators_text(cat.lattice, cat.stabilizer(i))},
                         {"order", cat.stabilizer(i).order},
                         {"index", cat.classes[i].degree},
                         {"aut_count", cat.classes[i].aut_count},
                         {"class_size", cat.stabilizer(i).class_size}};
        ordered_json res = ordered_json::object();
        for (const auto& [name, mat] : mats) res[name] = mat->column(i);
        row["restrictions"] = res;
        rows.push_back(row);
      }
      j.push_back({{"vertex", g.vertices()[v].name}, {"group", g.vertices()[v].group.label()}, {"classes", rows}});
      continue;
    }
    out << "vertex " << g.vertices()[v].name << " (order " << cat.group.order() << ", " << cat.size()
        << " classes)\n";
    out << "class\tsubgroup\tindex\taut";
    for (const auto& [name, mat] : mats) out << "\t" << name;
    out << "\n";
    for (std::size_t i = 0; i < cat.size(); ++i) {
      out << i + 1 << "\t" << subgroup_generators_text(cat.lattice, cat.stabilizer(i)) << "\t"
          << cat.classes[i].degree << "\t" << cat.classes[i].aut_count;
      for (const auto& [name, mat] : mats) {
        out << "\t";
        auto col = mat->column(i);
        for (std::size_t r = 0; r < col.size(); ++r) out << (r ? " " : "") << col[r];
      }
      out << "\n";
    }
  }
  for (std::size_t k = 0; k < g.edges().size() && !opt.json; ++k) {
    const auto& cat = m.edge_catalogs[k];
    out << "edge " << g.edges()[k].name << " classes:";
    for (std::size_t i = 0; i < cat.size(); ++i)
      out << " [" << i + 1 << "] " << subgroup_generators_text(cat.lattice, cat.stabilizer(i));
    out << "\n";
  }
  if (opt.json) out << j.dump(2) << "\n";
}

inline void cmd_homcount(const GraphOfGroups& g, const Options& opt, std::size_t n, bool enumerate, bool per_type,
                         std::ostream& out) {
  Caps caps = opt.caps();
  std::vector<BigInt> totals;
  CountLedger led;
  if (enumerate) {
    for (std::size_t k = 1; k <= n; ++k) totals.push_back(hom_count_enumerate(g, k, caps));
  } else {
    led = hom_count_typesum(g, n, caps, per_type);
    totals.assign(led.totals.begin() + 1, led.totals.end());
  }
  if (opt.json) {
    ordered_json j;
    j["method"] = enumerate ? "enumerate" : "typesum";
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 1; k <= n; ++k) rows.push_back({{"n", k}, {"hom", totals[k - 1].get_str()}});
    j["counts"] = rows;
    if (per_type && !enumerate) {
      ordered_json types = ordered_json::array();
      for (const auto& t : led.per_type) types.push_back({{"type", t.type.xi}, {"count", t.count.get_str()}});
      j["types"] = types;
    }
    out << j.dump(2) << "\n";
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) out << k << "\t" << totals[k - 1].get_str() << "\n";
  if (per_type && !enumerate)
    for (const auto& t : led.per_type) out << "type\t" << type_text(g, t.type) << "\t" << t.count.get_str() << "\n";
}

inline void cmd_subcount(const GraphOfGroups& g, const Options& opt, std::size_t n, std::ostream& out) {
  CountLedger led = hom_count_typesum(g, n, opt.caps());
  if (opt.json) {
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 1; k <= n; ++k)
      rows.push_back({{"n", k}, {"transitive", led.transitive[k].get_str()}, {"subgroups", led.subgroups[k].get_str()}});
    out << ordered_json{{"counts", rows}}.dump(2) << "\n";
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) out << k << "\t" << led.subgroups[k].get_str() << "\n";
}

inline void cmd_realize(const std::string& target, bool emit, const Options& opt, std::ostream& out) {
  Rational q = parse_rational(target);
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw InputError("target too large");
  RealizationPlan plan = realize(q.get_num().get_si(), q.get_den().get_si());
  if (opt.json) {
    ordered_json j{{"target", to_json(plan.target)}, {"integer_part", plan.r}};
    if (plan.free_only) {
      j["free_group"] = plan.free_rank;
    } else {
      j["p"] = plan.p;
      j["k"] = plan.k;
      j["l"] = plan.l;
      j["variant"] = plan.variant == FamilyVariant::symmetric ? "symmetric" : "alternating";
      j["delta"] = plan.delta;
      j["free_rank"] = plan.free_rank;
    }
    j["predicted_mu"] = to_json(plan.predicted_mu);
    if (emit) j["gog"] = plan.gog_text();
    out << j.dump(2) << "\n";
    return;
  }
  out << plan.line() << "\n";
  if (emit) out << plan.gog_text();
}

inline void cmd_family(std::size_t p, std::size_t k, std::size_t l, bool alt, const Options& opt, std::ostream& out) {
  FamilyVariant variant = alt ? FamilyVariant::alternating : FamilyVariant::symmetric;
  std::string text = family_gog_text(p, k, l, variant);
  const bool in_range = family_in_range(p, k, l);
  Rational closed = family_mu(p, k, l, variant);
  std::optional<Rational> enumerated;
  if (k <= (opt.slow ? 7u : 6u)) {
    FiniteGroup grp = alt ? alternating_group(k, opt.max_group_order) : symmetric_group(k, opt.max_group_order);
    enumerated = cyclic_amalgam_mu(grp, family_element(p, k, l), opt.caps()).value;
  }
  const bool disagree = enumerated && *enumerated != closed;
  if (opt.json) {
    ordered_json j{{"p", p}, {"k", k}, {"l", l}, {"variant", alt ? "alternating" : "symmetric"},
                   {"in_range", in_range}, {"gog", text}, {"closed_form", to_json(closed)}};
    if (is_family_exception(p, k, l)) j["listed_exception"] = true;
    if (enumerated) {
      j["enumerated"] = to_json(*enumerated);
      j["agree"] = !disagree;
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << text;
  out << "closed_form\t" << closed.get_str() << (is_family_exception(p, k, l) ? "\t(listed exception)" : "") << "\n";
  if (!in_range) out << "note\tk - l*p < 2, outside the range of the closed form\n";
  if (enumerated)
    out << "enumerated\t" << enumerated->get_str() << "\t" << (disagree ? "DISAGREES with closed form" : "agrees")
        << "\n";
  else
    out << "enumerated\tskipped (k too large" << (opt.slow ? "" : "; --slow allows k = 7") << ")\n";
}

inline int cmd_selftest(const Options& opt, const std::vector<std::string>& known, std::ostream& out) {
  AcceptanceOptions a;
  a.slow = opt.slow;
  a.threads = opt.threads;
  auto results = run_acceptance(a);
  std::set<std::string> expected(known.begin(), known.end());
  bool ok = true;
  for (const auto& r : results) ok = ok && (r.pass != expected.contains(r.id));
  if (opt.json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : results) j.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    out << j.dump(2) << "\n";
  } else {
    print_acceptance(results, out);
  }
  return ok ? kOk : kInputError;
}

/// Parses the command line and runs one subcommand. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup growth of virtually free groups", "subgrowth"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--slow", opt.slow, "Enable the expensive paths (n = 6 enumeration, Sym(7))");
  app.add_option("--max-group-order", opt.max_group_order, "Largest group listed element by element")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", opt.max_n, "Largest n for type-sum counting")->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "Worker threads for brute-force counting")->check(CLI::PositiveNumber);

  std::string file, dump_lp, target;
  std::size_t n = 0, slope_n = 0, p = 0, k = 0, l = 0;
  bool enumerate = false, per_type = false, emit = false, alt = false;
  std::vector<std::string> known;

  auto* c_mu = app.add_subcommand("mu", "Print the growth coefficient");
  c_mu->add_option("file", file, "Graph of groups ('-' for stdin)")->required();
  auto* c_chi = app.add_subcommand("chi", "Print the Euler characteristic");
  c_chi->add_option("file", file)->required();
  auto* c_report = app.add_subcommand("report", "Growth coefficient with optimizer and LP statistics");
  c_report->add_option("file", file)->required();
  c_report->add_option("--dump-lp", dump_lp, "Write the constraint matrix and final tableau as TSV");
  c_report->add_option("--slope", slope_n, "Append the floating-point slope diagnostic up to n");
  auto* c_catalog = app.add_subcommand("catalog", "Transitive representations and restriction matrices");
  c_catalog->add_option("file", file)->required();
  auto* c_hom = app.add_subcommand("homcount", "Count homomorphisms into Sym(n)");
  c_hom->add_option("file", file)->required();
  c_hom->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c_hom->add_flag("--enumerate", enumerate, "Brute-force enumeration instead of the type sum");
  c_hom->add_flag("--per-type", per_type, "List the count of every admissible type at the largest n");
  auto* c_sub = app.add_subcommand("subcount", "Count subgroups of index n");
  c_sub->add_option("file", file)->required();
  c_sub->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* c_realize = app.add_subcommand("realize", "Construct a group with prescribed growth coefficient a/b");
  c_realize->add_option("target", target, "Non-negative rational a/b")->required();
  c_realize->add_flag("--emit-gog", emit, "Also print the graph of groups");
  auto* c_family = app.add_subcommand("family", "Amalgam of two symmetric or alternating groups over C_p");
  c_family->add_option("--p", p)->required();
  c_family->add_option("--k", k)->required();
  c_family->add_option("--l", l)->required();
  c_family->add_flag("--alt", alt, "Use alternating groups");
  auto* c_self = app.add_subcommand("selftest", "Run the acceptance checks");
  c_self->add_option("--known-failure", known, "Criterion expected to fail; exit status ignores it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c_mu->parsed()) cmd_mu(load(file, opt), opt, out);
    else if (c_chi->parsed()) cmd_chi(load(file, opt), opt, out);
    else if (c_report->parsed()) cmd_report(load(file, opt), opt, dump_lp, slope_n, out);
    else if (c_catalog->parsed()) cmd_catalog(load(file, opt), opt, out);
    else if (c_hom->parsed()) cmd_homcount(load(file, opt), opt, n, enumerate, per_type, out);
    else if (c_sub->parsed()) cmd_subcount(load(file, opt), opt, n, out);
    else if (c_realize->parsed()) cmd_realize(target, emit, opt, out);
    else if (c_family->parsed()) cmd_family(p, k, l, alt, opt, out);
    else if (c_self->parsed()) return cmd_selftest(opt, known, out);
  } catch (const CapExceeded& e) {
    err << "subgrowth: resource cap: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InputError& e) {
    err << "subgrowth: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "subgrowth: internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace subgrowth::cli
