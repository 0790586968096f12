#include "kcover/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcover/cover.hpp"
#include "kcover/graph.hpp"
#include "kcover/lp.hpp"
#include "kcover/oracle.hpp"
#include "kcover/structures.hpp"

namespace kcover::cli {

namespace {

using nlohmann::ordered_json;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered key/value report rendered either as key=value lines or as one JSON
// document.
class Report {
 public:
  void set(std::string key, ordered_json value) { doc_[std::move(key)] = std::move(value); }
  ordered_json& doc() { return doc_; }

  void write(std::ostream& out, bool structured) const {
    if (structured) {
      out << doc_.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : doc_.items()) out << key << '=' << text(value) << '\n';
  }

  static std::string text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& item : v) {
        if (!s.empty()) s += ' ';
        if (item.is_array() && item.size() == 2)
          s += item[0].dump() + "-" + item[1].dump();
        else
          s += text(item);
      }
      return s;
    }
    return v.dump();
  }

 private:
  ordered_json doc_ = ordered_json::object();
};

ordered_json edges_json(const EdgeSet& s) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : s) arr.push_back({e.u, e.v});
  return arr;
}

ordered_json vertices_json(const std::vector<Vertex>& vs) {
  ordered_json arr = ordered_json::array();
  for (Vertex v : vs) arr.push_back(v);
  return arr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightedGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Common {
  std::string kind = "cycle";
  int k = 3;
  std::size_t max_structures = EnumerationOptions::default_max_structures;
  std::uint64_t node_budget = OracleOptions{}.node_budget;
  std::string format = "text";

  StructureKind structure_kind() const {
    return kind == "cycle" ? StructureKind::cycle : StructureKind::clique;
  }
  bool structured() const { return format == "structured"; }
  EnumerationOptions enumeration() const { return {max_structures}; }
  OracleOptions oracle() const {
    OracleOptions o;
    o.enumeration = enumeration();
    o.node_budget = node_budget;
    return o;
  }
};

void add_k(CLI::App* cmd, Common& c) {
  cmd->add_option("--k", c.k, "Structure size")->required()->check(CLI::Range(3, 64));
}

void add_kind(CLI::App* cmd, Common& c) {
  cmd->add_option("--kind", c.kind, "Structure kind")
      ->check(CLI::IsMember({"cycle", "clique"}))
      ->capture_default_str();
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

void add_max_structures(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-structures", c.max_structures, "Enumeration cap")
      ->envname("KCOVER_MAX_STRUCTURES")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_node_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--node-budget", c.node_budget, "Branch-and-bound node budget")
      ->envname("KCOVER_NODE_BUDGET")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// ---------------------------------------------------------------------------

struct CoverArgs {
  std::string file;
  std::string algorithm = "basic";
  std::string lp_dump;
  bool timing = false;
};

int cmd_cover(const Common& c, const CoverArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const WeightedGraph g = load_graph(a.file);
  const bool improved = a.algorithm == "improved";
  const StructureKind kind = c.structure_kind();
  const Algorithm algorithm =
      kind == StructureKind::cycle ? (improved ? Algorithm::cycle_odd : Algorithm::cycle_basic)
                                   : (improved ? Algorithm::clique_improved : Algorithm::clique_basic);

  if (!a.lp_dump.empty()) {
    const auto m = build_incidence(g, enumerate_structures(g, c.k, kind, c.enumeration()));
    std::ofstream dump(a.lp_dump, std::ios::binary);
    if (!dump) throw InputError("cannot write '" + a.lp_dump + "'");
    dump << to_lp_format(m, g);
  }

  CoverOptions options;
  options.enumeration = c.enumeration();
  const CoverResult r = run_cover(g, c.k, algorithm, options);
  const bool feasible = verify_cover(g, r.k, r.kind, r.cover);
  const bool within = Rational(r.cover_weight) <= r.ratio_bound * r.lp_objective;
  const bool certified = feasible && within;

  Report rep;
  rep.set("command", "cover");
  rep.set("input", a.file);
  rep.set("kind", to_string(kind));
  rep.set("k", c.k);
  rep.set("algorithm", to_string(algorithm));
  rep.set("structures", r.structure_count);
  rep.set("cover", edges_json(r.cover));
  rep.set("cover_size", r.cover.size());
  rep.set("cover_weight", r.cover_weight);
  rep.set("lp_objective", to_string(r.lp_objective));
  rep.set("ratio_bound", to_string(r.ratio_bound));
  rep.set("weight_bound", to_string(Rational(r.ratio_bound * r.lp_objective)));
  if (r.parts) {
    rep.set("rounded", edges_json(r.parts->rounded));
    rep.set("residual", edges_json(r.parts->residual_edges));
    rep.set("bipartized", edges_json(r.parts->bipartized));
    rep.set("cut_weight", total_weight(g, r.parts->bipartition.cut_edges));
    rep.set("residual_weight", total_weight(g, r.parts->residual_edges));
  }
  rep.set("feasible", feasible);
  rep.set("certified", certified);
  if (a.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rep.set("wall_ms", std::chrono::duration<double, std::milli>(elapsed).count());
  }
  rep.write(out, c.structured());
  return certified ? ok : rejected;
}

int cmd_exact(const Common& c, const std::string& file, std::ostream& out) {
  const WeightedGraph g = load_graph(file);
  const ExactCover r = exact_min_cover(g, c.k, c.structure_kind(), c.oracle());
  Report rep;
  rep.set("command", "exact");
  rep.set("input", file);
  rep.set("kind", to_string(c.structure_kind()));
  rep.set("k", c.k);
  rep.set("status", r.solved() ? "solved" : "unsolved");
  if (r.solved()) {
    rep.set("weight", r.weight);
    rep.set("cover", edges_json(r.cover));
  } else {
    rep.set("best_weight", r.weight);
  }
  rep.set("nodes", r.node_count);
  rep.write(out, c.structured());
  return r.solved() ? ok : resource_cap;
}

int cmd_pack(const Common& c, const std::string& file, std::ostream& out) {
  const WeightedGraph g = load_graph(file);
  const ExactPacking p = exact_max_packing(g, c.k, c.oracle());
  Report rep;
  rep.set("command", "pack");
  rep.set("input", file);
  rep.set("k", c.k);
  rep.set("status", p.solved() ? "solved" : "unsolved");
  rep.set(p.solved() ? "count" : "best_count", p.count());
  ordered_json cliques = ordered_json::array();
  for (const auto& s : p.cliques) cliques.push_back(key_string(s));
  rep.set("cliques", cliques);
  EdgeSet used;
  for (const auto& s : p.cliques) used = used.united(s.edges);
  rep.set("edges_used", used.size());
  rep.set("edges_total", g.edge_count());
  rep.set("nodes", p.node_count);
  rep.write(out, c.structured());
  return p.solved() ? ok : resource_cap;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n-range", "expected N or A..B, got '" + text + "'");
  }
}

int cmd_ratio_study(const Common& c, const std::string& range, std::ostream& out) {
  const auto [lo, hi] = parse_range(range);
  if (lo < 1 || hi < lo) throw CLI::ValidationError("--n-range", "empty or invalid range");

  const StructureKind kind = c.structure_kind();
  const bool sandwich = kind == StructureKind::clique;
  const auto clique_edges = static_cast<Weight>(structure_size(StructureKind::clique, c.k));
  ordered_json rows = ordered_json::array();
  bool all_solved = true;
  for (int n = lo; n <= hi; ++n) {
    const WeightedGraph kn = complete_graph(static_cast<std::size_t>(n));
    const ExactCover tau = exact_min_cover(kn, c.k, kind, c.oracle());
    const ExactPacking nu = exact_max_packing(kn, c.k, c.oracle());
    ordered_json row = ordered_json::object();
    row["n"] = n;
    if (!tau.solved() || !nu.solved()) {
      all_solved = false;
      row["status"] = "unsolved";
      rows.push_back(row);
      continue;
    }
    const auto nu_count = static_cast<Weight>(nu.count());
    row["status"] = "solved";
    row["tau"] = tau.weight;
    row["nu"] = nu_count;
    row["tau_over_nu"] = nu_count == 0 ? "-" : to_string(fraction(tau.weight, nu_count));
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    row["tau_over_pairs"] = pairs == 0 ? "-" : to_string(fraction(tau.weight, pairs));
    if (sandwich)
      row["sandwich"] =
          nu_count <= tau.weight && tau.weight <= clique_edges * nu_count ? "ok" : "violated";
    rows.push_back(row);
  }

  if (c.structured()) {
    ordered_json doc = ordered_json::object();
    doc["command"] = "ratio-study";
    doc["kind"] = to_string(kind);
    doc["k"] = c.k;
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
  } else {
    out << "# ratio-study kind=" << to_string(kind) << " k=" << c.k << '\n';
    out << "n\ttau\tnu\ttau/nu\ttau/C(n,2)" << (sandwich ? "\tsandwich" : "") << '\n';
    for (const auto& row : rows) {
      out << row["n"].get<int>();
      if (row["status"] == "unsolved") {
        out << "\tunsolved\n";
        continue;
      }
      out << '\t' << row["tau"].get<Weight>() << '\t' << row["nu"].get<Weight>() << '\t'
          << row["tau_over_nu"].get<std::string>() << '\t'
          << row["tau_over_pairs"].get<std::string>();
      if (sandwich) out << '\t' << row["sandwich"].get<std::string>();
      out << '\n';
    }
  }
  return all_solved ? ok : resource_cap;
}

int cmd_verify(const Common& c, const std::string& file, const std::string& cover_file,
               std::ostream& out) {
  const WeightedGraph g = load_graph(file);
  EdgeSet cover;
  try {
    cover = parse_edge_list(read_file(cover_file), g.id_bound());
  } catch (const ParseError& e) {
    throw InputError(cover_file + ": " + e.what());
  }
  for (const Edge& e : cover)
    if (!g.has_edge(e)) throw InputError(cover_file + ": edge " + to_string(e) + " is not in the graph");

  const StructureKind kind = c.structure_kind();
  const WeightedGraph rest = remove_edges(g, cover);
  std::optional<std::vector<Vertex>> witness;
  const StructureVisitor first = [&](const std::vector<Vertex>& key) {
    witness = key;
    return false;
  };
  if (kind == StructureKind::cycle)
    for_each_k_cycle(rest, c.k, first);
  else
    for_each_k_clique(rest, c.k, first);
  const bool feasible = !witness.has_value();

  Report rep;
  rep.set("command", "verify");
  rep.set("input", file);
  rep.set("cover_file", cover_file);
  rep.set("kind", to_string(kind));
  rep.set("k", c.k);
  rep.set("cover_size", cover.size());
  rep.set("cover_weight", total_weight(g, cover));
  rep.set("feasible", feasible);
  if (witness) rep.set("surviving", vertices_json(*witness));
  rep.write(out, c.structured());
  return feasible ? ok : rejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate and exact minimum-weight k-cycle / k-clique edge covers", "kcover"};
  app.require_subcommand(1);

  Common common;
  CoverArgs cover_args;
  std::string file;
  std::string cover_file;
  std::string range;

  auto* cover = app.add_subcommand("cover", "Approximate minimum-weight cover by LP rounding");
  cover->add_option("file", cover_args.file, "Edge-list graph file")->required();
  add_k(cover, common);
  add_kind(cover, common);
  cover->add_option("--algorithm", cover_args.algorithm, "Rounding variant")
      ->check(CLI::IsMember({"basic", "improved"}))
      ->capture_default_str();
  add_max_structures(cover, common);
  add_format(cover, common);
  cover->add_option("--lp-dump", cover_args.lp_dump, "Write the LP relaxation in CPLEX-LP format");
  cover->add_flag("--timing", cover_args.timing, "Report wall time (breaks byte-identical output)");

  auto* exact = app.add_subcommand("exact", "Exact minimum-weight cover by branch and bound");
  exact->add_option("file", file, "Edge-list graph file")->required();
  add_k(exact, common);
  add_kind(exact, common);
  add_max_structures(exact, common);
  add_node_budget(exact, common);
  add_format(exact, common);

  auto* pack = app.add_subcommand("pack", "Maximum edge-disjoint k-clique packing");
  pack->add_option("file", file, "Edge-list graph file")->required();
  add_k(pack, common);
  add_max_structures(pack, common);
  add_node_budget(pack, common);
  add_format(pack, common);

  auto* ratio = app.add_subcommand("ratio-study", "Covering vs packing numbers of complete graphs");
  ratio->add_option("--n-range", range, "Vertex counts, N or A..B")->required();
  add_k(ratio, common);
  add_kind(ratio, common);
  add_max_structures(ratio, common);
  add_node_budget(ratio, common);
  add_format(ratio, common);

  auto* verify = app.add_subcommand("verify", "Check that an edge set covers every structure");
  verify->add_option("file", file, "Edge-list graph file")->required();
  verify->add_option("cover", cover_file, "Cover file (vertex count, then 'u v' lines)")->required();
  add_k(verify, common);
  add_kind(verify, common);
  add_format(verify, common);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (cover->parsed()) {
      if (cover_args.algorithm == "improved" && common.kind == "cycle" && common.k % 2 == 0)
        throw CLI::ValidationError("--algorithm", "improved cycle cover requires odd --k");
      return cmd_cover(common, cover_args, out);
    }
    if (exact->parsed()) return cmd_exact(common, file, out);
    if (pack->parsed()) return cmd_pack(common, file, out);
    if (ratio->parsed()) return cmd_ratio_study(common, range, out);
    if (verify->parsed()) return cmd_verify(common, file, cover_file, out);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return usage_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return resource_cap;
  } catch (const LpIterationLimit& e) {
    err << "error: " << e.what() << '\n';
    return resource_cap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace kcover::cli
