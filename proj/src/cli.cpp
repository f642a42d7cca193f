#include "nig/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "nig/canonical.hpp"
#include "nig/classify.hpp"
#include "nig/enumerate.hpp"
#include "nig/families.hpp"
#include "nig/graph_io.hpp"
#include "nig/reductions.hpp"
#include "nig/spectra.hpp"
#include "nig/verify.hpp"

namespace nig {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::vector<std::string> g6;
  std::string file;
  bool edge_list = false;
  std::string family;
  std::string params;
};

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("--g6", opt.g6, "graph6 record (repeatable)");
  cmd->add_option("--file", opt.file, "file of graph6 records, one per line");
  cmd->add_flag("--edge-list", opt.edge_list, "read edge-list text instead of graph6");
  cmd->add_option("--family", opt.family, "generate the input from a family");
  cmd->add_option("--params", opt.params, "comma-separated family parameters");
}

FamilySpec parse_family(const std::string& family, const std::string& params) {
  auto kind = family_kind_from_string(family);
  if (!kind) {
    throw UsageError("unknown family '" + family +
                     "' (expected path, cycle, complete-bipartite, star, theta, cycle-star, "
                     "canonical-unicyclic, G1, named-H)");
  }
  FamilySpec spec{*kind, {}};
  std::stringstream ss(params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (*kind == FamilyKind::kNamedH) {
      auto which = named_graph_from_string(item);
      if (!which) throw UsageError("named-H takes H1, H2, H3 or G8");
      static constexpr int kCode[] = {1, 2, 3, 8};
      spec.params.push_back(kCode[static_cast<int>(*which)]);
      continue;
    }
    try {
      std::size_t used = 0;
      spec.params.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("family parameter '" + item + "' is not an integer");
    }
  }
  return spec;
}

std::vector<Graph> read_inputs(const InputOptions& opt, std::istream& in) {
  const int sources = (!opt.g6.empty() ? 1 : 0) + (!opt.file.empty() ? 1 : 0) +
                      (!opt.family.empty() ? 1 : 0);
  if (sources > 1) throw UsageError("give exactly one input source: --g6, --file, --family or stdin");
  if (!opt.family.empty()) return {generate(parse_family(opt.family, opt.params))};
  if (!opt.g6.empty()) {
    std::vector<Graph> out;
    for (const auto& rec : opt.g6) out.push_back(opt.edge_list ? parse_edge_list(rec) : parse_graph6(rec));
    return out;
  }
  std::ifstream file;
  std::istream* src = &in;
  if (!opt.file.empty()) {
    file.open(opt.file);
    if (!file) throw UsageError("cannot open " + opt.file);
    src = &file;
  }
  if (opt.edge_list) {
    std::stringstream buf;
    buf << src->rdbuf();
    return {parse_edge_list(buf.str())};
  }
  return read_graph6_stream(*src);
}

ReportFormat parse_format(const std::string& f) {
  if (f == "text") return ReportFormat::kText;
  if (f == "json") return ReportFormat::kJson;
  if (f == "csv") return ReportFormat::kCsv;
  throw UsageError("unknown format '" + f + "' (expected text, json, csv)");
}

ContainmentMode parse_mode(const std::string& m) {
  if (m == "induced") return ContainmentMode::kInduced;
  if (m == "subgraph") return ContainmentMode::kSubgraph;
  throw UsageError("unknown mode '" + m + "' (expected induced, subgraph)");
}

Theorem parse_theorem(const std::string& t) {
  auto th = theorem_from_string(t);
  if (!th) throw UsageError("unknown theorem '" + t + "' (expected 2.9, 3.6, 3.10)");
  return *th;
}

int default_jobs() {
  if (const char* env = std::getenv("NIG_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

std::string opt_int(const std::optional<int>& v, const char* none) {
  return v ? std::to_string(*v) : none;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact adjacency inertia, girth and diameter toolkit", "nig"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "text, json or csv")->capture_default_str();

  InputOptions input;

  auto* inertia_cmd = app.add_subcommand("inertia", "print (p, n, eta) of each input graph");
  add_input_options(inertia_cmd, input);
  bool with_poly = false;
  inertia_cmd->add_flag("--poly", with_poly, "also print the characteristic polynomial");

  auto* invariants_cmd = app.add_subcommand("invariants", "order, size, diameter, girth");
  add_input_options(invariants_cmd, input);

  auto* classify_cmd = app.add_subcommand("classify", "run a characterization classifier");
  add_input_options(classify_cmd, input);
  std::string theorem;
  std::string mode = "induced";
  classify_cmd->add_option("--theorem", theorem, "2.9, 3.6 or 3.10")->required();
  classify_cmd->add_option("--mode", mode, "sandwich containment for 2.9: induced or subgraph")
      ->capture_default_str();

  auto* generate_cmd = app.add_subcommand("generate", "emit a family member as graph6");
  std::string gen_family;
  std::string gen_params;
  generate_cmd->add_option("--family", gen_family, "family kind")->required();
  generate_cmd->add_option("--params", gen_params, "comma-separated parameters");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive bound / classifier verification");
  std::string v_theorem;
  std::string v_bounds;
  bool claim_scan = false;
  bool g0_check = false;
  bool from_stdin = false;
  int min_n = 1;
  int max_n = 7;
  int jobs = default_jobs();
  int shards = 1;
  int shard_index = 0;
  bool reduced_only = false;
  bool no_timing = false;
  verify_cmd->add_option("--theorem", v_theorem, "2.9, 3.6 or 3.10");
  verify_cmd->add_option("--bounds", v_bounds,
                         "all or a comma list of half-diameter, odd-diameter, rank, girth");
  verify_cmd->add_flag("--claim-scan", claim_scan, "Claim-3 shape scan and theta values");
  verify_cmd->add_flag("--g0", g0_check, "check x^6 - 9x^4 is realized by exactly one connected graph");
  verify_cmd->add_flag("--stdin", from_stdin, "verify a graph6 stream from standard input");
  verify_cmd->add_option("--min-n", min_n, "smallest order")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "largest order")->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "worker threads (default $NIG_JOBS or 1)");
  verify_cmd->add_option("--shards", shards, "shard count")->capture_default_str();
  verify_cmd->add_option("--shard-index", shard_index, "shard to run")->capture_default_str();
  verify_cmd->add_option("--mode", mode, "sandwich containment for 2.9: induced or subgraph");
  verify_cmd->add_flag("--reduced-only", reduced_only, "keep only twin-free graphs");
  verify_cmd->add_flag("--no-timing", no_timing, "report wall_ms as 0 for byte-stable output");

  auto* mine_cmd = app.add_subcommand("mine", "minimal graphs with n >= 3");
  int mine_max = 6;
  mine_cmd->add_option("--max-n", mine_max, "largest order (<= 9)")->capture_default_str();
  mine_cmd->add_option("--jobs", jobs, "worker threads");
  mine_cmd->add_flag("--no-timing", no_timing, "report wall_ms as 0");

  auto* trim_cmd = app.add_subcommand("trim", "pendant-pair trimming to the core");
  add_input_options(trim_cmd, input);
  bool trace = false;
  bool twins = false;
  trim_cmd->add_flag("--trace", trace, "print the move log");
  trim_cmd->add_flag("--twins", twins, "delete twins instead of trimming pendants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const ReportFormat fmt = parse_format(format);

    if (*inertia_cmd) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (fmt == ReportFormat::kCsv) out << "graph6,order,p,n,eta\n";
      for (const auto& g : read_inputs(input, in)) {
        const auto sig = inertia(g);
        if (fmt == ReportFormat::kText) {
          out << to_string(sig);
          if (with_poly) out << "  " << char_poly(g).to_string();
          out << '\n';
        } else if (fmt == ReportFormat::kCsv) {
          out << emit_graph6(g) << ',' << g.order() << ',' << sig.positive << ',' << sig.negative
              << ',' << sig.nullity << '\n';
        } else {
          nlohmann::ordered_json row{{"graph6", emit_graph6(g)}, {"p", sig.positive},
                                     {"n", sig.negative}, {"eta", sig.nullity}};
          if (with_poly) row["char_poly"] = char_poly(g).to_string();
          rows.push_back(row);
        }
      }
      if (fmt == ReportFormat::kJson) out << rows.dump(2) << '\n';
      return 0;
    }

    if (*invariants_cmd) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (fmt == ReportFormat::kCsv) out << "graph6,order,size,connected,diameter,girth\n";
      for (const auto& g : read_inputs(input, in)) {
        const auto inv = connectivity_diameter_girth(g);
        const std::string d = opt_int(inv.diameter, "disconnected");
        const std::string gi = opt_int(inv.girth, "acyclic");
        if (fmt == ReportFormat::kText) {
          out << "order=" << inv.order << " size=" << inv.size
              << " connected=" << (inv.connected ? "yes" : "no") << " diameter=" << d
              << " girth=" << gi << '\n';
        } else if (fmt == ReportFormat::kCsv) {
          out << emit_graph6(g) << ',' << inv.order << ',' << inv.size << ','
              << (inv.connected ? "true" : "false") << ',' << d << ',' << gi << '\n';
        } else {
          rows.push_back({{"graph6", emit_graph6(g)}, {"order", inv.order}, {"size", inv.size},
                          {"connected", inv.connected}, {"diameter", d}, {"girth", gi}});
        }
      }
      if (fmt == ReportFormat::kJson) out << rows.dump(2) << '\n';
      return 0;
    }

    if (*classify_cmd) {
      const Theorem th = parse_theorem(theorem);
      const ContainmentMode cm = parse_mode(mode);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (fmt == ReportFormat::kCsv) out << "graph6,theorem,structural,computed,family,agrees\n";
      for (const auto& g : read_inputs(input, in)) {
        Verdict v;
        try {
          v = classify(g, th, cm);
        } catch (const std::invalid_argument& e) {
          err << "nig: " << emit_graph6(g) << ": " << e.what() << '\n';
          return 2;
        }
        const std::string fam = v.family ? v.family->to_string() : "none";
        if (fmt == ReportFormat::kText) {
          out << v.describe() << '\n';
        } else if (fmt == ReportFormat::kCsv) {
          out << emit_graph6(g) << ',' << to_string(th) << ',' << (v.structural ? "true" : "false")
              << ',' << (v.computed ? "true" : "false") << ',' << fam << ','
              << (v.agrees() ? "true" : "false") << '\n';
        } else {
          rows.push_back({{"graph6", emit_graph6(g)},
                          {"theorem", to_string(th)},
                          {"extremal", v.structural},
                          {"computed_equality", v.computed},
                          {"family", fam},
                          {"witness", v.witness},
                          {"inertia", to_string(v.inertia)},
                          {"agrees", v.agrees()}});
        }
      }
      if (fmt == ReportFormat::kJson) out << rows.dump(2) << '\n';
      return 0;
    }

    if (*generate_cmd) {
      out << emit_graph6(generate(parse_family(gen_family, gen_params))) << '\n';
      return 0;
    }

    if (*verify_cmd) {
      if (jobs < 1) throw UsageError("--jobs must be positive");
      const int picked = (!v_theorem.empty() ? 1 : 0) + (!v_bounds.empty() ? 1 : 0) +
                         (claim_scan ? 1 : 0) + (g0_check ? 1 : 0);
      if (picked != 1) throw UsageError("verify needs exactly one of --theorem, --bounds, --claim-scan, --g0");
      VerificationReport report;
      if (claim_scan) {
        report = scan_claim3_shapes();
      } else if (g0_check) {
        const auto hits = g0_candidates();
        report.task = "G0 uniqueness, connected order 6";
        report.subject = "char poly x^6 - 9x^4";
        report.graphs_examined = static_cast<long>(enumerate_connected(6).size());
        report.equality_cases = static_cast<long>(hits.size());
        for (const auto& g : hits) report.notes.push_back(emit_graph6(g));
        if (hits.size() != 1 || !is_isomorphic(hits.front(), gen_complete_bipartite(3, 3))) {
          for (const auto& g : hits) report.violations.push_back(emit_graph6(g));
          if (hits.empty()) report.violations.push_back("(none)");
        }
      } else {
        EnumerationTask task;
        task.min_order = min_n;
        task.max_order = max_n;
        task.reduced_only = reduced_only;
        task.shard_count = shards;
        task.shard_index = shard_index;
        if (from_stdin) task.external = read_graph6_stream(in);
        if (!task.external && (min_n < 1 || max_n > kEnumerationBudget)) {
          throw UsageError("built-in enumeration covers orders 1.." +
                           std::to_string(kEnumerationBudget) + "; pipe larger graphs with --stdin");
        }
        if (!v_theorem.empty()) {
          report = verify_classifier_equivalence(task, parse_theorem(v_theorem), parse_mode(mode), jobs);
        } else {
          report = verify_bounds(task, bounds_from_string(v_bounds), jobs);
        }
      }
      out << emit_report(report, fmt, !no_timing);
      return report.pass() ? 0 : 1;
    }

    if (*mine_cmd) {
      if (mine_max < 1 || mine_max > kEnumerationBudget) {
        throw UsageError("--max-n must lie in 1.." + std::to_string(kEnumerationBudget));
      }
      const auto report = mine_report(mine_max, std::max(1, jobs));
      out << emit_report(report, fmt, !no_timing);
      return report.pass() ? 0 : 1;
    }

    if (*trim_cmd) {
      for (const auto& g : read_inputs(input, in)) {
        const auto tr = twins ? reduce_twins(g) : trim_to_core(g);
        if (trace) out << serialize_trace(tr, g.order());
        const auto implied = tr.implied_inertia(inertia(tr.residual), g.order());
        out << "trims=" << tr.trims << " residual=" << emit_graph6(tr.residual)
            << " residual_order=" << tr.residual.order() << " inertia=" << to_string(implied)
            << '\n';
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "nig: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "nig: parse error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "nig: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "nig: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace nig
