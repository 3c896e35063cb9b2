#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "evenhole/coloring.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/graph_io.hpp"
#include "evenhole/report.hpp"
#include "evenhole/search.hpp"

namespace evenhole::cli {

namespace {

struct Config {
  std::string input = "-";
  std::string format = "auto";
  int ell = 4;
  std::size_t cap = 0;
  std::size_t base = 8;
  std::string out_path;
  bool pretty = false;
  std::size_t workers = 1;
  std::size_t max_length = 0;
  bool all_thetas = false;
  std::vector<std::string> gen_args;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t gen_number(const std::vector<std::string>& a, std::size_t i) {
  if (i >= a.size()) throw UsageError("gen " + a.front() + ": missing argument " + std::to_string(i));
  try {
    std::size_t used = 0;
    const long long v = std::stoll(a[i], &used);
    if (used != a[i].size() || v < 0) throw std::invalid_argument(a[i]);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError("gen " + a.front() + ": bad number \"" + a[i] + "\"");
  }
}

std::vector<Graph> generate(const Config& cfg) {
  const auto& a = cfg.gen_args;
  if (a.empty()) throw UsageError("gen needs a family name");
  const std::string& family = a.front();
  auto arity = [&](std::size_t k) {
    if (a.size() != k + 1) {
      throw UsageError("gen " + family + " takes " + std::to_string(k) + " argument(s)");
    }
  };
  if (family == "theta") {
    arity(3);
    return {gen_theta(gen_number(a, 1), gen_number(a, 2), gen_number(a, 3))};
  }
  if (family == "cycle") {
    arity(1);
    return {gen_cycle(gen_number(a, 1))};
  }
  if (family == "path") {
    arity(1);
    return {gen_path(gen_number(a, 1))};
  }
  if (family == "complete") {
    arity(1);
    return {gen_complete(gen_number(a, 1))};
  }
  if (family == "k4") {
    arity(0);
    return {gen_complete(4)};
  }
  if (family == "petersen") {
    arity(0);
    return {gen_petersen()};
  }
  if (family == "tutte-coxeter") {
    arity(0);
    return {gen_tutte_coxeter()};
  }
  if (family == "gp") {
    arity(2);
    return {gen_generalized_petersen(gen_number(a, 1), gen_number(a, 2))};
  }
  if (family == "subdivided-k4") {
    arity(6);
    std::vector<std::size_t> lengths;
    for (std::size_t i = 1; i <= 6; ++i) lengths.push_back(gen_number(a, i));
    return {gen_subdivision(gen_complete(4), lengths)};
  }
  if (family == "theta-members") {
    arity(1);
    return theta_members(gen_number(a, 1), cfg.ell);
  }
  if (family == "random-members") {
    arity(1);
    CorpusOptions opts;
    opts.ell = cfg.ell;
    opts.seed = cfg.seed;
    return random_subdivided_members(gen_number(a, 1), opts);
  }
  throw UsageError("unknown family \"" + family + "\"");
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphFormat resolve_format(const Config& cfg, const std::string& text) {
  if (cfg.format == "auto") return sniff_format(text);
  if (auto f = format_from_string(cfg.format)) return *f;
  throw UsageError("unknown format \"" + cfg.format + "\"");
}

using Work = std::function<GraphRecord(const Graph&, const std::string&)>;

Work work_for(const std::string& command, const Config& cfg) {
  AuditConfig audit;
  audit.ell = cfg.ell;
  audit.jumps.interior_cap = cfg.cap;
  if (command == "member") {
    return [audit](const Graph& g, const std::string& id) {
      GraphRecord r = base_record(g, id);
      r.membership = membership_entry(is_member(g, audit.ell));
      return r;
    };
  }
  if (command == "color") {
    ColorOptions opts;
    opts.base_threshold = cfg.base;
    opts.membership_ell = cfg.ell;
    return [opts](const Graph& g, const std::string& id) {
      GraphRecord r = base_record(g, id);
      r.membership = membership_entry(is_member(g, opts.membership_ell));
      set_certificate(r, g.order() > 0 && is_connected(g) ? find_cut_certificate(g)
                                                          : std::nullopt);
      r.coloring = coloring_entry(color3(g, opts));
      return r;
    };
  }
  if (command == "holes" || command == "jumps") {
    const bool with_jumps = command == "jumps";
    const std::size_t max_length = cfg.max_length;
    return [audit, with_jumps, max_length](const Graph& g, const std::string& id) {
      GraphRecord r = base_record(g, id);
      r.holes.emplace();
      for (const Hole& c : enumerate_holes(g, 4, max_length)) {
        if (with_jumps) {
          const auto e = enumerate_jumps(g, c, audit.jumps);
          r.holes->push_back(hole_entry(c, &e));
        } else {
          r.holes->push_back(hole_entry(c, nullptr));
        }
      }
      return r;
    };
  }
  if (command == "thetas") {
    const bool induced_only = !cfg.all_thetas;
    return [induced_only](const Graph& g, const std::string& id) {
      GraphRecord r = base_record(g, id);
      r.thetas.emplace();
      for (const auto& h : find_theta_subgraphs(g, induced_only)) {
        r.thetas->push_back(theta_entry(h));
      }
      return r;
    };
  }
  if (command == "audit") {
    return [audit](const Graph& g, const std::string& id) { return audit_record(g, id, audit); };
  }
  return [audit](const Graph& g, const std::string& id) { return search_record(g, id, audit); };
}

int analyse(const std::string& command, const Config& cfg, std::istream& in, std::ostream& out,
            std::ostream& err) {
  std::string text;
  std::string source = cfg.input;
  if (cfg.input == "-") {
    text = read_all(in);
    source = "stdin";
  } else {
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.input << "\n";
      return kExitUsage;
    }
    text = read_all(file);
  }
  const GraphFormat format = resolve_format(cfg, text);
  std::istringstream stream_in(text);
  GraphStream stream(stream_in, format, source);

  std::vector<GraphRecord> records;
  const bool streaming = !cfg.pretty;
  const Summary summary = process_stream(stream, cfg.workers, work_for(command, cfg),
                                         [&](const GraphRecord& r) {
                                           if (r.error) {
                                             err << r.id << ": line " << r.error->line
                                                 << ": " << r.error->message << "\n";
                                           }
                                           if (streaming) {
                                             out << emit_record_line(r) << "\n";
                                           } else {
                                             records.push_back(r);
                                           }
                                         });
  const bool with_summary = command == "audit" || command == "search";
  if (streaming) {
    if (with_summary) out << emit_summary_line(summary) << "\n";
  } else {
    Report report;
    report.graphs = std::move(records);
    if (with_summary) report.summary = summary;
    out << emit_report(report, true) << "\n";
  }
  if (summary.parse_errors > 0) return kExitUsage;
  if (summary.violations > 0 || summary.chromatic_excess > 0) return kExitViolation;
  return kExitClean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Graphs of girth 2l without long even holes: membership, colouring, audits"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Input file, - for stdin")->capture_default_str();
    sub->add_option("--format", cfg.format, "auto, g6 or edges")->capture_default_str();
    sub->add_option("--l", cfg.ell, "Class parameter l (girth 2l)")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    sub->add_option("--cap", cfg.cap, "Jump interior-size cap, 0 for n - |C|")
        ->capture_default_str();
    sub->add_option("--base", cfg.base, "Colouring base-case threshold")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    sub->add_flag("--pretty", cfg.pretty, "One indented JSON document instead of JSON Lines");
    sub->add_option("--workers", cfg.workers, "Worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
  };

  const std::vector<std::pair<std::string, std::string>> commands{
      {"member", "Membership verdict with witness"},
      {"color", "3-colouring by decomposition, with trace"},
      {"holes", "All holes"},
      {"jumps", "All holes with their classified jumps"},
      {"thetas", "Induced theta subgraphs"},
      {"audit", "Every lemma audit"},
      {"search", "Counterexample search over a stream"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "holes" || name == "jumps") {
      sub->add_option("--max-length", cfg.max_length, "Longest hole to list, 0 for no bound");
    }
    if (name == "thetas") {
      sub->add_flag("--all", cfg.all_thetas, "One theta per hub pair, induced or not");
    }
  }
  auto* gen = app.add_subcommand("gen", "Write graph6 for a family to stdout");
  gen->add_option("family", cfg.gen_args,
                  "theta A B C | cycle N | path N | complete N | k4 | petersen | "
                  "tutte-coxeter | gp N K | subdivided-k4 L1..L6 | theta-members MAX | "
                  "random-members COUNT")
      ->required();
  gen->add_option("--l", cfg.ell, "Class parameter for member families")->capture_default_str();
  gen->add_option("--seed", cfg.seed, "Seed for random-members")->capture_default_str();
  gen->add_option("--out", cfg.out_path, "Write here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitClean : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "gen") {
      for (const Graph& g : generate(cfg)) *sink << write_graph6(g) << "\n";
      return kExitClean;
    }
    return analyse(command, cfg, in, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace evenhole::cli
