#include "amg/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "amg/checks.hpp"
#include "amg/dismantling.hpp"
#include "amg/error.hpp"
#include "amg/generators.hpp"
#include "amg/parallel.hpp"
#include "amg/report.hpp"
#include "amg/transforms.hpp"

namespace amg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// Input problems that should end the run with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  write_graph(out, g);
  if (!out) throw UsageError("write failed for '" + path + "'");
}

FamilyParams parse_params(const std::vector<std::string>& items) {
  FamilyParams params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + item + "' is not of the form key=value");
    params[item.substr(0, eq)] = parse_int(std::string_view(item).substr(eq + 1), "parameter value");
  }
  return params;
}

CorpusItem parse_injection(const std::string& arg) {
  std::string path = arg;
  std::optional<int> alpha;
  const auto colon = arg.rfind(':');
  if (colon != std::string::npos) {
    path = arg.substr(0, colon);
    alpha = static_cast<int>(parse_int(std::string_view(arg).substr(colon + 1), "asserted alpha index"));
  }
  return {"inject:" + arg, read_graph_file(path), alpha};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct Options {
  unsigned threads = 0;
  bool json = false;
  bool dump_functions = false;

  std::string file;
  std::vector<std::string> files;
  std::string output;

  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;

  int lambda = 1;
  std::uint64_t cap = kDefaultHullCap;

  std::string check_id;
  Vertex hull_max_n = CheckOptions{}.hull_max_n;

  std::vector<std::string> families;
  std::vector<std::string> checks;
  int seeds = 25;
  std::vector<std::string> injections;

  Vertex start = 0;
  std::string scheme = "classic";
  int s = 1;
  int s_prime = 1;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  emit(out, analyze_report(read_graph_file(o.file)));
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  Graph g = [&] {
    try {
      return generate(o.family, parse_params(o.params), o.seed);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  write_graph_file(o.output, g);
  emit(out, {{"output", o.output}, {"n", g.order()}, {"m", g.size()}});
  return kExitOk;
}

int cmd_subdivide(const Options& o, std::ostream& out) {
  const auto sub = subdivide(read_graph_file(o.file));
  write_graph_file(o.output, sub.graph);
  emit(out, {{"output", o.output}, {"n", sub.graph.order()}, {"m", sub.graph.size()},
             {"original_count", sub.original_count}});
  return kExitOk;
}

int cmd_power(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.file);
  if (o.lambda < 1) throw UsageError("--lambda must be at least 1");
  const Graph p = power(g, o.lambda);
  write_graph_file(o.output, p);
  emit(out, {{"output", o.output}, {"n", p.order()}, {"m", p.size()}, {"lambda", o.lambda}});
  return kExitOk;
}

int cmd_hull(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.file);
  if (o.cap < static_cast<std::uint64_t>(g.order())) throw UsageError("--cap is below the vertex count");
  const auto h = injective_hull(g, o.cap);
  write_graph_file(o.output, h.hull);
  emit(out, hull_sidecar_json(h, o.dump_functions));
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_check_id(o.check_id)) throw UsageError("unknown check id '" + o.check_id + "'");
  std::vector<Graph> graphs;
  for (const auto& f : o.files) graphs.push_back(read_graph_file(f));
  CheckOptions options;
  options.hull_max_n = o.hull_max_n;
  std::vector<CheckResult> results(graphs.size());
  parallel::for_each_index(graphs.size(), [&](std::size_t k) {
    GraphFacts facts(graphs[k]);
    results[k] = run_check(o.check_id, facts, options);
  });

  Json verdicts = Json::array();
  bool all = true;
  for (std::size_t k = 0; k < results.size(); ++k) {
    Json j{{"file", o.files[k]}};
    j.update(to_json(results[k]));
    verdicts.push_back(j);
    if (!results[k].pass) {
      if (all) err << "FAIL " << o.check_id << " on " << o.files[k] << ": " << results[k].witness.dump() << "\n";
      all = false;
    } else if (!o.json) {
      err << (results[k].hypothesis_met ? "pass " : "n/a  ") << o.check_id << " on " << o.files[k] << "\n";
    }
  }
  emit(out, verdicts);
  return all ? kExitOk : kExitFail;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CorpusItem> items;
  std::vector<std::string> checks = o.checks.empty() ? check_ids() : o.checks;
  for (const auto& c : checks) {
    if (!is_check_id(c)) throw UsageError("unknown check id '" + c + "'");
  }
  try {
    items = build_corpus(o.families, o.seeds);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  for (const auto& inj : o.injections) items.push_back(parse_injection(inj));
  CheckOptions options;
  options.hull_max_n = o.hull_max_n;
  const auto summary = run_corpus(items, checks, options);
  if (!o.json) err << format_table(summary);
  emit(out, to_json(summary));
  return summary.all_pass() ? kExitOk : kExitFail;
}

int cmd_dismantle(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.file);
  if (o.start < 0 || o.start >= g.order()) throw UsageError("--start is not a vertex of the graph");
  if (o.s < 1 || o.s_prime < 1) throw UsageError("--s and --s-prime must be at least 1");
  const auto ordering = bfs_ordering(g, o.start);
  OrderingCheck check;
  int s = 1;
  int sp = 1;
  if (o.scheme == "classic") {
    check = is_dismantling_ordering(g, ordering);
  } else {
    s = o.s;
    sp = o.s_prime;
    check = is_ss_dismantling_ordering(g, DistanceMatrix(g), ordering, s, sp, o.scheme == "ss-star");
  }
  Json j = dismantling_json(ordering, check, o.scheme, s, sp);
  j["greedy_dismantlable"] = greedy_dismantle(g).dismantlable;
  emit(out, j);
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact metric invariants of graphs and mechanical checks of their relations", "amg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "Suppress human-readable summaries on stderr");
  app.add_flag("--dump-functions", o.dump_functions, "Include extremal functions in the hull sidecar");

  auto* analyze = app.add_subcommand("analyze", "Report invariants of a graph as JSON");
  analyze->add_option("FILE", o.file)->required();

  auto* gen = app.add_subcommand("generate", "Write a graph from a named family");
  gen->add_option("FAMILY", o.family)->required();
  gen->add_option("--params", o.params, "k=v,... family parameters")->delimiter(',');
  gen->add_option("--seed", o.seed, "Seed for random families");
  gen->add_option("-o,--output", o.output)->required();

  auto* transform = app.add_subcommand("transform", "Subdivide, power, or take the injective hull");
  transform->require_subcommand(1);
  auto* sub = transform->add_subcommand("subdivide", "1-subdivision");
  auto* pow = transform->add_subcommand("power", "Graph power");
  pow->add_option("--lambda", o.lambda)->required();
  auto* hull = transform->add_subcommand("hull", "Injective hull; sidecar JSON on stdout");
  hull->add_option("--cap", o.cap, "Maximum hull size");
  for (auto* t : {sub, pow, hull}) {
    t->add_option("FILE", o.file)->required();
    t->add_option("-o,--output", o.output)->required();
  }

  auto* check = app.add_subcommand("check", "Run one property check on graph files");
  check->add_option("ID", o.check_id)->required();
  check->add_option("FILE", o.files)->required();
  check->add_option("--hull-max-n", o.hull_max_n, "Largest order for hull checks");

  auto* corpus = app.add_subcommand("corpus", "Run checks over the generated corpus");
  corpus->add_option("--families", o.families)->delimiter(',');
  corpus->add_option("--seeds", o.seeds, "Graphs per random family")->check(CLI::NonNegativeNumber);
  corpus->add_option("--checks", o.checks)->delimiter(',');
  corpus->add_option("--inject", o.injections, "Extra graph FILE[:ALPHA]; ALPHA overrides its alpha index");
  corpus->add_option("--hull-max-n", o.hull_max_n, "Largest order for hull checks");

  auto* dismantle = app.add_subcommand("dismantle", "Check the BFS ordering from a start vertex");
  dismantle->add_option("FILE", o.file)->required();
  dismantle->add_option("--start", o.start);
  dismantle->add_option("--scheme", o.scheme)->check(CLI::IsMember({"classic", "ss", "ss-star"}));
  dismantle->add_option("--s", o.s);
  dismantle->add_option("--s-prime", o.s_prime);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const unsigned previous = parallel::thread_count();
  if (o.threads > 0) parallel::set_thread_count(o.threads);
  int code = kExitInput;
  try {
    if (*analyze) code = cmd_analyze(o, out);
    else if (*gen) code = cmd_generate(o, out);
    else if (*sub) code = cmd_subdivide(o, out);
    else if (*pow) code = cmd_power(o, out);
    else if (*hull) code = cmd_hull(o, out);
    else if (*check) code = cmd_check(o, out, err);
    else if (*corpus) code = cmd_corpus(o, out, err);
    else if (*dismantle) code = cmd_dismantle(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitInput;
  }
  if (o.threads > 0) parallel::set_thread_count(previous);
  return code;
}

}  // namespace amg
