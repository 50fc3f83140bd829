#include <algorithm>
#include <iomanip>
#include <sstream>

#include "amg/checks.hpp"
#include "amg/error.hpp"
#include "amg/generators.hpp"
#include "amg/parallel.hpp"

namespace amg {

namespace {

struct Range {
  std::string param;
  int lo;
  int hi;
};

const std::vector<std::pair<std::string, Range>>& parameter_ranges() {
  static const std::vector<std::pair<std::string, Range>> table{
      {"path", {"n", 1, 10}},       {"cycle", {"n", 3, 10}},           {"complete", {"n", 1, 7}},
      {"star", {"n", 2, 8}},        {"hypercube", {"dim", 0, 3}},      {"g_p", {"p", 1, 8}},
      {"triangular_grid", {"n", 2, 8}}, {"ladder", {"l", 1, 6}},
  };
  return table;
}

std::string label(const std::string& family, const std::vector<std::pair<std::string, std::int64_t>>& params) {
  std::string out = family + "(";
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) out += ",";
    out += params[k].first + "=" + std::to_string(params[k].second);
  }
  return out + ")";
}

void add_family(const std::string& family, int seeds, std::vector<CorpusItem>& out) {
  if (family == "w6pp") {
    out.push_back({"w6pp()", w6pp(), std::nullopt});
    return;
  }
  for (const auto& [name, range] : parameter_ranges()) {
    if (name != family) continue;
    for (int value = range.lo; value <= range.hi; ++value) {
      out.push_back({label(family, {{range.param, value}}), generate(family, {{range.param, value}}), std::nullopt});
    }
    return;
  }
  if (!is_random_family(family)) throw InvalidArgument("family '" + family + "' has no corpus range");
  for (int s = 0; s < seeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const std::int64_t n = 3 + s % 8;
    if (family == "random_connected") {
      const std::int64_t most = n * (n - 1) / 2;
      Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
      const std::int64_t m = n - 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(most - n + 2)));
      out.push_back({label(family, {{"n", n}, {"m", m}, {"seed", s}}), generate(family, {{"n", n}, {"m", m}}, seed),
                     std::nullopt});
    } else {
      out.push_back({label(family, {{"n", n}, {"seed", s}}), generate(family, {{"n", n}}, seed), std::nullopt});
    }
  }
}

}  // namespace

std::vector<CorpusItem> build_corpus(const std::vector<std::string>& families, int seeds) {
  if (seeds < 0) throw InvalidArgument("seed count must be non-negative");
  std::vector<CorpusItem> out;
  for (const auto& family : families.empty() ? family_names() : families) add_family(family, seeds, out);
  return out;
}

bool CorpusSummary::all_pass() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const auto& kv) { return kv.second.failed == 0; });
}

namespace {

struct ItemOutcome {
  std::vector<CheckResult> results;
  int alpha = 0;
  HalfInteger delta;
  bool hull_computed = false;
  bool hull_not_alpha1 = false;
  std::string hull_note;
};

ItemOutcome evaluate(const CorpusItem& item, const std::vector<std::string>& checks, const CheckOptions& options) {
  GraphFacts facts(item.graph, item.assumed_alpha);
  ItemOutcome out;
  for (const auto& id : checks) out.results.push_back(run_check(id, facts, options));
  out.alpha = facts.alpha();
  out.delta = facts.delta();
  if (out.alpha <= 1 && item.graph.order() <= options.hull_max_n) {
    try {
      const auto& h = facts.hull(options.hull_cap);
      out.hull_computed = true;
      out.hull_not_alpha1 = alpha_index(h.hull, facts.hull_distances(options.hull_cap)).index > 1;
    } catch (const CapExceeded& e) {
      out.hull_note = item.name + ": " + e.what();
    }
  }
  return out;
}

}  // namespace

CorpusSummary run_corpus(const std::vector<CorpusItem>& items, const std::vector<std::string>& checks,
                         const CheckOptions& options) {
  for (const auto& id : checks) {
    if (!is_check_id(id)) throw InvalidArgument("unknown check id '" + id + "'");
  }
  std::vector<ItemOutcome> outcomes(items.size());
  parallel::for_each_index(items.size(), [&](std::size_t k) { outcomes[k] = evaluate(items[k], checks, options); });

  CorpusSummary s;
  s.graphs = items.size();
  s.checks = checks;
  for (const auto& id : checks) s.tallies[id];
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& o = outcomes[k];
    for (const auto& r : o.results) {
      auto& t = s.tallies[r.check];
      t.configurations += r.configurations;
      if (!r.pass) {
        ++t.failed;
        if (!t.first_failure_graph) {
          t.first_failure_graph = items[k].name;
          t.first_failure_witness = r.witness;
        }
      } else if (!r.hypothesis_met) {
        ++t.not_applicable;
      } else {
        ++t.passed;
      }
    }
    const std::int64_t num = o.delta.doubled();
    const std::int64_t den = o.alpha + 1;
    if (!s.ratio_graph || num * s.ratio_den > s.ratio_num * den) {
      s.ratio_num = num;
      s.ratio_den = den;
      s.ratio_graph = items[k].name;
    }
    if (o.alpha <= 1) {
      ++s.alpha1_graphs;
      s.max_delta_alpha1 = std::max(s.max_delta_alpha1, o.delta);
    }
    if (o.hull_computed) ++s.hulls_computed;
    if (o.hull_not_alpha1) ++s.alpha1_hulls_not_alpha1;
    if (!o.hull_note.empty()) s.skipped_notes.push_back(o.hull_note);
    if (o.delta.doubled() > 2 * 1024 * (2 * static_cast<std::int64_t>(o.alpha) + 1)) ++s.hyp_huge_violations;
  }
  return s;
}

Json to_json(const CorpusSummary& s) {
  Json checks = Json::array();
  for (const auto& id : s.checks) {
    const auto& t = s.tallies.at(id);
    Json first = nullptr;
    if (t.first_failure_graph) first = {{"graph", *t.first_failure_graph}, {"witness", t.first_failure_witness}};
    checks.push_back({{"check", id}, {"passed", t.passed}, {"failed", t.failed}, {"not_applicable", t.not_applicable},
                      {"configurations_checked", t.configurations}, {"first_failure", first}});
  }
  Json ratio = nullptr;
  if (s.ratio_graph) {
    ratio = {{"two_delta_over_i_plus_1", std::to_string(s.ratio_num) + "/" + std::to_string(s.ratio_den)},
             {"value", static_cast<double>(s.ratio_num) / static_cast<double>(s.ratio_den)},
             {"graph", *s.ratio_graph}};
  }
  return {{"graphs", s.graphs},
          {"all_pass", s.all_pass()},
          {"checks", checks},
          {"conjecture_ratio_max", ratio},
          {"alpha1", {{"graphs", s.alpha1_graphs}, {"max_hyperbolicity_x2", s.max_delta_alpha1.doubled()}}},
          {"hull_not_alpha1",
           {{"alpha1_hulls_computed", s.hulls_computed}, {"alpha1_hulls_not_alpha1", s.alpha1_hulls_not_alpha1}}},
          {"hyp_huge_bound_violations", s.hyp_huge_violations},
          {"skipped", s.skipped_notes}};
}

std::string format_table(const CorpusSummary& s) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(8) << "n/a" << std::setw(16) << "configs" << "\n";
  for (const auto& id : s.checks) {
    const auto& t = s.tallies.at(id);
    out << std::left << std::setw(22) << id << std::right << std::setw(8) << t.passed << std::setw(8) << t.failed
        << std::setw(8) << t.not_applicable << std::setw(16) << t.configurations << "\n";
    if (t.first_failure_graph) out << "  first failure on " << *t.first_failure_graph << ": " << t.first_failure_witness.dump() << "\n";
  }
  out << "graphs: " << s.graphs << "\n";
  if (s.ratio_graph) {
    out << "max 2*delta/(i+1): " << s.ratio_num << "/" << s.ratio_den << " on " << *s.ratio_graph << "\n";
  }
  out << "alpha_1 graphs: " << s.alpha1_graphs << ", max delta " << s.max_delta_alpha1.to_string() << "\n";
  out << "alpha_1 graphs whose hull is not alpha_1: " << s.alpha1_hulls_not_alpha1 << " of " << s.hulls_computed << "\n";
  out << "graphs above 2^10(2i+1): " << s.hyp_huge_violations << "\n";
  return out.str();
}

}  // namespace amg
