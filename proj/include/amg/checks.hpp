// Mechanical verification of the lemma/theorem properties on a
// single graph, plus the corpus harness that runs them at scale.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "amg/distance.hpp"
#include "amg/graph.hpp"
#include "amg/half_integer.hpp"
#include "amg/invariants.hpp"
#include "amg/transforms.hpp"

namespace amg {

using Json = nlohmann::ordered_json;

// A graph with lazily computed, cached invariants. Not thread-safe: each
// worker owns its own instance.
class GraphFacts {
 public:
  // assumed_alpha replaces the computed alpha index as the hypothesis i of
  // every check; the harness uses it to inject deliberately wrong claims.
  explicit GraphFacts(Graph g, std::optional<int> assumed_alpha = {});

  const Graph& graph() const { return g_; }
  const DistanceMatrix& distances();
  const Eccentricities& ecc();
  int alpha();           // the hypothesis i (assumed or computed)
  int computed_alpha();
  HalfInteger delta();
  const ThinnessResult& thinness();

  // Throws CapExceeded like injective_hull.
  const HullGraph& hull(std::uint64_t cap);
  const DistanceMatrix& hull_distances(std::uint64_t cap);

 private:
  Graph g_;
  std::optional<int> assumed_alpha_;
  std::optional<DistanceMatrix> d_;
  std::optional<Eccentricities> ecc_;
  std::optional<AlphaResult> alpha_;
  std::optional<HyperbolicityResult> hyp_;
  std::optional<ThinnessResult> thin_;
  std::optional<HullGraph> hull_;
  std::optional<DistanceMatrix> hull_d_;
};

struct CheckOptions {
  Vertex hull_max_n = 8;        // hull checks only on graphs up to this order
  Vertex max_sp_max_n = 7;      // shortest-path extension check on hulls
  std::uint64_t hull_cap = kDefaultHullCap;
};

struct CheckResult {
  std::string check;
  bool pass = true;
  bool hypothesis_met = true;   // false: the property does not apply, recorded as a pass
  Json witness;                 // null on pass
  std::uint64_t configurations = 0;
  std::string note;             // why a check was skipped, when it was
};

const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);

// Throws InvalidArgument for an unknown id.
CheckResult run_check(std::string_view id, GraphFacts& facts, const CheckOptions& options = {});

Json to_json(const CheckResult& r);

struct CorpusItem {
  std::string name;
  Graph graph;
  std::optional<int> assumed_alpha;
};

// Parameterized families over their default ranges plus `seeds` graphs per
// random family. An empty family list selects every family.
std::vector<CorpusItem> build_corpus(const std::vector<std::string>& families, int seeds);

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t configurations = 0;
  std::optional<std::string> first_failure_graph;
  Json first_failure_witness;
};

struct CorpusSummary {
  std::size_t graphs = 0;
  std::vector<std::string> checks;
  std::map<std::string, CheckTally> tallies;
  // max 2δ/(i+1) over graphs with i >= 0, kept as a fraction
  std::int64_t ratio_num = 0;
  std::int64_t ratio_den = 1;
  std::optional<std::string> ratio_graph;
  HalfInteger max_delta_alpha1;
  std::size_t alpha1_graphs = 0;
  std::size_t hulls_computed = 0;
  std::size_t alpha1_hulls_not_alpha1 = 0;
  std::size_t hyp_huge_violations = 0;
  std::vector<std::string> skipped_notes;

  bool all_pass() const;
};

CorpusSummary run_corpus(const std::vector<CorpusItem>& items, const std::vector<std::string>& checks,
                         const CheckOptions& options = {});

Json to_json(const CorpusSummary& s);
std::string format_table(const CorpusSummary& s);

}  // namespace amg
