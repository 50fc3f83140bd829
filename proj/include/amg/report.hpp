// JSON serialization of analysis results.
#pragma once

#include <string>

#include "amg/checks.hpp"
#include "amg/dismantling.hpp"
#include "amg/graph.hpp"
#include "amg/metric_triangles.hpp"
#include "amg/transforms.hpp"

namespace amg {

inline constexpr std::size_t kTriangleListLimit = 10000;

// Invariants plus the metric-triangle summary for one graph.
Json analyze_report(const Graph& g);

// {"metric_triangles": [...], "metric_triangle_count": int, "max_side": int};
// the list stops after kTriangleListLimit entries.
Json metric_triangles_json(const MetricTriangleList& list);

Json dismantling_json(const VertexOrdering& o, const OrderingCheck& check, const std::string& scheme, int s,
                      int s_prime);

Json hull_sidecar_json(const HullGraph& h, bool with_functions);

}  // namespace amg
