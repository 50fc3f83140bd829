#include "amg/report.hpp"

#include <algorithm>

#include "amg/error.hpp"
#include "amg/invariants.hpp"

namespace amg {

Json metric_triangles_json(const MetricTriangleList& list) {
  Json items = Json::array();
  int max_side = 0;
  for (const auto& t : list.triangles) {
    max_side = std::max(max_side, t.max_side);
    if (items.size() < kTriangleListLimit) items.push_back({{"vertices", {t.u, t.v, t.w}}, {"type", t.type}});
  }
  return {{"metric_triangles", items},
          {"metric_triangle_count", list.triangles.size()},
          {"metric_triangles_truncated", list.triangles.size() > kTriangleListLimit},
          {"max_side", max_side}};
}

Json analyze_report(const Graph& g) {
  const DistanceMatrix d(g);
  const auto alpha = alpha_index(g, d);
  const auto hyp = hyperbolicity(g, d);
  const auto kappa = interval_thinness(g, d);
  const auto tau = slice_triangle_thinness(g, d);
  const auto ecc = eccentricities(d);

  Json report;
  report["alpha_index"] = alpha.index;
  report["alpha_witness"] = alpha.witness ? Json{alpha.witness->u, alpha.witness->v, alpha.witness->w, alpha.witness->x}
                                          : Json(nullptr);
  report["hyperbolicity_x2"] = hyp.delta.doubled();
  report["hyp_witness"] = {hyp.witness.u, hyp.witness.v, hyp.witness.w, hyp.witness.x};
  report["interval_thinness"] = kappa.kappa;
  report["slice_triangle_thinness"] = tau.tau;
  Json bows = Json::array();
  for (const HalfInteger lambda : {HalfInteger{}, hyp.delta}) {
    bows.push_back({{"lambda_x2", lambda.doubled()}, {"mu", bow_defect(g, d, lambda).mu}});
  }
  report["bow_defects"] = bows;
  report["diameter"] = ecc.diameter;
  report["radius"] = ecc.radius;
  try {
    report.update(metric_triangles_json(enumerate_metric_triangles(g, d)));
  } catch (const CapExceeded& e) {
    report["metric_triangles"] = nullptr;
    report["metric_triangles_skipped"] = e.what();
  }
  return report;
}

Json dismantling_json(const VertexOrdering& o, const OrderingCheck& check, const std::string& scheme, int s,
                      int s_prime) {
  return {{"ordering", o.order},
          {"dismantling", check.ok},
          {"fail_k", check.fail_k ? Json(*check.fail_k) : Json(nullptr)},
          {"scheme", scheme},
          {"s", s},
          {"s_prime", s_prime}};
}

Json hull_sidecar_json(const HullGraph& h, bool with_functions) {
  Json j{{"original_to_hull", h.original_to_hull}, {"hull_size", h.hull.order()}};
  if (with_functions) {
    Json fs = Json::array();
    for (const auto& f : h.functions) fs.push_back(f.values);
    j["functions"] = fs;
  }
  return j;
}

}  // namespace amg
