#include "cli/report.hpp"

namespace cospec::cli {

Json to_json(const Polynomial& p) { return Json(to_rational_strings(p)); }

Json to_json(const ConjugationReport& r) {
  Json j;
  j["k"] = to_string(r.k);
  j["t"] = to_string(r.t);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"identity", c.name}, {"passed", c.passed}});
  j["checks"] = std::move(checks);
  j["u_invertible"] = r.intertwiner_invertible;
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

Json to_json(const DecompositionAnalysis& a) {
  Json j;
  j["decompositions"] = a.total;
  j["long_decompositions"] = a.long_count;
  Json hist = Json::array();
  for (const auto& [key, bucket] : a.histogram)
    hist.push_back({{"h", key.h}, {"i", key.i}, {"j", key.j}, {"count", bucket.count},
                    {"sum", to_json(bucket.sum)}});
  j["long_histogram"] = std::move(hist);
  j["charpoly_oracle"] = to_json(a.charpoly);
  j["long_part"] = to_json(a.long_part);
  j["short_part"] = to_json(a.short_part);
  return j;
}

}  // namespace cospec::cli
