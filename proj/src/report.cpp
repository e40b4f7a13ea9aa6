#include "hnet/report.hpp"

#include <map>

#include "json.hpp"

namespace hnet {

using nlohmann::ordered_json;

StatsReport make_stats_report(const RadixSpec& spec, std::uint64_t max_order) {
  StatsReport r{spec, spec.order(), size_closed_form(spec), radius(spec),
                diameter(spec), layer_counts(spec), std::nullopt, std::nullopt};
  if (spec.order() > max_order) return r;

  std::map<std::uint64_t, std::uint64_t> degrees;
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    ++degrees[degree(Label::from_index(spec, i))];
  }
  r.degree_histogram.emplace(degrees.begin(), degrees.end());
  r.eccentricity_discrepancies = eccentricity_census(spec, max_order);
  return r;
}

std::string to_json(const StatsReport& r) {
  ordered_json doc;
  doc["spec"] = std::vector<Digit>(r.spec.radices().begin(), r.spec.radices().end());
  doc["order"] = r.order;
  doc["size"] = r.size_by_rule.total();
  doc["size_by_rule"] = {{"first_digit", r.size_by_rule.first_digit},
                         {"zero_block_flip", r.size_by_rule.zero_block_flip},
                         {"root_clique", r.size_by_rule.root_clique}};
  doc["radius"] = r.radius;
  doc["diameter"] = r.diameter;
  doc["layers"] = r.layers;
  if (r.degree_histogram) {
    auto hist = ordered_json::array();
    for (auto [deg, count] : *r.degree_histogram) {
      hist.push_back({{"degree", deg}, {"count", count}});
    }
    doc["degree_histogram"] = std::move(hist);
  } else {
    doc["degree_histogram"] = nullptr;
  }
  if (r.eccentricity_discrepancies) {
    auto list = ordered_json::array();
    for (const auto& d : *r.eccentricity_discrepancies) {
      list.push_back({{"label", format_label(d.vertex)},
                      {"formula", d.check.formula},
                      {"actual", d.check.actual}});
    }
    doc["eccentricity_discrepancies"] = std::move(list);
  } else {
    doc["eccentricity_discrepancies"] = nullptr;
  }
  return doc.dump(2);
}

std::string to_json(const VerificationReport& r) {
  ordered_json doc;
  doc["spec"] = r.spec.to_string();
  doc["order"] = r.order;
  doc["mode"] = r.all_pairs ? "all_pairs" : "sampled";
  doc["seed"] = r.seed;
  doc["passed"] = r.passed();
  ordered_json checks = ordered_json::object();
  for (const CheckResult& c : r.checks) {
    checks[c.name] = {{"status", to_string(c.status)},
                      {"detail", c.detail},
                      {"counterexamples", c.counterexamples},
                      {"elapsed_ms", c.elapsed_ms}};
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2);
}

}  // namespace hnet
