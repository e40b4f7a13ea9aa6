#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnet/labels.hpp"
#include "hnet/metrics.hpp"
#include "hnet/oracle.hpp"
#include "hnet/topology.hpp"

namespace hnet {

struct StatsReport {
  RadixSpec spec;
  std::uint64_t order = 0;
  SizeTerms size_by_rule;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
  std::vector<std::uint64_t> layers;
  /// (degree, vertex count), ascending by degree. Present only when the spec
  /// is small enough to enumerate.
  std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> degree_histogram;
  std::optional<std::vector<EccentricityDiscrepancy>> eccentricity_discrepancies;
};

/// Closed-form fields are always filled; enumerated fields only when
/// order <= max_order.
StatsReport make_stats_report(const RadixSpec& spec, std::uint64_t max_order);

std::string to_json(const StatsReport& report);
std::string to_json(const VerificationReport& report);

}  // namespace hnet
