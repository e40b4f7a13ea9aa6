#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "hnet/labels.hpp"

namespace hnet {

/// Brute-force ground truth. Distances here come from BFS only and never
/// from the closed forms they are compared against.
class ExplicitGraph {
 public:
  using Vertex = std::uint32_t;

  ExplicitGraph(RadixSpec spec, std::vector<std::vector<Vertex>> adjacency);

  const RadixSpec& spec() const noexcept { return spec_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Vertex>& adjacent(Vertex v) const { return adjacency_[v]; }

  Vertex vertex_of(const Label& x) const;
  Label label_of(Vertex v) const { return Label::from_index(spec_, v); }

  bool has_edge(Vertex u, Vertex v) const;
  bool is_symmetric() const;
  bool is_loop_free() const;

 private:
  RadixSpec spec_;
  std::vector<std::vector<Vertex>> adjacency_;  // each list sorted
  std::uint64_t edge_count_ = 0;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Adjacency lists materialized from topology::neighbors.
ExplicitGraph build_graph(const RadixSpec& spec, std::uint64_t cap = kDefaultOrderCap);

/// Hop distances from s; kUnreachable marks vertices BFS never reached.
std::vector<std::uint32_t> bfs_from(const ExplicitGraph& g, const Label& s);
std::vector<std::uint32_t> bfs_from(const ExplicitGraph& g, ExplicitGraph::Vertex s);

/// Vertex counts per BFS layer, layer 0 first.
std::vector<std::uint64_t> bfs_layers(const std::vector<std::uint32_t>& dist);

/// Reads the exports of io.hpp back into a graph over `spec`.
ExplicitGraph read_edge_list(std::istream& in, const RadixSpec& spec);
ExplicitGraph read_dot(std::istream& in, const RadixSpec& spec);

enum class CheckStatus { pass, fail, info, skipped };

const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::vector<std::string> counterexamples;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  /// Specs above this order are rejected outright.
  std::uint64_t max_order = 20000;
  /// Up to this order every pair is checked; above it pairs are sampled.
  std::uint64_t all_pairs_limit = 20000;
  /// Up to this order routing and adjacency are checked on every pair.
  std::uint64_t exhaustive_route_limit = 200;
  std::size_t sampled_pairs = 1000;
  std::uint64_t seed = 20150701;
  std::size_t max_counterexamples = 8;
};

struct VerificationReport {
  RadixSpec spec;
  std::uint64_t order = 0;
  bool all_pairs = true;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  /// Informational and skipped checks never fail a report.
  bool passed() const noexcept;
  const CheckResult* find(std::string_view name) const noexcept;
};

/// Runs every closed-form claim against brute force.
VerificationReport verify_spec(const RadixSpec& spec, const VerifyOptions& options = {});

/// The fixed ten-spec verification suite.
std::vector<RadixSpec> standard_suite();

}  // namespace hnet
