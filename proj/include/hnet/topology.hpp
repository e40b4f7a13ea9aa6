#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnet/labels.hpp"

namespace hnet {

/// Which adjacency rule produced an edge.
///
///  - first_digit:     x_1 w ~ y_1 w, x_1 != y_1.
///  - zero_block_flip: 0^l w ~ y^l w with y all nonzero and l >= 2. A flip of
///                     length 1 is the same edge as a first_digit one and is
///                     tagged first_digit.
///  - root_clique:     0^{i-1} a w ~ 0^{i-1} b w with a, b nonzero, a != b,
///                     i >= 2.
enum class EdgeKind { first_digit, zero_block_flip, root_clique };

const char* to_string(EdgeKind kind) noexcept;

struct Edge {
  Label u;  // u < v lexicographically
  Label v;
  EdgeKind kind;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Canonical edge list: each edge once, u < v, sorted by (u, v).
using EdgeStream = std::vector<Edge>;

using LabelPair = std::pair<Label, Label>;

std::optional<EdgeKind> is_adjacent(const Label& x, const Label& y);

struct Neighbor {
  Label label;
  EdgeKind kind;
};

/// All neighbors of x, sorted lexicographically.
std::vector<Neighbor> neighbors(const Label& x);

/// Degree of x counted from the digit pattern alone.
std::uint64_t degree(const Label& x);

/// Streams the canonical edge sequence without materializing it.
void for_each_edge(const RadixSpec& spec,
                   const std::function<void(const Edge&)>& visit,
                   std::uint64_t cap = kDefaultOrderCap);
EdgeStream edges(const RadixSpec& spec, std::uint64_t cap = kDefaultOrderCap);

/// The three summands of the closed-form size, one per adjacency rule.
struct SizeTerms {
  std::uint64_t first_digit = 0;
  std::uint64_t zero_block_flip = 0;
  std::uint64_t root_clique = 0;

  std::uint64_t total() const;
  friend bool operator==(const SizeTerms&, const SizeTerms&) = default;
};

SizeTerms size_closed_form(const RadixSpec& spec);

/// M_1 = C(n_1, 2), M_h = n_h M_{h-1} + prod_{j<=h}(n_j - 1) + C(n_h - 1, 2).
std::uint64_t size_recursive(const RadixSpec& spec);

/// Edge set built by literally gluing n_k copies of the (k-1)-level graph,
/// independent of the adjacency rules. Canonicalized like edges().
EdgeStream build_recursive(const RadixSpec& spec,
                           std::uint64_t cap = kDefaultOrderCap);

/// The n_1 labels that agree with x on positions 2..k (a K_{n_1}).
std::vector<Label> clique_of(const Label& x);

struct CopyView {
  std::vector<Label> vertices;
  Label root;
  std::vector<Label> peripherals;
};

/// The copy of H_{n_1..n_{k-i}} whose labels end in `suffix` (|suffix| = i).
CopyView copy_vertices(const RadixSpec& spec, const std::vector<Digit>& suffix);

/// The n_i - 1 roots 0^{i-1} a suffix, a != 0, of sibling copies.
/// `position` is 1-based, 2 <= position <= k; |suffix| = k - position.
std::vector<Label> root_clique(const RadixSpec& spec, std::size_t position,
                               const std::vector<Digit>& suffix);

/// Collapses each copy of level `level` (labels sharing positions
/// level+1..k) to a vertex; the result lives on spec n_{level+1},...,n_k.
std::vector<LabelPair> quotient(const RadixSpec& spec, std::size_t level,
                                std::uint64_t cap = kDefaultOrderCap);

/// Endpoint pairs of an edge stream, in stream order.
std::vector<LabelPair> edge_pairs(const EdgeStream& stream);

}  // namespace hnet
