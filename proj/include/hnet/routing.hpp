#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnet/labels.hpp"

namespace hnet {

/// Consecutive vertices are adjacent; vertices.front() is the source.
struct Path {
  std::vector<Label> vertices;

  std::size_t edge_count() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  const Label& source() const { return vertices.front(); }
  const Label& destination() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Flips the maximal uniform prefix: nonzero digits become 0, zero digits
/// become the filler 1. The result is a neighbor one step closer to the root.
Label swap_toward_root(const Label& x);

/// x, swap(x), swap(swap(x)), ... down to the root; alt(x) edges.
Path descent(const Label& x);

/// A shortest path from x to y, built from descents inside the copy that
/// holds both labels.
Path route(const Label& x, const Label& y);

/// route(x, y).vertices[1], computed from the two labels only.
Label next_hop(const Label& x, const Label& y);

/// Index i of the first hop (vertices[i], vertices[i+1]) that is not an edge,
/// or nullopt when the whole path is valid.
std::optional<std::size_t> validate_path(const Path& path);

Path parse_path(const std::vector<std::string>& labels, const RadixSpec& spec);
std::string format_path(const Path& path, std::string_view separator = " -> ");

}  // namespace hnet
