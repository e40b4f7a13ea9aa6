#include "hnet/routing.hpp"

#include <algorithm>

#include "hnet/topology.hpp"

namespace hnet {

namespace {

// Descent steps act on the first `len` digits only; the rest is pinned,
// which keeps the walk inside the copy owning that suffix.
Label swap_prefix(const Label& x, std::size_t len) {
  std::vector<Digit> d(x.digits().begin(), x.digits().end());
  const bool zero = d[0] == 0;
  for (std::size_t i = 0; i < len && (d[i] == 0) == zero; ++i) {
    d[i] = zero ? 1 : 0;
  }
  return x.with_digits(std::move(d));
}

std::size_t prefix_alt(const Label& x, std::size_t len) {
  return alt(x.digits().first(len));
}

std::vector<Label> descend_within(const Label& x, std::size_t len) {
  std::vector<Label> out{x};
  while (len > 0 && prefix_alt(out.back(), len) > 0) {
    out.push_back(swap_prefix(out.back(), len));
  }
  return out;
}

struct Reduced {
  std::size_t m = 0;          // length of the differing prefixes
  bool via_copy_roots = false;
};

Reduced reduce(const Label& x, const Label& y) {
  const std::size_t m = x.size() - common_suffix_len(x, y);
  const auto a = x.digits().first(m);
  const auto b = y.digits().first(m);
  const bool via_copy_roots =
      a.back() != 0 && b.back() != 0 &&
      (uniform_suffix_len(a) == 1 || uniform_suffix_len(b) == 1);
  return {m, via_copy_roots};
}

}  // namespace

Label swap_toward_root(const Label& x) {
  if (alt(x) == 0) throw Error(Errc::is_root, "the root has no descent step");
  return swap_prefix(x, x.size());
}

Path descent(const Label& x) { return Path{descend_within(x, x.size())}; }

Path route(const Label& x, const Label& y) {
  require_same_spec(x, y);
  if (x == y) return Path{{x}};

  const Reduced r = reduce(x, y);
  // Through the root of the common copy, or through the roots of the two
  // sibling copies holding x and y (joined by a root_clique edge).
  const std::size_t len = r.via_copy_roots ? r.m - 1 : r.m;
  std::vector<Label> path = descend_within(x, len);
  std::vector<Label> back = descend_within(y, len);
  if (!r.via_copy_roots) back.pop_back();  // shared root
  path.insert(path.end(), back.rbegin(), back.rend());
  return Path{std::move(path)};
}

Label next_hop(const Label& x, const Label& y) {
  require_same_spec(x, y);
  if (x == y) throw Error(Errc::same_vertex, "next hop from a vertex to itself");

  const Reduced r = reduce(x, y);
  if (r.via_copy_roots) {
    if (prefix_alt(x, r.m - 1) > 0) return swap_prefix(x, r.m - 1);
    std::vector<Digit> d(x.digits().begin(), x.digits().end());
    d[r.m - 1] = y[r.m - 1];
    return x.with_digits(std::move(d));
  }
  if (prefix_alt(x, r.m) > 0) return swap_prefix(x, r.m);
  // x is the root of the common copy: step onto y's descent one hop from it.
  Label z = y;
  while (prefix_alt(z, r.m) > 1) z = swap_prefix(z, r.m);
  return z;
}

std::optional<std::size_t> validate_path(const Path& path) {
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Label& a = path.vertices[i];
    const Label& b = path.vertices[i + 1];
    if (!(a.spec() == b.spec()) || a == b || !is_adjacent(a, b)) return i;
  }
  return std::nullopt;
}

Path parse_path(const std::vector<std::string>& labels, const RadixSpec& spec) {
  Path p;
  p.vertices.reserve(labels.size());
  for (const std::string& s : labels) p.vertices.push_back(parse_label(s, spec));
  return p;
}

std::string format_path(const Path& path, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += separator;
    out += format_label(path.vertices[i]);
  }
  return out;
}

}  // namespace hnet
