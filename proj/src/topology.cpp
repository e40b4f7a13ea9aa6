#include "hnet/topology.hpp"

#include <algorithm>
#include <limits>

namespace hnet {

const char* to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::first_digit: return "first_digit";
    case EdgeKind::zero_block_flip: return "zero_block_flip";
    case EdgeKind::root_clique: return "root_clique";
  }
  return "unknown";
}

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(Errc::arithmetic_overflow, "edge count exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw Error(Errc::arithmetic_overflow, "edge count exceeds 64 bits");
  }
  return a + b;
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : mul(n, n - 1) / 2; }

std::size_t leading_zeros(std::span<const Digit> d) {
  std::size_t n = 0;
  while (n < d.size() && d[n] == 0) ++n;
  return n;
}

std::size_t leading_nonzeros(std::span<const Digit> d) {
  std::size_t n = 0;
  while (n < d.size() && d[n] != 0) ++n;
  return n;
}

// Calls visit(digits) for every assignment of digits[0..len) drawn from
// [lo_i, n_i), in lexicographic order. Other entries are left untouched.
template <typename Visit>
void for_each_prefix(const RadixSpec& spec, std::vector<Digit>& digits,
                     std::size_t len, Digit lo, Visit&& visit) {
  for (std::size_t i = 0; i < len; ++i) digits[i] = lo;
  while (true) {
    visit(digits);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++digits[i] < spec.radix(i)) break;
      digits[i] = lo;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

void check_suffix(const RadixSpec& spec, const std::vector<Digit>& suffix,
                  std::size_t first) {
  for (std::size_t j = 0; j < suffix.size(); ++j) {
    if (suffix[j] >= spec.radix(first + j)) {
      throw Error(Errc::digit_out_of_range,
                  "suffix digit at position " + std::to_string(first + j + 1) +
                      " out of range");
    }
  }
}

}  // namespace

std::optional<EdgeKind> is_adjacent(const Label& x, const Label& y) {
  require_same_spec(x, y);
  if (x == y) throw Error(Errc::same_vertex, "adjacency of a vertex with itself");

  const std::size_t k = x.size();
  std::size_t last_diff = k;  // 0-based index of the rightmost difference
  std::size_t diff_count = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] != y[i]) {
      last_diff = i;
      ++diff_count;
    }
  }
  if (last_diff == 0) return EdgeKind::first_digit;

  const std::size_t len = last_diff + 1;
  const auto xd = x.digits().first(len);
  const auto yd = y.digits().first(len);
  if ((leading_zeros(xd) == len && leading_nonzeros(yd) == len) ||
      (leading_zeros(yd) == len && leading_nonzeros(xd) == len)) {
    return EdgeKind::zero_block_flip;
  }
  if (diff_count == 1 && leading_zeros(xd) == last_diff &&
      leading_zeros(yd) == last_diff && x[last_diff] != 0 && y[last_diff] != 0) {
    return EdgeKind::root_clique;
  }
  return std::nullopt;
}

std::vector<Neighbor> neighbors(const Label& x) {
  const RadixSpec& spec = x.spec();
  const std::size_t k = x.size();
  std::vector<Digit> digits(x.digits().begin(), x.digits().end());
  std::vector<Neighbor> out;

  for (Digit v = 0; v < spec.radix(0); ++v) {
    if (v == x[0]) continue;
    digits[0] = v;
    out.push_back({x.with_digits(digits), EdgeKind::first_digit});
  }
  digits[0] = x[0];

  const std::size_t zeros = leading_zeros(x.digits());
  for (std::size_t len = 2; len <= zeros; ++len) {
    std::vector<Digit> d = digits;
    for_each_prefix(spec, d, len, 1, [&](const std::vector<Digit>& p) {
      out.push_back({x.with_digits(p), EdgeKind::zero_block_flip});
    });
  }

  const std::size_t nonzeros = leading_nonzeros(x.digits());
  for (std::size_t len = 2; len <= nonzeros; ++len) {
    std::vector<Digit> d = digits;
    std::fill_n(d.begin(), len, 0);
    out.push_back({x.with_digits(std::move(d)), EdgeKind::zero_block_flip});
  }

  if (zeros >= 1 && zeros < k) {
    const std::size_t i = zeros;
    for (Digit v = 1; v < spec.radix(i); ++v) {
      if (v == x[i]) continue;
      std::vector<Digit> d = digits;
      d[i] = v;
      out.push_back({x.with_digits(std::move(d)), EdgeKind::root_clique});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Neighbor& a, const Neighbor& b) { return a.label < b.label; });
  return out;
}

std::uint64_t degree(const Label& x) {
  const RadixSpec& spec = x.spec();
  const std::size_t k = x.size();
  std::uint64_t deg = spec.radix(0) - 1;

  const std::size_t zeros = leading_zeros(x.digits());
  std::uint64_t flips = spec.radix(0) - 1;
  for (std::size_t len = 2; len <= zeros; ++len) {
    flips = mul(flips, spec.radix(len - 1) - 1);
    deg = add(deg, flips);
  }
  const std::size_t nonzeros = leading_nonzeros(x.digits());
  if (nonzeros >= 2) deg += nonzeros - 1;
  if (zeros >= 1 && zeros < k) deg += spec.radix(zeros) - 2;
  return deg;
}

void for_each_edge(const RadixSpec& spec,
                   const std::function<void(const Edge&)>& visit,
                   std::uint64_t cap) {
  require_order_within(spec, cap);
  const std::uint64_t n = spec.order();
  for (std::uint64_t i = 0; i < n; ++i) {
    const Label x = Label::from_index(spec, i);
    for (const Neighbor& nb : neighbors(x)) {
      if (x < nb.label) visit(Edge{x, nb.label, nb.kind});
    }
  }
}

EdgeStream edges(const RadixSpec& spec, std::uint64_t cap) {
  EdgeStream out;
  for_each_edge(spec, [&](const Edge& e) { out.push_back(e); }, cap);
  return out;
}

std::uint64_t SizeTerms::total() const {
  return add(add(first_digit, zero_block_flip), root_clique);
}

SizeTerms size_closed_form(const RadixSpec& spec) {
  const std::size_t k = spec.k();
  // tail[i] = prod_{j > i} n_j over 0-based indices.
  std::vector<std::uint64_t> tail(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) tail[i] = mul(tail[i + 1], spec.radix(i + 1));

  SizeTerms t;
  t.first_digit = mul(choose2(spec.radix(0)), tail[0]);
  std::uint64_t nonzero_prefixes = spec.radix(0) - 1;
  for (std::size_t i = 1; i < k; ++i) {
    nonzero_prefixes = mul(nonzero_prefixes, spec.radix(i) - 1);
    t.zero_block_flip = add(t.zero_block_flip, mul(nonzero_prefixes, tail[i]));
    t.root_clique = add(t.root_clique, mul(choose2(spec.radix(i) - 1), tail[i]));
  }
  return t;
}

std::uint64_t size_recursive(const RadixSpec& spec) {
  std::uint64_t m = choose2(spec.radix(0));
  std::uint64_t nonzero_prefixes = spec.radix(0) - 1;
  for (std::size_t h = 1; h < spec.k(); ++h) {
    nonzero_prefixes = mul(nonzero_prefixes, spec.radix(h) - 1);
    m = add(add(mul(spec.radix(h), m), nonzero_prefixes),
            choose2(spec.radix(h) - 1));
  }
  return m;
}

EdgeStream build_recursive(const RadixSpec& spec, std::uint64_t cap) {
  require_order_within(spec, cap);

  struct IndexEdge {
    std::uint64_t u, v;
    EdgeKind kind;
  };

  // Level 1: K_{n_1} on prefix indices 0..n_1-1.
  std::vector<IndexEdge> level;
  for (std::uint64_t a = 0; a < spec.radix(0); ++a) {
    for (std::uint64_t b = a + 1; b < spec.radix(0); ++b) {
      level.push_back({a, b, EdgeKind::first_digit});
    }
  }

  // Appending digit alpha to a prefix with index p gives index p * n_h + alpha.
  for (std::size_t h = 1; h < spec.k(); ++h) {
    const std::uint64_t n = spec.radix(h);
    std::vector<IndexEdge> next;
    next.reserve(level.size() * n);
    for (std::uint64_t alpha = 0; alpha < n; ++alpha) {
      for (const IndexEdge& e : level) {
        next.push_back({e.u * n + alpha, e.v * n + alpha, e.kind});
      }
    }
    // Root 0...0 to every peripheral vertex of the new level.
    std::vector<std::uint64_t> peripherals{0};
    for (std::size_t j = 0; j <= h; ++j) {
      std::vector<std::uint64_t> grown;
      for (std::uint64_t p : peripherals) {
        for (std::uint64_t d = 1; d < spec.radix(j); ++d) {
          grown.push_back(p * spec.radix(j) + d);
        }
      }
      peripherals = std::move(grown);
    }
    for (std::uint64_t p : peripherals) {
      next.push_back({0, p, EdgeKind::zero_block_flip});
    }
    // Roots 0...0a of the nonzero copies form a clique.
    for (std::uint64_t a = 1; a < n; ++a) {
      for (std::uint64_t b = a + 1; b < n; ++b) {
        next.push_back({a, b, EdgeKind::root_clique});
      }
    }
    level = std::move(next);
  }

  for (IndexEdge& e : level) {
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(level.begin(), level.end(), [](const IndexEdge& a, const IndexEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  EdgeStream out;
  out.reserve(level.size());
  for (const IndexEdge& e : level) {
    out.push_back(
        {Label::from_index(spec, e.u), Label::from_index(spec, e.v), e.kind});
  }
  return out;
}

std::vector<Label> clique_of(const Label& x) {
  std::vector<Label> out;
  std::vector<Digit> digits(x.digits().begin(), x.digits().end());
  for (Digit v = 0; v < x.spec().radix(0); ++v) {
    digits[0] = v;
    out.push_back(x.with_digits(digits));
  }
  return out;
}

CopyView copy_vertices(const RadixSpec& spec, const std::vector<Digit>& suffix) {
  const std::size_t k = spec.k();
  if (suffix.empty() || suffix.size() > k) {
    throw Error(Errc::length_mismatch, "copy suffix must have length 1..k");
  }
  const std::size_t prefix = k - suffix.size();
  check_suffix(spec, suffix, prefix);

  std::vector<Digit> digits(k, 0);
  std::copy(suffix.begin(), suffix.end(), digits.begin() + prefix);

  CopyView view{{}, Label(spec, digits), {}};
  for_each_prefix(spec, digits, prefix, 0, [&](const std::vector<Digit>& d) {
    view.vertices.emplace_back(spec, d);
  });
  for_each_prefix(spec, digits, prefix, 1, [&](const std::vector<Digit>& d) {
    view.peripherals.emplace_back(spec, d);
  });
  return view;
}

std::vector<Label> root_clique(const RadixSpec& spec, std::size_t position,
                               const std::vector<Digit>& suffix) {
  const std::size_t k = spec.k();
  if (position < 2 || position > k) {
    throw Error(Errc::position_out_of_range,
                "root clique position must satisfy 2 <= i <= k");
  }
  if (suffix.size() != k - position) {
    throw Error(Errc::length_mismatch, "root clique suffix must have length k - i");
  }
  check_suffix(spec, suffix, position);

  std::vector<Digit> digits(k, 0);
  std::copy(suffix.begin(), suffix.end(), digits.begin() + position);
  std::vector<Label> out;
  for (Digit a = 1; a < spec.radix(position - 1); ++a) {
    digits[position - 1] = a;
    out.emplace_back(spec, digits);
  }
  return out;
}

std::vector<LabelPair> quotient(const RadixSpec& spec, std::size_t level,
                                std::uint64_t cap) {
  const std::size_t k = spec.k();
  if (level < 1 || level >= k) {
    throw Error(Errc::position_out_of_range, "quotient level must satisfy 1 <= i <= k-1");
  }
  const RadixSpec coarse = spec.slice(level, k - level);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> collapsed;
  for_each_edge(
      spec,
      [&](const Edge& e) {
        const Label a(coarse, {e.u.digits().begin() + level, e.u.digits().end()});
        const Label b(coarse, {e.v.digits().begin() + level, e.v.digits().end()});
        if (a == b) return;
        auto ia = a.index(), ib = b.index();
        if (ib < ia) std::swap(ia, ib);
        collapsed.emplace_back(ia, ib);
      },
      cap);
  std::sort(collapsed.begin(), collapsed.end());
  collapsed.erase(std::unique(collapsed.begin(), collapsed.end()), collapsed.end());

  std::vector<LabelPair> out;
  out.reserve(collapsed.size());
  for (auto [a, b] : collapsed) {
    out.emplace_back(Label::from_index(coarse, a), Label::from_index(coarse, b));
  }
  return out;
}

std::vector<LabelPair> edge_pairs(const EdgeStream& stream) {
  std::vector<LabelPair> out;
  out.reserve(stream.size());
  for (const Edge& e : stream) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace hnet
