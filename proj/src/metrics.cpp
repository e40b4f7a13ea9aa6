#include "hnet/metrics.hpp"

#include <algorithm>
#include <array>

namespace hnet {

const char* to_string(DistanceCase c) noexcept {
  switch (c) {
    case DistanceCase::same: return "same";
    case DistanceCase::through_root: return "through_root";
    case DistanceCase::through_root_long_suffix: return "through_root_long_suffix";
    case DistanceCase::copy_roots: return "copy_roots";
  }
  return "unknown";
}

const char* roman(DistanceCase c) noexcept {
  switch (c) {
    case DistanceCase::same: return "same";
    case DistanceCase::through_root: return "I";
    case DistanceCase::through_root_long_suffix: return "II";
    case DistanceCase::copy_roots: return "III";
  }
  return "?";
}

std::uint32_t dist_to_root(const Label& x) noexcept {
  return static_cast<std::uint32_t>(alt(x));
}

namespace detail {

DistanceResult distance_digits(std::span<const Digit> x,
                               std::span<const Digit> y) noexcept {
  const std::size_t k = x.size();
  std::size_t suffix = 0;
  while (suffix < k && x[k - 1 - suffix] == y[k - 1 - suffix]) ++suffix;
  if (suffix == k) return {0, DistanceCase::same, k};

  // Inside the copy that owns the shared suffix the labels reduce to their
  // prefixes of length m, whose last digits differ.
  const std::size_t m = k - suffix;
  const auto a = x.first(m);
  const auto b = y.first(m);
  const auto to_u32 = [](std::size_t v) { return static_cast<std::uint32_t>(v); };

  if (a.back() == 0 || b.back() == 0) {
    return {to_u32(alt(a) + alt(b)), DistanceCase::through_root, suffix};
  }
  if (uniform_suffix_len(a) > 1 && uniform_suffix_len(b) > 1) {
    return {to_u32(alt(a) + alt(b)), DistanceCase::through_root_long_suffix, suffix};
  }
  return {to_u32(alt(a.first(m - 1)) + alt(b.first(m - 1)) + 1),
          DistanceCase::copy_roots, suffix};
}

}  // namespace detail

DistanceResult distance(const Label& x, const Label& y) {
  require_same_spec(x, y);
  return detail::distance_digits(x.digits(), y.digits());
}

std::uint32_t eccentricity(const Label& x, std::uint64_t cap) {
  const RadixSpec& spec = x.spec();
  require_order_within(spec, cap);
  const std::size_t k = spec.k();
  std::vector<Digit> y(k, 0);
  std::uint32_t best = 0;
  while (true) {
    best = std::max(best, detail::distance_digits(x.digits(), y).value);
    std::size_t i = k;
    while (i > 0 && ++y[i - 1] == spec.radix(i - 1)) y[--i] = 0;
    if (i == 0) return best;
  }
}

namespace {

bool takes_short_suffix_branch(const Label& x) {
  return !x.spec().is_binomial() && x[x.size() - 1] != 0 &&
         uniform_suffix_len(x.digits()) == 1;
}

}  // namespace

std::uint32_t eccentricity_formula(const Label& x) {
  const auto k = static_cast<std::uint32_t>(x.size());
  const Digit last = x[x.size() - 1];
  if (x.spec().is_binomial()) {
    return last == 0 ? dist_to_root(x) + k : dist_to_root(conjugate(x)) + k;
  }
  return takes_short_suffix_branch(x) ? dist_to_root(x) + k - 1
                                      : dist_to_root(x) + k;
}

EccentricityCheck check_eccentricity_formula(const Label& x, std::uint64_t cap) {
  return {eccentricity_formula(x), eccentricity(x, cap),
          takes_short_suffix_branch(x)};
}

std::vector<EccentricityDiscrepancy> eccentricity_census(const RadixSpec& spec,
                                                         std::uint64_t cap) {
  require_order_within(spec, cap);
  std::vector<EccentricityDiscrepancy> out;
  const std::uint64_t n = spec.order();
  for (std::uint64_t i = 0; i < n; ++i) {
    Label x = Label::from_index(spec, i);
    const EccentricityCheck check = check_eccentricity_formula(x, cap);
    if (!check.agrees()) out.push_back({std::move(x), check});
  }
  return out;
}

// K_{n_1} for k = 1: every vertex is at distance 1 from every other.
std::uint32_t radius(const RadixSpec& spec) noexcept {
  return static_cast<std::uint32_t>(spec.k());
}

std::uint32_t diameter(const RadixSpec& spec) noexcept {
  const auto k = static_cast<std::uint32_t>(spec.k());
  return k == 1 ? 1 : 2 * k - 1;
}

std::uint32_t radius_verified(const RadixSpec& spec, std::uint64_t cap) {
  require_order_within(spec, cap);
  std::uint32_t best = static_cast<std::uint32_t>(-1);
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    best = std::min(best, eccentricity(Label::from_index(spec, i), cap));
  }
  return best;
}

std::uint32_t diameter_verified(const RadixSpec& spec, std::uint64_t cap) {
  require_order_within(spec, cap);
  std::uint32_t best = 0;
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    best = std::max(best, eccentricity(Label::from_index(spec, i), cap));
  }
  return best;
}

std::vector<std::uint64_t> layer_counts(const RadixSpec& spec) {
  (void)spec.order();  // counts are bounded by the order
  const std::size_t k = spec.k();
  // ways[t][z]: prefixes with t transitions so far whose last digit is zero
  // (z = 1) or nonzero (z = 0). Transitions are counted between consecutive
  // digits; the appended zero is handled at the end.
  std::vector<std::array<std::uint64_t, 2>> ways(k + 1, {0, 0});
  ways[0][1] = 1;
  ways[0][0] = spec.radix(0) - 1;
  for (std::size_t i = 1; i < k; ++i) {
    const std::uint64_t nonzero = spec.radix(i) - 1;
    std::vector<std::array<std::uint64_t, 2>> next(k + 1, {0, 0});
    for (std::size_t t = 0; t < k; ++t) {
      const auto [from_nonzero, from_zero] = ways[t];
      next[t][1] += from_zero;
      next[t][0] += from_nonzero * nonzero;
      next[t + 1][1] += from_nonzero;
      next[t + 1][0] += from_zero * nonzero;
    }
    ways = std::move(next);
  }
  // The appended zero adds one more change when x_k is nonzero.
  std::vector<std::uint64_t> counts(k + 1, 0);
  for (std::size_t t = 0; t <= k; ++t) {
    counts[t] += ways[t][1];
    if (t + 1 <= k) counts[t + 1] += ways[t][0];
  }
  return counts;
}

}  // namespace hnet
