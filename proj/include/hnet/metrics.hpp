#pragma once

#include <cstdint>
#include <vector>

#include "hnet/labels.hpp"

namespace hnet {

/// Which branch of the closed-form distance applied, after the common suffix
/// of the two labels has been stripped.
enum class DistanceCase {
  same,           // x = y
  through_root,   // a reduced last digit is zero
  through_root_long_suffix,  // both last digits nonzero, both uniform suffixes > 1
  copy_roots,     // both last digits nonzero, some uniform suffix of length 1
};

const char* to_string(DistanceCase c) noexcept;
/// "I", "II", "III", or "same".
const char* roman(DistanceCase c) noexcept;

struct DistanceResult {
  std::uint32_t value = 0;
  DistanceCase kind = DistanceCase::same;
  std::size_t common_suffix = 0;
};

std::uint32_t dist_to_root(const Label& x) noexcept;
DistanceResult distance(const Label& x, const Label& y);

namespace detail {
/// distance() on raw digit strings of equal length under one spec.
DistanceResult distance_digits(std::span<const Digit> x,
                               std::span<const Digit> y) noexcept;
}  // namespace detail

/// max_y distance(x, y) by scanning every vertex.
std::uint32_t eccentricity(const Label& x, std::uint64_t cap = kDefaultOrderCap);
/// Closed-form eccentricity from the last digit and alt. Exact on binomial specs;
/// can overshoot elsewhere (see eccentricity_census).
/// non-binomial specs (see eccentricity_census).
std::uint32_t eccentricity_formula(const Label& x);

struct EccentricityCheck {
  std::uint32_t formula = 0;
  std::uint32_t actual = 0;
  /// True when the short-suffix branch (alt(x) + k - 1) was taken.
  bool short_suffix_branch = false;

  bool agrees() const noexcept { return formula == actual; }
};

EccentricityCheck check_eccentricity_formula(const Label& x,
                                             std::uint64_t cap = kDefaultOrderCap);

struct EccentricityDiscrepancy {
  Label vertex;
  EccentricityCheck check;
};

/// Every vertex whose formula eccentricity differs from the scan value.
std::vector<EccentricityDiscrepancy> eccentricity_census(
    const RadixSpec& spec, std::uint64_t cap = kDefaultOrderCap);

std::uint32_t radius(const RadixSpec& spec) noexcept;
std::uint32_t diameter(const RadixSpec& spec) noexcept;

/// min / max of the eccentricity scan over all vertices.
std::uint32_t radius_verified(const RadixSpec& spec,
                              std::uint64_t cap = kDefaultOrderCap);
std::uint32_t diameter_verified(const RadixSpec& spec,
                                std::uint64_t cap = kDefaultOrderCap);

/// counts[i] = number of vertices at distance i from the root, i = 0..k.
/// Computed digit by digit; no enumeration, so it works for any spec whose
/// order fits in 64 bits.
std::vector<std::uint64_t> layer_counts(const RadixSpec& spec);

}  // namespace hnet
