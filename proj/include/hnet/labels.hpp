#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnet/error.hpp"

namespace hnet {

using Digit = std::uint32_t;

/// Enumerating operations refuse specs whose order exceeds this.
inline constexpr std::uint64_t kDefaultOrderCap = 10'000'000;

/// The radices n_1, ..., n_k of one member of the hierarchical family.
///
/// Cheap to copy: the radix list is shared and immutable. The order
/// N = n_1 * ... * n_k is computed exactly; specs whose order does not fit in
/// 64 bits are still valid for closed-form queries, but order() throws.
class RadixSpec {
 public:
  explicit RadixSpec(std::vector<Digit> radices);

  /// Parses `n ("," n)*` with every n >= 2.
  static RadixSpec parse(std::string_view text);
  /// B_k = H_{2,...,2}.
  static RadixSpec binomial(std::size_t k);

  std::size_t k() const noexcept { return radices_->size(); }
  /// Radix of the 0-based digit index `i`.
  Digit radix(std::size_t i) const { return (*radices_)[i]; }
  std::span<const Digit> radices() const noexcept { return *radices_; }

  std::uint64_t order() const;
  std::optional<std::uint64_t> exact_order() const noexcept { return order_; }

  bool is_binomial() const noexcept;
  /// True when every radix is at most 10, so labels have a compact form.
  bool has_compact_form() const noexcept;

  /// The spec n_{first+1}, ..., n_{first+count} (0-based `first`).
  RadixSpec slice(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const RadixSpec& a, const RadixSpec& b) noexcept {
    return a.radices_ == b.radices_ || *a.radices_ == *b.radices_;
  }

 private:
  std::shared_ptr<const std::vector<Digit>> radices_;
  std::optional<std::uint64_t> order_;
};

RadixSpec binomial_spec(std::size_t k);

/// Throws Errc::order_cap_exceeded when the spec is too large to enumerate.
void require_order_within(const RadixSpec& spec, std::uint64_t cap);

/// A vertex x_1 x_2 ... x_k of H_{n_1,...,n_k}; x_1 is written leftmost and
/// x_k is the coarsest hierarchical coordinate.
class Label {
 public:
  Label(RadixSpec spec, std::vector<Digit> digits);

  static Label root(const RadixSpec& spec);
  /// Inverse of index(): x_1 is the most significant digit, so index order is
  /// lexicographic order of the digit strings.
  static Label from_index(const RadixSpec& spec, std::uint64_t index);

  const RadixSpec& spec() const noexcept { return spec_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  std::uint64_t index() const;

  /// Same spec, digits replaced; the new digits are range-checked.
  Label with_digits(std::vector<Digit> digits) const;

  friend bool operator==(const Label& a, const Label& b) noexcept {
    return a.digits_ == b.digits_ && a.spec_ == b.spec_;
  }
  /// Lexicographic on digits; only meaningful under a common spec.
  friend std::strong_ordering operator<=>(const Label& a,
                                          const Label& b) noexcept {
    return a.digits_ <=> b.digits_;
  }

 private:
  RadixSpec spec_;
  std::vector<Digit> digits_;
};

void require_same_spec(const Label& x, const Label& y);

enum class LabelFormat { automatic, comma, compact };

std::string format_label(const Label& x,
                         LabelFormat format = LabelFormat::automatic);
Label parse_label(std::string_view text, const RadixSpec& spec);

/// Zero <-> nonzero transitions in the digit string with a zero appended.
std::size_t alt(std::span<const Digit> digits) noexcept;
std::size_t alt(const Label& x) noexcept;

enum class BlockKind { zero, nonzero };

struct Block {
  BlockKind kind;
  std::size_t start;  // 0-based offset of the first digit
  std::size_t length;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Maximal uniform runs, left to right.
struct BlockView {
  std::vector<Block> blocks;

  const Block& first() const { return blocks.front(); }
  const Block& last() const { return blocks.back(); }
};

BlockView blocks(std::span<const Digit> digits);
BlockView blocks(const Label& x);

/// Length of the maximal uniform prefix / suffix of a non-empty string.
std::size_t uniform_prefix_len(std::span<const Digit> digits) noexcept;
std::size_t uniform_suffix_len(std::span<const Digit> digits) noexcept;

std::size_t common_suffix_len(const Label& x, const Label& y);

/// Zero digits become 1, nonzero digits become 0. On binomial specs this is
/// the bitwise complement.
Label conjugate(const Label& x);

struct LabelClass {
  bool is_root = false;
  bool is_peripheral = false;
  bool is_uniform = false;
  /// 1-based position of the first nonzero digit.
  std::optional<std::size_t> first_nonzero_position;
};

LabelClass classify(const Label& x) noexcept;

}  // namespace hnet
