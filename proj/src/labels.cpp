#include "hnet/labels.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace hnet {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::bad_spec: return "bad-spec";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::digit_out_of_range: return "digit-out-of-range";
    case Errc::compact_form_unavailable: return "compact-form-unavailable";
    case Errc::spec_mismatch: return "spec-mismatch";
    case Errc::same_vertex: return "same-vertex";
    case Errc::is_root: return "is-root";
    case Errc::position_out_of_range: return "position-out-of-range";
    case Errc::order_cap_exceeded: return "order-cap-exceeded";
    case Errc::arithmetic_overflow: return "arithmetic-overflow";
    case Errc::unknown_vertex: return "unknown-vertex";
    case Errc::malformed_input: return "malformed-input";
  }
  return "unknown";
}

namespace {

std::optional<std::uint64_t> checked_product(const std::vector<Digit>& r) {
  std::uint64_t n = 1;
  for (Digit d : r) {
    if (n > std::numeric_limits<std::uint64_t>::max() / d) return std::nullopt;
    n *= d;
  }
  return n;
}

// Splits on ',' and parses each field as a decimal integer.
std::optional<std::vector<Digit>> parse_decimal_list(std::string_view text) {
  std::vector<Digit> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? text.npos
                                                         : comma - pos);
    Digit value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (field.empty() || field.front() == '+' || field.front() == '-') {
      return std::nullopt;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

RadixSpec::RadixSpec(std::vector<Digit> radices) {
  if (radices.empty()) {
    throw Error(Errc::bad_spec, "radix spec must have at least one radix");
  }
  for (Digit n : radices) {
    if (n < 2) {
      throw Error(Errc::bad_spec,
                  "every radix must be at least 2, got " + std::to_string(n));
    }
  }
  order_ = checked_product(radices);
  radices_ = std::make_shared<const std::vector<Digit>>(std::move(radices));
}

RadixSpec RadixSpec::parse(std::string_view text) {
  auto values = parse_decimal_list(text);
  if (!values) {
    throw Error(Errc::bad_spec,
                "malformed radix spec '" + std::string(text) + "'");
  }
  return RadixSpec(std::move(*values));
}

RadixSpec RadixSpec::binomial(std::size_t k) {
  if (k < 1) throw Error(Errc::bad_spec, "binomial spec needs k >= 1");
  return RadixSpec(std::vector<Digit>(k, 2));
}

RadixSpec binomial_spec(std::size_t k) { return RadixSpec::binomial(k); }

std::uint64_t RadixSpec::order() const {
  if (!order_) {
    throw Error(Errc::arithmetic_overflow,
                "order of spec " + to_string() + " exceeds 64 bits");
  }
  return *order_;
}

bool RadixSpec::is_binomial() const noexcept {
  return std::all_of(radices_->begin(), radices_->end(),
                     [](Digit n) { return n == 2; });
}

bool RadixSpec::has_compact_form() const noexcept {
  return std::all_of(radices_->begin(), radices_->end(),
                     [](Digit n) { return n <= 10; });
}

RadixSpec RadixSpec::slice(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > k()) {
    throw Error(Errc::position_out_of_range, "spec slice out of range");
  }
  return RadixSpec(std::vector<Digit>(radices_->begin() + first,
                                      radices_->begin() + first + count));
}

std::string RadixSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < k(); ++i) {
    if (i) out += ',';
    out += std::to_string(radix(i));
  }
  return out;
}

void require_order_within(const RadixSpec& spec, std::uint64_t cap) {
  const auto n = spec.exact_order();
  if (!n || *n > cap) {
    throw Error(Errc::order_cap_exceeded,
                "order of spec " + spec.to_string() + " exceeds cap " +
                    std::to_string(cap));
  }
}

Label::Label(RadixSpec spec, std::vector<Digit> digits)
    : spec_(std::move(spec)), digits_(std::move(digits)) {
  if (digits_.size() != spec_.k()) {
    throw Error(Errc::length_mismatch,
                "label has " + std::to_string(digits_.size()) +
                    " digits, spec expects " + std::to_string(spec_.k()));
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= spec_.radix(i)) {
      throw Error(Errc::digit_out_of_range,
                  "digit x_" + std::to_string(i + 1) + " = " +
                      std::to_string(digits_[i]) + " is not below n_" +
                      std::to_string(i + 1) + " = " +
                      std::to_string(spec_.radix(i)));
    }
  }
}

Label Label::root(const RadixSpec& spec) {
  return Label(spec, std::vector<Digit>(spec.k(), 0));
}

Label Label::from_index(const RadixSpec& spec, std::uint64_t index) {
  if (index >= spec.order()) {
    throw Error(Errc::unknown_vertex, "vertex index out of range");
  }
  std::vector<Digit> digits(spec.k());
  for (std::size_t i = spec.k(); i-- > 0;) {
    digits[i] = static_cast<Digit>(index % spec.radix(i));
    index /= spec.radix(i);
  }
  return Label(spec, std::move(digits));
}

std::uint64_t Label::index() const {
  (void)spec_.order();  // throws when the index space overflows
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    index = index * spec_.radix(i) + digits_[i];
  }
  return index;
}

Label Label::with_digits(std::vector<Digit> digits) const {
  return Label(spec_, std::move(digits));
}

void require_same_spec(const Label& x, const Label& y) {
  if (!(x.spec() == y.spec())) {
    throw Error(Errc::spec_mismatch, "labels belong to different specs (" +
                                         x.spec().to_string() + " vs " +
                                         y.spec().to_string() + ")");
  }
}

std::string format_label(const Label& x, LabelFormat format) {
  bool compact = false;
  switch (format) {
    case LabelFormat::automatic:
      compact = x.spec().has_compact_form();
      break;
    case LabelFormat::compact:
      if (!x.spec().has_compact_form()) {
        throw Error(Errc::compact_form_unavailable,
                    "compact form requires every radix <= 10");
      }
      compact = true;
      break;
    case LabelFormat::comma:
      break;
  }
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + x[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(x[i]);
    }
  }
  return out;
}

Label parse_label(std::string_view text, const RadixSpec& spec) {
  // A single-digit spec always reads the text as one decimal number.
  if (text.find(',') != std::string_view::npos || spec.k() == 1) {
    auto values = parse_decimal_list(text);
    if (!values) {
      throw Error(Errc::malformed_input,
                  "malformed label '" + std::string(text) + "'");
    }
    return Label(spec, std::move(*values));
  }
  if (!spec.has_compact_form()) {
    throw Error(Errc::compact_form_unavailable,
                "compact label '" + std::string(text) + "' needs every radix <= 10");
  }
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(Errc::malformed_input,
                  "malformed label '" + std::string(text) + "'");
    }
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  return Label(spec, std::move(digits));
}

std::size_t alt(std::span<const Digit> digits) noexcept {
  std::size_t changes = 0;
  bool prev_zero = true;
  // Walk the extended string from the right: x_{k+1} = 0.
  for (std::size_t i = digits.size(); i-- > 0;) {
    const bool zero = digits[i] == 0;
    if (zero != prev_zero) ++changes;
    prev_zero = zero;
  }
  return changes;
}

std::size_t alt(const Label& x) noexcept { return alt(x.digits()); }

BlockView blocks(std::span<const Digit> digits) {
  BlockView view;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const BlockKind kind = digits[i] == 0 ? BlockKind::zero : BlockKind::nonzero;
    if (view.blocks.empty() || view.blocks.back().kind != kind) {
      view.blocks.push_back({kind, i, 1});
    } else {
      ++view.blocks.back().length;
    }
  }
  return view;
}

BlockView blocks(const Label& x) { return blocks(x.digits()); }

std::size_t uniform_prefix_len(std::span<const Digit> digits) noexcept {
  if (digits.empty()) return 0;
  const bool zero = digits.front() == 0;
  std::size_t n = 1;
  while (n < digits.size() && (digits[n] == 0) == zero) ++n;
  return n;
}

std::size_t uniform_suffix_len(std::span<const Digit> digits) noexcept {
  if (digits.empty()) return 0;
  const bool zero = digits.back() == 0;
  std::size_t n = 1;
  while (n < digits.size() && (digits[digits.size() - 1 - n] == 0) == zero) ++n;
  return n;
}

std::size_t common_suffix_len(const Label& x, const Label& y) {
  require_same_spec(x, y);
  const std::size_t k = x.size();
  std::size_t len = 0;
  while (len < k && x[k - 1 - len] == y[k - 1 - len]) ++len;
  return len;
}

Label conjugate(const Label& x) {
  std::vector<Digit> digits(x.digits().begin(), x.digits().end());
  for (Digit& d : digits) d = d == 0 ? 1 : 0;
  return x.with_digits(std::move(digits));
}

LabelClass classify(const Label& x) noexcept {
  LabelClass c;
  const auto d = x.digits();
  c.is_root = std::all_of(d.begin(), d.end(), [](Digit v) { return v == 0; });
  c.is_peripheral =
      std::all_of(d.begin(), d.end(), [](Digit v) { return v != 0; });
  c.is_uniform = c.is_root || c.is_peripheral;
  const auto it = std::find_if(d.begin(), d.end(), [](Digit v) { return v != 0; });
  if (it != d.end()) {
    c.first_nonzero_position = static_cast<std::size_t>(it - d.begin()) + 1;
  }
  return c;
}

}  // namespace hnet
