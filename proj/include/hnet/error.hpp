#pragma once

#include <stdexcept>
#include <string>

namespace hnet {

enum class Errc {
  bad_spec,
  length_mismatch,
  digit_out_of_range,
  compact_form_unavailable,
  spec_mismatch,
  same_vertex,
  is_root,
  position_out_of_range,
  order_cap_exceeded,
  arithmetic_overflow,
  unknown_vertex,
  malformed_input,
};

const char* to_string(Errc code) noexcept;

/// Every contract violation in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hnet
