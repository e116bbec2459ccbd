#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radio {

enum class ErrorCode {
  not_a_tree,
  bad_index,
  size_guard,
  hypothesis_violated,
  not_feasible,
  negative_step,
  duplicate_label,
  bad_params,
  invalid_ordering,
  construction_integrity,
  parse_error,
};

/// Stable name used in JSON output and diagnostics, e.g. "NotATree".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radio
