#include "radio/errors.hpp"

namespace radio {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_a_tree: return "NotATree";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::size_guard: return "SizeGuard";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::not_feasible: return "NotFeasible";
    case ErrorCode::negative_step: return "NegativeStep";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::invalid_ordering: return "InvalidOrdering";
    case ErrorCode::construction_integrity: return "ConstructionIntegrity";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace radio
