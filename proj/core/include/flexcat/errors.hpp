#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flexcat {

/// Failure categories surfaced by the library. The CLI maps these onto exit
/// statuses; tests match on them instead of on message text.
enum class Errc {
  invalid_argument,
  group_mismatch,
  type_mismatch,
  unsupported_operation,
  domain_error,
  parse_error,
  schema_violation,
  construction_invariant_violated,
  not_multicopy_feasible,
  invalid_cycle,
  search_too_large,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flexcat
