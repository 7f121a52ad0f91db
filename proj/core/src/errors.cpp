#include "flexcat/errors.hpp"

namespace flexcat {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::type_mismatch: return "type-mismatch";
    case Errc::unsupported_operation: return "unsupported-operation";
    case Errc::domain_error: return "domain-error";
    case Errc::parse_error: return "parse-error";
    case Errc::schema_violation: return "schema-violation";
    case Errc::construction_invariant_violated: return "construction-invariant-violated";
    case Errc::not_multicopy_feasible: return "not-multicopy-feasible";
    case Errc::invalid_cycle: return "invalid-cycle";
    case Errc::search_too_large: return "search-too-large";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace flexcat
