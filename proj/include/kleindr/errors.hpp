#ifndef KLEINDR_ERRORS_HPP
#define KLEINDR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kleindr {

// Every failure mode gets a distinct kind so the CLI can map it to an
// exit code and tests can assert the precise path.
enum class errc {
  syntax_error,
  unknown_symbol,
  zero_denominator,
  schema_error,
  usage_error,
  reducible_modulus,
  field_too_large,
  field_mismatch,
  no_embedding,
  division_by_zero,
  zero_polynomial,
  unsplit_denominator,
  disconnected_cover,
  trivial_cover,
  inconsistent_triple,
  non_integral_genus,
  no_case_matches,
  dimension_mismatch,
  bad_module,
  outside_classification,
  alpha_search_failed,
  basis_range_violation,
  bad_hkg_input,
  check_failed,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail(errc::internal, "internal invariant violated: " + what);
}

const char* errc_name(errc kind);

} // namespace kleindr

#endif
