#pragma once

#include <stdexcept>
#include <string>

namespace idemcodes {

enum class errc {
  division_by_zero,
  context_mismatch,
  not_coprime,
  not_a_subfield_degree,
  order_not_available,
  bad_parameters,
  group_too_large,
  not_normal,
  not_nilpotent,
  not_cyclic,
  characteristic_divides_order,
  quotient_not_cyclic,
  not_faithful_class,
  not_strong_shoda_pair,
  nontrivial_twisting,
  not_in_component,
  singular_system,
  no_solution,
  presentation_match_failure,
  coefficients_not_in_base_field,
  budget_exceeded,
  parse_error,
  internal,
};

const char* errc_name(errc c);

/// Exception carrying a machine-readable code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace idemcodes
