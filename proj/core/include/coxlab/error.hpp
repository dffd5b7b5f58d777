#pragma once

#include <stdexcept>
#include <string>

namespace coxlab {

// Machine-readable failure categories; the CLI maps these to exit code 2.
enum class errc {
  dimension_mismatch,
  not_a_permutation_matrix,
  singular_matrix,
  size_guard_exceeded,
  cycle_detected,
  duplicate_label,
  unknown_element,
  invalid_parameter,
  not_distributive,
  not_a_lattice,
  precondition_violated,
  not_auslander_gorenstein,
  last_term_decomposable,
  not_unique,
  length_exceeded,
  internal_inconsistency,
  parse_error,
  cap_exceeded,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace coxlab
