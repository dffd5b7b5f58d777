#include "coxlab/rational.hpp"

#include <ostream>

#include "coxlab/error.hpp"

namespace coxlab {

Rational::Rational(long num, long den) {
  if (den == 0) fail(errc::invalid_parameter, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(errc::invalid_parameter, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(text)));
    }
    mpz_class num(std::string(text.substr(0, slash)));
    mpz_class den(std::string(text.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "bad rational literal '" + std::string(text) + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(errc::invalid_parameter, "division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer()) fail(errc::invalid_parameter, "rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) fail(errc::invalid_parameter, "integer too large for long");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::not_a_permutation_matrix: return "not-a-permutation-matrix";
    case errc::singular_matrix: return "singular-matrix";
    case errc::size_guard_exceeded: return "size-guard-exceeded";
    case errc::cycle_detected: return "cycle-detected";
    case errc::duplicate_label: return "duplicate-label";
    case errc::unknown_element: return "unknown-element";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::not_distributive: return "not-distributive";
    case errc::not_a_lattice: return "not-a-lattice";
    case errc::precondition_violated: return "precondition-violated";
    case errc::not_auslander_gorenstein: return "not-auslander-gorenstein";
    case errc::last_term_decomposable: return "last-term-decomposable";
    case errc::not_unique: return "not-unique";
    case errc::length_exceeded: return "length-exceeded";
    case errc::internal_inconsistency: return "internal-inconsistency";
    case errc::parse_error: return "parse-error";
    case errc::cap_exceeded: return "cap-exceeded";
  }
  return "unknown-error";
}

}  // namespace coxlab
