#pragma once

// Shared plumbing: error types, enumeration caps, big-integer aliases.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for all library errors.  `code()` is a stable machine-readable
// tag used by the CLI when mapping failures to JSON diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define RINGCODE_DEFINE_ERROR(Name)                          \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

RINGCODE_DEFINE_ERROR(NonPrime);
RINGCODE_DEFINE_ERROR(ReducibleModulus);
RINGCODE_DEFINE_ERROR(DegreeMismatch);
RINGCODE_DEFINE_ERROR(DivisionByZero);
RINGCODE_DEFINE_ERROR(FieldMismatch);
RINGCODE_DEFINE_ERROR(EnumerationCapExceeded);
RINGCODE_DEFINE_ERROR(SpecParse);
RINGCODE_DEFINE_ERROR(AxiomViolation);
RINGCODE_DEFINE_ERROR(OrderCapExceeded);
RINGCODE_DEFINE_ERROR(NotAbelian);
RINGCODE_DEFINE_ERROR(NotASubgroup);
RINGCODE_DEFINE_ERROR(InternalInconsistency);
RINGCODE_DEFINE_ERROR(NotStandardForm);
RINGCODE_DEFINE_ERROR(RankDeficient);
RINGCODE_DEFINE_ERROR(NonFieldAlphabet);
RINGCODE_DEFINE_ERROR(NotIsomorphism);
RINGCODE_DEFINE_ERROR(WeightNotPreserved);
RINGCODE_DEFINE_ERROR(SearchCapExceeded);
RINGCODE_DEFINE_ERROR(HypothesisUnverified);
RINGCODE_DEFINE_ERROR(NotInKernel);
RINGCODE_DEFINE_ERROR(ZeroFunction);
RINGCODE_DEFINE_ERROR(KNotGreaterThanM);
RINGCODE_DEFINE_ERROR(NotIsometry);
RINGCODE_DEFINE_ERROR(ColumnMatchFailure);
RINGCODE_DEFINE_ERROR(SocleConditionUnverified);
RINGCODE_DEFINE_ERROR(NoMatrixWitness);

#undef RINGCODE_DEFINE_ERROR

// Guardrails for enumerative routines.  These are configuration, not hard
// constants: the CLI exposes a flag per cap.  All routines that can blow up
// consult the active caps and throw instead of thrashing.
struct Caps {
  std::uint64_t enumeration = 1'000'000;  // echelon/GL enumeration size
  std::uint64_t search = 10'000'000;      // monomial-transform search space
  std::uint64_t ring_order = 256;         // table-ring construction
  std::uint64_t ideal_enum = 64;          // ring order for ideal enumeration
  std::uint64_t group_order = 4096;       // character-group construction
  std::uint64_t lines = 4096;             // line-space size mu(k)
  std::uint64_t codewords = 1'000'000;    // codeword materialization
};

inline Caps& caps() {
  static Caps c;
  return c;
}

inline void require_cap(std::uint64_t need, std::uint64_t cap, const char* what) {
  if (need > cap)
    throw EnumerationCapExceeded(std::string(what) + " needs " + std::to_string(need) +
                                 " > cap " + std::to_string(cap));
}

}  // namespace ringcode
