#pragma once

#include <stdexcept>
#include <string>

namespace grpalg {

// Error categories. The CLI maps these onto exit codes: input problems
// exit 2, resource bounds exit 3, internal invariant failures exit 1.
enum class errc {
    // construction / input
    not_latin_square,
    no_identity,
    not_associative,
    closure_too_large,
    unknown_name,
    order_bound_exceeded,
    bad_input,
    // subgroup / structure
    not_a_subgroup,
    not_normal,
    not_normal_in_h,
    not_abelian,
    // exact arithmetic
    ring_mismatch,
    division_by_zero,
    bad_galois_index,
    bad_index,
    bad_parameters,
    // idempotents / units
    not_idempotent,
    not_a_unit,
    even_order,
    not_strong_pair,
    incomplete_pci,
    not_square_zero,
    trivial_bicyclic,
    certificate_below_threshold,
    invalid_series,
    not_eligible,
    // internal
    invariant_violation,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::no_identity: return "NoIdentity";
    case errc::not_associative: return "NotAssociative";
    case errc::closure_too_large: return "ClosureTooLarge";
    case errc::unknown_name: return "UnknownName";
    case errc::order_bound_exceeded: return "OrderBoundExceeded";
    case errc::bad_input: return "BadInput";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_normal: return "NotNormal";
    case errc::not_normal_in_h: return "NotNormalInH";
    case errc::not_abelian: return "NotAbelian";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::bad_galois_index: return "BadGaloisIndex";
    case errc::bad_index: return "BadIndex";
    case errc::bad_parameters: return "BadParameters";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_a_unit: return "NotAUnit";
    case errc::even_order: return "EvenOrder";
    case errc::not_strong_pair: return "NotStrongPair";
    case errc::incomplete_pci: return "IncompletePCI";
    case errc::not_square_zero: return "NotSquareZero";
    case errc::trivial_bicyclic: return "TrivialBicyclic";
    case errc::certificate_below_threshold: return "CertificateBelowThreshold";
    case errc::invalid_series: return "InvalidSeries";
    case errc::not_eligible: return "NotEligible";
    case errc::invariant_violation: return "InvariantViolation";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void check(bool ok, errc c, const std::string& msg) {
    if (!ok)
        fail(c, msg);
}

// Internal consistency assertion; a failure here is a bug, never user input.
inline void invariant(bool ok, const std::string& msg) {
    if (!ok)
        fail(errc::invariant_violation, msg);
}

} // namespace grpalg
