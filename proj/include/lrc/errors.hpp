#ifndef LRC_ERRORS_HPP
#define LRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrc {

// Domain error kinds. Every throwing operation documents which of these it
// can raise; the CLI maps them onto its exit-code contract.
enum class errc {
    not_prime,
    reducible_modulus,
    field_too_large,
    division_by_zero,
    field_mismatch,
    zero_element,
    even_characteristic,
    non_residue,
    eta_not_coprime,
    exponent_out_of_range,
    length_mismatch,
    degenerate_code,
    zero_code,
    budget_exceeded,
    incomplete_factorization,
    non_residue_lambda,
    too_many_erasures,
    inconsistent_word,
    unknown_table,
    invalid_params,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::zero_element: return "ZeroElement";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::non_residue: return "NonResidue";
        case errc::eta_not_coprime: return "EtaNotCoprime";
        case errc::exponent_out_of_range: return "ExponentOutOfRange";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::degenerate_code: return "DegenerateCode";
        case errc::zero_code: return "ZeroCode";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::incomplete_factorization: return "IncompleteFactorization";
        case errc::non_residue_lambda: return "NonResidueLambda";
        case errc::too_many_erasures: return "TooManyErasures";
        case errc::inconsistent_word: return "InconsistentWord";
        case errc::unknown_table: return "UnknownTable";
        case errc::invalid_params: return "InvalidParams";
    }
    return "UnknownError";
}

class lrc_error : public std::runtime_error {
  public:
    lrc_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw lrc_error(code, what); }

}  // namespace lrc

#endif
