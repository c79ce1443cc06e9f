#pragma once

#include <stdexcept>
#include <string>

namespace tbl {

// Error kinds, mapped to CLI exit codes: usage/parse problems exit 2,
// precision exhaustion exits 3, everything else surfaces as exit 1 when it
// aborts a run.
enum class ErrorCode {
    NotPrime,
    DenominatorDivisibleByP,
    DivisionByZero,
    PrecisionExhausted,
    ExactZero,
    PDividesN,
    NoSuchRoot,
    NotInMuN,
    ZeroElement,
    EvenP,
    PointOnBoundaryGenerically,
    NonFactorable,
    ResidueFunctionVanishes,
    HypothesisViolated,
    InvalidHom,
    InvalidConfig,
    InvalidModel,
    ParseError,
    ValidationError,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace tbl
