#include "tbl/errors.hpp"

namespace tbl {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::ExactZero: return "ExactZero";
        case ErrorCode::PDividesN: return "PDividesN";
        case ErrorCode::NoSuchRoot: return "NoSuchRoot";
        case ErrorCode::NotInMuN: return "NotInMuN";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::EvenP: return "EvenP";
        case ErrorCode::PointOnBoundaryGenerically: return "PointOnBoundaryGenerically";
        case ErrorCode::NonFactorable: return "NonFactorable";
        case ErrorCode::ResidueFunctionVanishes: return "ResidueFunctionVanishes";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::InvalidHom: return "InvalidHom";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::InvalidModel: return "InvalidModel";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace tbl
