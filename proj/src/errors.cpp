#include "lossyspdc/errors.hpp"

namespace lossyspdc {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::QuadratureUnderresolved: return "QuadratureUnderresolved";
    case ErrorKind::DegenerateNormalization: return "DegenerateNormalization";
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    }
    return "Error";
}

}  // namespace lossyspdc
