#pragma once

#include <stdexcept>
#include <string>

namespace lossyspdc {

enum class ErrorKind {
    Config,
    InvalidRule,
    ToleranceNotMet,
    QuadratureUnderresolved,
    DegenerateNormalization,
    NegativeProbability,
    DegenerateInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lossyspdc
