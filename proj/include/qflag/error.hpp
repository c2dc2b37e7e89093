#pragma once

#include <stdexcept>
#include <string>

namespace qflag {

// Every failure carries a short machine-readable code such as
// "ZeroDenominator" or "NotRegular"; what() holds the human text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input (bad JSON, bad scalar text, bad flags).
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace qflag
