#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

/// Library error carrying a stable machine-readable code such as
/// "DivisionByZero" or "NotRootOfUnity".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace nichols
