#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/error.hpp"
#include "nichols/scalars.hpp"

namespace nichols {

/// Parse failure with a 1-based position. Line is 0 when the text was a
/// single expression rather than a file.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    /// The message without the position prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    int line_;
    int column_;
    std::string detail_;
};

/// A named algebra generator such as x2 (kind 'x', index 2) or g1.
struct Generator {
    char kind = 'x';
    int index = 1;
    auto operator<=>(const Generator&) const = default;
};

using Monomial = std::vector<Generator>;

/// Noncommutative polynomial: ordered product of generators -> coefficient.
/// Zero coefficients are never stored.
using NCPoly = std::map<Monomial, CycScalar>;

/// Parses sums and products of scalars and generators, e.g.
/// "x1*x2 - z(3)^1*x2*x1". Generator letters must appear in `kinds`.
/// Division is only allowed by scalars and negative powers only on scalars.
NCPoly parse_expression(std::string_view text, std::string_view kinds);

} // namespace nichols
