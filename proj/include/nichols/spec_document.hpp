#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/braided_space.hpp"
#include "nichols/expression.hpp"
#include "nichols/tensor_algebra.hpp"

namespace nichols {

struct SpecEntry {
    std::string key;
    std::string value;
    int line = 0;
    /// 1-based column of the first character of the value.
    int column = 0;
};

/// INI-style algebra description:
///
///     [braiding]          row = <scalar>, ...   (one per row) or q = <scalar>
///     [realization]       group = N1, N2, ...; g1 = e1, e2, ...; chi1 = c1, c2, ...
///     [lie]               kind = torus | bd | zero; h = <scalar>, ... ; map = E12 - E21
///     [action]            set = <lie index>: <basis symbol> -> <combination>
///     [ideal]             gen = <element>
///     [run]               cap = N; suite = hopf, ...; nichols_cap = N
///
/// Lines starting with '#' or ';' are comments. Unknown sections and keys
/// are rejected with Error("ParseError") carrying line and column.
struct SpecDocument {
    /// Sections in the order they first appear.
    std::vector<std::string> order;
    std::map<std::string, std::vector<SpecEntry>> sections;

    bool has(const std::string& section) const { return sections.count(section) != 0; }
    const std::vector<SpecEntry>& entries(const std::string& section) const;
    std::vector<SpecEntry> all(const std::string& section, const std::string& key) const;
    std::optional<SpecEntry> single(const std::string& section, const std::string& key) const;
};

SpecDocument parse_spec(std::string_view text);
/// Canonical text of a document; parse_spec(render_spec(d)) reproduces d
/// up to line numbers.
std::string render_spec(const SpecDocument& d);

DiagonalBraiding spec_braiding(const SpecDocument& d);
/// Realization from the [realization] section, or derived from the braiding.
YDRealization spec_realization(const SpecDocument& d, const DiagonalBraiding& b);
/// Lie action from the [lie] section. Throws Error("NotInBdV") for a map
/// that is not a Yetter-Drinfeld endomorphism.
std::optional<LieAction> spec_lie(const SpecDocument& d, const YDRealization& r);
/// Diagonal weights h when the [lie] section is of torus or weight kind.
std::optional<std::vector<std::vector<CycScalar>>> spec_weights(const SpecDocument& d, int theta);
std::vector<TensorElement> spec_ideal(const SpecDocument& d, int theta);

struct ActionOverride {
    int lie_index = 0;
    std::string source;
    /// (coefficient, basis symbol) terms.
    std::vector<std::pair<CycScalar, std::string>> target;
};
std::vector<ActionOverride> spec_action_overrides(const SpecDocument& d);

struct RunParams {
    std::optional<int> cap;
    std::vector<std::string> suites;
    std::optional<int> nichols_cap;
};
RunParams spec_run(const SpecDocument& d);

} // namespace nichols
