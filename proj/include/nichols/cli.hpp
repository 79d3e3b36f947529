#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nichols/nichols.hpp"
#include "nichols/spec_document.hpp"

namespace nichols {

struct CommandOptions {
    /// dims, verify, unroll, gk or pair.
    std::string command;
    std::optional<int> cap;
    std::optional<std::string> out;
    std::vector<std::string> suites;
    /// json or table.
    std::string format = "table";
};

/// Exit status: 0 when every requested check passes, 1 when a check fails,
/// 2 on errors (reported on err).
int run_command(const CommandOptions& opts, const SpecDocument& doc, std::ostream& out, std::ostream& err);

/// "1,1,1,1,0,0,0 total=4" or "1,1,1 (unknown beyond cap)".
std::string dims_line(const HilbertData& h);

} // namespace nichols
