#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nichols {

struct Violation {
    std::string axiom;
    std::string witness;
    std::string lhs;
    std::string rhs;
};

/// Outcome of a family of identity checks. Only the first few violations
/// of each axiom are kept; `failure_counts` has the totals.
struct AxiomReport {
    static constexpr std::size_t kMaxWitnesses = 8;

    std::vector<std::string> axioms;
    std::vector<Violation> violations;
    std::map<std::string, std::size_t> failure_counts;
    std::vector<std::string> notes;
    std::size_t evaluations = 0;

    bool passed() const noexcept { return failure_counts.empty(); }
    bool failed(const std::string& axiom) const { return failure_counts.count(axiom) != 0; }

    /// Registers an axiom name so that it shows up as checked.
    void declare(const std::string& axiom);
    void fail(Violation v);
    void merge(const AxiomReport& other);
    std::string summary() const;
};

} // namespace nichols
