#include "nichols/report.hpp"

#include <algorithm>
#include <sstream>

namespace nichols {

void AxiomReport::declare(const std::string& axiom)
{
    if (std::find(axioms.begin(), axioms.end(), axiom) == axioms.end())
        axioms.push_back(axiom);
}

void AxiomReport::fail(Violation v)
{
    declare(v.axiom);
    std::size_t& count = failure_counts[v.axiom];
    if (count++ < kMaxWitnesses)
        violations.push_back(std::move(v));
}

void AxiomReport::merge(const AxiomReport& other)
{
    for (const auto& a : other.axioms)
        declare(a);
    for (const auto& v : other.violations) {
        auto kept = std::count_if(violations.begin(), violations.end(),
                                  [&](const Violation& w) { return w.axiom == v.axiom; });
        if (static_cast<std::size_t>(kept) < kMaxWitnesses)
            violations.push_back(v);
    }
    for (const auto& [a, c] : other.failure_counts)
        failure_counts[a] += c;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    evaluations += other.evaluations;
}

std::string AxiomReport::summary() const
{
    std::ostringstream os;
    if (passed()) {
        os << "pass (" << axioms.size() << " axioms, " << evaluations << " evaluations)";
        return os.str();
    }
    os << "fail:";
    for (const auto& [a, c] : failure_counts)
        os << " " << a << " x" << c;
    return os.str();
}

} // namespace nichols
