#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/braided_space.hpp"
#include "nichols/hopf_core.hpp"
#include "nichols/nichols.hpp"
#include "nichols/report.hpp"

namespace nichols {

/// Action of a Lie algebra on a Hopf algebra H by linear endomorphisms,
/// tabulated on the basis of H: table[x][a] = x . a.
struct HopfAction {
    LieAlgebra lie;
    std::vector<std::vector<SparseVec>> table;

    int dim() const noexcept { return lie.dim; }
    SparseVec apply(int x, const SparseVec& v) const;
};

/// Zero action of an abelian Lie algebra of dimension d.
HopfAction zero_action(const TruncatedHopf& h, int d);

/// D_h acting by h . zdeg(a) on each basis element. Requires Z^theta tags.
HopfAction grading_action(const TruncatedHopf& h, const std::vector<std::vector<CycScalar>>& hs);

/// Extends a Lie action on V to a bosonization of b: derivations on words,
/// trivial on the group. `boson` must come from bosonize(b, r, ...).
HopfAction bosonization_action(const GradedQuotient& b, const YDRealization& r, const TruncatedHopf& boson,
                               const LieAction& g);

/// U(g) truncated at cap together with the adjoint action of g on it.
std::pair<TruncatedHopf, HopfAction> adjoint_action_enveloping(const LieAction& g, int cap);

/// Derivation law x.(ab) = (x.a)b + a(x.b) and x.1 = 0 on basis pairs
/// with degree sum <= cap.
AxiomReport check_module_algebra(const TruncatedHopf& h, const HopfAction& act, int cap);

/// Coderivation law Delta(x.a) = x.a_1 (x) a_2 + a_1 (x) x.a_2 and
/// epsilon(x.a) = 0 on basis elements of degree <= cap. With generators,
/// the law is checked only on those elements, after the derivation law
/// has passed.
AxiomReport check_biderivation(const TruncatedHopf& h, const HopfAction& act, int cap,
                               const std::optional<std::vector<std::size_t>>& generators = std::nullopt);

/// Full module Hopf algebra suite for a Lie action: derivation law,
/// coderivation law, and the cocommutativity condition
/// l_1 (x) l_2.a = l_2 (x) l_1.a for l in {1} and the Lie basis.
AxiomReport check_module_hopf(const TruncatedHopf& h, const HopfAction& act, int cap);

/// H # U(g) truncated at cap. Refuses with Error("PreconditionFailed")
/// unless check_module_algebra and check_biderivation pass.
TruncatedHopf smash_with_enveloping(const TruncatedHopf& h, const HopfAction& act, int cap);

/// Same construction without the precondition checks. Meant for
/// fault-injection tests only.
TruncatedHopf smash_with_enveloping_unchecked(const TruncatedHopf& h, const HopfAction& act, int cap);

/// (B # k Gamma) # U(g). Throws Error("NotInBdV") if a map of g is not a
/// YD endomorphism and Error("StabilityFailed") if the ideal of b is not
/// g-stable.
TruncatedHopf unrolled_bosonization(const GradedQuotient& b, const YDRealization& r, const LieAction& g, int cap);
/// Nichols algebra variant; the Nichols algebra is truncated at cap.
TruncatedHopf unrolled_bosonization(const DiagonalBraiding& b, const YDRealization& r, const LieAction& g, int cap);

/// Checks that the Z^theta tags form a Hopf algebra grading (a comodule
/// Hopf algebra structure over the torus). Throws Error("MissingDegreeTags").
AxiomReport check_comodule_hopf_via_grading(const TruncatedHopf& h, int cap);

/// Stability of every P_{g,t} under the action, cross-checked against
/// check_biderivation. Throws Error("HypothesisFailed") when the action
/// moves a group-like or the declared generators do not generate H within
/// cap, and Error("InternalInconsistency") if the two verdicts differ.
AxiomReport pointed_criterion(const TruncatedHopf& h, const HopfAction& act, const std::vector<std::size_t>& gens,
                              int cap);

struct GrowthReport {
    std::vector<std::size_t> dims;
    std::size_t host_dim = 0;
    int lie_dim = 0;
    /// Exact polynomial degree of n -> dims[n] on 0..cap.
    int degree = 0;
    /// dims[n] == host_dim * C(n + lie_dim, lie_dim) for every n.
    bool closed_form_holds = false;
    std::string label = "growth degree within cap";
};

/// Filtration growth of a smash product built by smash_with_enveloping.
/// Throws Error("NotAProduct") without a recorded split and
/// Error("NotFiniteWithinCap") when the left factor is truncated.
GrowthReport gk_growth(const TruncatedHopf& smash);

/// C(n, k) as an integer.
std::size_t binomial(int n, int k);

} // namespace nichols
