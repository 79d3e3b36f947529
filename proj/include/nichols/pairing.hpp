#pragma once

#include <map>
#include <vector>

#include "nichols/hopf_core.hpp"
#include "nichols/unrolled.hpp"

namespace nichols {

/// Bilinear form H (x) U -> k tabulated on bases. On tensor squares it
/// extends by (a (x) b | u (x) v) = (a|v)(b|u).
struct PairingTable {
    TruncatedHopf left;
    TruncatedHopf right;
    std::map<std::pair<std::size_t, std::size_t>, CycScalar> values;

    CycScalar value(std::size_t a, std::size_t u) const;
    CycScalar value(const SparseVec& a, const SparseVec& u) const;
    void set(std::size_t a, std::size_t u, const CycScalar& c);
};

/// T(V) against T(V*), both truncated at cap as braided Hopf algebras with
/// the braiding matrix of b, with (x_i|y_j) = delta_ij and
/// (x_i a|u) = (x_i|u_2)(a|u_1).
PairingTable graded_dual_pairing(const DiagonalBraiding& b, int cap);

/// The pairing induced on B(V) against B(V*), evaluated on standard words.
PairingTable nichols_pairing(const DiagonalBraiding& b, int cap);

/// Rank of the pairing restricted to degree n, for n <= cap.
std::vector<std::size_t> gram_ranks(const PairingTable& p, int cap);
/// Every degree-n block is square and of full rank for n <= cap.
bool nondegenerate(const PairingTable& p, int cap);

/// (a b|u) = (a|u_2)(b|u_1), (a|u v) = (a_2|u)(a_1|v), (S a|u) = (a|S u)
/// and the unit/counit conditions on basis tuples of degree <= cap. Per
/// degree ranks are reported in the notes.
AxiomReport verify_hopf_pairing(const PairingTable& p, int cap);

/// (x.a|u) = -(a|x.u) for every Lie basis element. Throws
/// Error("MismatchedLieAlgebras").
AxiomReport verify_action_compatibility(const PairingTable& p, const HopfAction& left, const HopfAction& right,
                                        int cap);

/// The action on the right side making the pairing compatible with the
/// given left action: B = -G^{-1} A^T G on the truncation. Throws
/// Error("Degenerate").
HopfAction transport_action(const PairingTable& p, const HopfAction& left, int cap);

struct LemmaVerdict {
    AxiomReport left;
    AxiomReport right;
    bool agree = false;
};

/// Runs check_module_hopf on both sides. Throws Error("PreconditionFailed")
/// unless the pairing is a non-degenerate Hopf pairing within cap and the
/// actions are compatible.
LemmaVerdict lemma_transfer_check(const PairingTable& p, const HopfAction& left, const HopfAction& right, int cap);

} // namespace nichols
