#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nichols/braided_space.hpp"
#include "nichols/linalg.hpp"
#include "nichols/report.hpp"
#include "nichols/tensor_algebra.hpp"

namespace nichols {

/// T(V)/I truncated at degree `cap` for a graded ideal I, presented per
/// degree by an echelon basis of I_n (pivots on the lex-largest word) and
/// the standard words, i.e. the non-pivot words, as a basis of the quotient.
class GradedQuotient {
public:
    enum class Kind { Nichols, PreNichols };

    const DiagonalBraiding& braiding() const noexcept { return braiding_; }
    int theta() const noexcept { return braiding_.theta(); }
    int cap() const noexcept { return cap_; }
    Kind kind() const noexcept { return kind_; }

    std::size_t dim(int n) const;
    std::vector<std::size_t> dims() const;
    /// Word indices of the standard words of degree n, increasing.
    const std::vector<std::size_t>& basis(int n) const;
    Word basis_word(int n, std::size_t k) const;
    /// Position of a standard word index in basis(n), if it is standard.
    std::optional<std::size_t> basis_position(int n, std::size_t word) const;

    std::size_t relation_count(int n) const;
    std::vector<TensorElement> relation_basis(int n) const;
    bool in_ideal(int n, const SparseVec& v) const;

    /// Coordinates of v in T^n with respect to basis(n).
    SparseVec project(int n, const SparseVec& v) const;
    SparseVec project_word(int n, std::size_t word) const;
    /// Element of T^n represented by the given coordinates.
    TensorElement section(int n, const SparseVec& coords) const;

    /// Product of basis elements a in degree p and b in degree q, as
    /// coordinates in degree p+q. Requires p + q <= cap.
    SparseVec multiply(int p, std::size_t a, int q, std::size_t b) const;
    /// (p, n-p) component of the coproduct of basis element a of degree n,
    /// as (left position, right position) -> coefficient.
    std::map<std::pair<std::size_t, std::size_t>, CycScalar> coproduct(int n, std::size_t a, int p) const;

    /// First degree with dim 0, if any within cap.
    std::optional<int> vanishing_degree() const noexcept { return vanish_; }

    /// Pre-Nichols data: whether I_n lies in the Nichols ideal J_n and
    /// whether the containment is strict. Empty for Nichols quotients.
    const std::vector<bool>& contained_in_nichols() const noexcept { return contained_; }
    const std::vector<bool>& strictly_smaller() const noexcept { return strict_; }

private:
    struct Piece {
        std::size_t ambient = 0;
        bool full = false;
        SparseEchelon relations{SparseEchelon::Pivot::Largest};
        std::vector<std::size_t> basis;
        std::map<std::size_t, std::size_t> position;
    };

    GradedQuotient(DiagonalBraiding b, int cap, Kind kind) : braiding_(std::move(b)), cap_(cap), kind_(kind) {}
    void finish_piece(int n);
    const Piece& piece(int n) const;

    DiagonalBraiding braiding_;
    int cap_;
    Kind kind_;
    std::vector<Piece> pieces_;
    std::optional<int> vanish_;
    std::vector<bool> contained_;
    std::vector<bool> strict_;

    friend GradedQuotient nichols_truncated(const DiagonalBraiding&, int);
    friend GradedQuotient pre_nichols_quotient(const DiagonalBraiding&, const std::vector<TensorElement>&, int);
};

/// Echelon basis of ker S_n.
std::vector<TensorElement> relations_in_degree(int n, const DiagonalBraiding& b);

/// B(V) truncated at cap. Throws Error("CapTooSmall") for cap < 1.
GradedQuotient nichols_truncated(const DiagonalBraiding& b, int cap);

struct HilbertData {
    std::vector<std::size_t> dims;
    /// First degree n0 <= cap with dim 0; all later degrees vanish too.
    std::optional<int> vanishing_degree;
    /// Sum of dims, certified only when vanishing_degree is set.
    std::optional<std::size_t> total_dim;
};

HilbertData hilbert_series(const GradedQuotient& gq);

/// T(V)/I with I generated by the given homogeneous elements, truncated at
/// cap. Checks up to cap that I is a coideal with zero counit. Throws
/// Error("NotHomogeneous"), Error("NotCoideal") or Error("CounitNonzero").
GradedQuotient pre_nichols_quotient(const DiagonalBraiding& b, const std::vector<TensorElement>& gens, int cap);

/// Whether every I_n (n <= cap) is preserved by the derivation extension of
/// each basis map of the action.
AxiomReport stability_check(const GradedQuotient& gq, const LieAction& action);

} // namespace nichols
