#pragma once

#include <string>
#include <vector>

#include "nichols/linalg.hpp"
#include "nichols/scalars.hpp"

namespace nichols {

/// Diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i on a theta-dimensional
/// space. Indices are 0-based in code and 1-based in rendered text.
class DiagonalBraiding {
public:
    DiagonalBraiding() = default;
    explicit DiagonalBraiding(std::vector<std::vector<CycScalar>> rows);

    int theta() const noexcept { return static_cast<int>(q_.size()); }
    const CycScalar& operator()(int i, int j) const { return q_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// Bicharacter on multidegrees: prod q_ij^(a_i b_j).
    CycScalar bichar(const std::vector<int>& a, const std::vector<int>& b) const;

    friend bool operator==(const DiagonalBraiding& a, const DiagonalBraiding& b) { return a.q_ == b.q_; }

private:
    std::vector<std::vector<CycScalar>> q_;
};

using GroupElement = std::vector<int>;

/// Finite abelian group Z/N_1 x ... x Z/N_r.
struct AbelianGroup {
    std::vector<int> exponents;

    std::size_t order() const;
    std::size_t rank() const noexcept { return exponents.size(); }
    GroupElement identity() const { return GroupElement(exponents.size(), 0); }
    GroupElement generator(std::size_t t) const;
    GroupElement normalize(GroupElement g) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    /// All elements in lexicographic order.
    std::vector<GroupElement> elements() const;
    std::size_t index_of(const GroupElement& g) const;
};

/// Character given by its values on the standard generators.
struct Character {
    std::vector<RootOfUnity> values;

    CycScalar operator()(const GroupElement& g) const;
    friend bool operator==(const Character& a, const Character& b);
};

struct YDRealization {
    AbelianGroup group;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    DiagonalBraiding braiding;

    int theta() const noexcept { return static_cast<int>(g.size()); }
    /// Whether x_i and x_j lie in the same isotypic component V_g^chi.
    bool same_component(int i, int j) const;
};

/// Realization whose braiding is read off as q_ij = chi_j(g_i).
YDRealization realization_from_pairs(AbelianGroup group, std::vector<GroupElement> g,
                                     std::vector<Character> chi);

/// Canonical realization over (Z/m)^theta with m the lcm of the orders of
/// the q_ij. Throws Error("NotRootOfUnity").
YDRealization derive_realization(const DiagonalBraiding& braiding);

struct RealizationViolation {
    int i = 0;
    int j = 0;
    CycScalar character_value;
    CycScalar braiding_value;
};

struct RealizationReport {
    std::vector<RealizationViolation> violations;
    bool passed() const noexcept { return violations.empty(); }
};

RealizationReport validate_realization(const YDRealization& r);

/// Structure constants: [e_a, e_b] = sum_k constants[a][b][k] e_k.
struct LieAlgebra {
    int dim = 0;
    std::vector<std::vector<std::vector<CycScalar>>> constants;

    static LieAlgebra abelian(int dim);
    const CycScalar& constant(int a, int b, int k) const
    {
        return constants[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
    }
    bool is_abelian() const;
    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

/// A Lie algebra together with its representation on V. Endomorphisms use
/// the row convention: m(i, j) is the coefficient of x_j in d(x_i).
struct LieAction {
    LieAlgebra algebra;
    std::vector<Matrix> maps;

    int dim() const noexcept { return algebra.dim; }
};

/// E_ij : x_i -> x_j, every other basis vector -> 0.
Matrix elementary_map(int theta, int i, int j);
/// D_h(x_i) = h_i x_i.
Matrix torus_action(const std::vector<CycScalar>& h);
/// Matrix of d o e.
Matrix compose(const Matrix& d, const Matrix& e);
/// d o e - e o d.
Matrix bracket(const Matrix& d, const Matrix& e);

bool is_yd_morphism(const YDRealization& r, const Matrix& d);

/// Full bd_V: E_ij for every pair with (g_i, chi_i) = (g_j, chi_j).
LieAction biderivation_algebra(const YDRealization& r);
/// t_V with basis D_{e_1}, ..., D_{e_theta}.
LieAction torus_algebra(int theta);
/// Abelian Lie algebra of dimension hs.size() acting through D_h for each
/// listed h; the maps need not be independent.
LieAction abelian_torus(const std::vector<std::vector<CycScalar>>& hs);
/// Checks that maps are independent YD endomorphisms spanning a Lie
/// subalgebra and returns it with structure constants. Throws
/// Error("NotYDMorphism"), Error("DependentMaps") or Error("NotClosed").
LieAction close_under_bracket(const YDRealization& r, const std::vector<Matrix>& maps);

std::string render_group_element(const GroupElement& g);

} // namespace nichols
