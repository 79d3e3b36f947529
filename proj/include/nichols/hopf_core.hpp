#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichols/braided_space.hpp"
#include "nichols/linalg.hpp"
#include "nichols/nichols.hpp"
#include "nichols/report.hpp"

namespace nichols {

/// Element of H (x) H: (left index, right index) -> coefficient.
using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, CycScalar>;

void add_term(Tensor2& t, std::size_t a, std::size_t b, const CycScalar& c);

struct BasisTag {
    std::string symbol;
    /// Filtration degree.
    int degree = 0;
    /// Z^theta degree, when the algebra is graded that way.
    std::optional<std::vector<int>> zdeg;
    bool grouplike = false;
};

/// Basis element of a smash product H # U viewed as a pair.
struct ProductSplit {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    /// Number of Lie generators behind the right factor.
    int lie_dim = 0;
    /// Whether the left factor is finite-dimensional (not truncated).
    bool left_finite = true;
    /// For each basis element: (left index, right index).
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// PBW degree of each right basis element.
    std::vector<int> right_degrees;
};

/// Finite or truncated Hopf algebra given by structure tables on a basis.
///
/// Products are stored for every pair whose degree sum is at most `cap`
/// (and beyond, when known); a missing entry means the product overflows
/// the truncation. When `braided` is set the algebra is a Hopf algebra in
/// the category of Z^theta-graded spaces with the braiding given by the
/// bicharacter of that matrix on zdeg tags.
class TruncatedHopf {
public:
    std::string name;
    int cap = 0;
    std::vector<BasisTag> basis;
    std::size_t unit = 0;
    std::vector<Tensor2> comult;
    std::vector<CycScalar> counit;
    std::optional<std::vector<SparseVec>> antipode;
    /// Every product is present; the algebra is not truncated.
    bool complete = false;
    std::optional<DiagonalBraiding> braided;
    std::optional<ProductSplit> split;

    std::size_t dim() const noexcept { return basis.size(); }
    int degree(std::size_t i) const { return basis[i].degree; }

    void set_product(std::size_t a, std::size_t b, SparseVec v);
    /// nullptr when the product overflows.
    const SparseVec* product(std::size_t a, std::size_t b) const;
    /// Throws Error("Overflow") if a needed product is missing.
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    Tensor2 coproduct(const SparseVec& x) const;
    CycScalar counit_of(const SparseVec& x) const;
    SparseVec antipode_of(const SparseVec& x) const;
    /// Product in H (x) H, braided when `braided` is set.
    Tensor2 multiply(const Tensor2& x, const Tensor2& y) const;
    /// Braiding factor for moving b past a in the tensor square.
    CycScalar braiding_factor(std::size_t a, std::size_t b) const;

    std::vector<std::size_t> grouplikes() const;
    std::size_t stored_products() const noexcept { return mult_.size(); }
    /// Basis pairs with a stored product, in increasing order.
    std::vector<std::pair<std::size_t, std::size_t>> product_keys() const;
    /// Index of the basis element with the given symbol.
    std::optional<std::size_t> find(const std::string& symbol) const;

    std::string render(const SparseVec& v) const;
    std::string render(const Tensor2& t) const;

private:
    std::uint64_t key(std::size_t a, std::size_t b) const { return static_cast<std::uint64_t>(a) * basis.size() + b; }
    std::unordered_map<std::uint64_t, SparseVec> mult_;
};

/// k Gamma with every element group-like of degree 0. zdeg tags are zero
/// vectors of length zrank.
TruncatedHopf group_algebra(const AbelianGroup& g, int zrank = 0);

/// U(g) truncated to PBW monomials of total degree <= cap in the ordered
/// basis of g. zdeg tags are zero vectors of length zrank.
TruncatedHopf enveloping_truncated(const LieAction& g, int cap, int zrank = 0);

/// Exponent vector of each basis element of enveloping_truncated, in order.
std::vector<std::vector<int>> pbw_monomials(int dim, int cap);

/// B # k Gamma from the left-handed smash product and smash coproduct,
/// truncated at cap. Throws Error("RealizationMismatch").
TruncatedHopf bosonize(const GradedQuotient& b, const YDRealization& r, int cap);

/// B itself as a braided Hopf algebra (zdeg = multidegree).
TruncatedHopf braided_nichols_hopf(const GradedQuotient& b, int cap);

/// Checks the Hopf axioms on all basis tuples with degree sum <= cap.
AxiomReport verify_hopf(const TruncatedHopf& h, int cap);

/// Solves m(S (x) id)Delta = u epsilon degree by degree. Throws
/// Error("NoAntipode").
TruncatedHopf solve_antipode(TruncatedHopf h, int cap);

/// Basis of P_{g,t} = {a : Delta(a) = g (x) a + a (x) t} inside the
/// truncation. Throws Error("NotGrouplike").
std::vector<SparseVec> skew_primitive_space(const TruncatedHopf& h, std::size_t g, std::size_t t);

} // namespace nichols
