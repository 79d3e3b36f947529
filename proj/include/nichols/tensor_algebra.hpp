#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/braided_space.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

/// Word in the letters 0..theta-1; the letter i stands for x_{i+1}.
using Word = std::vector<int>;

/// theta^n, the number of words of length n.
std::size_t word_count(int theta, int n);
/// Position of w in the lexicographic enumeration of words of its length.
std::size_t word_index(const Word& w, int theta);
Word word_at(std::size_t index, int n, int theta);
/// Letter counts of w.
std::vector<int> multidegree(const Word& w, int theta);

/// Element of T(V): word -> coefficient, zero coefficients never stored.
struct TensorElement {
    std::map<Word, CycScalar> terms;

    static TensorElement word(Word w);
    static TensorElement scalar(const CycScalar& c);

    bool is_zero() const noexcept { return terms.empty(); }
    void add(const Word& w, const CycScalar& c);
    /// Common length of all words; nullopt if mixed (or zero element).
    std::optional<int> length() const;
    /// Common multidegree; nullopt if not Z^theta-homogeneous.
    std::optional<std::vector<int>> multidegree(int theta) const;

    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement operator*(const CycScalar& c) const;
    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

TensorElement operator+(TensorElement a, const TensorElement& b);
TensorElement operator-(TensorElement a, const TensorElement& b);

/// Free multiplication of T(V).
TensorElement concat(const TensorElement& a, const TensorElement& b);

/// Homogeneous component as a sparse vector over word indices.
SparseVec to_vector(const TensorElement& a, int theta);
TensorElement from_vector(const SparseVec& v, int n, int theta);

/// Element syntax, e.g. "x1*x2 - z(3)^1*x2*x1"; "0" for the zero element.
std::string render(const TensorElement& a);
/// Parses the element syntax; generators are x1..x_theta.
TensorElement parse_tensor_element(std::string_view text, int theta);

/// Renders a coefficient times a basis symbol, for use in sums.
std::string render_term(const CycScalar& c, const std::string& symbol, bool first);

/// Sparse linear map between two indexed spaces, stored by columns.
struct LinOp {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<SparseVec> columns;

    static LinOp identity(std::size_t dim);
    static LinOp zero(std::size_t source_dim, std::size_t target_dim);

    SparseVec apply(const SparseVec& v) const;
    LinOp operator+(const LinOp& rhs) const;
    LinOp scaled(const CycScalar& c) const;
    /// Dense copy (rows = target, columns = source).
    Matrix dense() const;
    friend bool operator==(const LinOp&, const LinOp&) = default;
};

/// this o rhs.
LinOp compose(const LinOp& lhs, const LinOp& rhs);

/// sigma_i acting on slots (i, i+1) of T^n, positions 1-based.
/// Throws Error("PositionOutOfRange").
LinOp braid_generator(int n, int i, const DiagonalBraiding& b);

/// perm[k] is the position (0-based) the letter at position k moves to.
using Permutation = std::vector<int>;

/// Reduced word i_1 ... i_k (1-based generator indices) with
/// perm = s_{i_1} ... s_{i_k}. `largest_descent` picks a different but
/// equally reduced word.
std::vector<int> reduced_word(const Permutation& perm, bool largest_descent = false);
/// sigma_{i_1} o ... o sigma_{i_k} on T^n.
LinOp braid_word_lift(int n, const std::vector<int>& word, const DiagonalBraiding& b);
/// Matsumoto lift of perm through a reduced word.
LinOp braid_lift(const Permutation& perm, const DiagonalBraiding& b);

/// Quantum symmetrizers S_n, memoized per degree.
class SymmetrizerCache {
public:
    explicit SymmetrizerCache(DiagonalBraiding b) : braiding_(std::move(b)) {}

    const DiagonalBraiding& braiding() const noexcept { return braiding_; }
    const LinOp& get(int n);

private:
    DiagonalBraiding braiding_;
    std::vector<LinOp> ops_;
};

/// S_n via S_n = U_n o (S_{n-1} (x) id).
LinOp quantum_symmetrizer(int n, const DiagonalBraiding& b);

/// (p, n-p) component of the braided coproduct of T(V). The target
/// T^p (x) T^{n-p} is indexed like T^n by concatenating the two words.
LinOp shuffle_coproduct(int n, int p, const DiagonalBraiding& b);
/// One column of shuffle_coproduct: the (p, n-p) component of a single word.
SparseVec shuffle_coproduct_word(const Word& w, int p, const DiagonalBraiding& b);

/// Splits an index of T^p (x) T^q into the pair of word indices.
std::pair<std::size_t, std::size_t> split_index(std::size_t index, int p, int q, int theta);
std::size_t join_index(std::size_t left, std::size_t right, int q, int theta);

/// Leibniz extension of d in End(V) to T^n (row convention for d).
LinOp extend_derivation(const Matrix& d, int n);

} // namespace nichols
