#include "nichols/tensor_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "nichols/expression.hpp"

namespace nichols {

std::size_t word_count(int theta, int n)
{
    std::size_t c = 1;
    for (int k = 0; k < n; ++k)
        c *= static_cast<std::size_t>(theta);
    return c;
}

std::size_t word_index(const Word& w, int theta)
{
    std::size_t idx = 0;
    for (int a : w)
        idx = idx * static_cast<std::size_t>(theta) + static_cast<std::size_t>(a);
    return idx;
}

Word word_at(std::size_t index, int n, int theta)
{
    Word w(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(theta));
        index /= static_cast<std::size_t>(theta);
    }
    return w;
}

std::vector<int> multidegree(const Word& w, int theta)
{
    std::vector<int> d(static_cast<std::size_t>(theta), 0);
    for (int a : w)
        ++d[static_cast<std::size_t>(a)];
    return d;
}

TensorElement TensorElement::word(Word w)
{
    TensorElement t;
    t.terms.emplace(std::move(w), CycScalar(1));
    return t;
}

TensorElement TensorElement::scalar(const CycScalar& c)
{
    TensorElement t;
    t.add({}, c);
    return t;
}

void TensorElement::add(const Word& w, const CycScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

std::optional<int> TensorElement::length() const
{
    if (terms.empty())
        return std::nullopt;
    auto n = terms.begin()->first.size();
    for (const auto& [w, c] : terms)
        if (w.size() != n)
            return std::nullopt;
    return static_cast<int>(n);
}

std::optional<std::vector<int>> TensorElement::multidegree(int theta) const
{
    if (terms.empty())
        return std::nullopt;
    auto d = nichols::multidegree(terms.begin()->first, theta);
    for (const auto& [w, c] : terms)
        if (nichols::multidegree(w, theta) != d)
            return std::nullopt;
    return d;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs)
{
    for (const auto& [w, c] : rhs.terms)
        add(w, c);
    return *this;
}

TensorElement TensorElement::operator*(const CycScalar& c) const
{
    TensorElement out;
    for (const auto& [w, x] : terms)
        out.add(w, x * c);
    return out;
}

TensorElement operator+(TensorElement a, const TensorElement& b)
{
    return a += b;
}

TensorElement operator-(TensorElement a, const TensorElement& b)
{
    return a += b * CycScalar(-1);
}

TensorElement concat(const TensorElement& a, const TensorElement& b)
{
    TensorElement out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

SparseVec to_vector(const TensorElement& a, int theta)
{
    SparseVec v;
    for (const auto& [w, c] : a.terms)
        add_term(v, word_index(w, theta), c);
    return v;
}

TensorElement from_vector(const SparseVec& v, int n, int theta)
{
    TensorElement t;
    for (const auto& [i, c] : v)
        t.add(word_at(i, n, theta), c);
    return t;
}

std::string render_term(const CycScalar& c, const std::string& symbol, bool first)
{
    std::string out;
    auto r = c.as_rational();
    bool negative = r && *r < 0;
    std::string coeff;
    if (r) {
        mpq_class mag = abs(*r);
        if (mag != 1 || symbol.empty())
            coeff = mag.get_str();
    } else {
        coeff = "(" + c.render() + ")";
    }
    if (first)
        out = negative ? "-" : "";
    else
        out = negative ? " - " : " + ";
    if (!coeff.empty()) {
        out += coeff;
        if (!symbol.empty())
            out += "*";
    }
    out += symbol;
    return out;
}

std::string render(const TensorElement& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : a.terms) {
        std::string sym;
        for (std::size_t k = 0; k < w.size(); ++k)
            sym += (k ? "*x" : "x") + std::to_string(w[k] + 1);
        out += render_term(c, sym, first);
        first = false;
    }
    return out;
}

TensorElement parse_tensor_element(std::string_view text, int theta)
{
    NCPoly p = parse_expression(text, "x");
    TensorElement t;
    for (const auto& [mono, c] : p) {
        Word w;
        for (const auto& g : mono) {
            if (g.index > theta)
                throw Error("UnknownGenerator", "x" + std::to_string(g.index) + " but theta = " + std::to_string(theta));
            w.push_back(g.index - 1);
        }
        t.add(w, c);
    }
    return t;
}

LinOp LinOp::identity(std::size_t dim)
{
    LinOp op{dim, dim, {}};
    op.columns.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j)
        op.columns.push_back(unit_vector(j));
    return op;
}

LinOp LinOp::zero(std::size_t source_dim, std::size_t target_dim)
{
    return LinOp{source_dim, target_dim, std::vector<SparseVec>(source_dim)};
}

SparseVec LinOp::apply(const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [j, c] : v)
        axpy(out, c, columns[j]);
    return out;
}

LinOp LinOp::operator+(const LinOp& rhs) const
{
    if (source_dim != rhs.source_dim || target_dim != rhs.target_dim)
        throw Error("DimensionMismatch", "operator sum");
    LinOp out = *this;
    for (std::size_t j = 0; j < source_dim; ++j)
        axpy(out.columns[j], CycScalar(1), rhs.columns[j]);
    return out;
}

LinOp LinOp::scaled(const CycScalar& c) const
{
    LinOp out = *this;
    for (auto& col : out.columns)
        col = nichols::scaled(col, c);
    return out;
}

Matrix LinOp::dense() const
{
    Matrix m(target_dim, source_dim);
    for (std::size_t j = 0; j < source_dim; ++j)
        for (const auto& [i, c] : columns[j])
            m(i, j) = c;
    return m;
}

LinOp compose(const LinOp& lhs, const LinOp& rhs)
{
    if (lhs.source_dim != rhs.target_dim)
        throw Error("DimensionMismatch", "operator composition");
    LinOp out{rhs.source_dim, lhs.target_dim, {}};
    out.columns.reserve(rhs.source_dim);
    for (const auto& col : rhs.columns)
        out.columns.push_back(lhs.apply(col));
    return out;
}

namespace {

// Applies sigma_i (0-based slot i, i+1) to a word in place; returns the factor.
CycScalar braid_word_step(Word& w, int i, const DiagonalBraiding& b)
{
    auto k = static_cast<std::size_t>(i);
    CycScalar f = b(w[k], w[k + 1]);
    std::swap(w[k], w[k + 1]);
    return f;
}

} // namespace

LinOp braid_generator(int n, int i, const DiagonalBraiding& b)
{
    if (i < 1 || i > n - 1)
        throw Error("PositionOutOfRange", "sigma_" + std::to_string(i) + " on T^" + std::to_string(n));
    return braid_word_lift(n, {i}, b);
}

std::vector<int> reduced_word(const Permutation& perm, bool largest_descent)
{
    // w^{-1}: inv[p] = position the letter now at p came from
    const int n = static_cast<int>(perm.size());
    std::vector<int> inv(perm.size());
    for (int k = 0; k < n; ++k)
        inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
    std::vector<int> word;
    for (;;) {
        int found = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(i + 1)]) {
                found = i;
                if (!largest_descent)
                    break;
            }
        if (found < 0)
            break;
        word.push_back(found + 1);
        std::swap(inv[static_cast<std::size_t>(found)], inv[static_cast<std::size_t>(found + 1)]);
    }
    return word;
}

LinOp braid_word_lift(int n, const std::vector<int>& word, const DiagonalBraiding& b)
{
    const int theta = b.theta();
    for (int i : word)
        if (i < 1 || i > n - 1)
            throw Error("PositionOutOfRange", "sigma_" + std::to_string(i) + " on T^" + std::to_string(n));
    const std::size_t dim = word_count(theta, n);
    LinOp op{dim, dim, std::vector<SparseVec>(dim)};
    for (std::size_t j = 0; j < dim; ++j) {
        Word w = word_at(j, n, theta);
        CycScalar c(1);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            c *= braid_word_step(w, *it - 1, b);
        op.columns[j].emplace(word_index(w, theta), c);
    }
    return op;
}

LinOp braid_lift(const Permutation& perm, const DiagonalBraiding& b)
{
    return braid_word_lift(static_cast<int>(perm.size()), reduced_word(perm), b);
}

const LinOp& SymmetrizerCache::get(int n)
{
    const int theta = braiding_.theta();
    if (ops_.empty())
        ops_.push_back(LinOp::identity(1));
    while (static_cast<int>(ops_.size()) <= n) {
        const int m = static_cast<int>(ops_.size());
        const LinOp& prev = ops_.back();
        const std::size_t dim = word_count(theta, m);
        LinOp op{dim, dim, std::vector<SparseVec>(dim)};
        for (std::size_t j = 0; j < dim; ++j) {
            Word w = word_at(j, m, theta);
            const int last = w.back();
            Word head(w.begin(), w.end() - 1);
            for (const auto& [pi, pc] : prev.columns[word_index(head, theta)]) {
                Word u = word_at(pi, m - 1, theta);
                // U_m: the last letter moves left to slot k; every letter b
                // it passes contributes q_{b, last}
                CycScalar f = pc;
                for (int k = m - 1; k >= 0; --k) {
                    if (k < m - 1)
                        f *= braiding_(u[static_cast<std::size_t>(k)], last);
                    Word v = u;
                    v.insert(v.begin() + k, last);
                    add_term(op.columns[j], word_index(v, theta), f);
                }
            }
        }
        ops_.push_back(std::move(op));
    }
    return ops_[static_cast<std::size_t>(n)];
}

LinOp quantum_symmetrizer(int n, const DiagonalBraiding& b)
{
    SymmetrizerCache cache(b);
    return cache.get(n);
}

std::pair<std::size_t, std::size_t> split_index(std::size_t index, int /*p*/, int q, int theta)
{
    std::size_t right_dim = word_count(theta, q);
    return {index / right_dim, index % right_dim};
}

std::size_t join_index(std::size_t left, std::size_t right, int q, int theta)
{
    return left * word_count(theta, q) + right;
}

SparseVec shuffle_coproduct_word(const Word& w, int p, const DiagonalBraiding& b)
{
    const int n = static_cast<int>(w.size());
    if (p < 0 || p > n)
        throw Error("PositionOutOfRange", "coproduct component (" + std::to_string(p) + ", " +
                                              std::to_string(n - p) + ")");
    const int theta = b.theta();
    SparseVec out;
    // subsets L of size p, as bitmasks
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != p)
            continue;
        Word joined(w.size());
        std::size_t li = 0;
        std::size_t ri = static_cast<std::size_t>(p);
        CycScalar c(1);
        for (int k = 0; k < n; ++k) {
            const int a = w[static_cast<std::size_t>(k)];
            if (mask & (1u << k)) {
                // the letter moves left past every earlier right-hand letter
                for (std::size_t r = static_cast<std::size_t>(p); r < ri; ++r)
                    c *= b(joined[r], a);
                joined[li++] = a;
            } else {
                joined[ri++] = a;
            }
        }
        add_term(out, word_index(joined, theta), c);
    }
    return out;
}

LinOp shuffle_coproduct(int n, int p, const DiagonalBraiding& b)
{
    if (p < 0 || p > n)
        throw Error("PositionOutOfRange", "coproduct component (" + std::to_string(p) + ", " +
                                              std::to_string(n - p) + ")");
    const int theta = b.theta();
    const std::size_t dim = word_count(theta, n);
    LinOp op{dim, dim, std::vector<SparseVec>(dim)};
    for (std::size_t j = 0; j < dim; ++j)
        op.columns[j] = shuffle_coproduct_word(word_at(j, n, theta), p, b);
    return op;
}

LinOp extend_derivation(const Matrix& d, int n)
{
    const int theta = static_cast<int>(d.rows());
    const std::size_t dim = word_count(theta, n);
    LinOp op{dim, dim, std::vector<SparseVec>(dim)};
    for (std::size_t j = 0; j < dim; ++j) {
        Word w = word_at(j, n, theta);
        for (int k = 0; k < n; ++k) {
            const int a = w[static_cast<std::size_t>(k)];
            for (int t = 0; t < theta; ++t) {
                const CycScalar& c = d(static_cast<std::size_t>(a), static_cast<std::size_t>(t));
                if (c.is_zero())
                    continue;
                Word v = w;
                v[static_cast<std::size_t>(k)] = t;
                add_term(op.columns[j], word_index(v, theta), c);
            }
        }
    }
    return op;
}

} // namespace nichols
