#include "nichols/linalg.hpp"

namespace nichols {

void add_term(SparseVec& v, std::size_t index, const CycScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = v.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

void axpy(SparseVec& y, const CycScalar& a, const SparseVec& x)
{
    if (a.is_zero())
        return;
    for (const auto& [i, c] : x)
        add_term(y, i, a * c);
}

SparseVec scaled(const SparseVec& v, const CycScalar& c)
{
    SparseVec out;
    if (c.is_zero())
        return out;
    for (const auto& [i, x] : v)
        out.emplace(i, x * c);
    return out;
}

SparseVec unit_vector(std::size_t index)
{
    return SparseVec{{index, CycScalar(1)}};
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = CycScalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error("DimensionMismatch", "matrix product");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CycScalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const CycScalar& b = rhs(k, j);
                if (!b.is_zero())
                    out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("DimensionMismatch", "matrix sum");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    return *this + rhs.scaled(CycScalar(-1));
}

Matrix Matrix::scaled(const CycScalar& c) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x *= c;
    return out;
}

Matrix Matrix::transposed() const
{
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i])
            return false;
    return true;
}

Echelon rref(Matrix m)
{
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
        CycScalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            CycScalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    Matrix reduced(row, m.cols());
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            reduced(i, j) = m(i, j);
    e.reduced = std::move(reduced);
    return e;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

std::vector<std::vector<CycScalar>> nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<CycScalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<CycScalar> v(m.cols());
        v[free] = CycScalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<CycScalar>> solve(const Matrix& a, const std::vector<CycScalar>& b)
{
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    std::vector<CycScalar> x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = CycScalar(1);
    }
    Echelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = e.reduced(i, n + j);
    return out;
}

std::size_t SparseEchelon::pivot_of(const SparseVec& v) const
{
    return pivot_ == Pivot::Smallest ? v.begin()->first : v.rbegin()->first;
}

SparseVec SparseEchelon::reduce(SparseVec v) const
{
    // rows vanish at each other's pivots, so the coefficients of v at pivot
    // positions are unaffected by subtracting other rows
    std::vector<std::pair<std::size_t, CycScalar>> hits;
    for (const auto& [i, c] : v)
        if (rows_.count(i))
            hits.emplace_back(i, c);
    for (const auto& [i, c] : hits)
        axpy(v, -c, rows_.at(i));
    return v;
}

bool SparseEchelon::insert(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    std::size_t p = pivot_of(v);
    CycScalar inv = v.at(p).inverse();
    for (auto& [i, c] : v)
        c *= inv;
    for (auto& [q, row] : rows_) {
        auto it = row.find(p);
        if (it != row.end()) {
            CycScalar f = it->second;
            axpy(row, -f, v);
        }
    }
    rows_.emplace(p, std::move(v));
    return true;
}

std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& columns)
{
    struct Row {
        SparseVec data;
        SparseVec tag;
    };
    std::map<std::size_t, Row> rows; // keyed by smallest data index
    std::vector<SparseVec> kernel;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVec data = columns[j];
        SparseVec tag = unit_vector(j);
        std::vector<std::pair<std::size_t, CycScalar>> hits;
        for (const auto& [i, c] : data)
            if (rows.count(i))
                hits.emplace_back(i, c);
        for (const auto& [i, c] : hits) {
            const Row& r = rows.at(i);
            axpy(data, -c, r.data);
            axpy(tag, -c, r.tag);
        }
        if (data.empty()) {
            kernel.push_back(std::move(tag));
            continue;
        }
        std::size_t p = data.begin()->first;
        CycScalar inv = data.at(p).inverse();
        data = scaled(data, inv);
        tag = scaled(tag, inv);
        for (auto& [q, r] : rows) {
            auto it = r.data.find(p);
            if (it != r.data.end()) {
                CycScalar f = it->second;
                axpy(r.data, -f, data);
                axpy(r.tag, -f, tag);
            }
        }
        rows.emplace(p, Row{std::move(data), std::move(tag)});
    }
    return kernel;
}

} // namespace nichols
