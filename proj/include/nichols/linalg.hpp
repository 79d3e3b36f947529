#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nichols/scalars.hpp"

namespace nichols {

/// Sparse vector keyed by basis index; zero entries are never stored.
using SparseVec = std::map<std::size_t, CycScalar>;

void add_term(SparseVec& v, std::size_t index, const CycScalar& c);
void axpy(SparseVec& y, const CycScalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& v, const CycScalar& c);
SparseVec unit_vector(std::size_t index);

/// Dense row-major matrix over the cyclotomic scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const CycScalar& c) const;
    Matrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycScalar> data_;
};

/// Reduced row echelon form; `pivots[i]` is the pivot column of row i.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of { v : m v = 0 }, one vector per free column.
std::vector<std::vector<CycScalar>> nullspace(const Matrix& m);

/// Some x with a x = b, or nullopt when inconsistent.
std::optional<std::vector<CycScalar>> solve(const Matrix& a, const std::vector<CycScalar>& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained reduced echelon basis of a subspace of sparse
/// vectors. Pivots are either the smallest or the largest index of each row.
class SparseEchelon {
public:
    enum class Pivot { Smallest, Largest };

    explicit SparseEchelon(Pivot pivot = Pivot::Smallest) : pivot_(pivot) {}

    /// Remainder of v after elimination against the current rows.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    /// Adds v to the span; returns false if v was already in it.
    bool insert(SparseVec v);

    std::size_t rank() const noexcept { return rows_.size(); }
    /// Rows keyed by pivot index; each row has coefficient 1 at its pivot
    /// and 0 at every other pivot.
    const std::map<std::size_t, SparseVec>& rows() const noexcept { return rows_; }
    bool is_pivot(std::size_t index) const { return rows_.count(index) != 0; }

private:
    std::size_t pivot_of(const SparseVec& v) const;

    Pivot pivot_;
    std::map<std::size_t, SparseVec> rows_;
};

/// Basis of the linear dependencies among `columns`: vectors c with
/// sum_j c_j columns[j] = 0.
std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& columns);

} // namespace nichols
