#pragma once

// Dense matrices over GF(q).

#include <cstddef>
#include <span>
#include <vector>

#include "anticode/gf.hpp"

namespace anticode {

using gf::Elem;
using gf::Field;

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    // Row-major entries; throws InputError on size mismatch or entries >= q.
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    // From a list of rows; all rows must have equal length.
    static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<Elem> column(std::size_t c) const;
    const std::vector<Elem>& entries() const { return data_; }

    Matrix transpose() const;
    // Columns listed in `keep`, in that order.
    Matrix select_columns(std::span<const std::size_t> keep) const;
    Matrix select_rows(std::span<const std::size_t> keep) const;

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Pivot columns are chosen left to right; within
// a column the topmost eligible row is used. Pivot rows are scaled to 1.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of {x : m * x^T = 0} as rows, one per free column of rref(m) in
// increasing column order; the basis vector for free column f has a 1 at f
// and zeros at the other free columns.
Matrix null_space(const Matrix& m);

// Nonzero rows of rref(m): a canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);

bool same_row_space(const Matrix& a, const Matrix& b);

Matrix multiply(const Matrix& a, const Matrix& b);

// m * v for a column vector v of length cols().
std::vector<Elem> mat_vec(const Matrix& m, std::span<const Elem> v);

// x * m for a row vector x of length rows() (encoding a message).
std::vector<Elem> vec_mat(std::span<const Elem> x, const Matrix& m);

// <a, g> over the field.
Elem functional_apply(const Field& field, std::span<const Elem> a, std::span<const Elem> g);

}  // namespace anticode
