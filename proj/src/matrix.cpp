#include "anticode/matrix.hpp"

#include <string>

namespace anticode {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw InputError("matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(data_.size()));
    }
    for (auto e : data_) {
        if (!field_.contains(e)) throw InputError("matrix: entry " + std::to_string(e) + " not in " + field_.describe());
    }
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw InputError("matrix: rows have different lengths");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> keep) const {
    Matrix out(field_, rows_, keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) {
        if (keep[j] >= cols_) throw InputError("select_columns: column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, keep[j]);
    }
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> keep) const {
    Matrix out(field_, keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= rows_) throw InputError("select_rows: row index out of range");
        auto src = row(keep[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

RrefResult rref(const Matrix& input) {
    Matrix m = input;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr) {
            auto a = m.row(sel);
            auto b = m.row(pr);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Elem scale = f.inv(m(pr, c));
        if (scale != 1) {
            for (auto& e : m.row(pr)) e = f.mul(e, scale);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            const Elem factor = m(r, c);
            if (factor == 0) continue;
            const Elem neg = f.neg(factor);
            auto src = m.row(pr);
            auto dst = m.row(r);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(neg, src[j]));
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix null_space(const Matrix& m) {
    const auto [reduced, pivots] = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(f, free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis(i, fc) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(i, pivots[r]) = f.neg(reduced(r, fc));
    }
    return basis;
}

Matrix row_space_basis(const Matrix& m) {
    auto r = rref(m);
    std::vector<std::size_t> keep(r.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return r.reduced.select_rows(keep);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("multiply: matrices over different fields");
    if (a.cols() != b.rows()) throw InputError("multiply: dimension mismatch");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Elem x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
        }
    return out;
}

std::vector<Elem> mat_vec(const Matrix& m, std::span<const Elem> v) {
    if (v.size() != m.cols()) throw InputError("mat_vec: dimension mismatch");
    std::vector<Elem> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = functional_apply(m.field(), m.row(r), v);
    return out;
}

std::vector<Elem> vec_mat(std::span<const Elem> x, const Matrix& m) {
    if (x.size() != m.rows()) throw InputError("vec_mat: dimension mismatch");
    const Field& f = m.field();
    std::vector<Elem> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(x[r], row[c]));
    }
    return out;
}

Elem functional_apply(const Field& field, std::span<const Elem> a, std::span<const Elem> g) {
    if (a.size() != g.size()) throw InputError("functional_apply: dimension mismatch");
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && g[i] != 0) acc = field.add(acc, field.mul(a[i], g[i]));
    }
    return acc;
}

}  // namespace anticode
