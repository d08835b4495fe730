#include "onb/matrix.hpp"

#include <stdexcept>

namespace onb {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(rows * cols, field_->zero()) {
    require(rows_ > 0 && cols_ > 0, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix s(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] * c;
    return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix shapes do not compose");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
        }
    return out;
}

std::vector<FieldElement> operator*(const Matrix& a, const std::vector<FieldElement>& v) {
    require(a.cols_ == v.size(), "matrix-vector shapes do not compose");
    std::vector<FieldElement> out(a.rows_, a.field_->zero());
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) {
            if (a.at(r, c).is_zero() || v[c].is_zero()) continue;
            out[r] = out[r] + a.at(r, c) * v[c];
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ &&
           a.entries_ == b.entries_;
}

std::size_t nonzero_count(const Matrix& m) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) ++count;
    return count;
}

std::size_t mat_rank(Matrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        const FieldElement inv = m.at(rank, col).inverse();
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            const FieldElement factor = m.at(r, col) * inv;
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

Matrix mat_inverse(const Matrix& m) {
    require(m.rows() == m.cols(), "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(m.field(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::invalid_argument("matrix is not invertible");
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.at(col, c), a.at(pivot, c));
                std::swap(inv.at(col, c), inv.at(pivot, c));
            }
        const FieldElement scale = a.at(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a.at(col, c) = a.at(col, c) * scale;
            inv.at(col, c) = inv.at(col, c) * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const FieldElement factor = a.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
                inv.at(r, c) = inv.at(r, c) - factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::vector<FieldElement> mat_solve(const Matrix& m, const std::vector<FieldElement>& v) {
    require(m.rows() == m.cols(), "solve needs a square matrix");
    require(v.size() == m.rows(), "right-hand side has the wrong length");
    return mat_inverse(m) * v;
}

} // namespace onb
