#ifndef ONB_MATRIX_HPP
#define ONB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "onb/field.hpp"

namespace onb {

/// Dense row-major matrix over one field.
class Matrix {
  public:
    /// Zero-filled rows x cols matrix.
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldPtr& field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix transpose() const;
    /// Every entry multiplied by c.
    Matrix scaled(const FieldElement& c) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend std::vector<FieldElement> operator*(const Matrix& a, const std::vector<FieldElement>& v);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

std::size_t nonzero_count(const Matrix& m);

std::size_t mat_rank(Matrix m);

/// Inverse by Gauss-Jordan elimination; throws std::invalid_argument
/// ("matrix is not invertible") on singular input.
Matrix mat_inverse(const Matrix& m);

/// Solve M x = v exactly for square M.
std::vector<FieldElement> mat_solve(const Matrix& m, const std::vector<FieldElement>& v);

/// Eliminates a square matrix once and answers many right-hand sides.
class LinearSolver {
  public:
    explicit LinearSolver(const Matrix& m) : inverse_(mat_inverse(m)) {}
    std::vector<FieldElement> solve(const std::vector<FieldElement>& rhs) const {
        return inverse_ * rhs;
    }
    const Matrix& inverse() const { return inverse_; }

  private:
    Matrix inverse_;
};

} // namespace onb

#endif
