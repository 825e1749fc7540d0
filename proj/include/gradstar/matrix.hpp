#ifndef GRADSTAR_MATRIX_HPP
#define GRADSTAR_MATRIX_HPP

#include <vector>

#include "gradstar/poly.hpp"
#include "gradstar/scalar.hpp"

namespace gradstar {

// Dense matrix of exact scalars.  Sized for the small systems that appear
// here (Jordan blocks, companion matrices); all arithmetic is exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(size_t n);
    static Matrix block_diag(const std::vector<Matrix>& blocks);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_real() const;

    Matrix transpose() const;
    Matrix inverse() const;  // throws std::domain_error if singular

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(long k) const;

    /// Submatrix of the given row and column index sets.
    Matrix select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Matrix acting on a 1-form by components: (M w)_i = sum_j M_ij w_j.
OneForm apply(const Matrix& m, const OneForm& w);

}  // namespace gradstar

#endif
