#include "gradstar/matrix.hpp"

#include <stdexcept>

namespace gradstar {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    size_t n = 0, c = 0;
    for (const auto& b : blocks) {
        n += b.rows();
        c += b.cols();
    }
    Matrix m(n, c);
    size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

bool Matrix::is_real() const {
    for (const auto& s : data_)
        if (!s.is_real()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar d = a.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) = d * a.at(col, j);
            inv.at(col, j) = d * inv.at(col, j);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix size mismatch in addition");
    Matrix m = a;
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in product");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r = m;
    for (auto& s : r.data_) s *= c;
    return r;
}

Matrix Matrix::pow(long k) const {
    if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
    if (k < 0) throw std::invalid_argument("negative matrix power");
    Matrix r = identity(rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Matrix Matrix::select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
    return m;
}

OneForm apply(const Matrix& m, const OneForm& w) {
    if (m.cols() != w.components.size())
        throw std::invalid_argument("matrix/1-form size mismatch");
    OneForm r;
    r.components.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        Poly acc(w.components.empty() ? std::vector<std::string>{} : w.components[0].vars(),
                 w.components.empty() ? Field::Real : w.components[0].field());
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            acc += m.at(i, j) * w.components[j];
        }
        r.components.push_back(std::move(acc));
    }
    return r;
}

}  // namespace gradstar
