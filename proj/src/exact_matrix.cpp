#include "wsc/exact_matrix.hpp"

#include <cmath>

#include "wsc/errors.hpp"

namespace wsc {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::vector<Simplex> row_labels, std::vector<Simplex> col_labels)
    : ExactMatrix(row_labels.size(), col_labels.size()) {
    row_labels_ = std::move(row_labels);
    col_labels_ = std::move(col_labels);
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(r, j) = rows[r][j];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

const GaussianRational& ExactMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw IndexError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range");
    return (*this)(r, c);
}

void ExactMatrix::set_labels(std::vector<Simplex> rows, std::vector<Simplex> cols) {
    if ((!rows.empty() && rows.size() != rows_) || (!cols.empty() && cols.size() != cols_))
        throw ContractError("label count does not match matrix shape");
    row_labels_ = std::move(rows);
    col_labels_ = std::move(cols);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix t = transpose();
    for (auto& z : t.data_) z = z.conj();
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_real() const {
    for (const auto& z : data_)
        if (!z.is_real()) return false;
    return true;
}

bool ExactMatrix::is_integral() const {
    for (const auto& z : data_)
        if (!z.is_integral()) return false;
    return true;
}

bool ExactMatrix::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (!((*this)(r, c) == (*this)(c, r).conj())) return false;
    return true;
}

double ExactMatrix::frobenius_norm() const {
    Rational sum = 0;
    for (const auto& z : data_) sum += z.norm_sq();
    return std::sqrt(sum.convert_to<double>());
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).to_complex();
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw ContractError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
    ExactMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const auto& rhs = b(k, c);
                if (!rhs.is_zero()) p(r, c) += lhs * rhs;
            }
        }
    }
    p.row_labels_ = a.row_labels_;
    p.col_labels_ = b.col_labels_;
    return p;
}

std::size_t exact_rank(const ExactMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<GaussianRational>> a(rows, std::vector<GaussianRational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            scale = lcm(scale, denominator(m(r, c).re()));
            scale = lcm(scale, denominator(m(r, c).im()));
        }
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c) * GaussianRational(scale);
    }

    GaussianRational prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        const GaussianRational pivot = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const GaussianRational lead = a[r][c];
            for (std::size_t j = c + 1; j < cols; ++j)
                a[r][j] = (pivot * a[r][j] - lead * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace wsc
