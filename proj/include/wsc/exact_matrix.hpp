#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "wsc/complex.hpp"
#include "wsc/gaussian_rational.hpp"

namespace wsc {

/// Dense row-major matrix over the Gaussian rationals.
///
/// Row and column labels record which basis simplices index the matrix.
/// They are either absent or exactly as long as the matching dimension;
/// equality compares entries and shape only.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::vector<Simplex> row_labels, std::vector<Simplex> col_labels);
    /// From nested rows; all rows must have equal length.
    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<GaussianRational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Bounds-checked access; throws IndexError.
    const GaussianRational& at(std::size_t r, std::size_t c) const;

    const std::vector<Simplex>& row_labels() const { return row_labels_; }
    const std::vector<Simplex>& col_labels() const { return col_labels_; }
    void set_labels(std::vector<Simplex> rows, std::vector<Simplex> cols);

    ExactMatrix transpose() const;
    /// Conjugate transpose.
    ExactMatrix adjoint() const;

    bool is_zero() const;
    bool is_real() const;
    bool is_integral() const;
    bool is_hermitian() const;

    double frobenius_norm() const;
    Eigen::MatrixXcd to_complex() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    /// Throws ContractError on a shape mismatch. Labels follow the operands.
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
    std::vector<Simplex> row_labels_;
    std::vector<Simplex> col_labels_;
};

/// Exact rank by fraction-free (Bareiss) elimination: rows are first scaled
/// to Gaussian integers, and every division in the sweep is exact.
std::size_t exact_rank(const ExactMatrix& m);

inline std::size_t kernel_dim(const ExactMatrix& m) { return m.cols() - exact_rank(m); }

}  // namespace wsc
