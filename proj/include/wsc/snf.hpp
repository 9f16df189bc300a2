#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/exact_matrix.hpp"
#include "wsc/gaussian_rational.hpp"
#include "wsc/weight.hpp"

namespace wsc {

/// Dense row-major big-integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static IntegerMatrix identity(std::size_t n);
    /// Throws DomainError if any entry is not an integer.
    static IntegerMatrix from_exact(const ExactMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    bool is_diagonal() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Determinant of a square integer matrix by Bareiss elimination.
Integer determinant(const IntegerMatrix& m);

struct SNFResult {
    /// min(rows, cols) entries, non-negative, each dividing the next; zeros last.
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
    /// Unimodular U, V with U·M·V = diag, when requested.
    std::optional<IntegerMatrix> u;
    std::optional<IntegerMatrix> v;
};

/// Smith normal form by unimodular row and column operations. The pivot is
/// the nonzero entry of least absolute value in the working block, ties to
/// the smallest (row, col).
SNFResult smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);
/// Convenience overload; throws DomainError for non-integral entries.
SNFResult smith_normal_form(const ExactMatrix& m, bool with_transforms = false);

/// gcd of |det| over all k×k minors, 0 if they all vanish. Cost is
/// C(rows,k)·C(cols,k) determinants, so keep min(rows, cols) small.
/// Throws IndexError unless 1 ≤ k ≤ min(rows, cols).
Integer gcd_minors_oracle(const IntegerMatrix& m, std::size_t k);

/// Finitely generated abelian group ℤ^free_rank ⊕ ⊕ ℤ/torsion[i].
struct HomologyGroup {
    std::vector<Integer> torsion;  // entries ≥ 2, each dividing the next
    std::size_t free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    /// "Z/2 + Z/2 + Z^1", "0" for the trivial group.
    std::string to_string() const;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_n(K, φ; ℤ) = ker ∂_n / im ∂_{n+1}. Needs a validated integer-valued φ.
HomologyGroup weighted_homology(const SimplicialComplex& k, const WeightFunction& phi, int n);

/// H_0 of the n-gon with angle weights α from gcds of k-fold products of
/// distinct α's, without touching a boundary matrix. Throws InputError for n < 3.
HomologyGroup ngon_homology_closed_form(const std::vector<Integer>& alphas);

}  // namespace wsc
