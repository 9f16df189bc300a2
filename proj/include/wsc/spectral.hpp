#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wsc/complex.hpp"
#include "wsc/exact_matrix.hpp"
#include "wsc/weight.hpp"

namespace wsc {

/// dim H^n(K, φ; F) = dim C^n - rank δ_n - rank δ_{n-1}, computed exactly.
/// Zero for n < 0 and n > max_dim.
std::size_t cohomology_dim(const SimplicialComplex& k, const WeightFunction& phi, int n);

struct UpDown {
    ExactMatrix up;    // δ_n^* δ_n
    ExactMatrix down;  // δ_{n-1} δ_{n-1}^*
};

/// Both summands of the Laplacian under the standard inner product.
UpDown up_down_matrices(const SimplicialComplex& k, const WeightFunction& phi, int n);

/// [Δ_n] = A_{n-1} A_{n-1}^† + A_n^† A_n with A_i = [δ_i]. Hermitian, exact.
ExactMatrix laplacian_matrix(const SimplicialComplex& k, const WeightFunction& phi, int n);

/// Positive weights w(σ) defining the inner product Σ w(σ) f(σ) conj(g(σ)).
/// Simplices without an explicit weight get w = 1.
class InnerProductWeights {
public:
    /// Throws DomainError unless value > 0.
    void set(const Simplex& s, Rational value);
    Rational weight(const Simplex& s) const;
    /// Diagonal of W_n in basis(n) order.
    std::vector<Rational> diagonal(const SimplicialComplex& k, int n) const;

private:
    std::map<Simplex, Rational> values_;
};

/// Reads `σ | value` lines with positive rational values.
InnerProductWeights parse_inner_weights(const SimplicialComplex& k, std::string_view text);

struct WeightedLaplacian {
    ExactMatrix up;     // W_n^{-1} [δ_n^*] W_{n+1} [δ_n]
    ExactMatrix down;   // [δ_{n-1}] W_{n-1}^{-1} [δ_{n-1}^*] W_n
    ExactMatrix total;  // up + down
};

/// Laplacian matrices for the weighted inner product. These are in general
/// not Hermitian, only similar to Hermitian matrices via W_n^{1/2}.
WeightedLaplacian weighted_inner_laplacian(const SimplicialComplex& k, const WeightFunction& phi,
                                           const InnerProductWeights& w, int n);

/// Ascending real eigenvalues with column-matched orthonormal eigenvectors.
struct Spectrum {
    std::vector<double> eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    std::size_t size() const { return eigenvalues.size(); }
    Eigen::VectorXcd vector(std::size_t k) const {
        return eigenvectors.col(static_cast<Eigen::Index>(k));
    }
};

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations,
/// swept until the off-diagonal Frobenius mass is ≤ 1e-12·‖A‖_F.
/// Eigenvalues ascending; eigenvectors in the columns.
struct RealEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
RealEigen jacobi_eigen(const Eigen::MatrixXd& a);

/// Spectrum of an exactly Hermitian matrix. Complex input goes through the
/// 2N×2N real embedding [[X, -Y], [Y, X]]. Throws DomainError otherwise.
Spectrum spectrum(const ExactMatrix& a);
/// Floating-point variant; `a` must be Hermitian to rounding.
Spectrum spectrum(const Eigen::MatrixXcd& a);

/// Spectrum of M through the Hermitian matrix W^{1/2} M W^{-1/2}, W = diag(w).
Spectrum similar_hermitian_spectrum(const ExactMatrix& m, std::span<const Rational> w);

/// Tolerance under which an eigenvalue of `a` counts as zero: 1e-9·(1+‖A‖_F).
double zero_tolerance(const ExactMatrix& a);

struct ZeroMultiplicities {
    long long down;   // of δ_{n-1} δ_{n-1}^*
    long long up;     // of δ_n^* δ_n
    long long delta;  // of Δ_n
};

/// Evaluates the alternating-sum formulas for the zero multiplicities from
/// dim C^j and dim H^j, j ≤ n (unreduced: dim C^{-1} = 0).
ZeroMultiplicities zero_multiplicity_formulas(const SimplicialComplex& k, const WeightFunction& phi,
                                              int n);

/// Orthonormal basis of ker Δ_n (the harmonic n-cochains).
struct HarmonicBasis {
    int dim = 0;
    std::vector<Eigen::VectorXcd> vectors;
};

/// Eigenvectors of [Δ_n] below zero_tolerance. Throws NumericalError when
/// their count differs from the exact cohomology dimension.
HarmonicBasis harmonic_basis(const SimplicialComplex& k, const WeightFunction& phi, int n);

}  // namespace wsc
