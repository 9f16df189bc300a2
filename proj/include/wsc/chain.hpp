#pragma once

#include <map>

#include "wsc/complex.hpp"
#include "wsc/exact_matrix.hpp"
#include "wsc/weight.hpp"

namespace wsc {

/// Sparse n-chain: coefficient per n-simplex, zeros not stored.
class Chain {
public:
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    /// Throws InputError if `s` has the wrong dimension. Setting zero erases.
    void set(const Simplex& s, GaussianRational coeff);
    GaussianRational coeff(const Simplex& s) const;
    const std::map<Simplex, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    int dim_;
    std::map<Simplex, GaussianRational> terms_;
};

/// [∂_n]: rows indexed by basis(n-1), columns by basis(n); the entry at
/// (d_iσ, σ) is (-1)^i φ(σ, d_iσ). Requires a validated φ (ContractError).
ExactMatrix boundary_matrix(const SimplicialComplex& k, const WeightFunction& phi, int n);

/// [δ_n] = [∂_{n+1}]^T.
ExactMatrix coboundary_matrix(const SimplicialComplex& k, const WeightFunction& phi, int n);

/// Conjugate transpose; the matrix of the adjoint under the standard inner product.
ExactMatrix adjoint_matrix(const ExactMatrix& m);

/// ∂ applied to `c`; a 0-chain maps to the empty chain of dimension -1.
Chain apply_boundary(const SimplicialComplex& k, const WeightFunction& phi, const Chain& c);

namespace detail {
/// boundary_matrix without the validated-weight precondition. Only complete
/// tables are accepted. Used to exhibit ∂∂ ≠ 0 for invalid tables.
ExactMatrix boundary_matrix_unchecked(const SimplicialComplex& k, const WeightFunction& phi, int n);
}  // namespace detail

}  // namespace wsc
