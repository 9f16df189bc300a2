#pragma once

#include <random>
#include <vector>

#include "wsc/apps.hpp"
#include "wsc/complex.hpp"
#include "wsc/exact_matrix.hpp"
#include "wsc/snf.hpp"
#include "wsc/weight.hpp"

namespace wsc::testing {

SimplicialComplex full_triangle();    // [(0,1,2)]
SimplicialComplex hollow_triangle();  // [(0,1),(0,2),(1,2)]
SimplicialComplex pentagon();         // edges (0,1),(0,4),(1,2),(2,3),(3,4)
SimplicialComplex edge();             // [(0,1)]

/// The nontrivial weight table on the full 2-simplex with a zero coefficient
/// on [v1,v2]. Not yet validated.
WeightFunction nontrivial_triangle_weights(const SimplicialComplex& k);
/// Hollow triangle with φ([v0,v1],[v0]) = 2 and all other entries 1. Validated.
WeightFunction doubled_vertex_weights(const SimplicialComplex& k);
/// One edge with φ([v0,v1],[v0]) = p, φ([v0,v1],[v1]) = q. Validated.
WeightFunction edge_weights(const SimplicialComplex& k, const WeightValue& p, const WeightValue& q);

/// FFL triangle X=0, Y=1, Z=2 with both weights of [X,Y], [Y,Z], [X,Z]
/// equal to a, b, c respectively. Validated.
WeightedComplex ffl_with_weights(const WeightValue& a, const WeightValue& b, const WeightValue& c);
/// Closed-form [Δ_0] of that complex for real a, b, c.
ExactMatrix ffl_laplacian_closed_form(const Rational& a, const Rational& b, const Rational& c);

using Rng = std::mt19937_64;

/// Random complex on 3..max_vertices vertices with simplices up to `max_dim`.
SimplicialComplex random_complex(Rng& rng, int max_dim, int max_vertices = 6);

enum class WeightKind { dawson, cfw, gauge_real, gauge_complex, semi_trivial };

/// Random validated weight function of the requested family. dawson and cfw
/// are integer valued; gauge_* are c_dim·h(σ)/h(d_iσ) with random nonzero h.
WeightFunction random_weight(Rng& rng, const SimplicialComplex& k, WeightKind kind);
WeightFunction random_integer_weight(Rng& rng, const SimplicialComplex& k);
WeightFunction random_weight(Rng& rng, const SimplicialComplex& k);

IntegerMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound);

/// Determinant by permutation expansion; independent of Bareiss.
Integer leibniz_determinant(const IntegerMatrix& m);

/// Classical incidence matrix of coboundary δ_n (entries in {-1,0,1}) built
/// from vertex lists, without going through boundary_matrix.
ExactMatrix classical_coboundary(const SimplicialComplex& k, int n);

}  // namespace wsc::testing
