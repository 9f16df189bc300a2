#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wsc/complex.hpp"
#include "wsc/exact_matrix.hpp"
#include "wsc/weight.hpp"

namespace wsc {

struct WeightedComplex {
    SimplicialComplex complex;
    WeightFunction weights;
};

/// Cycle on vertices 0..n-1 with edges [v_i, v_{i+1}] (v_n = v_0) and
/// φ([v_i,v_j],[v_i]) = α_i. Throws InputError for n < 3.
WeightedComplex make_ngon(const std::vector<WeightValue>& alphas);

// -- Feedforward loops ------------------------------------------------------

enum class Coherence { coherent, incoherent };
enum class Arrow { activation, repression };

/// One of the eight FFL motifs: X regulates Y and Z, Y regulates Z.
struct FFLSpec {
    Coherence coherence;
    int variant;  // 1..4
    Arrow xy;
    Arrow yz;
    Arrow xz;

    /// "coherent1" ... "incoherent4"
    std::string name() const;
    friend bool operator==(const FFLSpec&, const FFLSpec&) = default;
};

/// Arrow sign to weight value; the default is activation ↦ 1, repression ↦ 2.
struct ArrowEncoding {
    Rational activation = 1;
    Rational repression = 2;

    bool is_default() const { return activation == 1 && repression == 2; }
    const Rational& operator()(Arrow a) const { return a == Arrow::activation ? activation : repression; }
};

/// The eight motifs in the order coherent 1-4, incoherent 1-4.
const std::array<FFLSpec, 8>& all_ffl_specs();
/// Throws InputError for variant outside 1..4.
FFLSpec ffl_spec(Coherence coherence, int variant);
/// Parses "coherent1" ... "incoherent4".
FFLSpec parse_ffl_type(std::string_view name);

/// K = {X, Y, Z, [X,Y], [Y,Z], [X,Z]} with vertices X=0, Y=1, Z=2 and both
/// weights of an edge equal to the encoded value of its arrow, so that
/// [∂_1] has entries ±a, ±b, ±c. Throws ConstructionError for a zero encoding.
WeightedComplex make_ffl(const FFLSpec& spec, const ArrowEncoding& encoding = {});

struct Eigenspace {
    double eigenvalue;
    Eigen::MatrixXd projector;
};

/// Nonzero part of the spectrum of [Δ_0] for an FFL complex.
struct FFLSignature {
    double lambda2 = 0.0;  // λ2 ≤ λ3
    double lambda3 = 0.0;
    /// One entry per distinct nonzero eigenvalue, ascending.
    std::vector<Eigenspace> eigenspaces;
    /// Known when the signature came from make_ffl.
    std::optional<ArrowEncoding> encoding;
};

/// Signature of the degree-0 Laplacian of an FFL complex.
FFLSignature ffl_signature(const SimplicialComplex& k, const WeightFunction& phi,
                           std::optional<ArrowEncoding> encoding = std::nullopt);
/// Signature straight from a 3×3 Hermitian Laplacian. Throws NumericalError
/// if the smallest eigenvalue is not zero.
FFLSignature ffl_signature(const ExactMatrix& laplacian);

/// Largest eigenvalue gap or projector Frobenius distance between two
/// signatures; infinity when their eigenspace structure differs.
double signature_distance(const FFLSignature& a, const FFLSignature& b);

/// Signatures built from the tabulated eigenvalues and eigenvectors.
const std::array<FFLSignature, 8>& reference_signatures();

inline constexpr double kFFLMatchTolerance = 1e-6;

/// The unique motif whose reference signature lies within kFFLMatchTolerance.
/// Throws ClassificationError on zero or several matches, or when the
/// signature records a non-default encoding.
FFLSpec classify_ffl(const FFLSignature& sig);

}  // namespace wsc
