#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/gaussian_rational.hpp"

namespace wsc {

using WeightValue = GaussianRational;

struct ValidationReport;
class WeightFunction;
ValidationReport validate_weight(const SimplicialComplex& k, WeightFunction& phi);

/// Table of weights φ(σ, d_iσ) for every simplex σ of dimension ≥ 1.
///
/// Values on non-faces and on 0-simplices are not stored; they are zero by
/// convention and never enter a boundary map. Entries may be missing while a
/// table is being filled in. The validated flag is raised only by
/// validate_weight() and dropped again by any later set().
class WeightFunction {
public:
    explicit WeightFunction(SimplicialComplex complex);

    const SimplicialComplex& complex() const { return complex_; }

    void set(const Simplex& sigma, int i, WeightValue value);
    /// `tau` must be a codimension-1 face of `sigma`.
    void set(const Simplex& sigma, const Simplex& tau, WeightValue value);

    bool has(const Simplex& sigma, int i) const;
    /// Throws IncompleteWeightError naming the pair if the entry is missing.
    const WeightValue& at(const Simplex& sigma, int i) const;
    /// Entry addressed by basis position: simplex `col` of basis(n), face i.
    const WeightValue& at(int n, std::size_t col, int i) const;

    /// First (σ, i) pair without a value, in basis order.
    std::optional<std::pair<Simplex, int>> first_missing() const;
    bool is_complete() const { return !first_missing().has_value(); }

    bool validated() const { return validated_; }
    bool is_integral() const;
    bool is_real() const;

private:
    friend ValidationReport validate_weight(const SimplicialComplex&, WeightFunction&);

    std::optional<WeightValue>& slot(const Simplex& sigma, int i);
    const std::optional<WeightValue>& slot(const Simplex& sigma, int i) const;

    SimplicialComplex complex_;
    // table_[n - 1][col][i] for n = 1..max_dim
    std::vector<std::vector<std::vector<std::optional<WeightValue>>>> table_;
    bool validated_ = false;
};

/// One failing instance of φ(σ,d_iσ)·φ(d_iσ,d_jd_iσ) = φ(σ,d_jσ)·φ(d_jσ,d_jd_iσ).
struct Violation {
    Simplex sigma;
    int i;
    int j;
    WeightValue lhs;
    WeightValue rhs;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the weight identity exactly for every σ with dim σ ≥ 2 and j < i.
/// Raises `phi`'s validated flag on success. Throws IncompleteWeightError if
/// `phi` misses an entry and ContractError if `phi` lives on another complex.
ValidationReport validate_weight(const SimplicialComplex& k, WeightFunction& phi);

WeightFunction identity_weight(const SimplicialComplex& k);
WeightFunction zero_weight(const SimplicialComplex& k);
/// Every entry equal to `value`; validated.
WeightFunction constant_weight(const SimplicialComplex& k, const WeightValue& value);

using SimplexSet = std::set<Simplex>;
using FaceWeightFn = std::function<WeightValue(const Simplex& sigma, int i)>;

/// Zero whenever σ ∈ A or d_iσ ∈ B, otherwise a(σ, i). Throws ConstructionError
/// unless A ∪ B covers K.
WeightFunction semi_trivial_weight(const SimplicialComplex& k, const SimplexSet& a,
                                   const SimplexSet& b, const FaceWeightFn& values);

using SimplexIntegers = std::map<Simplex, Integer>;

/// φ(σ, d_iσ) = w(σ)/w(d_iσ) for a nowhere-zero w with w(face) | w(σ).
WeightFunction dawson_weight(const SimplicialComplex& k, const SimplexIntegers& w);

using IntegerMap = std::function<Integer(const Integer&)>;

/// φ(σ, d_iσ) = C·f(w(σ)) / f(w(d_iσ)). With `c` unset, C is the lcm of
/// |f(w(σ))| over K, which makes every entry an integer.
WeightFunction cfw_weight(const SimplicialComplex& k, const SimplexIntegers& w, const IntegerMap& f,
                          std::optional<Integer> c = std::nullopt);

struct MissingPolicy {
    bool strict = false;
    WeightValue fill = WeightValue(1);
};

struct ParsedWeights {
    WeightFunction weights;
    std::vector<std::string> warnings;
};

/// Reads `σ | τ | value` lines (τ a codimension-1 face of σ). Missing pairs
/// are filled from `policy` with a warning, or rejected when strict.
ParsedWeights parse_weights(const SimplicialComplex& k, std::string_view text,
                            const MissingPolicy& policy = {});

std::string format_weights(const WeightFunction& phi);

}  // namespace wsc
