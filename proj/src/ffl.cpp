#include <cmath>
#include <limits>

#include "wsc/apps.hpp"
#include "wsc/errors.hpp"
#include "wsc/spectral.hpp"

namespace wsc {

namespace {

constexpr Arrow A = Arrow::activation;
constexpr Arrow R = Arrow::repression;

// Arrow signs (X→Y, Y→Z, X→Z) per motif.
constexpr std::array<FFLSpec, 8> kSpecs{{
    {Coherence::coherent, 1, A, A, A},
    {Coherence::coherent, 2, R, A, R},
    {Coherence::coherent, 3, A, R, R},
    {Coherence::coherent, 4, R, R, A},
    {Coherence::incoherent, 1, A, R, A},
    {Coherence::incoherent, 2, R, R, R},
    {Coherence::incoherent, 3, A, A, R},
    {Coherence::incoherent, 4, R, A, A},
}};

struct TableRow {
    std::array<double, 3> u2;
    std::array<double, 3> u3;
    double lambda2;
    double lambda3;
};

// Tabulated eigenpairs for the default encoding, in kSpecs order. For
// coherent 3 the larger eigenvalue is listed first.
constexpr std::array<TableRow, 8> kTable{{
    {{-0.5, -0.5, 1}, {-1, 1, 0}, 3, 3},
    {{0, -1, 1}, {-2, 1, 1}, 6, 12},
    {{-0.5, -0.5, 1}, {-1, 1, 0}, 12, 6},
    {{-1, 0, 1}, {1, -2, 1}, 6, 12},
    {{-2, 1, 1}, {0, -1, 1}, 3, 9},
    {{-0.5, -0.5, 1}, {-1, 1, 0}, 12, 12},
    {{1, -2, 1}, {-1, 0, 1}, 3, 9},
    {{-0.5, -0.5, 1}, {-1, 1, 0}, 3, 9},
}};

Eigen::MatrixXd projector_onto(std::vector<Eigen::VectorXd> vectors) {
    // Gram-Schmidt, then Σ q qᵀ.
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(vectors.front().size(), vectors.front().size());
    std::vector<Eigen::VectorXd> basis;
    for (auto v : vectors) {
        for (const auto& q : basis) v -= q * q.dot(v);
        v.normalize();
        basis.push_back(v);
        p += v * v.transpose();
    }
    return p;
}

FFLSignature reference_from(const TableRow& row) {
    Eigen::VectorXd u2 = Eigen::Map<const Eigen::Vector3d>(row.u2.data());
    Eigen::VectorXd u3 = Eigen::Map<const Eigen::Vector3d>(row.u3.data());
    FFLSignature sig;
    if (row.lambda2 == row.lambda3) {
        sig.lambda2 = sig.lambda3 = row.lambda2;
        sig.eigenspaces.push_back({row.lambda2, projector_onto({u2, u3})});
        return sig;
    }
    if (row.lambda2 > row.lambda3) std::swap(u2, u3);
    sig.lambda2 = std::min(row.lambda2, row.lambda3);
    sig.lambda3 = std::max(row.lambda2, row.lambda3);
    sig.eigenspaces.push_back({sig.lambda2, projector_onto({u2})});
    sig.eigenspaces.push_back({sig.lambda3, projector_onto({u3})});
    return sig;
}

}  // namespace

std::string FFLSpec::name() const {
    return (coherence == Coherence::coherent ? "coherent" : "incoherent") + std::to_string(variant);
}

const std::array<FFLSpec, 8>& all_ffl_specs() { return kSpecs; }

FFLSpec ffl_spec(Coherence coherence, int variant) {
    if (variant < 1 || variant > 4) throw InputError("FFL variant must be 1..4");
    return kSpecs[static_cast<std::size_t>((coherence == Coherence::coherent ? 0 : 4) + variant - 1)];
}

FFLSpec parse_ffl_type(std::string_view name) {
    for (const auto& s : kSpecs)
        if (s.name() == name) return s;
    throw InputError("unknown FFL type '" + std::string(name) + "' (expected coherent1..incoherent4)");
}

WeightedComplex make_ffl(const FFLSpec& spec, const ArrowEncoding& encoding) {
    if (encoding.activation == 0 || encoding.repression == 0)
        throw ConstructionError("arrow encoding weights must be nonzero");
    constexpr Vertex x = 0, y = 1, z = 2;
    const std::array<std::pair<Simplex, Arrow>, 3> edges{{
        {Simplex{x, y}, spec.xy},
        {Simplex{y, z}, spec.yz},
        {Simplex{x, z}, spec.xz},
    }};
    std::vector<Simplex> simplices;
    for (const auto& [e, sign] : edges) simplices.push_back(e);
    SimplicialComplex k = build_complex(simplices);
    WeightFunction phi(k);
    for (const auto& [e, sign] : edges) {
        phi.set(e, 0, encoding(sign));
        phi.set(e, 1, encoding(sign));
    }
    validate_weight(k, phi);
    return {std::move(k), std::move(phi)};
}

FFLSignature ffl_signature(const ExactMatrix& laplacian) {
    if (laplacian.rows() != 3 || laplacian.cols() != 3)
        throw DomainError("an FFL Laplacian is 3x3");
    const Spectrum sp = spectrum(laplacian);
    const double tol = zero_tolerance(laplacian);
    if (std::abs(sp.eigenvalues[0]) > tol)
        throw NumericalError("smallest FFL eigenvalue is not zero: " + std::to_string(sp.eigenvalues[0]));

    FFLSignature sig;
    sig.lambda2 = sp.eigenvalues[1];
    sig.lambda3 = sp.eigenvalues[2];
    auto proj = [&](std::initializer_list<std::size_t> cols) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(3, 3);
        for (auto c : cols) p += sp.vector(c) * sp.vector(c).adjoint();
        return Eigen::MatrixXd(p.real());
    };
    if (sig.lambda3 - sig.lambda2 <= tol) {
        if (sig.lambda2 > tol) sig.eigenspaces.push_back({0.5 * (sig.lambda2 + sig.lambda3), proj({1, 2})});
    } else {
        if (sig.lambda2 > tol) sig.eigenspaces.push_back({sig.lambda2, proj({1})});
        sig.eigenspaces.push_back({sig.lambda3, proj({2})});
    }
    return sig;
}

FFLSignature ffl_signature(const SimplicialComplex& k, const WeightFunction& phi,
                           std::optional<ArrowEncoding> encoding) {
    FFLSignature sig = ffl_signature(laplacian_matrix(k, phi, 0));
    sig.encoding = std::move(encoding);
    return sig;
}

double signature_distance(const FFLSignature& a, const FFLSignature& b) {
    if (a.eigenspaces.size() != b.eigenspaces.size()) return std::numeric_limits<double>::infinity();
    double d = std::max(std::abs(a.lambda2 - b.lambda2), std::abs(a.lambda3 - b.lambda3));
    for (std::size_t k = 0; k < a.eigenspaces.size(); ++k) {
        d = std::max(d, std::abs(a.eigenspaces[k].eigenvalue - b.eigenspaces[k].eigenvalue));
        d = std::max(d, (a.eigenspaces[k].projector - b.eigenspaces[k].projector).norm());
    }
    return d;
}

const std::array<FFLSignature, 8>& reference_signatures() {
    static const std::array<FFLSignature, 8> refs = [] {
        std::array<FFLSignature, 8> out;
        for (std::size_t k = 0; k < kTable.size(); ++k) {
            out[k] = reference_from(kTable[k]);
            out[k].encoding = ArrowEncoding{};
        }
        return out;
    }();
    return refs;
}

FFLSpec classify_ffl(const FFLSignature& sig) {
    if (sig.encoding && !sig.encoding->is_default())
        throw ClassificationError("reference signatures exist only for the default 1/2 encoding");
    const auto& refs = reference_signatures();
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < refs.size(); ++k) {
        if (signature_distance(sig, refs[k]) > kFFLMatchTolerance) continue;
        if (hit) throw ClassificationError("signature matches several FFL types");
        hit = k;
    }
    if (!hit) throw ClassificationError("signature matches no FFL type under the default encoding");
    return kSpecs[*hit];
}

}  // namespace wsc
