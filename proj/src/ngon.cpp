#include "wsc/apps.hpp"
#include "wsc/errors.hpp"

namespace wsc {

WeightedComplex make_ngon(const std::vector<WeightValue>& alphas) {
    const auto n = static_cast<Vertex>(alphas.size());
    if (n < 3) throw InputError("an n-gon needs at least 3 angle weights");

    std::vector<Simplex> edges;
    for (Vertex i = 0; i < n; ++i) {
        const Vertex j = (i + 1) % n;
        edges.push_back(i < j ? Simplex{i, j} : Simplex{j, i});
    }
    SimplicialComplex k = build_complex(edges);
    WeightFunction phi(k);
    for (const auto& e : edges) {
        phi.set(e, 0, alphas[e[1]]);  // d_0 deletes v_i, leaving [v_j]
        phi.set(e, 1, alphas[e[0]]);
    }
    validate_weight(k, phi);
    return {std::move(k), std::move(phi)};
}

}  // namespace wsc
