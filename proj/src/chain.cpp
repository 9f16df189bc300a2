#include "wsc/chain.hpp"

#include "wsc/errors.hpp"

namespace wsc {

void Chain::set(const Simplex& s, GaussianRational coeff) {
    if (s.dim() != dim_)
        throw InputError("simplex " + s.to_string() + " does not belong in a " +
                         std::to_string(dim_) + "-chain");
    if (coeff.is_zero())
        terms_.erase(s);
    else
        terms_.insert_or_assign(s, std::move(coeff));
}

GaussianRational Chain::coeff(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

namespace {

void require_valid(const SimplicialComplex& k, const WeightFunction& phi) {
    if (!(phi.complex() == k)) throw ContractError("weight function is defined on a different complex");
    if (!phi.validated()) throw ContractError("weight function has not been validated");
}

std::vector<Simplex> labels(const SimplicialComplex& k, int n) {
    const auto b = k.basis(n);
    return {b.begin(), b.end()};
}

}  // namespace

namespace detail {

ExactMatrix boundary_matrix_unchecked(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    ExactMatrix m(labels(k, n - 1), labels(k, n));
    if (n < 1) return m;
    const auto cols = k.basis(n);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int i = 0; i <= n; ++i) {
            const auto r = k.index_of(face(cols[c], i));
            GaussianRational entry = phi.at(n, c, i);
            if (i % 2 == 1) entry = -entry;
            m(*r, c) = std::move(entry);
        }
    }
    return m;
}

}  // namespace detail

ExactMatrix boundary_matrix(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    require_valid(k, phi);
    return detail::boundary_matrix_unchecked(k, phi, n);
}

ExactMatrix coboundary_matrix(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    return boundary_matrix(k, phi, n + 1).transpose();
}

ExactMatrix adjoint_matrix(const ExactMatrix& m) { return m.adjoint(); }

Chain apply_boundary(const SimplicialComplex& k, const WeightFunction& phi, const Chain& c) {
    require_valid(k, phi);
    const int n = c.dim();
    Chain out(n - 1);
    if (n < 1) return out;
    for (const auto& [s, g] : c.terms()) {
        if (!k.contains(s)) throw InputError(s.to_string() + " is not a simplex of the complex");
        for (int i = 0; i <= n; ++i) {
            const Simplex f = face(s, i);
            GaussianRational term = phi.at(s, i) * g;
            if (i % 2 == 1) term = -term;
            out.set(f, out.coeff(f) + term);
        }
    }
    return out;
}

}  // namespace wsc
