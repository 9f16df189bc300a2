#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wsc::testing {

SimplicialComplex full_triangle() { return build_complex({{0, 1, 2}}); }
SimplicialComplex hollow_triangle() { return build_complex({{0, 1}, {0, 2}, {1, 2}}); }
SimplicialComplex pentagon() { return build_complex({{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}); }
SimplicialComplex edge() { return build_complex({{0, 1}}); }

WeightFunction nontrivial_triangle_weights(const SimplicialComplex& k) {
    const Simplex s{0, 1, 2};
    WeightFunction phi(k);
    phi.set(s, 0, 0);
    phi.set(s, 1, 3);
    phi.set(s, 2, 1);
    const Simplex d0 = face(s, 0), d1 = face(s, 1), d2 = face(s, 2);
    phi.set(d0, face(d1, 0), 2);  // φ(d0σ, d0d1σ)
    phi.set(d0, face(d2, 0), 4);  // φ(d0σ, d0d2σ)
    phi.set(d1, face(d1, 0), 0);  // φ(d1σ, d0d1σ)
    phi.set(d1, face(d2, 1), 2);  // φ(d1σ, d1d2σ)
    phi.set(d2, face(d2, 0), 0);  // φ(d2σ, d0d2σ)
    phi.set(d2, face(d2, 1), 6);  // φ(d2σ, d1d2σ)
    return phi;
}

WeightFunction doubled_vertex_weights(const SimplicialComplex& k) {
    WeightFunction phi(k);
    phi.set(Simplex{0, 1}, Simplex{0}, 2);
    phi.set(Simplex{0, 1}, Simplex{1}, 1);
    phi.set(Simplex{1, 2}, Simplex{1}, 1);
    phi.set(Simplex{1, 2}, Simplex{2}, 1);
    phi.set(Simplex{0, 2}, Simplex{0}, 1);
    phi.set(Simplex{0, 2}, Simplex{2}, 1);
    validate_weight(k, phi);
    return phi;
}

WeightFunction edge_weights(const SimplicialComplex& k, const WeightValue& p, const WeightValue& q) {
    WeightFunction phi(k);
    phi.set(Simplex{0, 1}, Simplex{0}, p);
    phi.set(Simplex{0, 1}, Simplex{1}, q);
    validate_weight(k, phi);
    return phi;
}

WeightedComplex ffl_with_weights(const WeightValue& a, const WeightValue& b, const WeightValue& c) {
    auto k = build_complex({{0, 1}, {1, 2}, {0, 2}});
    WeightFunction phi(k);
    for (int i = 0; i < 2; ++i) {
        phi.set(Simplex{0, 1}, i, a);
        phi.set(Simplex{1, 2}, i, b);
        phi.set(Simplex{0, 2}, i, c);
    }
    validate_weight(k, phi);
    return {std::move(k), std::move(phi)};
}

ExactMatrix ffl_laplacian_closed_form(const Rational& a, const Rational& b, const Rational& c) {
    using GR = GaussianRational;
    const Rational a2 = a * a, b2 = b * b, c2 = c * c;
    return ExactMatrix::from_rows({
        {GR(Rational(a2 + c2)), GR(Rational(-a2)), GR(Rational(-c2))},
        {GR(Rational(-a2)), GR(Rational(a2 + b2)), GR(Rational(-b2))},
        {GR(Rational(-c2)), GR(Rational(-b2)), GR(Rational(b2 + c2))},
    });
}

SimplicialComplex random_complex(Rng& rng, int max_dim, int max_vertices) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    const int vertices = nv(rng);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::vector<Simplex> simplices;
    // Every vertex present so the complex has no gaps in its vertex labels.
    for (int v = 0; v < vertices; ++v) simplices.push_back(Simplex{static_cast<Vertex>(v)});
    std::vector<Vertex> pool(static_cast<std::size_t>(vertices));
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (int s = count(rng); s > 0; --s) {
        const int d = std::min(dim(rng), vertices - 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Vertex> pick(pool.begin(), pool.begin() + d + 1);
        std::sort(pick.begin(), pick.end());
        simplices.emplace_back(pick);
    }
    return build_complex(simplices);
}

namespace {

int pick_nonzero(Rng& rng, int bound) {
    std::uniform_int_distribution<int> d(1, bound);
    std::bernoulli_distribution neg(0.5);
    const int v = d(rng);
    return neg(rng) ? -v : v;
}

WeightValue random_gaussian(Rng& rng, bool complex) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        WeightValue z(Rational(d(rng)), complex ? Rational(d(rng)) : Rational(0));
        if (!z.is_zero()) return z;
    }
}

}  // namespace

WeightFunction random_weight(Rng& rng, const SimplicialComplex& k, WeightKind kind) {
    switch (kind) {
        case WeightKind::dawson: {
            SimplexIntegers w;
            std::uniform_int_distribution<int> mult(1, 3);
            for (int n = 0; n <= k.max_dim(); ++n) {
                for (const auto& s : k.basis(n)) {
                    Integer value = 1;
                    if (n == 0) value = pick_nonzero(rng, 3);
                    for (int i = 0; n > 0 && i <= n; ++i) value = lcm(value, w.at(face(s, i)));
                    const int sign = pick_nonzero(rng, 1);
                    w.emplace(s, Integer(value * mult(rng) * sign));
                }
            }
            return dawson_weight(k, w);
        }
        case WeightKind::cfw: {
            SimplexIntegers w;
            std::uniform_int_distribution<int> val(-3, 3);
            for (int n = 0; n <= k.max_dim(); ++n)
                for (const auto& s : k.basis(n)) w.emplace(s, val(rng));
            std::map<int, int> table;
            for (int x = -3; x <= 3; ++x) table[x] = pick_nonzero(rng, 3);
            IntegerMap f = [table](const Integer& x) { return Integer(table.at(x.convert_to<int>())); };
            std::bernoulli_distribution auto_c(0.7);
            if (auto_c(rng)) return cfw_weight(k, w, f);
            // lcm times a random factor keeps the entries integral.
            Integer c = 1;
            for (const auto& [x, y] : table) c = lcm(c, y);
            return cfw_weight(k, w, f, Integer(c * pick_nonzero(rng, 2)));
        }
        case WeightKind::gauge_real:
        case WeightKind::gauge_complex: {
            const bool complex = kind == WeightKind::gauge_complex;
            std::map<Simplex, WeightValue> h;
            for (int n = 0; n <= k.max_dim(); ++n)
                for (const auto& s : k.basis(n)) h.emplace(s, random_gaussian(rng, complex));
            std::vector<WeightValue> per_dim;
            for (int n = 0; n <= k.max_dim(); ++n) per_dim.push_back(random_gaussian(rng, complex));
            WeightFunction phi(k);
            for (int n = 1; n <= k.max_dim(); ++n)
                for (const auto& s : k.basis(n))
                    for (int i = 0; i <= n; ++i)
                        phi.set(s, i, per_dim[static_cast<std::size_t>(n)] * h.at(s) / h.at(face(s, i)));
            validate_weight(k, phi);
            return phi;
        }
        case WeightKind::semi_trivial: {
            SimplexSet a, b;
            std::uniform_int_distribution<int> side(0, 2);
            for (int n = 0; n <= k.max_dim(); ++n)
                for (const auto& s : k.basis(n)) {
                    const int pick = side(rng);
                    if (pick != 1) a.insert(s);
                    if (pick != 0) b.insert(s);
                }
            std::uniform_int_distribution<int> val(-3, 3);
            return semi_trivial_weight(k, a, b, [&](const Simplex&, int) { return WeightValue(val(rng)); });
        }
    }
    return identity_weight(k);
}

WeightFunction random_integer_weight(Rng& rng, const SimplicialComplex& k) {
    std::uniform_int_distribution<int> pick(0, 2);
    switch (pick(rng)) {
        case 0: return random_weight(rng, k, WeightKind::dawson);
        case 1: return random_weight(rng, k, WeightKind::cfw);
        default: return random_weight(rng, k, WeightKind::semi_trivial);
    }
}

WeightFunction random_weight(Rng& rng, const SimplicialComplex& k) {
    std::uniform_int_distribution<int> pick(0, 4);
    return random_weight(rng, k, static_cast<WeightKind>(pick(rng)));
}

IntegerMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

Integer leibniz_determinant(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r) term *= m(r, perm[r]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

ExactMatrix classical_coboundary(const SimplicialComplex& k, int n) {
    const auto lower = k.basis(n);
    const auto upper = k.basis(n + 1);
    ExactMatrix d(upper.size(), lower.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
        const auto verts = upper[r].vertices();
        for (std::size_t c = 0; c < lower.size(); ++c) {
            if (!lower[c].is_face_of(upper[r])) continue;
            // Sign (-1)^p where p is the position of the vertex missing from lower[c].
            std::size_t p = 0;
            while (p < lower[c].vertices().size() && lower[c][p] == verts[p]) ++p;
            d(r, c) = p % 2 ? -1 : 1;
        }
    }
    return d;
}

}  // namespace wsc::testing
