#include "wsc/weight.hpp"

#include <sstream>

#include "wsc/errors.hpp"

namespace wsc {

namespace {

std::string pair_name(const Simplex& sigma, int i) {
    return "(" + sigma.to_string() + ", d_" + std::to_string(i) + ")";
}

int face_position(const Simplex& sigma, const Simplex& tau) {
    if (tau.dim() != sigma.dim() - 1 || !tau.is_face_of(sigma))
        throw InputError(tau.to_string() + " is not a codimension-1 face of " + sigma.to_string());
    for (int i = 0; i <= tau.dim(); ++i)
        if (sigma[static_cast<std::size_t>(i)] != tau[static_cast<std::size_t>(i)]) return i;
    return sigma.dim();
}

}  // namespace

WeightFunction::WeightFunction(SimplicialComplex complex) : complex_(std::move(complex)) {
    for (int n = 1; n <= complex_.max_dim(); ++n)
        table_.emplace_back(complex_.count(n),
                            std::vector<std::optional<WeightValue>>(static_cast<std::size_t>(n) + 1));
}

std::optional<WeightValue>& WeightFunction::slot(const Simplex& sigma, int i) {
    return const_cast<std::optional<WeightValue>&>(std::as_const(*this).slot(sigma, i));
}

const std::optional<WeightValue>& WeightFunction::slot(const Simplex& sigma, int i) const {
    if (sigma.dim() < 1) throw IndexError("0-simplices carry no weights");
    if (i < 0 || i > sigma.dim()) throw IndexError("face index out of range for " + sigma.to_string());
    const auto col = complex_.index_of(sigma);
    if (!col) throw InputError(sigma.to_string() + " is not a simplex of the complex");
    return table_[static_cast<std::size_t>(sigma.dim() - 1)][*col][static_cast<std::size_t>(i)];
}

void WeightFunction::set(const Simplex& sigma, int i, WeightValue value) {
    slot(sigma, i) = std::move(value);
    validated_ = false;
}

void WeightFunction::set(const Simplex& sigma, const Simplex& tau, WeightValue value) {
    set(sigma, face_position(sigma, tau), std::move(value));
}

bool WeightFunction::has(const Simplex& sigma, int i) const {
    return slot(sigma, i).has_value();
}

const WeightValue& WeightFunction::at(const Simplex& sigma, int i) const {
    const auto& v = slot(sigma, i);
    if (!v) throw IncompleteWeightError("weight missing for " + pair_name(sigma, i));
    return *v;
}

const WeightValue& WeightFunction::at(int n, std::size_t col, int i) const {
    const auto& v = table_.at(static_cast<std::size_t>(n - 1)).at(col).at(static_cast<std::size_t>(i));
    if (!v) throw IncompleteWeightError("weight missing for " + pair_name(complex_.basis(n)[col], i));
    return *v;
}

std::optional<std::pair<Simplex, int>> WeightFunction::first_missing() const {
    for (std::size_t d = 0; d < table_.size(); ++d) {
        const int n = static_cast<int>(d) + 1;
        for (std::size_t col = 0; col < table_[d].size(); ++col)
            for (std::size_t i = 0; i < table_[d][col].size(); ++i)
                if (!table_[d][col][i])
                    return std::pair{complex_.basis(n)[col], static_cast<int>(i)};
    }
    return std::nullopt;
}

bool WeightFunction::is_integral() const {
    for (const auto& layer : table_)
        for (const auto& row : layer)
            for (const auto& v : row)
                if (v && !v->is_integral()) return false;
    return true;
}

bool WeightFunction::is_real() const {
    for (const auto& layer : table_)
        for (const auto& row : layer)
            for (const auto& v : row)
                if (v && !v->is_real()) return false;
    return true;
}

ValidationReport validate_weight(const SimplicialComplex& k, WeightFunction& phi) {
    if (!(phi.complex() == k)) throw ContractError("weight function is defined on a different complex");
    if (auto missing = phi.first_missing())
        throw IncompleteWeightError("weight missing for " + pair_name(missing->first, missing->second));

    // With j < i, d_j d_i σ = d_{i-1} d_j σ: the vertex removed second from d_jσ sits at i-1.
    ValidationReport report;
    for (int n = 2; n <= k.max_dim(); ++n) {
        for (const auto& sigma : k.basis(n)) {
            for (int i = 1; i <= n; ++i) {
                const Simplex di = face(sigma, i);
                for (int j = 0; j < i; ++j) {
                    const Simplex dj = face(sigma, j);
                    WeightValue lhs = phi.at(sigma, i) * phi.at(di, j);
                    WeightValue rhs = phi.at(sigma, j) * phi.at(dj, i - 1);
                    if (!(lhs == rhs))
                        report.violations.push_back({sigma, i, j, std::move(lhs), std::move(rhs)});
                }
            }
        }
    }
    phi.validated_ = report.ok();
    return report;
}

namespace {

WeightFunction validated_or_throw(const SimplicialComplex& k, WeightFunction phi, const char* who) {
    if (!validate_weight(k, phi).ok())
        throw ConstructionError(std::string(who) + " produced an invalid weight function");
    return phi;
}

}  // namespace

WeightFunction constant_weight(const SimplicialComplex& k, const WeightValue& value) {
    WeightFunction phi(k);
    for (int n = 1; n <= k.max_dim(); ++n)
        for (const auto& s : k.basis(n))
            for (int i = 0; i <= n; ++i) phi.set(s, i, value);
    return validated_or_throw(k, std::move(phi), "constant_weight");
}

WeightFunction identity_weight(const SimplicialComplex& k) { return constant_weight(k, 1); }

WeightFunction zero_weight(const SimplicialComplex& k) { return constant_weight(k, 0); }

WeightFunction semi_trivial_weight(const SimplicialComplex& k, const SimplexSet& a,
                                   const SimplexSet& b, const FaceWeightFn& values) {
    for (int n = 0; n <= k.max_dim(); ++n)
        for (const auto& s : k.basis(n))
            if (!a.contains(s) && !b.contains(s))
                throw ConstructionError("A and B do not cover " + s.to_string());

    WeightFunction phi(k);
    for (int n = 1; n <= k.max_dim(); ++n) {
        for (const auto& s : k.basis(n)) {
            for (int i = 0; i <= n; ++i) {
                if (a.contains(s) || b.contains(face(s, i)))
                    phi.set(s, i, 0);
                else
                    phi.set(s, i, values(s, i));
            }
        }
    }
    return validated_or_throw(k, std::move(phi), "semi_trivial_weight");
}

namespace {

const Integer& lookup(const SimplexIntegers& w, const Simplex& s) {
    auto it = w.find(s);
    if (it == w.end()) throw ConstructionError("no simplex weight given for " + s.to_string());
    return it->second;
}

}  // namespace

WeightFunction dawson_weight(const SimplicialComplex& k, const SimplexIntegers& w) {
    for (int n = 0; n <= k.max_dim(); ++n)
        for (const auto& s : k.basis(n))
            if (lookup(w, s) == 0) throw ConstructionError("w" + s.to_string() + " is zero");

    WeightFunction phi(k);
    for (int n = 1; n <= k.max_dim(); ++n) {
        for (const auto& s : k.basis(n)) {
            const Integer& top = lookup(w, s);
            for (int i = 0; i <= n; ++i) {
                const Simplex f = face(s, i);
                const Integer& bottom = lookup(w, f);
                if (top % bottom != 0)
                    throw ConstructionError("divisibility fails: w" + f.to_string() + " = " +
                                            bottom.str() + " does not divide w" + s.to_string() +
                                            " = " + top.str());
                phi.set(s, i, Integer(top / bottom));
            }
        }
    }
    return validated_or_throw(k, std::move(phi), "dawson_weight");
}

WeightFunction cfw_weight(const SimplicialComplex& k, const SimplexIntegers& w, const IntegerMap& f,
                          std::optional<Integer> c) {
    std::map<Simplex, Integer> fw;
    Integer common = 1;
    for (int n = 0; n <= k.max_dim(); ++n) {
        for (const auto& s : k.basis(n)) {
            const Integer& ws = lookup(w, s);
            Integer value = f(ws);
            if (value == 0)
                throw ConstructionError("f vanishes at w" + s.to_string() + " = " + ws.str());
            common = lcm(common, value);
            fw.emplace(s, std::move(value));
        }
    }
    const Integer scale = c.value_or(common);

    WeightFunction phi(k);
    for (int n = 1; n <= k.max_dim(); ++n)
        for (const auto& s : k.basis(n))
            for (int i = 0; i <= n; ++i)
                phi.set(s, i, Rational(scale * fw.at(s), fw.at(face(s, i))));
    return validated_or_throw(k, std::move(phi), "cfw_weight");
}

namespace {

std::vector<std::string_view> split_bars(std::string_view line) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto bar = line.find('|', start);
        parts.push_back(line.substr(start, bar - start));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return parts;
}

}  // namespace

ParsedWeights parse_weights(const SimplicialComplex& k, std::string_view text,
                            const MissingPolicy& policy) {
    ParsedWeights out{WeightFunction(k), {}};
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        try {
            const auto parts = split_bars(line);
            if (parts.size() != 3) throw InputError("expected 'sigma | tau | value'");
            const Simplex sigma = parse_simplex(parts[0]);
            const Simplex tau = parse_simplex(parts[1]);
            if (!k.contains(sigma)) throw InputError(sigma.to_string() + " is not in the complex");
            const int i = face_position(sigma, tau);
            if (out.weights.has(sigma, i))
                throw InputError("duplicate entry for " + pair_name(sigma, i));
            out.weights.set(sigma, i, WeightValue::parse(parts[2]));
        } catch (const Error& e) {
            throw InputError(where + e.what());
        }
    }
    while (auto missing = out.weights.first_missing()) {
        const std::string name = pair_name(missing->first, missing->second);
        if (policy.strict) throw IncompleteWeightError("weight missing for " + name);
        out.warnings.push_back("weight missing for " + name + ", using " + policy.fill.to_string());
        out.weights.set(missing->first, missing->second, policy.fill);
    }
    return out;
}

std::string format_weights(const WeightFunction& phi) {
    std::string out;
    const auto& k = phi.complex();
    for (int n = 1; n <= k.max_dim(); ++n) {
        for (const auto& s : k.basis(n)) {
            for (int i = 0; i <= n; ++i) {
                if (!phi.has(s, i)) continue;
                const Simplex f = face(s, i);
                auto verts = [](const Simplex& x) {
                    std::string t;
                    for (auto v : x.vertices()) t += (t.empty() ? "" : " ") + std::to_string(v);
                    return t;
                };
                out += verts(s) + " | " + verts(f) + " | " + phi.at(s, i).to_string() + "\n";
            }
        }
    }
    return out;
}

}  // namespace wsc
