#include "wsc/complex.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "wsc/errors.hpp"

namespace wsc {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InputError("simplex must have at least one vertex");
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        if (vertices_[k - 1] >= vertices_[k])
            throw InputError("simplex vertices must be strictly ascending: " + to_string());
    }
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

std::string Simplex::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(vertices_[k]);
    }
    return out + ")";
}

Simplex face(const Simplex& sigma, int i) {
    if (sigma.dim() == 0) throw IndexError("face of a 0-simplex is undefined");
    if (i < 0 || i > sigma.dim())
        throw IndexError("face index " + std::to_string(i) + " out of range for " +
                         sigma.to_string());
    std::vector<Vertex> v(sigma.vertices().begin(), sigma.vertices().end());
    v.erase(v.begin() + i);
    return Simplex(std::move(v));
}

std::span<const Simplex> SimplicialComplex::basis(int n) const {
    if (n < 0 || n > max_dim()) return {};
    return by_dim_[static_cast<std::size_t>(n)];
}

std::size_t SimplicialComplex::total_size() const {
    std::size_t total = 0;
    for (const auto& layer : by_dim_) total += layer.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const int d = s.dim();
    if (d > max_dim()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    if (auto it = idx.find(s); it != idx.end()) return it->second;
    return std::nullopt;
}

bool SimplicialComplex::is_face_closed() const {
    for (int n = 1; n <= max_dim(); ++n)
        for (const auto& s : basis(n))
            for (int i = 0; i <= n; ++i)
                if (!contains(face(s, i))) return false;
    return true;
}

SimplicialComplex build_complex(std::span<const Simplex> simplices) {
    std::vector<std::set<Simplex>> layers;
    for (const auto& s : simplices) {
        const auto d = static_cast<std::size_t>(s.dim());
        if (layers.size() <= d) layers.resize(d + 1);
        layers[d].insert(s);
    }
    for (std::size_t d = layers.size(); d-- > 1;)
        for (const auto& s : layers[d])
            for (int i = 0; i <= static_cast<int>(d); ++i) layers[d - 1].insert(face(s, i));

    SimplicialComplex k;
    k.by_dim_.reserve(layers.size());
    k.index_.resize(layers.size());
    for (std::size_t d = 0; d < layers.size(); ++d) {
        k.by_dim_.emplace_back(layers[d].begin(), layers[d].end());
        for (std::size_t j = 0; j < k.by_dim_[d].size(); ++j) k.index_[d].emplace(k.by_dim_[d][j], j);
    }
    return k;
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& tuples) {
    std::vector<Simplex> simplices;
    simplices.reserve(tuples.size());
    for (const auto& t : tuples) simplices.emplace_back(t);
    return build_complex(simplices);
}

Simplex parse_simplex(std::string_view text) {
    std::vector<Vertex> v;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
        if (pos >= text.size()) break;
        Vertex x{};
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), x);
        const char* end = ptr;
        if (ec != std::errc() ||
            (end != text.data() + text.size() && *end != ' ' && *end != '\t' && *end != '\r'))
            throw InputError("malformed vertex list '" + std::string(text) + "'");
        v.push_back(x);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return Simplex(std::move(v));
}

SimplicialComplex parse_complex(std::string_view text) {
    std::vector<Simplex> simplices;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            simplices.push_back(parse_simplex(line));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return build_complex(simplices);
}

}  // namespace wsc
