#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsc {

using Vertex = std::uint32_t;

/// A positively oriented simplex: vertex indices in strictly ascending order.
class Simplex {
public:
    /// Throws InputError if `vertices` is empty or not strictly ascending.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const Vertex> vertices() const { return vertices_; }
    Vertex operator[](std::size_t k) const { return vertices_[k]; }

    /// True iff every vertex of this simplex is a vertex of `other`.
    bool is_face_of(const Simplex& other) const;

    std::string to_string() const;  // "(0,1,2)"

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// d_i: deletes the i-th vertex. Throws IndexError for a 0-simplex or i out of range.
Simplex face(const Simplex& sigma, int i);

/// A finite simplicial complex with the integer vertex order.
///
/// For each dimension the simplices are kept lexicographically sorted; that
/// list is the standard ordered basis of the chain group and fixes the row
/// and column order of every matrix built downstream.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// -1 for the empty complex.
    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// Standard ordered basis B_n; empty for n < 0 or n > max_dim().
    std::span<const Simplex> basis(int n) const;
    std::size_t count(int n) const { return basis(n).size(); }
    std::size_t total_size() const;

    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    /// Position of `s` in basis(s.dim()).
    std::optional<std::size_t> index_of(const Simplex& s) const;

    /// Face-closure check. Holds for every complex produced by build_complex.
    bool is_face_closed() const;

    friend SimplicialComplex build_complex(std::span<const Simplex> simplices);
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_;
    }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Closes `simplices` under faces. Re-inserting an existing simplex is a no-op.
SimplicialComplex build_complex(std::span<const Simplex> simplices);
/// Convenience overload; each tuple is validated as a Simplex.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& tuples);

/// Reads the line-oriented complex format: one simplex per line as
/// whitespace-separated ascending vertex indices; `#` starts a comment.
SimplicialComplex parse_complex(std::string_view text);

/// Parses whitespace-separated vertex indices into a simplex.
Simplex parse_simplex(std::string_view text);

}  // namespace wsc
