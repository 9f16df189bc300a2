#include "wsc/snf.hpp"

#include <algorithm>

#include "wsc/chain.hpp"
#include "wsc/errors.hpp"

namespace wsc {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(r, j) = rows[r][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_exact(const ExactMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_integral())
                throw DomainError("integer matrix required, found entry " + m(r, c).to_string());
            out(r, c) = m(r, c).to_integer();
        }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw ContractError("integer matrix product shape mismatch");
    IntegerMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += a(r, k) * b(k, c);
        }
    return p;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw ContractError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    IntegerMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

namespace {

struct Workspace {
    IntegerMatrix s;
    std::optional<IntegerMatrix> u;
    std::optional<IntegerMatrix> v;

    void swap_rows(std::size_t a, std::size_t b) {
        s.swap_rows(a, b);
        if (u) u->swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        s.swap_cols(a, b);
        if (v) v->swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        s.add_row(dst, src, f);
        if (u) u->add_row(dst, src, f);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        s.add_col(dst, src, f);
        if (v) v->add_col(dst, src, f);
    }
    void negate_row(std::size_t r) {
        s.negate_row(r);
        if (u) u->negate_row(r);
    }
};

// Least |entry| in the block [t.., t..]; ties go to the smallest (row, col).
bool find_pivot(const IntegerMatrix& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < s.rows(); ++r)
        for (std::size_t c = t; c < s.cols(); ++c) {
            if (s(r, c) == 0) continue;
            Integer mag = abs(s(r, c));
            if (!found || mag < best) {
                best = std::move(mag);
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}


// Clears row and column t around a pivot that divides the rest of the block.
// Returns false when the block [t.., t..] is already zero.
bool reduce_block(Workspace& w, std::size_t t) {
    auto& s = w.s;
    for (;;) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(s, t, pr, pc)) return false;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        bool clean = true;
        for (std::size_t r = t + 1; r < s.rows(); ++r) {
            if (s(r, t) == 0) continue;
            w.add_row(r, t, Integer(-(s(r, t) / s(t, t))));
            if (s(r, t) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < s.cols(); ++c) {
            if (s(t, c) == 0) continue;
            w.add_col(c, t, Integer(-(s(t, c) / s(t, t))));
            if (s(t, c) != 0) clean = false;
        }
        if (!clean) continue;

        // Fold a row holding a non-multiple of the pivot into row t and retry.
        std::size_t bad = 0;
        for (std::size_t r = t + 1; r < s.rows() && !bad; ++r)
            for (std::size_t c = t + 1; c < s.cols(); ++c)
                if (s(r, c) % s(t, t) != 0) {
                    bad = r;
                    break;
                }
        if (!bad) return true;
        w.add_row(t, bad, 1);
    }
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
    Workspace w{m, std::nullopt, std::nullopt};
    if (with_transforms) {
        w.u = IntegerMatrix::identity(m.rows());
        w.v = IntegerMatrix::identity(m.cols());
    }
    const std::size_t steps = std::min(m.rows(), m.cols());
    auto& s = w.s;
    for (std::size_t t = 0; t < steps; ++t) {
        if (!reduce_block(w, t)) break;
        if (s(t, t) < 0) w.negate_row(t);
    }

    SNFResult out;
    out.diagonal.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        out.diagonal.push_back(s(k, k));
        if (s(k, k) != 0) ++out.rank;
    }
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    return out;
}

SNFResult smith_normal_form(const ExactMatrix& m, bool with_transforms) {
    return smith_normal_form(IntegerMatrix::from_exact(m), with_transforms);
}

namespace {

// Calls visit(indices) for every increasing k-subset of {0..n-1}.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    for (;;) {
        visit(idx);
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
        if (j == 0) return;
        ++idx[j - 1];
        for (std::size_t q = j; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

}  // namespace

Integer gcd_minors_oracle(const IntegerMatrix& m, std::size_t k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw IndexError("minor size " + std::to_string(k) + " out of range");
    Integer g = 0;
    IntegerMatrix minor(k, k);
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(rows[a], cols[b]);
            g = gcd(g, abs(determinant(minor)));
        });
    });
    return g;
}

std::string HomologyGroup::to_string() const {
    std::string out;
    for (const auto& d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    if (free_rank > 0) {
        if (!out.empty()) out += " + ";
        out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return out.empty() ? "0" : out;
}

HomologyGroup weighted_homology(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    const ExactMatrix d_n = boundary_matrix(k, phi, n);
    const ExactMatrix d_up = boundary_matrix(k, phi, n + 1);
    if (!phi.is_integral()) throw DomainError("integral homology needs integer weights");

    HomologyGroup h;
    if (n < 0 || n > k.max_dim()) return h;
    const SNFResult lower = smith_normal_form(d_n);
    const SNFResult upper = smith_normal_form(d_up);
    h.free_rank = k.count(n) - lower.rank - upper.rank;
    for (const auto& d : upper.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

HomologyGroup ngon_homology_closed_form(const std::vector<Integer>& alphas) {
    const std::size_t n = alphas.size();
    if (n < 3) throw InputError("an n-gon needs at least 3 angle weights");

    HomologyGroup h;
    h.free_rank = 1;  // d_n = 0
    Integer previous = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Integer g = 0;
        for_each_subset(n, k, [&](const std::vector<std::size_t>& pick) {
            Integer product = 1;
            for (auto idx : pick) product *= alphas[idx];
            g = gcd(g, abs(product));
        });
        if (g == 0) {
            ++h.free_rank;
        } else {
            Integer d = g / previous;
            if (d > 1) h.torsion.push_back(d);
        }
        previous = g;
    }
    return h;
}

}  // namespace wsc
