#include "wsc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wsc/chain.hpp"
#include "wsc/errors.hpp"

namespace wsc {

std::size_t cohomology_dim(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    const ExactMatrix delta_n = coboundary_matrix(k, phi, n);
    const ExactMatrix delta_prev = coboundary_matrix(k, phi, n - 1);
    if (n < 0 || n > k.max_dim()) return 0;
    return k.count(n) - exact_rank(delta_n) - exact_rank(delta_prev);
}

UpDown up_down_matrices(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    const ExactMatrix a_n = coboundary_matrix(k, phi, n);
    const ExactMatrix a_prev = coboundary_matrix(k, phi, n - 1);
    UpDown out{a_n.adjoint() * a_n, a_prev * a_prev.adjoint()};
    std::vector<Simplex> labels(k.basis(n).begin(), k.basis(n).end());
    out.up.set_labels(labels, labels);
    out.down.set_labels(labels, labels);
    return out;
}

ExactMatrix laplacian_matrix(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    UpDown parts = up_down_matrices(k, phi, n);
    ExactMatrix total = parts.up + parts.down;
    total.set_labels(parts.up.row_labels(), parts.up.col_labels());
    return total;
}

void InnerProductWeights::set(const Simplex& s, Rational value) {
    if (value <= 0)
        throw DomainError("inner-product weight of " + s.to_string() + " must be positive, got " +
                          value.str());
    values_.insert_or_assign(s, std::move(value));
}

Rational InnerProductWeights::weight(const Simplex& s) const {
    auto it = values_.find(s);
    return it == values_.end() ? Rational(1) : it->second;
}

std::vector<Rational> InnerProductWeights::diagonal(const SimplicialComplex& k, int n) const {
    std::vector<Rational> d;
    for (const auto& s : k.basis(n)) d.push_back(weight(s));
    return d;
}

InnerProductWeights parse_inner_weights(const SimplicialComplex& k, std::string_view text) {
    InnerProductWeights w;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto bar = line.find('|');
            if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos)
                throw InputError("expected 'sigma | value'");
            const Simplex s = parse_simplex(std::string_view(line).substr(0, bar));
            if (!k.contains(s)) throw InputError(s.to_string() + " is not in the complex");
            w.set(s, parse_rational(std::string_view(line).substr(bar + 1)));
        } catch (const Error& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return w;
}

namespace {

ExactMatrix diag_of(const std::vector<Rational>& d, bool inverse) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t j = 0; j < d.size(); ++j) m(j, j) = inverse ? Rational(1 / d[j]) : d[j];
    return m;
}

}  // namespace

WeightedLaplacian weighted_inner_laplacian(const SimplicialComplex& k, const WeightFunction& phi,
                                           const InnerProductWeights& w, int n) {
    const ExactMatrix a_n = coboundary_matrix(k, phi, n);
    const ExactMatrix a_prev = coboundary_matrix(k, phi, n - 1);
    const ExactMatrix w_n = diag_of(w.diagonal(k, n), false);
    const ExactMatrix w_n_inv = diag_of(w.diagonal(k, n), true);
    const ExactMatrix w_up = diag_of(w.diagonal(k, n + 1), false);
    const ExactMatrix w_down_inv = diag_of(w.diagonal(k, n - 1), true);

    WeightedLaplacian out;
    out.up = w_n_inv * a_n.adjoint() * w_up * a_n;
    out.down = a_prev * w_down_inv * a_prev.adjoint() * w_n;
    out.total = out.up + out.down;
    std::vector<Simplex> labels(k.basis(n).begin(), k.basis(n).end());
    out.up.set_labels(labels, labels);
    out.down.set_labels(labels, labels);
    out.total.set_labels(labels, labels);
    return out;
}

RealEigen jacobi_eigen(const Eigen::MatrixXd& input) {
    const Eigen::Index n = input.rows();
    if (input.cols() != n) throw ContractError("jacobi_eigen needs a square matrix");
    Eigen::MatrixXd a = 0.5 * (input + input.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double target = 1e-12 * a.norm();

    auto off_diagonal = [&] {
        double sum = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = 0; q < n; ++q)
                if (p != q) sum += a(p, q) * a(p, q);
        return std::sqrt(sum);
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps && off_diagonal() > target; ++sweep) {
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr - s * aqr;
                    a(q, r) = s * apr + c * aqr;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }
    if (off_diagonal() > target) throw NumericalError("Jacobi iteration did not converge");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
    RealEigen out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
        out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

namespace {

// Recovers N orthonormal complex eigenvectors from the 2N real eigenpairs of
// the embedding. Each eigenvalue cluster of size 2m spans an m-dimensional
// complex eigenspace; pivoted Gram-Schmidt picks m well-conditioned vectors.
Spectrum pair_embedding(const RealEigen& real, Eigen::Index n, double scale) {
    const Eigen::Index total = 2 * n;
    const double gap = 1e-8 * (1.0 + scale);

    Spectrum out;
    out.eigenvectors.resize(n, n);
    Eigen::Index accepted = 0;
    Eigen::Index start = 0;
    while (start < total) {
        Eigen::Index end = start + 1;
        while (end < total && real.values(end) - real.values(end - 1) <= gap) ++end;

        std::vector<Eigen::VectorXcd> candidates;
        for (Eigen::Index j = start; j < end; ++j) {
            Eigen::VectorXcd z(n);
            for (Eigen::Index r = 0; r < n; ++r) z(r) = {real.vectors(r, j), real.vectors(r + n, j)};
            candidates.push_back(z);
        }
        const std::size_t want = candidates.size() / 2;
        double mean = 0.0;
        for (Eigen::Index j = start; j < end; ++j) mean += real.values(j);
        mean /= static_cast<double>(end - start);

        std::vector<Eigen::VectorXcd> basis;
        for (std::size_t step = 0; step < want && accepted < n; ++step) {
            std::size_t best = 0;
            double best_norm = -1.0;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                const double nrm = candidates[c].norm();
                if (nrm > best_norm) {
                    best_norm = nrm;
                    best = c;
                }
            }
            Eigen::VectorXcd q = candidates[best] / best_norm;
            for (auto& c : candidates) c -= q * q.dot(c);
            out.eigenvalues.push_back(mean);
            out.eigenvectors.col(accepted++) = q;
        }
        start = end;
    }
    if (accepted != n) throw NumericalError("could not pair the real embedding's eigenvectors");
    return out;
}

}  // namespace

Spectrum spectrum(const Eigen::MatrixXcd& input) {
    const Eigen::Index n = input.rows();
    if (input.cols() != n) throw DomainError("spectrum needs a square matrix");
    const Eigen::MatrixXcd a = 0.5 * (input + input.adjoint());
    const double scale = a.norm();

    if (a.imag().isZero(0.0)) {
        const RealEigen e = jacobi_eigen(a.real());
        Spectrum out;
        out.eigenvalues.assign(e.values.data(), e.values.data() + n);
        out.eigenvectors = e.vectors.cast<std::complex<double>>();
        return out;
    }
    Eigen::MatrixXd embed(2 * n, 2 * n);
    embed.topLeftCorner(n, n) = a.real();
    embed.topRightCorner(n, n) = -a.imag();
    embed.bottomLeftCorner(n, n) = a.imag();
    embed.bottomRightCorner(n, n) = a.real();
    return pair_embedding(jacobi_eigen(embed), n, scale);
}

Spectrum spectrum(const ExactMatrix& a) {
    if (!a.is_hermitian()) throw DomainError("spectrum needs a Hermitian matrix");
    return spectrum(a.to_complex());
}

Spectrum similar_hermitian_spectrum(const ExactMatrix& m, std::span<const Rational> w) {
    if (m.rows() != m.cols() || w.size() != m.rows())
        throw ContractError("weight diagonal does not match the matrix");
    Eigen::MatrixXcd h = m.to_complex();
    for (std::size_t r = 0; r < w.size(); ++r) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            const double ratio = std::sqrt(w[r].convert_to<double>() / w[c].convert_to<double>());
            h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *= ratio;
        }
    }
    return spectrum(h);
}

double zero_tolerance(const ExactMatrix& a) { return 1e-9 * (1.0 + a.frobenius_norm()); }

ZeroMultiplicities zero_multiplicity_formulas(const SimplicialComplex& k, const WeightFunction& phi,
                                              int n) {
    ZeroMultiplicities out{0, 0, 0};
    if (n < 0) return out;
    std::vector<long long> defect;  // dim C^j - dim H^j
    for (int j = 0; j <= n; ++j)
        defect.push_back(static_cast<long long>(k.count(j)) -
                         static_cast<long long>(cohomology_dim(k, phi, j)));
    const auto cn = static_cast<long long>(k.count(n));
    auto sign = [](int e) { return e % 2 == 0 ? 1LL : -1LL; };

    long long image_prev = 0;  // dim im δ_{n-1}
    for (int j = 0; j <= n - 1; ++j) image_prev += sign(n + j - 1) * defect[static_cast<std::size_t>(j)];
    long long image_n = 0;  // dim im δ_n
    for (int j = 0; j <= n; ++j) image_n += sign(n + j) * defect[static_cast<std::size_t>(j)];

    out.down = cn - image_prev;
    out.up = cn - image_n;
    out.delta = static_cast<long long>(cohomology_dim(k, phi, n));
    return out;
}

HarmonicBasis harmonic_basis(const SimplicialComplex& k, const WeightFunction& phi, int n) {
    const ExactMatrix lap = laplacian_matrix(k, phi, n);
    const std::size_t exact = cohomology_dim(k, phi, n);
    HarmonicBasis out;
    out.dim = n;
    if (lap.rows() == 0) return out;

    const Spectrum sp = spectrum(lap);
    const double tol = zero_tolerance(lap);
    for (std::size_t j = 0; j < sp.size(); ++j)
        if (sp.eigenvalues[j] < tol) out.vectors.push_back(sp.vector(j));
    if (out.vectors.size() != exact) {
        std::ostringstream msg;
        msg << "numerical kernel of the degree-" << n << " Laplacian has dimension "
            << out.vectors.size() << " but the exact cohomology dimension is " << exact;
        throw NumericalError(msg.str());
    }
    return out;
}

}  // namespace wsc
