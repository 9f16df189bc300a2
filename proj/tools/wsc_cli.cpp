#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsc/apps.hpp"
#include "wsc/chain.hpp"
#include "wsc/errors.hpp"
#include "wsc/snf.hpp"
#include "wsc/spectral.hpp"

using namespace wsc;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

/// Raised for a weight table that fails validation; maps to exit status 1.
struct InvalidWeights {
    ValidationReport report;
};

struct Config {
    std::string complex_path;
    std::string weights_path;
    std::string inner_weights_path;
    std::string matrix_path;
    std::string fill = "one";
    std::string field;
    std::string part = "total";
    std::string alphas;
    std::string ffl_type;
    std::string classify_path;
    std::string activation = "1";
    std::string repression = "2";
    int n = 0;
    bool strict = false;
    bool transforms = false;
    double tol = 0.0;  // 0 → the default zero tolerance of each matrix
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// -- JSON encoding ------------------------------------------------------------

Json simplex_json(const Simplex& s) { return Json(std::vector<Vertex>(s.vertices().begin(), s.vertices().end())); }

Json labels_json(const std::vector<Simplex>& labels) {
    Json out = Json::array();
    for (const auto& s : labels) out.push_back(simplex_json(s));
    return out;
}

Json entries_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_json(const ExactMatrix& m) {
    return Json{{"rows", labels_json(m.row_labels())}, {"cols", labels_json(m.col_labels())},
                {"entries", entries_json(m)}};
}

Json integer_json(const Integer& z) {
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return Json(z.convert_to<long long>());
    return Json(z.str());
}

Json integer_matrix_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// 12 significant digits; integral results are written without a fraction.
Json decimal(double x, double zero_below = 0.0) {
    if (std::abs(x) <= zero_below) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double rounded = std::strtod(buf, nullptr);
    if (rounded == 0.0) rounded = 0.0;  // drop the sign of -0
    if (std::abs(rounded) < 1e15 && rounded == std::floor(rounded)) return Json(static_cast<long long>(rounded));
    return Json(rounded);
}

Json vector_json(const Eigen::VectorXcd& v, bool real) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (real) out.push_back(decimal(v(i).real(), 1e-12));
        else out.push_back(Json::array({decimal(v(i).real(), 1e-12), decimal(v(i).imag(), 1e-12)}));
    }
    return out;
}

Json group_json(int n, const HomologyGroup& h) {
    Json torsion = Json::array();
    for (const auto& d : h.torsion) torsion.push_back(integer_json(d));
    return Json{{"dimension", n}, {"free_rank", h.free_rank}, {"torsion", torsion}, {"group", h.to_string()}};
}

// -- Inputs ----------------------------------------------------------------------

struct Loaded {
    SimplicialComplex complex;
    WeightFunction weights;
    bool real = true;  // eigenvectors printed as reals
};

SimplicialComplex load_complex(const Config& cfg) {
    if (cfg.complex_path.empty()) throw InputError("--complex is required");
    return parse_complex(read_file(cfg.complex_path));
}

/// Loads and validates; invalid tables raise InvalidWeights.
Loaded load(const Config& cfg) {
    auto k = load_complex(cfg);
    const WeightValue fill = cfg.fill == "zero" ? WeightValue(0) : WeightValue(1);
    WeightFunction phi(k);
    if (cfg.weights_path.empty()) {
        phi = constant_weight(k, fill);
    } else {
        auto parsed = parse_weights(k, read_file(cfg.weights_path), MissingPolicy{cfg.strict, fill});
        for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
        phi = std::move(parsed.weights);
        auto report = validate_weight(k, phi);
        if (!report.ok()) throw InvalidWeights{std::move(report)};
    }
    Loaded out{std::move(k), std::move(phi), true};
    if (cfg.field == "real") {
        if (!out.weights.is_real()) throw InputError("--field real given but the weights are complex");
    } else if (cfg.field == "complex" || !out.weights.is_real()) {
        out.real = false;
    }
    return out;
}

std::vector<std::vector<GaussianRational>> parse_matrix_rows(std::string_view text) {
    std::vector<std::vector<GaussianRational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<GaussianRational> row;
        for (std::string tok; fields >> tok;) row.push_back(GaussianRational::parse(tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) throw InputError("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("empty matrix");
    return rows;
}

void require_nonnegative(int n) {
    if (n < 0) throw InputError("-n must be non-negative");
}

// -- Subcommands ------------------------------------------------------------------

Json cmd_validate(const Config& cfg) {
    auto k = load_complex(cfg);
    if (cfg.weights_path.empty()) throw InputError("--weights is required");
    const WeightValue fill = cfg.fill == "zero" ? WeightValue(0) : WeightValue(1);
    auto parsed = parse_weights(k, read_file(cfg.weights_path), MissingPolicy{cfg.strict, fill});
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
    const auto report = validate_weight(k, parsed.weights);
    if (report.ok()) return Json{{"valid", true}};
    throw InvalidWeights{report};
}

Json violations_json(const ValidationReport& report) {
    Json list = Json::array();
    for (const auto& v : report.violations)
        list.push_back(Json{{"sigma", simplex_json(v.sigma)},
                            {"i", v.i},
                            {"j", v.j},
                            {"lhs", v.lhs.to_string()},
                            {"rhs", v.rhs.to_string()}});
    return Json{{"valid", false}, {"violations", list}};
}

Json cmd_boundary(const Config& cfg, bool co) {
    const auto in = load(cfg);
    const auto m = co ? coboundary_matrix(in.complex, in.weights, cfg.n) : boundary_matrix(in.complex, in.weights, cfg.n);
    Json out{{"dimension", cfg.n}};
    out.update(matrix_json(m));
    return out;
}

Json cmd_homology(const Config& cfg) {
    require_nonnegative(cfg.n);
    const auto in = load(cfg);
    return group_json(cfg.n, weighted_homology(in.complex, in.weights, cfg.n));
}

Json cmd_cohomology_dim(const Config& cfg) {
    require_nonnegative(cfg.n);
    const auto in = load(cfg);
    return Json{{"dimension", cfg.n}, {"cohomology_dim", cohomology_dim(in.complex, in.weights, cfg.n)}};
}

Json snf_json(const SNFResult& snf) {
    Json diag = Json::array();
    for (const auto& d : snf.diagonal) diag.push_back(integer_json(d));
    Json out{{"diagonal", diag}, {"rank", snf.rank}};
    if (snf.u) out["U"] = integer_matrix_json(*snf.u);
    if (snf.v) out["V"] = integer_matrix_json(*snf.v);
    return out;
}

Json cmd_snf(const Config& cfg) {
    if (!cfg.matrix_path.empty()) {
        const auto m = ExactMatrix::from_rows(parse_matrix_rows(read_file(cfg.matrix_path)));
        return snf_json(smith_normal_form(m, cfg.transforms));
    }
    const auto in = load(cfg);
    Json out{{"dimension", cfg.n}};
    out.update(snf_json(smith_normal_form(boundary_matrix(in.complex, in.weights, cfg.n), cfg.transforms)));
    return out;
}

struct Parts {
    ExactMatrix up, down, total;
    std::vector<Rational> w;  // empty for the standard inner product
};

Parts laplacian_parts(const Config& cfg, const Loaded& in) {
    if (!cfg.inner_weights_path.empty()) {
        const auto w = parse_inner_weights(in.complex, read_file(cfg.inner_weights_path));
        auto lap = weighted_inner_laplacian(in.complex, in.weights, w, cfg.n);
        return {std::move(lap.up), std::move(lap.down), std::move(lap.total), w.diagonal(in.complex, cfg.n)};
    }
    auto ud = up_down_matrices(in.complex, in.weights, cfg.n);
    auto total = ud.up + ud.down;
    return {std::move(ud.up), std::move(ud.down), std::move(total), {}};
}

const ExactMatrix& select_part(const Config& cfg, const Parts& p) {
    if (cfg.part == "up") return p.up;
    if (cfg.part == "down") return p.down;
    return p.total;
}

Json cmd_laplacian(const Config& cfg) {
    require_nonnegative(cfg.n);
    const auto in = load(cfg);
    const auto p = laplacian_parts(cfg, in);
    const auto basis = in.complex.basis(cfg.n);
    return Json{{"dimension", cfg.n},
                {"labels", labels_json(std::vector<Simplex>(basis.begin(), basis.end()))},
                {"inner_product", p.w.empty() ? "standard" : "weighted"},
                {"up", entries_json(p.up)},
                {"down", entries_json(p.down)},
                {"total", entries_json(p.total)}};
}

Json spectrum_json(const Spectrum& s, double tol, bool real) {
    Json values = Json::array(), vectors = Json::array();
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s.eigenvalues[i]) <= tol) ++zeros;
        values.push_back(decimal(s.eigenvalues[i], tol));
        vectors.push_back(vector_json(s.vector(i), real));
    }
    return Json{{"eigenvalues", values}, {"eigenvectors", vectors}, {"zero_count", zeros}, {"tolerance", decimal(tol)}};
}

Json cmd_spectrum(const Config& cfg) {
    require_nonnegative(cfg.n);
    const auto in = load(cfg);
    const auto p = laplacian_parts(cfg, in);
    const auto& m = select_part(cfg, p);
    const double tol = cfg.tol > 0 ? cfg.tol : zero_tolerance(m);
    Spectrum s;
    if (p.w.empty()) {
        s = spectrum(m);
    } else {
        s = similar_hermitian_spectrum(m, p.w);
        // Eigenvectors of M itself: W^{-1/2} u, unit length in the weighted norm.
        for (std::size_t r = 0; r < p.w.size(); ++r)
            s.eigenvectors.row(static_cast<Eigen::Index>(r)) /= std::sqrt(p.w[r].convert_to<double>());
    }
    Json out{{"dimension", cfg.n}, {"part", cfg.part}};
    out.update(spectrum_json(s, tol, in.real));
    return out;
}

Json cmd_harmonic(const Config& cfg) {
    require_nonnegative(cfg.n);
    const auto in = load(cfg);
    const auto h = harmonic_basis(in.complex, in.weights, cfg.n);
    Json vectors = Json::array();
    for (const auto& v : h.vectors) vectors.push_back(vector_json(v, in.real));
    return Json{{"dimension", cfg.n},
                {"count", h.vectors.size()},
                {"cohomology_dim", cohomology_dim(in.complex, in.weights, cfg.n)},
                {"vectors", vectors}};
}

Json cmd_multiplicities(const Config& cfg) {
    require_nonnegative(cfg.n);
    const auto in = load(cfg);
    const auto m = zero_multiplicity_formulas(in.complex, in.weights, cfg.n);
    const auto ud = up_down_matrices(in.complex, in.weights, cfg.n);
    const auto lap = ud.up + ud.down;
    const auto numeric = [&](const ExactMatrix& a) {
        const double tol = cfg.tol > 0 ? cfg.tol : zero_tolerance(a);
        std::size_t count = 0;
        for (double e : spectrum(a).eigenvalues)
            if (std::abs(e) <= tol) ++count;
        return count;
    };
    return Json{{"dimension", cfg.n},
                {"formula", {{"down", m.down}, {"up", m.up}, {"delta", m.delta}}},
                {"kernel", {{"down", kernel_dim(ud.down)}, {"up", kernel_dim(ud.up)}, {"delta", kernel_dim(lap)}}},
                {"numeric", {{"down", numeric(ud.down)}, {"up", numeric(ud.up)}, {"delta", numeric(lap)}}}};
}

Json cmd_ngon(const Config& cfg) {
    std::vector<Integer> alphas;
    std::stringstream ss(cfg.alphas);
    for (std::string tok; std::getline(ss, tok, ',');) {
        const auto v = GaussianRational::parse(tok);
        if (!v.is_integral()) throw InputError("angle weights must be integers, got " + tok);
        alphas.push_back(v.to_integer());
    }
    const auto closed = ngon_homology_closed_form(alphas);
    const auto g = make_ngon(std::vector<WeightValue>(alphas.begin(), alphas.end()));
    const auto pipeline = weighted_homology(g.complex, g.weights, 0);
    Json alpha_json = Json::array();
    for (const auto& a : alphas) alpha_json.push_back(integer_json(a));
    Json out{{"alphas", alpha_json}};
    out.update(group_json(0, closed));
    out["pipeline_agrees"] = closed == pipeline;
    return out;
}

Json signature_json(const FFLSignature& sig) {
    Json spaces = Json::array();
    for (const auto& e : sig.eigenspaces) {
        Json proj = Json::array();
        for (Eigen::Index r = 0; r < e.projector.rows(); ++r) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < e.projector.cols(); ++c) row.push_back(decimal(e.projector(r, c), 1e-12));
            proj.push_back(std::move(row));
        }
        spaces.push_back(Json{{"eigenvalue", decimal(e.eigenvalue)}, {"projector", proj}});
    }
    return Json{{"eigenvalues", Json::array({0, decimal(sig.lambda2), decimal(sig.lambda3)})}, {"eigenspaces", spaces}};
}

Json cmd_ffl(const Config& cfg) {
    if (!cfg.classify_path.empty()) {
        const auto m = ExactMatrix::from_rows(parse_matrix_rows(read_file(cfg.classify_path)));
        if (m.rows() != 3 || m.cols() != 3) throw InputError("expected a 3x3 Laplacian");
        const auto sig = ffl_signature(m);
        Json out = signature_json(sig);
        out["classification"] = classify_ffl(sig).name();
        return out;
    }
    if (cfg.ffl_type.empty()) throw InputError("ffl needs --type or --classify");
    const auto spec = parse_ffl_type(cfg.ffl_type);
    const ArrowEncoding enc{parse_rational(cfg.activation), parse_rational(cfg.repression)};
    const auto g = make_ffl(spec, enc);
    const auto sig = ffl_signature(g.complex, g.weights, enc);
    Json out{{"type", spec.name()},
             {"a", rational_to_string(enc(spec.xy))},
             {"b", rational_to_string(enc(spec.yz))},
             {"c", rational_to_string(enc(spec.xz))}};
    out.update(signature_json(sig));
    out["classification"] = enc.is_default() ? Json(classify_ffl(sig).name()) : Json(nullptr);
    return out;
}

// -- Option wiring ---------------------------------------------------------------

void add_input_options(CLI::App* sub, Config& cfg) {
    sub->add_option("--complex", cfg.complex_path, "complex file")->check(CLI::ExistingFile);
    sub->add_option("--weights", cfg.weights_path, "weight table file")->check(CLI::ExistingFile);
    sub->add_flag("--strict", cfg.strict, "reject weight tables with missing entries");
    sub->add_option("--default", cfg.fill, "fill value for missing weights")
        ->check(CLI::IsMember({"one", "zero"}));
}

void add_dimension(CLI::App* sub, Config& cfg) { sub->add_option("-n", cfg.n, "dimension"); }

void add_spectral_options(CLI::App* sub, Config& cfg) {
    sub->add_option("--inner-weights", cfg.inner_weights_path, "inner product weights file")
        ->check(CLI::ExistingFile);
    sub->add_option("--field", cfg.field, "coefficient field")->check(CLI::IsMember({"real", "complex"}));
    sub->add_option("--tol", cfg.tol, "zero tolerance (default 1e-9*(1+|A|_F))")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted simplicial homology, cohomology and Laplacian spectra"};
    app.require_subcommand(1);
    Config cfg;

    auto* validate = app.add_subcommand("validate", "check a weight table");
    add_input_options(validate, cfg);

    auto* boundary = app.add_subcommand("boundary", "weighted boundary matrix");
    auto* coboundary = app.add_subcommand("coboundary", "weighted coboundary matrix");
    auto* homology = app.add_subcommand("homology", "integral homology group");
    auto* cohom = app.add_subcommand("cohomology-dim", "cohomology dimension over the field");
    auto* snf = app.add_subcommand("snf", "Smith normal form of a boundary matrix");
    auto* laplacian = app.add_subcommand("laplacian", "Laplacian matrices");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvalues and eigenvectors");
    auto* harmonic = app.add_subcommand("harmonic", "harmonic cochain basis");
    auto* mult = app.add_subcommand("multiplicities", "zero-eigenvalue multiplicities");
    for (auto* sub : {boundary, coboundary, homology, cohom, snf, laplacian, spectrum_cmd, harmonic, mult}) {
        add_input_options(sub, cfg);
        add_dimension(sub, cfg);
    }
    for (auto* sub : {laplacian, spectrum_cmd, harmonic, mult}) add_spectral_options(sub, cfg);
    for (auto* sub : {boundary, coboundary, homology, cohom, snf})
        sub->add_option("--field", cfg.field)->check(CLI::IsMember({"real", "complex"}));
    snf->add_flag("--transforms", cfg.transforms, "include unimodular U, V with U*M*V = S");
    snf->add_option("--matrix", cfg.matrix_path, "integer matrix file instead of a boundary")
        ->check(CLI::ExistingFile);
    spectrum_cmd->add_option("--part", cfg.part, "which operator")->check(CLI::IsMember({"total", "up", "down"}));

    auto* ngon = app.add_subcommand("ngon", "homology of a weighted n-gon");
    ngon->add_option("--alphas", cfg.alphas, "comma-separated angle weights")->required();

    auto* ffl = app.add_subcommand("ffl", "feedforward loop signatures");
    auto* type_opt = ffl->add_option("--type", cfg.ffl_type, "coherent1..4 or incoherent1..4");
    auto* classify_opt = ffl->add_option("--classify", cfg.classify_path, "3x3 Laplacian file")
                             ->check(CLI::ExistingFile);
    type_opt->excludes(classify_opt);
    ffl->add_option("--activation", cfg.activation, "weight for activation arrows");
    ffl->add_option("--repression", cfg.repression, "weight for repression arrows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Json out;
        if (*validate) out = cmd_validate(cfg);
        else if (*boundary) out = cmd_boundary(cfg, false);
        else if (*coboundary) out = cmd_boundary(cfg, true);
        else if (*homology) out = cmd_homology(cfg);
        else if (*cohom) out = cmd_cohomology_dim(cfg);
        else if (*snf) out = cmd_snf(cfg);
        else if (*laplacian) out = cmd_laplacian(cfg);
        else if (*spectrum_cmd) out = cmd_spectrum(cfg);
        else if (*harmonic) out = cmd_harmonic(cfg);
        else if (*mult) out = cmd_multiplicities(cfg);
        else if (*ngon) out = cmd_ngon(cfg);
        else if (*ffl) out = cmd_ffl(cfg);
        std::cout << out.dump() << '\n';
        return kExitOk;
    } catch (const InvalidWeights& e) {
        if (*validate) std::cout << violations_json(e.report).dump() << '\n';
        const auto& v = e.report.violations.front();
        std::cerr << "error: weight condition fails at " << e.report.violations.size() << " place(s), first at "
                  << v.sigma.to_string() << " i=" << v.i << " j=" << v.j << ": " << v.lhs.to_string()
                  << " != " << v.rhs.to_string() << '\n';
        return kExitInvalid;
    } catch (const ClassificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
