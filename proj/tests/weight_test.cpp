#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "wsc/chain.hpp"
#include "wsc/errors.hpp"
#include "wsc/weight.hpp"

using namespace wsc;

namespace {

bool all_entries(const WeightFunction& phi, const WeightValue& v) {
    const auto& k = phi.complex();
    for (int n = 1; n <= k.max_dim(); ++n)
        for (const auto& s : k.basis(n))
            for (int i = 0; i <= n; ++i)
                if (!(phi.at(s, i) == v)) return false;
    return true;
}

}  // namespace

TEST_CASE("the nontrivial 2-simplex table is a weight function") {
    const auto k = testing::full_triangle();
    auto phi = testing::nontrivial_triangle_weights(k);
    CHECK_FALSE(phi.validated());
    CHECK(validate_weight(k, phi).ok());
    CHECK(phi.validated());
}

TEST_CASE("validation reports each violated triple with both sides") {
    const auto k = testing::full_triangle();
    auto phi = testing::nontrivial_triangle_weights(k);
    const Simplex s{0, 1, 2};
    phi.set(face(s, 1), face(face(s, 2), 1), 5);  // φ(d1σ, d1d2σ): 2 -> 5
    const auto report = validate_weight(k, phi);
    REQUIRE(report.violations.size() == 1);
    const auto& v = report.violations.front();
    CHECK(v.sigma == s);
    CHECK(v.i == 2);
    CHECK(v.j == 1);
    CHECK(v.lhs == WeightValue(6));
    CHECK(v.rhs == WeightValue(15));
    CHECK_FALSE(phi.validated());
}

TEST_CASE("every reported violation really fails the identity") {
    testing::Rng rng(5);
    std::uniform_int_distribution<int> val(-2, 2);
    int seen = 0;
    for (int t = 0; t < 40; ++t) {
        const auto k = testing::random_complex(rng, 3);
        WeightFunction phi(k);
        for (int n = 1; n <= k.max_dim(); ++n)
            for (const auto& s : k.basis(n))
                for (int i = 0; i <= n; ++i) phi.set(s, i, val(rng));
        for (const auto& v : validate_weight(k, phi).violations) {
            ++seen;
            const Simplex di = face(v.sigma, v.i), dj = face(v.sigma, v.j);
            const auto lhs = phi.at(v.sigma, v.i) * phi.at(di, v.j);
            const auto rhs = phi.at(v.sigma, v.j) * phi.at(dj, v.i - 1);
            CHECK(lhs == v.lhs);
            CHECK(rhs == v.rhs);
            CHECK_FALSE(lhs == rhs);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("validation of an incomplete table names the missing pair") {
    const auto k = testing::hollow_triangle();
    WeightFunction phi(k);
    phi.set(Simplex{0, 1}, 0, 1);
    CHECK_THROWS_AS(validate_weight(k, phi), IncompleteWeightError);
    REQUIRE(phi.first_missing().has_value());
    CHECK(phi.first_missing()->first == Simplex{0, 1});
    CHECK(phi.first_missing()->second == 1);
    CHECK_THROWS_AS(phi.at(Simplex{0, 2}, 0), IncompleteWeightError);
}

TEST_CASE("validation against another complex is a contract error") {
    auto phi = identity_weight(testing::hollow_triangle());
    CHECK_THROWS_AS(validate_weight(testing::full_triangle(), phi), ContractError);
}

TEST_CASE("set by face simplex and by index agree; bad faces rejected") {
    WeightFunction phi(testing::full_triangle());
    phi.set(Simplex{0, 1, 2}, Simplex{0, 2}, 9);
    CHECK(phi.at(Simplex{0, 1, 2}, 1) == WeightValue(9));
    CHECK_THROWS(phi.set(Simplex{0, 1, 2}, Simplex{0}, 1));
    CHECK_THROWS(phi.set(Simplex{0, 1, 3}, 0, 1));
    CHECK_THROWS_AS(phi.set(Simplex{0, 1}, 2, 1), IndexError);
}

TEST_CASE("a later set drops the validated flag") {
    const auto k = testing::edge();
    auto phi = identity_weight(k);
    CHECK(phi.validated());
    phi.set(Simplex{0, 1}, 0, 3);
    CHECK_FALSE(phi.validated());
}

TEST_CASE("identity weight") {
    const auto k = testing::hollow_triangle();
    auto phi = identity_weight(k);
    CHECK(phi.validated());
    CHECK(all_entries(phi, 1));
    CHECK(validate_weight(k, phi).ok());
    CHECK(boundary_matrix(k, phi, 1) == testing::classical_coboundary(k, 0).transpose());
}

TEST_CASE("zero weight") {
    const auto k = testing::full_triangle();
    auto phi = zero_weight(k);
    CHECK(all_entries(phi, 0));
    CHECK(boundary_matrix(k, phi, 1).is_zero());
    CHECK(boundary_matrix(k, phi, 2).is_zero());
    CHECK(validate_weight(k, phi).ok());
}

TEST_CASE("semi-trivial weights") {
    const auto tri = testing::full_triangle();
    SimplexSet all;
    for (int n = 0; n <= 2; ++n)
        for (const auto& s : tri.basis(n)) all.insert(s);
    const auto seven = [](const Simplex&, int) { return WeightValue(7); };

    SECTION("A = K, B empty gives the zero weight") {
        CHECK(all_entries(semi_trivial_weight(tri, all, {}, seven), 0));
    }
    SECTION("edges in A, vertices in B on the hollow triangle") {
        const auto k = testing::hollow_triangle();
        const SimplexSet a{Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}};
        const SimplexSet b{Simplex{0}, Simplex{1}, Simplex{2}};
        auto phi = semi_trivial_weight(k, a, b, seven);
        CHECK(all_entries(phi, 0));
        CHECK(phi.validated());
    }
    SECTION("triangle and vertices in A, edges in B") {
        const SimplexSet a{Simplex{0, 1, 2}, Simplex{0}, Simplex{1}, Simplex{2}};
        const SimplexSet b{Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}};
        auto phi = semi_trivial_weight(tri, a, b, seven);
        // Edges are outside A and their faces outside B, so they keep a ≡ 7.
        CHECK(phi.at(Simplex{0, 1, 2}, 0) == WeightValue(0));
        CHECK(phi.at(Simplex{0, 1}, 0) == WeightValue(7));
        CHECK(phi.at(Simplex{1, 2}, 1) == WeightValue(7));
        CHECK(validate_weight(tri, phi).ok());
    }
    SECTION("coverage is required") {
        const SimplexSet a{Simplex{0, 1, 2}};
        CHECK_THROWS_AS(semi_trivial_weight(tri, a, {}, seven), ConstructionError);
    }
}

TEST_CASE("Dawson weights") {
    const auto k = testing::full_triangle();
    SECTION("constant w is the identity") {
        for (const int c : {1, -3, 5}) {
            SimplexIntegers w;
            for (int n = 0; n <= 2; ++n)
                for (const auto& s : k.basis(n)) w[s] = c;
            CHECK(all_entries(dawson_weight(k, w), 1));
        }
    }
    SECTION("powers of two by dimension") {
        SimplexIntegers w;
        for (int n = 0; n <= 2; ++n)
            for (const auto& s : k.basis(n)) w[s] = 1 << n;
        const auto phi = dawson_weight(k, w);
        CHECK(all_entries(phi, 2));
        CHECK(phi.validated());
    }
    SECTION("divisibility failure") {
        const auto e = testing::edge();
        SimplexIntegers w{{Simplex{0}, 2}, {Simplex{1}, 1}, {Simplex{0, 1}, 3}};
        CHECK_THROWS_AS(dawson_weight(e, w), ConstructionError);
    }
    SECTION("zero value") {
        const auto e = testing::edge();
        SimplexIntegers w{{Simplex{0}, 0}, {Simplex{1}, 1}, {Simplex{0, 1}, 0}};
        CHECK_THROWS_AS(dawson_weight(e, w), ConstructionError);
    }
}

TEST_CASE("cfw weights") {
    const auto k = testing::full_triangle();
    SECTION("C = 1 with f = id reduces to Dawson") {
        SimplexIntegers w;
        for (int n = 0; n <= 2; ++n)
            for (const auto& s : k.basis(n)) w[s] = n == 0 ? 1 : (n == 1 ? 3 : 6);
        const auto a = cfw_weight(k, w, [](const Integer& x) { return x; }, Integer(1));
        const auto b = dawson_weight(k, w);
        for (int n = 1; n <= 2; ++n)
            for (const auto& s : k.basis(n))
                for (int i = 0; i <= n; ++i) CHECK(a.at(s, i) == b.at(s, i));
    }
    SECTION("C = 0 gives the zero weight") {
        SimplexIntegers w;
        for (int n = 0; n <= 2; ++n)
            for (const auto& s : k.basis(n)) w[s] = n + 4;
        CHECK(all_entries(cfw_weight(k, w, [](const Integer& x) { return x; }, Integer(0)), 0));
    }
    SECTION("auto C on the hollow triangle") {
        const auto h = testing::hollow_triangle();
        SimplexIntegers w;
        for (int n = 0; n <= 1; ++n)
            for (const auto& s : h.basis(n)) w[s] = n;
        const auto phi = cfw_weight(h, w, [](const Integer& x) { return Integer(x + 1); });
        CHECK(all_entries(phi, 4));
        CHECK(phi.validated());
    }
    SECTION("f vanishing on an attained value") {
        SimplexIntegers w;
        for (int n = 0; n <= 2; ++n)
            for (const auto& s : k.basis(n)) w[s] = n;
        CHECK_THROWS_AS(cfw_weight(k, w, [](const Integer& x) { return x; }), ConstructionError);
    }
}

TEST_CASE("every random constructor output validates") {
    testing::Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        const auto k = testing::random_complex(rng, 3);
        for (int kind = 0; kind < 5; ++kind) {
            auto phi = testing::random_weight(rng, k, static_cast<testing::WeightKind>(kind));
            CHECK(phi.validated());
            CHECK(validate_weight(k, phi).ok());
        }
    }
}

TEST_CASE("parse_weights reads the table format") {
    const auto k = testing::hollow_triangle();
    const std::string text =
        "# example\n"
        "0 1 | 0 | 2\n"
        "0 1 | 1 | 1\n"
        "0 2 | 0 | 1/2\n"
        "0 2 | 2 | 1+i\n"
        "1 2 | 1 | -3\n";
    SECTION("missing pairs are filled with a warning") {
        const auto parsed = parse_weights(k, text);
        // The face (0) of (0,1) is d_1.
        CHECK(parsed.weights.at(Simplex{0, 1}, 1) == WeightValue(2));
        CHECK(parsed.weights.at(Simplex{0, 2}, 1) == WeightValue(Rational(1, 2)));
        CHECK(parsed.weights.at(Simplex{0, 2}, 0) == WeightValue(Rational(1), Rational(1)));
        CHECK(parsed.weights.at(Simplex{1, 2}, 1) == WeightValue(-3));
        CHECK(parsed.weights.at(Simplex{1, 2}, 0) == WeightValue(1));
        CHECK(parsed.warnings.size() == 1);
    }
    SECTION("fill value is configurable") {
        const auto parsed = parse_weights(k, text, MissingPolicy{false, WeightValue(0)});
        CHECK(parsed.weights.at(Simplex{1, 2}, 0) == WeightValue(0));
    }
    SECTION("strict mode rejects gaps") {
        CHECK_THROWS_AS(parse_weights(k, text, MissingPolicy{true, 1}), IncompleteWeightError);
    }
    SECTION("malformed lines report their line number") {
        try {
            parse_weights(k, "0 1 | 0 | 2\n0 1 | 2 | 1\n");
            FAIL("expected an error");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_weights(k, "0 1 | 0 | 1.5\n"), InputError);
        CHECK_THROWS_AS(parse_weights(k, "0 1 | 0 | 1\n0 1 | 0 | 1\n"), InputError);
        CHECK_THROWS_AS(parse_weights(k, "0 1 | 0\n"), InputError);
        CHECK_THROWS_AS(parse_weights(k, "0 3 | 0 | 1\n"), InputError);
    }
    SECTION("format and parse round trip") {
        auto phi = testing::nontrivial_triangle_weights(testing::full_triangle());
        const auto again = parse_weights(phi.complex(), format_weights(phi), MissingPolicy{true, 1});
        CHECK(again.warnings.empty());
        CHECK(format_weights(again.weights) == format_weights(phi));
    }
}
