#include "catch_amalgamated.hpp"

#include "arthur/params.hpp"

using namespace arthur;

namespace {

SimpleParameter P(const std::string& label, int deg, Duality d, int n) {
    SimpleParameter p;
    p.label = label;
    p.deg_mu = deg;
    p.duality = d;
    p.su2_dim = n;
    return p;
}

SimpleParameter Pair(const std::string& label, const std::string& partner, int deg, int n) {
    auto p = P(label, deg, Duality::none, n);
    p.partner = partner;
    return p;
}

} // namespace

TEST_CASE("constituent parity flips with even su2 dimension") {
    CHECK(constituent_parity(P("a", 1, Duality::orthogonal, 1)) == Duality::orthogonal);
    CHECK(constituent_parity(P("a", 1, Duality::orthogonal, 2)) == Duality::symplectic);
    CHECK(constituent_parity(P("a", 1, Duality::symplectic, 2)) == Duality::orthogonal);
    CHECK(constituent_parity(P("a", 3, Duality::symplectic, 3)) == Duality::symplectic);
    CHECK(constituent_parity(Pair("g", "h", 1, 2)) == Duality::none);
}

TEST_CASE("datum parity is (-1)^(N-1) kappa") {
    for (int N = 1; N <= 6; ++N)
        for (int kappa : {1, -1}) {
            SimpleDatumTag t{N, kappa};
            CHECK(t.parity() == ((N - 1) % 2 ? -kappa : kappa));
            CHECK(SimpleDatumTag::with_parity(N, t.parity()) == t);
        }
}

TEST_CASE("kappa of a constituent uses the su2 dimension") {
    // delta (-1)^{N_i - m_i - n_i + 1} with N_i = m_i n_i
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            for (auto d : {Duality::orthogonal, Duality::symplectic}) {
                auto p = P("a", m, d, n);
                int delta = duality_sign(d) * ((m - 1) % 2 ? -1 : 1);
                int e = m * n - m - n + 1;
                CHECK(constituent_kappa(p) == (e % 2 ? -delta : delta));
            }
}

TEST_CASE("global parameters merge repeated constituents and sort them") {
    auto g = GlobalParameter::make({{P("b", 1, Duality::symplectic, 1), 1},
                                    {P("a", 1, Duality::orthogonal, 2), 1},
                                    {P("b", 1, Duality::symplectic, 1), 2}});
    REQUIRE(g.size() == 2);
    CHECK(g.N() == 5);
    CHECK(g[0].param.label == "b");
    CHECK(g[0].mult == 3);
    CHECK(g.find("a", 2) == 1);
    CHECK_FALSE(g.is_generic());
}

TEST_CASE("global parameter validation") {
    CHECK_THROWS_AS(GlobalParameter::make({}), SemanticError);
    CHECK_THROWS_AS(GlobalParameter::make({{P("a", 1, Duality::orthogonal, 1), 0}}), SemanticError);
    CHECK_THROWS_AS(GlobalParameter::make({{Pair("g", "h", 1, 1), 1}}), SemanticError);
    CHECK_THROWS_AS(GlobalParameter::make({{Pair("g", "h", 1, 1), 1}, {Pair("h", "g", 2, 1), 1}}), SemanticError);
    CHECK_THROWS_AS(GlobalParameter::make({{Pair("g", "h", 1, 1), 1}, {Pair("h", "g", 1, 1), 2}}), SemanticError);
    CHECK_THROWS_AS(GlobalParameter::make({{P("a", 1, Duality::orthogonal, 1), 1}, {P("a", 2, Duality::orthogonal, 1), 1}}),
                    SemanticError);
    auto g = GlobalParameter::make({{Pair("g", "h", 1, 1), 1}, {Pair("h", "g", 1, 1), 1}});
    CHECK(g.partner_index(0) == 1);
    CHECK(g.partner_index(1) == 0);
}

TEST_CASE("split and factoring") {
    auto g = GlobalParameter::make({{P("a", 1, Duality::orthogonal, 1), 1},
                                    {P("b", 1, Duality::symplectic, 1), 2},
                                    {Pair("g", "h", 1, 1), 1},
                                    {Pair("h", "g", 1, 1), 1}});
    auto s = split_indices(g, 1);
    CHECK(s.plus.size() == 1);
    CHECK(s.minus.size() == 1);
    CHECK(s.gl.size() == 1);
    CHECK(factors_through(g, SimpleDatumTag::with_parity(5, 1)));
    // with the opposite parity the orthogonal constituent has odd multiplicity
    CHECK_FALSE(factors_through(g, SimpleDatumTag::with_parity(5, -1)));
    CHECK_THROWS_AS(factors_through(g, SimpleDatumTag::with_parity(4, 1)), SemanticError);
}

TEST_CASE("chain membership") {
    auto tag = SimpleDatumTag::with_parity(1, 1);
    auto simple = GlobalParameter::make({{P("a", 1, Duality::orthogonal, 1), 1}});
    auto m = classify(simple, tag);
    CHECK(m.in_sim);
    CHECK(m.in_2);
    CHECK(m.consistent());

    auto two = GlobalParameter::make({{P("a", 1, Duality::orthogonal, 1), 1}, {P("c", 1, Duality::orthogonal, 1), 1}});
    m = classify(two, SimpleDatumTag::with_parity(2, 1));
    CHECK_FALSE(m.in_sim);
    CHECK(m.in_2);

    auto doubled = GlobalParameter::make({{P("a", 1, Duality::orthogonal, 1), 2}});
    m = classify(doubled, SimpleDatumTag::with_parity(2, 1));
    CHECK_FALSE(m.in_2);
    CHECK(m.in_ell);
    CHECK(m.consistent());

    auto gl = GlobalParameter::make({{Pair("g", "h", 1, 1), 1}, {Pair("h", "g", 1, 1), 1}});
    m = classify(gl, SimpleDatumTag::with_parity(2, 1));
    CHECK_FALSE(m.in_ell);
    CHECK(m.in_disc == false);
    CHECK(m.consistent());
}
