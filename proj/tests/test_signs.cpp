#include "catch_amalgamated.hpp"

#include "arthur/signs.hpp"
#include "oracles.hpp"

#include <random>

using namespace arthur;

namespace {

SimpleParameter P(const std::string& label, Duality d, int n, int deg = 1) {
    SimpleParameter p;
    p.label = label;
    p.deg_mu = deg;
    p.duality = d;
    p.su2_dim = n;
    return p;
}

GlobalParameter u3_example() {
    return GlobalParameter::make({{P("m1", Duality::orthogonal, 2), 1}, {P("m2", Duality::symplectic, 1), 1}});
}

} // namespace

TEST_CASE("Clebsch-Gordan decomposition") {
    CHECK(clebsch_gordan(2, 1) == std::vector<int>{2});
    CHECK(clebsch_gordan(3, 2) == std::vector<int>{2, 4});
    CHECK(clebsch_gordan(3, 3) == std::vector<int>{1, 3, 5});
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b) {
            int dim = 0;
            for (int j : clebsch_gordan(a, b)) dim += j;
            CHECK(dim == a * b);
            CHECK(even_constituent_count(a, b) == oracle::even_cg_count(a, b));
        }
}

TEST_CASE("root number table parsing") {
    auto t = RootNumberTable::parse("# header\nm1 m2 -1\nm3 m4 +1  # trailing\n\n");
    CHECK(t.get("m2", "m1") == -1);
    CHECK(t.get("m3", "m4") == 1);
    CHECK(t.get("m1", "m3") == 1);
    CHECK_FALSE(t.find("m1", "m3"));
    try {
        RootNumberTable::parse("m1 m2 -1\nm1 m3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(RootNumberTable::parse("m1 m2 2\n"), ParseError);
    CHECK_THROWS_AS(RootNumberTable::parse("m1 m2 -1 x\n"), ParseError);
    CHECK_THROWS_AS(RootNumberTable::parse("m1 m1 -1\n"), SemanticError);
}

TEST_CASE("table validation") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal, 1), 1},
                                      {P("b", Duality::orthogonal, 1), 1},
                                      {P("c", Duality::symplectic, 2), 1}});
    RootNumberTable t;
    t.set("a", "c", -1);
    auto missing = validate_table(psi, t);
    REQUIRE(missing.size() == 1);
    CHECK(missing[0] == std::make_pair(std::string("b"), std::string("c")));
    t.set("a", "b", -1);
    CHECK_THROWS_AS(validate_table(psi, t), SemanticError);
}

TEST_CASE("epsilon character of the U(3) example") {
    auto psi = u3_example();
    auto tag = SimpleDatumTag::with_parity(3, -1);
    RootNumberTable minus, plus;
    minus.set("m1", "m2", -1);
    plus.set("m1", "m2", 1);
    auto e = epsilon_character(psi, tag, minus);
    CHECK(e.group.order() == 2);
    CHECK(e.value_at_s_psi == -1);
    CHECK_FALSE(e.trivial());
    auto f = epsilon_character(psi, tag, plus);
    CHECK(f.trivial());
    CHECK(f.value_at_s_psi == 1);
    CHECK(is_epsilon_parameter(GlobalParameter::make({{P("m1", Duality::orthogonal, 2), 1},
                                                      {P("m3", Duality::orthogonal, 1), 1}})));
    CHECK_FALSE(is_epsilon_parameter(psi));
}

TEST_CASE("epsilon character against determinant evaluation") {
    std::mt19937 rng(7);
    const std::vector<std::pair<std::string, Duality>> mus = {
        {"a", Duality::orthogonal}, {"b", Duality::symplectic}, {"c", Duality::orthogonal}, {"d", Duality::symplectic}};
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Constituent> cs;
        for (const auto& [name, d] : mus) {
            if (rng() % 3 == 0) continue;
            cs.push_back({P(name, d, 1 + int(rng() % 4)), 1 + int(rng() % 3)});
        }
        if (cs.empty()) continue;
        auto psi = GlobalParameter::make(cs);
        RootNumberTable table;
        std::map<std::pair<std::string, std::string>, int> roots;
        for (std::size_t i = 0; i < mus.size(); ++i)
            for (std::size_t j = i + 1; j < mus.size(); ++j) {
                if (mus[i].second == mus[j].second) continue;
                int v = rng() % 2 ? 1 : -1;
                table.set(mus[i].first, mus[j].first, v);
                roots[std::minmax(mus[i].first, mus[j].first)] = v;
            }
        for (int parity : {1, -1}) {
            auto tag = SimpleDatumTag::with_parity(psi.N(), parity);
            if (!factors_through(psi, tag)) continue;
            auto shape = centralizer_shape(psi, tag);
            auto eps = epsilon_character(psi, tag, table);
            std::vector<oracle::EpsConstituent> ocs;
            std::vector<char> plus(psi.size(), 0);
            for (int i : shape.split.plus) plus[i] = 1;
            for (std::size_t i = 0; i < psi.size(); ++i)
                ocs.push_back({psi[i].param.label, duality_sign(psi[i].param.duality), psi[i].param.su2_dim,
                               psi[i].mult, bool(plus[i])});
            std::size_t r = shape.split.plus.size();
            for (unsigned m = 0; m < (1u << r); ++m) {
                std::vector<int> x(r), dets(psi.size(), 1);
                for (std::size_t p = 0; p < r; ++p) {
                    x[p] = (m >> p & 1) ? -1 : 1;
                    dets[shape.split.plus[p]] = x[p];
                }
                CHECK(eps.eval_dets(dets) == oracle::epsilon_value(ocs, roots, x));
                CHECK(eps.eval(m) == eps.eval_dets(dets));
            }
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("adjoint decomposition pairs terms under the dual") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal, 1), 2}, {P("b", Duality::symplectic, 2), 1}});
    auto terms = adjoint_decomposition(psi, SimpleDatumTag::with_parity(4, 1));
    REQUIRE_FALSE(terms.empty());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        REQUIRE(terms[i].dual_term >= 0);
        REQUIRE(terms[i].dual_term < int(terms.size()));
        CHECK(terms[terms[i].dual_term].dual_term == int(i));
    }
}

TEST_CASE("relative signs are consistent on non-discrete shapes") {
    std::vector<std::vector<Constituent>> shapes = {
        {{P("a", Duality::orthogonal, 1), 2}},
        {{P("a", Duality::orthogonal, 2), 2}, {P("b", Duality::symplectic, 1), 1}},
        {{P("a", Duality::orthogonal, 1), 3}, {P("b", Duality::symplectic, 2), 1}},
    };
    RootNumberTable t;
    t.set("a", "b", -1);
    for (const auto& cs : shapes) {
        auto psi = GlobalParameter::make(cs);
        for (int parity : {1, -1}) {
            auto tag = SimpleDatumTag::with_parity(psi.N(), parity);
            if (!factors_through(psi, tag) || classify(psi, tag).in_2) continue;
            auto R = relative_signs(psi, tag, t);
            INFO(R.diagram.shape.name());
            CHECK(R.consistent);
            CHECK(R.fiber_constant);
            CHECK(R.r_minus.size() == R.diagram.W_order());
        }
    }
    auto psi = u3_example();
    CHECK_THROWS_AS(relative_signs(psi, SimpleDatumTag::with_parity(3, -1), t), SemanticError);
}
