#include "catch_amalgamated.hpp"

#include "arthur/centralizer.hpp"
#include "oracles.hpp"

using namespace arthur;

namespace {

SimpleParameter P(const std::string& label, Duality d, int n = 1, int deg = 1) {
    SimpleParameter p;
    p.label = label;
    p.deg_mu = deg;
    p.duality = d;
    p.su2_dim = n;
    return p;
}

SimpleParameter Pair(const std::string& label, const std::string& partner) {
    auto p = P(label, Duality::none);
    p.partner = partner;
    return p;
}

GlobalParameter orthogonal_shape(const std::vector<int>& l) {
    std::vector<Constituent> cs;
    for (std::size_t k = 0; k < l.size(); ++k) cs.push_back({P("a" + std::to_string(k), Duality::orthogonal), l[k]});
    return GlobalParameter::make(cs);
}

} // namespace

TEST_CASE("centralizer shape of a mixed parameter") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal), 3},
                                      {P("b", Duality::symplectic), 2},
                                      {Pair("g", "h"), 2},
                                      {Pair("h", "g"), 2}});
    auto tag = SimpleDatumTag::with_parity(psi.N(), 1);
    auto s = centralizer_shape(psi, tag);
    CHECK(s.name() == "O(3) x Sp(2) x GL(2)");
    CHECK_FALSE(s.finite_center());
    CHECK(s.identity_component().name() == "SO(3) x Sp(2) x GL(2)");
    CHECK(s.reduced_identity_component().central_quotient.size() == 1);
    CHECK(component_group(s).order() == 1);
}

TEST_CASE("central quotient appears when every orthogonal multiplicity is even") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal), 2}, {P("b", Duality::symplectic), 2}});
    auto s = centralizer_shape(psi, SimpleDatumTag::with_parity(4, 1));
    CHECK(s.all_plus_even());
    CHECK(s.reduced_identity_component().central_quotient.size() == 2);
}

TEST_CASE("non-factoring parameters have no centralizer shape") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal), 1}});
    CHECK_THROWS_AS(centralizer_shape(psi, SimpleDatumTag::with_parity(1, -1)), SemanticError);
}

TEST_CASE("component group order against orbit enumeration") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 3; ++c) {
                std::vector<int> l = {a};
                if (b) l.push_back(b);
                if (c) l.push_back(c);
                auto psi = orthogonal_shape(l);
                auto S = component_group(centralizer_shape(psi, SimpleDatumTag::with_parity(psi.N(), 1)));
                INFO(a << " " << b << " " << c);
                CHECK(S.order() == oracle::component_group_order(l));
                CHECK(S.elements().size() == S.order());
            }
}

TEST_CASE("component group elements are canonical and sign vectors match") {
    auto g = FiniteTwoGroup::make({"x", "y", "z"}, {1, 2, 3});
    CHECK(g.sigma_bar == 0b101u);
    CHECK(g.order() == 4);
    for (unsigned m : g.elements()) CHECK(g.canonical(m) == m);
    CHECK(g.canonical(0b101u) == 0u);
    CHECK(g.sign_vector(0b010u) == std::vector<int>{1, -1, 1});
}

TEST_CASE("Levi diagram of O(2)") {
    auto psi = orthogonal_shape({2});
    auto D = levi_diagram(psi, SimpleDatumTag::with_parity(2, 1));
    CHECK(D.S.order() == 2);
    CHECK(D.W0_order == 1);
    CHECK(D.W_order() == 2);
    CHECK(D.N_order() == 2);
    CHECK(D.R.size() == 2);
    CHECK(D.verify().all());
}

TEST_CASE("Levi diagram exactness on mixed shapes") {
    std::vector<std::vector<Constituent>> shapes = {
        {{P("a", Duality::orthogonal), 3}, {P("b", Duality::orthogonal), 2}},
        {{P("a", Duality::orthogonal), 2}, {P("b", Duality::symplectic), 2}, {Pair("g", "h"), 1}, {Pair("h", "g"), 1}},
        {{P("a", Duality::orthogonal), 4}},
        {{P("a", Duality::orthogonal), 1}, {P("c", Duality::orthogonal), 3}, {P("d", Duality::orthogonal), 2}},
    };
    for (const auto& cs : shapes) {
        auto psi = GlobalParameter::make(cs);
        auto tag = SimpleDatumTag::with_parity(psi.N(), 1);
        auto D = levi_diagram(psi, tag);
        INFO(D.shape.name());
        auto c = D.verify();
        CHECK(c.order_identities);
        CHECK(c.exact_component_sequence);
        CHECK(c.exact_weyl_sequence);
        CHECK(c.s1_to_r_trivial);
        CHECK(c.section_ok);
    }
}

TEST_CASE("localization fusing two global constituents") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal), 1}, {P("b", Duality::orthogonal), 1}});
    auto shape = centralizer_shape(psi, SimpleDatumTag::with_parity(2, 1));
    Refinement ref;
    ref[0] = {LocalPiece{"x", 1, 1}};
    ref[1] = {LocalPiece{"x", 1, 1}};
    auto M = localization_map(psi, shape, ref);
    CHECK(M.source.order() == 2);
    CHECK(M.target.order() == 2);
    CHECK(M.target.l == std::vector<int>{2});
    // x = (-1, +1) goes to the determinant -1 class of O(2)
    CHECK(M.apply(0b01u) == 1u);
    CHECK(M.apply(0b11u) == 0u);
    CHECK(M.injective);
}

TEST_CASE("localization splitting into an opposite-parity piece is rejected") {
    auto psi = GlobalParameter::make({{P("a", Duality::orthogonal), 1}});
    auto shape = centralizer_shape(psi, SimpleDatumTag::with_parity(1, 1));
    Refinement ref;
    ref[0] = {LocalPiece{"x", -1, 1}};
    CHECK_THROWS_AS(localization_map(psi, shape, ref), SemanticError);
    ref[0] = {LocalPiece{"x", 1, 1}, LocalPiece{"y", 1, 2}};
    auto M = localization_map(psi, shape, ref);
    CHECK(M.target.rank() == 2);
    CHECK(M.target.order() == 2);
    CHECK(identity_refinement(psi, shape).at(0).front().label == "a[1]");
}
