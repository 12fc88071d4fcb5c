#include "catch_amalgamated.hpp"

#include "arthur/dsl.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arthur;

namespace {

const char* kExample = "group U(3) parity -\n"
                       "mu m1: deg=1, sd=+\n"
                       "mu m2: deg=1, sd=-\n"
                       "psi = m1 (x) nu(2) + m2 (x) nu(1)\n"
                       "roots { m1, m2 : -1 }";

ParseError parse_error(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("", 0, 0);
}

} // namespace

TEST_CASE("the U(3) example document") {
    auto d = parse_document(kExample);
    CHECK(d.N == 3);
    CHECK(d.parity == -1);
    REQUIRE(d.mus.size() == 2);
    CHECK(d.mus[1] == MuDecl{"m2", 1, Duality::symplectic});
    REQUIRE(d.psi.size() == 2);
    CHECK(d.psi[0] == PsiTerm{1, "m1", false, 2});
    REQUIRE(d.roots);
    CHECK(d.table().get("m2", "m1") == -1);
    CHECK_FALSE(d.places);
    auto psi = d.parameter();
    CHECK(psi.N() == 3);
    CHECK(d.tag().parity() == -1);
}

TEST_CASE("multiplicity terms") {
    auto d = parse_document("group U(2) parity +\nmu m1: deg=1, sd=+\npsi = 2*m1 (x) nu(1)");
    REQUIRE(d.psi.size() == 1);
    CHECK(d.psi[0].mult == 2);
    auto psi = d.parameter();
    REQUIRE(psi.size() == 1);
    CHECK(psi[0].mult == 2);
}

TEST_CASE("malformed nu() reports the offending token") {
    auto e = parse_error("group U(1) parity +\nmu m1: deg=1, sd=+\npsi = m1 (x) nu()");
    CHECK(e.line == 3);
    CHECK(e.column == 17);
    CHECK(std::string(e.what()).find("integer") != std::string::npos);
}

TEST_CASE("other parse errors") {
    CHECK(parse_error("group V(1)").column == 7);
    CHECK(parse_error("group U(1) parity +\npsi = m1 (x) nu(1) extra").line == 2);
    CHECK(parse_error("group U(1) parity +\nmu m: deg=1, sd=0\npsi = m (x) nu(1)").line == 2);
    CHECK(parse_error("group U(1) parity +2\npsi = m (x) nu(1)").column == 20);
    CHECK(parse_error("group U(1) parity + $").column == 21);
    CHECK(parse_error("group U(0) parity +\npsi = m (x) nu(1)").column == 9);
    CHECK(parse_error("group U(1) parity +\npsi = m (x) nu(1)\nplaces [ v: ramified ]").line == 3);
}

TEST_CASE("semantic errors surface when building the parameter") {
    auto undeclared = parse_document("group U(1) parity +\npsi = m (x) nu(1)");
    CHECK_THROWS_AS(undeclared.parameter(), SemanticError);
    auto degree = parse_document("group U(2) parity +\nmu m: deg=1, sd=+\npsi = m (x) nu(1)");
    CHECK_THROWS_AS(degree.parameter(), SemanticError);
    auto dual = parse_document("group U(1) parity +\nmu m: deg=1, sd=+\npsi = m* (x) nu(1)");
    CHECK_THROWS_AS(dual.parameter(), SemanticError);
}

TEST_CASE("dual of a non-self-dual mu") {
    auto d = parse_document("group U(2) parity +\nmu g: deg=1, sd=none\npsi = g (x) nu(1) + g* (x) nu(1)");
    CHECK(d.psi[1].dual);
    auto psi = d.parameter();
    REQUIRE(psi.size() == 2);
    CHECK(psi.partner_index(0) == 1);
    CHECK(psi[1].param.label == "g*");
}

TEST_CASE("print and parse round trip") {
    auto d = parse_document(std::string(kExample) + "\nplaces [ v1: inert, v2: split ]");
    auto text = print_document(d);
    CHECK(parse_document(text) == d);
    CHECK(print_document(parse_document(text)) == text);
}

TEST_CASE("every fixture round trips") {
    int n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ARTHUR_FIXTURE_DIR)) {
        if (entry.path().extension() != ".arthur") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        auto d = parse_document(ss.str());
        INFO(entry.path().filename().string());
        CHECK(parse_document(print_document(d)) == d);
        ++n;
    }
    CHECK(n > 0);
}
