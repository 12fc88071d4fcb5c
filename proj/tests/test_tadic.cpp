#include "catch_amalgamated.hpp"

#include "arthur/tadic.hpp"

using namespace arthur;

namespace {

StandardSymbol S(int k, int lambda) { return {"r", k, Rational(lambda)}; }

IsobaricTerm T(std::vector<StandardSymbol> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("nonarchimedean n = 2, k = 0") {
    auto c = expand("r", 2, 0, FieldCase::nonarchimedean);
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms.at(T({S(0, 1), S(0, -1)})) == 1);
    CHECK(c.terms.at(T({S(1, 0)})) == -1);
}

TEST_CASE("archimedean n = 2, k = 0") {
    auto c = expand("r", 2, 0, FieldCase::archimedean);
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms.at(T({S(0, 1), S(0, -1)})) == 1);
    CHECK(c.terms.at(T({S(1, 0), S(-1, 0)})) == -1);
}

TEST_CASE("w* and theta*") {
    CHECK(w_star(3, 0, FieldCase::nonarchimedean) == WeylPermutation{3, 1, 2});
    CHECK(w_star(3, 0, FieldCase::archimedean) == WeylPermutation{3, 2, 1});
    CHECK(w_star(4, 1, FieldCase::nonarchimedean) == WeylPermutation{4, 3, 1, 2});
    CHECK(theta_star("r", 2, 3, FieldCase::nonarchimedean) == T({S(4, 0), S(2, 0)}));
    CHECK(theta_star("r", 3, 0, FieldCase::nonarchimedean) == T({S(2, 0)}));
    CHECK(n_star(5, 1, FieldCase::nonarchimedean) == 2);
    CHECK(n_star(5, 1, FieldCase::archimedean) == 5);
}

TEST_CASE("the tempered part is theta* with sign sgn(w*)") {
    for (auto f : {FieldCase::archimedean, FieldCase::nonarchimedean})
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= 5; ++k) {
                INFO(field_name(f) << " n=" << n << " k=" << k);
                auto ts = theta_star("r", n, k, f);
                CHECK(theta_w("r", n, k, f, w_star(n, k, f)) == ts);
                auto temp = tempered_part(expand("r", n, k, f));
                REQUIRE(temp.terms.size() == 1);
                CHECK(temp.terms.begin()->first == ts);
                CHECK(temp.terms.begin()->second == perm_sign(w_star(n, k, f)));
                CHECK(sq_int_multiplicity(ts, "r", n, k) == 1);
            }
}

TEST_CASE("expansion bookkeeping") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 3; ++k) {
            auto e = expand_detailed("r", n, k, FieldCase::nonarchimedean);
            CHECK(e.combination.coefficient_sum() == e.raw_sum);
            std::size_t fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            std::size_t nonzero = 0;
            WeylPermutation w(n);
            std::iota(w.begin(), w.end(), 1);
            do nonzero += theta_w("r", n, k, FieldCase::nonarchimedean, w).has_value();
            while (std::next_permutation(w.begin(), w.end()));
            CHECK(nonzero + e.zero_terms == fact);
        }
    auto a = expand("r", 4, 2, FieldCase::archimedean);
    CHECK(a.coefficient_sum() == 0);
}

TEST_CASE("argument validation and sign of permutations") {
    CHECK_THROWS_AS(expand("r", 0, 0, FieldCase::archimedean), SemanticError);
    CHECK_THROWS_AS(expand("r", 2, -1, FieldCase::nonarchimedean), SemanticError);
    CHECK_NOTHROW(expand("r", 2, -1, FieldCase::archimedean));
    CHECK(perm_sign({1, 2, 3}) == 1);
    CHECK(perm_sign({2, 1, 3}) == -1);
    CHECK(perm_sign({3, 1, 2}) == 1);
}

TEST_CASE("mod 2 reduction drops even coefficients") {
    FormalCharacterCombination c;
    c.add(T({S(1, 0)}), 2);
    c.add(T({S(2, 0)}), -3);
    auto m = mod2_reduce(c);
    REQUIRE(m.size() == 1);
    CHECK(m.begin()->first == T({S(2, 0)}));
    c.add(T({S(2, 0)}), 3);
    CHECK(c.terms.size() == 1);
}
