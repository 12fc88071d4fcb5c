#pragma once

#include "arthur/errors.hpp"
#include "arthur/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace arthur {

enum class FieldCase { archimedean, nonarchimedean };

inline const char* field_name(FieldCase f) {
    return f == FieldCase::archimedean ? "arch" : "nonarch";
}

// theta_r(k, lambda)
struct StandardSymbol {
    std::string r = "1";
    int k = 0;
    Rational lambda = 0;

    bool operator<(const StandardSymbol& o) const {
        if (r != o.r) return r < o.r;
        if (k != o.k) return k > o.k;
        return lambda > o.lambda;
    }
    bool operator==(const StandardSymbol& o) const { return r == o.r && k == o.k && lambda == o.lambda; }
    std::string str() const { return "theta_" + r + "(" + std::to_string(k) + "," + to_string(lambda) + ")"; }
};

// Isobaric sum of symbols, kept sorted.
using IsobaricTerm = std::vector<StandardSymbol>;

inline std::string term_string(const IsobaricTerm& t) {
    if (t.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " [+] " : "") + t[i].str();
    return out;
}

struct FormalCharacterCombination {
    std::map<IsobaricTerm, long long> terms;

    void add(IsobaricTerm t, long long c) {
        std::sort(t.begin(), t.end());
        auto& v = terms[t];
        v += c;
        if (v == 0) terms.erase(t);
    }
    long long coefficient_sum() const {
        long long s = 0;
        for (const auto& [t, c] : terms) s += c;
        return s;
    }
};

using WeylPermutation = std::vector<int>;  // 1-based images w(1), ..., w(n)

inline int perm_sign(const WeylPermutation& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    return sign_pow(inv);
}

namespace detail {

inline void check_tadic_args(int n, int k, FieldCase f) {
    if (n < 1) throw SemanticError("n must be at least 1");
    if (f == FieldCase::nonarchimedean && k < 0) throw SemanticError("k must be non-negative in the nonarchimedean case");
}

} // namespace detail

// theta^w(k), or nullopt when a factor is zero
inline std::optional<IsobaricTerm> theta_w(const std::string& r, int n, int k, FieldCase f, const WeylPermutation& w) {
    IsobaricTerm t;
    for (int i = 1; i <= n; ++i) {
        int wi = w[i - 1];
        StandardSymbol s{r, k - (i - wi), Rational((n + 1) - (i + wi))};
        if (f == FieldCase::nonarchimedean) {
            if (s.k == -1) continue;
            if (s.k < -1) return std::nullopt;
        }
        t.push_back(s);
    }
    std::sort(t.begin(), t.end());
    return t;
}

struct Expansion {
    FormalCharacterCombination combination;
    long long raw_sum = 0;       // sum of sgn(w) over the w whose term survives
    std::size_t zero_terms = 0;  // w killed by a factor with k < -1
};

inline Expansion expand_detailed(const std::string& r, int n, int k, FieldCase f) {
    detail::check_tadic_args(n, k, f);
    Expansion e;
    WeylPermutation w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        auto t = theta_w(r, n, k, f, w);
        if (!t) {
            ++e.zero_terms;
            continue;
        }
        int s = perm_sign(w);
        e.raw_sum += s;
        e.combination.add(*t, s);
    } while (std::next_permutation(w.begin(), w.end()));
    return e;
}

inline FormalCharacterCombination expand(const std::string& r, int n, int k, FieldCase f) {
    return expand_detailed(r, n, k, f).combination;
}

inline WeylPermutation w_star(int n, int k, FieldCase f) {
    detail::check_tadic_args(n, k, f);
    WeylPermutation w(n);
    for (int i = 1; i <= n; ++i) {
        if (f == FieldCase::archimedean || i <= k + 1) w[i - 1] = n + 1 - i;
        else w[i - 1] = i - (k + 1);
    }
    return w;
}

inline int n_star(int n, int k, FieldCase f) {
    return f == FieldCase::archimedean ? n : std::min(n, k + 1);
}

inline IsobaricTerm theta_star(const std::string& r, int n, int k, FieldCase f) {
    detail::check_tadic_args(n, k, f);
    IsobaricTerm t;
    for (int i = 1; i <= n_star(n, k, f); ++i) t.push_back({r, k + n + 1 - 2 * i, Rational(0)});
    std::sort(t.begin(), t.end());
    return t;
}

inline bool is_tempered(const IsobaricTerm& t) {
    return std::all_of(t.begin(), t.end(), [](const StandardSymbol& s) { return s.lambda == Rational(0); });
}

inline FormalCharacterCombination tempered_part(const FormalCharacterCombination& c) {
    FormalCharacterCombination out;
    for (const auto& [t, v] : c.terms)
        if (is_tempered(t)) out.terms.emplace(t, v);
    return out;
}

inline int sq_int_multiplicity(const IsobaricTerm& t, const std::string& r, int n, int k) {
    StandardSymbol target{r, k + n - 1, Rational(0)};
    return int(std::count(t.begin(), t.end(), target));
}

inline std::map<IsobaricTerm, int> mod2_reduce(const FormalCharacterCombination& c) {
    std::map<IsobaricTerm, int> out;
    for (const auto& [t, v] : c.terms) {
        int m = int(((v % 2) + 2) % 2);
        if (m) out.emplace(t, m);
    }
    return out;
}

} // namespace arthur
