#pragma once

// Independent brute-force evaluations used to cross-check the library.

#include "arthur/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using arthur::Rational;
using Matrix = std::vector<std::vector<long long>>;

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Matrix diag(const std::vector<int>& d) {
    Matrix m(d.size(), std::vector<long long>(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

// Basis of the Lie algebra in its standard representation.
inline std::vector<Matrix> lie_basis(const std::string& group, int n) {
    std::vector<Matrix> out;
    auto E = [&](int i, int j) {
        Matrix m(n, std::vector<long long>(n, 0));
        m[i][j] = 1;
        return m;
    };
    auto add = [](Matrix a, const Matrix& b, long long s) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
        return a;
    };
    if (group == "SO") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) out.push_back(add(E(i, j), E(j, i), -1));
    } else if (group == "SL") {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) out.push_back(E(i, j));
        for (int i = 0; i + 1 < n; ++i) out.push_back(add(E(i, i), E(i + 1, i + 1), -1));
    } else if (group == "GL") {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.push_back(E(i, j));
    }
    return out;
}

inline bool commutes(const Matrix& a, const Matrix& b) { return mat_mul(a, b) == mat_mul(b, a); }

// Diagonal sign matrices of determinant one in the standard representation, keeping those
// whose centralizer is the whole group.
inline int central_sign_elements(const std::string& group, int n) {
    auto basis = lie_basis(group, n);
    int count = 0;
    for (int m = 0; m < (1 << n); ++m) {
        std::vector<int> d(n);
        int det = 1;
        for (int i = 0; i < n; ++i) {
            d[i] = (m >> i & 1) ? -1 : 1;
            det *= d[i];
        }
        if (group != "GL" && det != 1) continue;
        auto s = diag(d);
        bool central = std::all_of(basis.begin(), basis.end(), [&](const Matrix& X) { return commutes(s, X); });
        count += central;
    }
    return count;
}

// Rank one: W = {1, -1} acting on the one-dimensional torus, roots +-alpha.
// i = |W|^{-1} sum over regular w of sgn0(w) |det(w - 1)|^{-1}.
inline Rational rank_one_i() {
    Rational total = 0;
    for (int w : {1, -1}) {
        int det = w - 1;
        if (det == 0) continue;
        int sgn0 = w < 0 ? -1 : 1;  // w sends the positive root to a negative one
        total += Rational(sgn0, std::abs(det));
    }
    return total / Rational(2);
}

// A semisimple rank one group has only central elliptic classes, each contributing sigma.
inline Rational rank_one_sigma(const std::string& group, int n) {
    return rank_one_i() / Rational(central_sign_elements(group, n));
}

// Sigma/<sigma-bar> by orbit enumeration over explicit Z/2 vectors.
inline std::size_t component_group_order(const std::vector<int>& l) {
    std::size_t r = l.size();
    std::vector<int> sb(r);
    for (std::size_t i = 0; i < r; ++i) sb[i] = l[i] % 2;
    std::set<std::vector<int>> orbits;
    for (unsigned m = 0; m < (1u << r); ++m) {
        std::vector<int> v(r), w(r);
        for (std::size_t i = 0; i < r; ++i) {
            v[i] = m >> i & 1;
            w[i] = (v[i] + sb[i]) % 2;
        }
        orbits.insert(std::min(v, w));
    }
    return orbits.size();
}

inline Rational standard_iota(int N1, int N2) {
    if (N1 == 0 || N2 == 0) return 1;
    return N1 == N2 ? Rational(1, 4) : Rational(1, 2);
}

// (N1, N2, kappa1, kappa2, iota); the simple data carry N2 = 0 and kappa2 = 0.
using TwistedKey = std::tuple<int, int, int, int>;

inline std::map<TwistedKey, Rational> twisted_table(int N) {
    std::map<TwistedKey, Rational> out;
    for (int N1 = 0; N1 <= N; ++N1) {
        int N2 = N - N1;
        for (int k1 : {1, -1})
            for (int k2 : {1, -1}) {
                bool same = (N1 - N2) % 2 == 0;
                if (same != (k1 != k2)) continue;
                if (N1 == 0 || N2 == 0) {
                    out[{N, 0, N1 ? k1 : k2, 0}] = Rational(1, 2);
                    continue;
                }
                TwistedKey a{N1, N2, k1, k2}, b{N2, N1, k2, k1};
                // N1 = N2: (1,-1) and (-1,1) are equivalent
                if (N1 == N2) a = b = TwistedKey{N1, N2, 1, -1};
                out[std::max(a, b)] = Rational(1, 4);
            }
    }
    return out;
}

// det of tensor product of two diagonal sign matrices, computed entrywise.
inline int kron_det(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 1;
    for (int x : a)
        for (int y : b) d *= x * y;
    return d;
}

inline int even_cg_count(int a, int b) {
    int c = 0;
    for (int j = std::abs(a - b) + 1; j <= a + b - 1; j += 2) c += j % 2 == 0;
    return c;
}

struct EpsConstituent {
    std::string mu;
    int mu_sign = 1;   // +1 orthogonal, -1 symplectic, 0 not self-dual
    int n = 1;
    int l = 1;
    bool in_plus = false;
};

// eps(x) = prod over pairs with root number -1 of det(lambda(s_x))^{#even CG constituents};
// x lists the determinant sign of each I+ constituent in order.
inline int epsilon_value(const std::vector<EpsConstituent>& cs, const std::map<std::pair<std::string, std::string>, int>& roots,
                         const std::vector<int>& x) {
    std::vector<std::vector<int>> d(cs.size());
    std::size_t p = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        d[i].assign(cs[i].l, 1);
        if (cs[i].in_plus) d[i][0] = x[p++];
    }
    int v = 1;
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            if (cs[a].mu_sign == 0 || cs[b].mu_sign == 0 || cs[a].mu_sign == cs[b].mu_sign) continue;
            auto key = std::minmax(cs[a].mu, cs[b].mu);
            auto it = roots.find({key.first, key.second});
            if (it == roots.end() || it->second != -1) continue;
            int det = kron_det(d[a], d[b]);
            int e = even_cg_count(cs[a].n, cs[b].n);
            if (e % 2 && det < 0) v = -v;
        }
    return v;
}

} // namespace oracle
