#pragma once

#include "arthur/errors.hpp"
#include "arthur/params.hpp"
#include "arthur/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arthur {

// Exponents a of z -> (z/zbar)^a are stored doubled.
inline Duality arch_parity(int a2) {
    return a2 % 2 == 0 ? Duality::orthogonal : Duality::symplectic;
}

// Unramified character given by its Frobenius exponent t mod 1: Frob -> exp(2 pi i t).
inline Duality unramified_parity(Rational t) {
    t -= Rational(boost::rational_cast<std::int64_t>(t));
    if (t < Rational(0)) t += 1;
    if (t == Rational(0)) return Duality::orthogonal;
    if (t == Rational(1, 2)) return Duality::symplectic;
    return Duality::none;
}

struct ArchParameter {
    std::vector<int> a2;  // doubled exponents a_i
    int c2 = 0;           // doubled shift c, a_i = b_i + c
};

struct DiscreteArchResult {
    bool discrete = false;
    Rational d;  // inf(min |b_i|, min_{i != j} |b_i - b_j|)
};

inline DiscreteArchResult is_discrete_arch(const ArchParameter& p, int datum_parity) {
    DiscreteArchResult r;
    if (p.a2.empty()) throw SemanticError("empty archimedean parameter");
    std::set<int> seen(p.a2.begin(), p.a2.end());
    bool distinct = seen.size() == p.a2.size();
    bool parity_ok = std::all_of(p.a2.begin(), p.a2.end(),
                                 [&](int a) { return duality_sign(arch_parity(a)) == datum_parity; });
    r.discrete = distinct && parity_ok;
    int best = -1;
    for (std::size_t i = 0; i < p.a2.size(); ++i) {
        int b = std::abs(p.a2[i] - p.c2);
        if (best < 0 || b < best) best = b;
        for (std::size_t j = i + 1; j < p.a2.size(); ++j) best = std::min(best, std::abs(p.a2[i] - p.a2[j]));
    }
    r.d = Rational(best, 2);
    return r;
}

inline ArchParameter base_change_arch(const ArchParameter& p, int kappa, int chi_c2) {
    if (duality_sign(arch_parity(chi_c2)) != kappa) throw SemanticError("kappa does not match the character data");
    ArchParameter out = p;
    for (auto& a : out.a2) a += chi_c2;
    out.c2 = p.c2 + chi_c2;
    return out;
}

inline std::vector<Rational> base_change_unramified(const std::vector<Rational>& ts, int kappa, Rational chi_t) {
    auto d = unramified_parity(chi_t);
    if (d == Duality::none || duality_sign(d) != kappa) throw SemanticError("kappa does not match the character data");
    std::vector<Rational> out;
    for (auto t : ts) {
        t += chi_t;
        t -= Rational(boost::rational_cast<std::int64_t>(t));
        if (t < Rational(0)) t += 1;
        out.push_back(t);
    }
    return out;
}

struct Gauss {
    long long re = 0;
    long long im = 0;

    Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
    Gauss operator-() const { return {-re, -im}; }
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gauss& o) const { return !(*this == o); }
    bool operator<(const Gauss& o) const { return std::tie(re, im) < std::tie(o.re, o.im); }
    bool zero() const { return re == 0 && im == 0; }
    bool unit() const { return std::abs(re) + std::abs(im) == 1; }
    Gauss conj() const { return {re, -im}; }
};

inline const Gauss kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Exponent e with u = i^e, for a Gaussian unit u.
inline int unit_log(const Gauss& u) {
    for (int e = 0; e < 4; ++e)
        if (kUnits[e] == u) return e;
    throw InvariantError("not a Gaussian unit");
}

struct GMatrix {
    int n = 0;
    std::vector<Gauss> a;

    static GMatrix zero(int n) { return {n, std::vector<Gauss>(std::size_t(n) * n)}; }
    static GMatrix identity(int n) {
        auto m = zero(n);
        for (int i = 0; i < n; ++i) m(i, i) = {1, 0};
        return m;
    }
    Gauss& operator()(int i, int j) { return a[std::size_t(i) * n + j]; }
    const Gauss& operator()(int i, int j) const { return a[std::size_t(i) * n + j]; }
    bool operator==(const GMatrix& o) const { return n == o.n && a == o.a; }

    GMatrix operator*(const GMatrix& o) const {
        auto m = zero(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if ((*this)(i, k).zero()) continue;
                for (int j = 0; j < n; ++j) m(i, j) = m(i, j) + (*this)(i, k) * o(k, j);
            }
        return m;
    }
    GMatrix scaled(const Gauss& s) const {
        GMatrix m = *this;
        for (auto& x : m.a) x = x * s;
        return m;
    }
    GMatrix transpose() const {
        auto m = zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    // row holding the nonzero entry of column j, or -1
    int column_support(int j) const {
        int r = -1;
        for (int i = 0; i < n; ++i)
            if (!(*this)(i, j).zero()) {
                if (r >= 0) return -2;
                r = i;
            }
        return r;
    }
    bool monomial_units() const {
        for (int j = 0; j < n; ++j) {
            int r = column_support(j);
            if (r < 0 || !(*this)(r, j).unit()) return false;
        }
        for (int i = 0; i < n; ++i) {
            int c = 0;
            for (int j = 0; j < n; ++j) c += !(*this)(i, j).zero();
            if (c != 1) return false;
        }
        return true;
    }
    GMatrix monomial_inverse() const {
        if (!monomial_units()) throw SemanticError("matrix is not monomial with unit entries");
        auto m = zero(n);
        for (int j = 0; j < n; ++j) {
            int r = column_support(j);
            m(j, r) = (*this)(r, j).conj();
        }
        return m;
    }
};

// Anti-diagonal with Phi(i, N+1-i) = (-1)^{i-1}.
inline GMatrix phi_matrix(int N) {
    if (N < 1) throw SemanticError("N must be positive");
    auto m = GMatrix::zero(N);
    for (int i = 1; i <= N; ++i) m(i - 1, N - i) = {sign_pow(i - 1), 0};
    return m;
}

struct PhiIdentities {
    bool transpose_ok = false;  // tPhi = (-1)^{N-1} Phi
    bool square_ok = false;     // Phi^2 = (-1)^{N-1} I
};

inline PhiIdentities check_phi(int N) {
    auto P = phi_matrix(N);
    Gauss s{sign_pow(N - 1), 0};
    return {P.transpose() == P.scaled(s), P * P == GMatrix::identity(N).scaled(s)};
}

// The involution x -> Phi tx^{-1} Phi^{-1} on monomial matrices.
inline GMatrix theta_N(const GMatrix& x) {
    auto P = phi_matrix(x.n);
    return P * x.monomial_inverse().transpose() * P.monomial_inverse();
}

// Parameter of W_F restricted to the cyclic image of a generator g of W_E, with
// phi(w_c) = C x w_c and base change twisted by chi_kappa (chi(g) = 1, chi(w_c^2) = kappa).
struct MonomialLocalParameter {
    int N = 1;
    std::vector<Gauss> rho_g;  // diagonal of rho(g)
    GMatrix C;
    int kappa = 1;

    GMatrix rho() const {
        auto m = GMatrix::zero(N);
        for (int i = 0; i < N; ++i) m(i, i) = rho_g[i];
        return m;
    }
    GMatrix rho_conj() const { return theta_N(C.monomial_inverse() * rho() * C); }
    GMatrix rho_wc2() const {
        return (C * phi_matrix(N) * C.monomial_inverse().transpose() * phi_matrix(N).monomial_inverse())
            .scaled({kappa, 0});
    }
    void validate() const {
        if (N < 1 || int(rho_g.size()) != N || C.n != N) throw SemanticError("inconsistent monomial parameter");
        for (const auto& u : rho_g)
            if (!u.unit()) throw SemanticError("character values must be Gaussian units");
        if (!C.monomial_units()) throw SemanticError("C must be monomial with unit entries");
        if (kappa != 1 && kappa != -1) throw SemanticError("kappa must be +-1");
    }
};

struct DualityResult {
    std::set<int> etas;                // every eta for which a monomial A exists
    std::map<int, GMatrix> witnesses;
    int predicted_eta = 1;             // (-1)^{N-1} kappa
    bool predicted_found = false;
    bool construction_ok = false;      // A = Phi C^{-1} satisfies the relations with the predicted eta
    bool conjugate_self_dual() const { return !etas.empty(); }
};

namespace detail {

// t(X) A Y = A and t(A) = eta A Z
inline bool duality_relations_hold(const GMatrix& A, const std::vector<std::pair<GMatrix, GMatrix>>& conj,
                                   const GMatrix& Z, int eta) {
    for (const auto& [X, Y] : conj)
        if (!(X.transpose() * A * Y == A)) return false;
    return A.transpose() == (A * Z).scaled({eta, 0});
}

struct UnitUnionFind {
    std::vector<int> parent, pot;  // value(x) = i^pot[x] * value(parent[x])

    explicit UnitUnionFind(int n) : parent(n), pot(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        pot[x] = (pot[x] + p) % 4;
        return {r, pot[x]};
    }
    // impose value(x) = i^e * value(y)
    bool unite(int x, int y, int e) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px - py - e) % 4 == 0;
        parent[rx] = ry;
        pot[rx] = ((e + py - px) % 4 + 8) % 4;
        return true;
    }
};

} // namespace detail

inline DualityResult verify_duality(const MonomialLocalParameter& p) {
    p.validate();
    int N = p.N;
    DualityResult res;
    res.predicted_eta = sign_pow(N - 1) * p.kappa;
    GMatrix Z = p.rho_wc2();
    std::vector<std::pair<GMatrix, GMatrix>> conj = {{p.rho_conj(), p.rho()}, {Z, Z}};

    GMatrix A0 = phi_matrix(N) * p.C.monomial_inverse();
    res.construction_ok = detail::duality_relations_hold(A0, conj, Z, res.predicted_eta);

    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int eta : {1, -1}) {
            if (res.etas.count(eta)) continue;
            detail::UnitUnionFind uf(N);
            auto var = [&](int r, int c) { return perm[r] == c ? r : -1; };
            bool ok = true;
            // t(X) A Y: entry (r, c) is X(s, r) A(s, t) Y(t, c) with s, t the supports
            for (const auto& [X, Y] : conj) {
                for (int r = 0; r < N && ok; ++r)
                    for (int c = 0; c < N && ok; ++c) {
                        int s = X.column_support(r), t = Y.column_support(c);
                        int lhs = var(s, t), rhs = var(r, c);
                        if ((lhs < 0) != (rhs < 0)) ok = false;
                        else if (lhs >= 0) ok = uf.unite(rhs, lhs, (unit_log(X(s, r)) + unit_log(Y(t, c))) % 4);
                    }
            }
            // A(c, r) = eta * A(r, t) Z(t, c)
            for (int r = 0; r < N && ok; ++r)
                for (int c = 0; c < N && ok; ++c) {
                    int t = Z.column_support(c);
                    int lhs = var(c, r), rhs = var(r, t);
                    if ((lhs < 0) != (rhs < 0)) ok = false;
                    else if (lhs >= 0)
                        ok = uf.unite(lhs, rhs, (unit_log(Z(t, c)) + (eta < 0 ? 2 : 0)) % 4);
                }
            if (!ok) continue;
            GMatrix A = GMatrix::zero(N);
            for (int r = 0; r < N; ++r) A(r, perm[r]) = kUnits[uf.find(r).second];
            if (!detail::duality_relations_hold(A, conj, Z, eta))
                throw InvariantError("monomial solution fails the duality relations");
            res.etas.insert(eta);
            res.witnesses.emplace(eta, A);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.predicted_found = res.etas.count(res.predicted_eta) > 0;
    return res;
}

} // namespace arthur
