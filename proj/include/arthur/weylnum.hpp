#pragma once

#include "arthur/errors.hpp"
#include "arthur/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace arthur {

enum class FactorKind { GL, Sp, SO, Torus };

struct Factor {
    FactorKind kind = FactorKind::GL;
    int n = 1;  // GL(n), Sp(n) with n even, SO(n), torus GL(1)^n

    int rank() const {
        switch (kind) {
        case FactorKind::GL: return n;
        case FactorKind::Sp: return n / 2;
        case FactorKind::SO: return n / 2;
        case FactorKind::Torus: return n;
        }
        return 0;
    }
    int dim() const {
        switch (kind) {
        case FactorKind::GL: return n * n;
        case FactorKind::Sp: return n * (n + 1) / 2;
        case FactorKind::SO: return n * (n - 1) / 2;
        case FactorKind::Torus: return n;
        }
        return 0;
    }
    bool trivial() const { return dim() == 0; }
    // -I lies in the factor (always for GL, Sp and tori; SO(m) needs m even).
    bool contains_minus_one() const { return kind != FactorKind::SO || n % 2 == 0; }
    bool central_torus() const {
        return kind == FactorKind::GL || kind == FactorKind::Torus || (kind == FactorKind::SO && n == 2);
    }
    std::string name() const {
        switch (kind) {
        case FactorKind::GL: return "GL(" + std::to_string(n) + ")";
        case FactorKind::Sp: return "Sp(" + std::to_string(n) + ")";
        case FactorKind::SO: return "SO(" + std::to_string(n) + ")";
        case FactorKind::Torus: return "GL(1)^" + std::to_string(n);
        }
        return "?";
    }
    auto key() const { return std::make_pair(int(kind), n); }
    bool operator==(const Factor& o) const { return kind == o.kind && n == o.n; }
};

inline Factor GLf(int a) { return {FactorKind::GL, a}; }
inline Factor Spf(int n) { return {FactorKind::Sp, n}; }
inline Factor SOf(int m) { return {FactorKind::SO, m}; }
inline Factor Torusf(int k) { return {FactorKind::Torus, k}; }

using SignVector = std::vector<int>;

// Connected group: product of factors modulo a finite central subgroup of sign vectors.
struct ConnectedShape {
    std::vector<Factor> factors;
    std::vector<SignVector> central_quotient;  // all elements, identity first

    static ConnectedShape make(std::vector<Factor> fs, const std::vector<SignVector>& generators = {}) {
        ConnectedShape s;
        s.factors = std::move(fs);
        for (const auto& f : s.factors) {
            if (f.n < 0 || (f.kind == FactorKind::Sp && f.n % 2 != 0) ||
                (f.n == 0 && f.kind != FactorKind::SO))
                throw SemanticError("invalid factor " + f.name());
        }
        std::set<SignVector> group{SignVector(s.factors.size(), 1)};
        for (const auto& g : generators) {
            if (g.size() != s.factors.size()) throw SemanticError("central element has wrong length");
            for (std::size_t f = 0; f < g.size(); ++f) {
                if (g[f] != 1 && g[f] != -1) throw SemanticError("central element entries must be +-1");
                if (g[f] == -1 && !s.factors[f].contains_minus_one())
                    throw SemanticError("-I does not lie in " + s.factors[f].name());
            }
            std::set<SignVector> next = group;
            for (const auto& h : group) {
                SignVector p(h.size());
                for (std::size_t f = 0; f < h.size(); ++f) p[f] = h[f] * g[f];
                next.insert(p);
            }
            group.swap(next);
        }
        s.central_quotient.push_back(SignVector(s.factors.size(), 1));
        for (const auto& z : group)
            if (z != s.central_quotient[0]) s.central_quotient.push_back(z);
        return s;
    }

    int dim() const {
        int d = 0;
        for (const auto& f : factors) d += f.dim();
        return d;
    }
    int rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank();
        return r;
    }
    bool infinite_center() const {
        return std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.central_torus(); });
    }
    std::size_t quotient_order() const { return central_quotient.size(); }

    std::string name() const {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].name();
        if (out.empty()) out = "1";
        if (central_quotient.size() > 1) {
            out += " / {";
            for (std::size_t k = 1; k < central_quotient.size(); ++k) {
                out += k > 1 ? ", (" : "(";
                for (std::size_t f = 0; f < factors.size(); ++f)
                    out += std::string(f ? "," : "") + (central_quotient[k][f] < 0 ? "-" : "+");
                out += ")";
            }
            out += "}";
        }
        return out;
    }
};

enum class Coset {
    identity,
    outer,  // the non-identity coset of O(m) over SO(m)
    twist   // inverse-transpose twist on a GL factor or a torus
};

inline const char* coset_name(Coset c) {
    switch (c) {
    case Coset::identity: return "identity";
    case Coset::outer: return "outer";
    case Coset::twist: return "twist";
    }
    return "?";
}

struct ComponentDatum {
    ConnectedShape base;
    std::vector<Coset> coset;

    static ComponentDatum identity_of(ConnectedShape s) {
        ComponentDatum c;
        c.coset.assign(s.factors.size(), Coset::identity);
        c.base = std::move(s);
        return c;
    }
    static ComponentDatum make(ConnectedShape s, std::vector<Coset> cs) {
        if (cs.size() != s.factors.size()) throw SemanticError("coset descriptor has wrong length");
        for (std::size_t f = 0; f < cs.size(); ++f) {
            auto k = s.factors[f].kind;
            if (cs[f] == Coset::outer && k != FactorKind::SO)
                throw SemanticError("outer coset only exists on SO factors");
            if (cs[f] == Coset::twist && k != FactorKind::GL && k != FactorKind::Torus)
                throw SemanticError("twist only exists on GL factors and tori");
        }
        return {std::move(s), std::move(cs)};
    }
    bool is_identity() const {
        return std::all_of(coset.begin(), coset.end(), [](Coset c) { return c == Coset::identity; });
    }
    std::string name() const {
        std::string out;
        for (std::size_t f = 0; f < coset.size(); ++f) {
            const auto& fa = base.factors[f];
            std::string n = fa.name();
            if (coset[f] == Coset::outer) n = "O(" + std::to_string(fa.n) + ")-";
            if (coset[f] == Coset::twist) n += ".theta";
            out += (f ? " x " : "") + n;
        }
        return out.empty() ? "1" : out;
    }
};

// Frozen factor menu; the acceptance family stays inside a smaller one.
inline void check_menu(const ConnectedShape& s) {
    if (s.factors.size() > 6) throw SemanticError("unsupported shape: more than 6 factors");
    for (const auto& f : s.factors) {
        bool ok = (f.kind == FactorKind::GL && f.n <= 4) || (f.kind == FactorKind::Sp && f.n <= 6) ||
                  (f.kind == FactorKind::SO && f.n <= 6) || (f.kind == FactorKind::Torus && f.n <= 4);
        if (!ok) throw SemanticError("unsupported factor type " + f.name());
    }
}

// w(e_i) = sign[i] * e_{perm[i]}
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;

    std::vector<int> apply(const std::vector<int>& v) const {
        std::vector<int> out(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] += sign[i] * v[i];
        return out;
    }
    int flips() const { return int(std::count(sign.begin(), sign.end(), -1)); }
    bool operator<(const SignedPerm& o) const { return std::tie(perm, sign) < std::tie(o.perm, o.sign); }
    bool operator==(const SignedPerm& o) const { return perm == o.perm && sign == o.sign; }
};

namespace detail {

inline std::vector<std::vector<int>> all_perms(int r) {
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Bareiss elimination on a square integer matrix.
inline long long int_det(std::vector<long long> m, int n) {
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i * n + k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * m[n * n - 1];
}

inline bool lex_negative(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0) return x < 0;
    return false;
}

inline std::vector<std::vector<int>> positive_roots(const Factor& f) {
    int r = f.rank();
    std::vector<std::vector<int>> roots;
    auto unit = [&](int i, int a, int j, int b) {
        std::vector<int> v(r, 0);
        v[i] += a;
        if (j >= 0) v[j] += b;
        return v;
    };
    switch (f.kind) {
    case FactorKind::Torus: break;
    case FactorKind::GL:
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) roots.push_back(unit(i, 1, j, -1));
        break;
    case FactorKind::Sp:
    case FactorKind::SO:
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                roots.push_back(unit(i, 1, j, -1));
                roots.push_back(unit(i, 1, j, 1));
            }
        if (f.kind == FactorKind::Sp)
            for (int i = 0; i < r; ++i) roots.push_back(unit(i, 2, -1, 0));
        else if (f.n % 2 == 1)
            for (int i = 0; i < r; ++i) roots.push_back(unit(i, 1, -1, 0));
        break;
    }
    return roots;
}

// Representatives of Norm(T, component)/T acting on X*(T) for one factor.
inline std::vector<SignedPerm> factor_weyl_set(const Factor& f, Coset c) {
    int r = f.rank();
    std::vector<SignedPerm> out;
    auto perms = all_perms(r);
    switch (f.kind) {
    case FactorKind::Torus: {
        SignedPerm w{perms[0], std::vector<int>(r, c == Coset::twist ? -1 : 1)};
        out.push_back(w);
        break;
    }
    case FactorKind::GL:
        for (const auto& p : perms) out.push_back({p, std::vector<int>(r, c == Coset::twist ? -1 : 1)});
        break;
    case FactorKind::Sp:
    case FactorKind::SO:
        for (const auto& p : perms)
            for (int mask = 0; mask < (1 << r); ++mask) {
                SignedPerm w{p, std::vector<int>(r, 1)};
                for (int i = 0; i < r; ++i)
                    if (mask >> i & 1) w.sign[i] = -1;
                if (f.kind == FactorKind::SO && f.n % 2 == 0) {
                    bool odd = w.flips() % 2 == 1;
                    if (odd != (c == Coset::outer)) continue;
                }
                out.push_back(w);
            }
        break;
    }
    return out;
}

inline int factor_sgn0(const Factor& f, const SignedPerm& w) {
    int neg = 0;
    for (const auto& a : positive_roots(f))
        if (lex_negative(w.apply(a))) ++neg;
    return sign_pow(neg);
}

} // namespace detail

struct WeylElement {
    std::vector<SignedPerm> parts;  // one per factor
    int sgn0 = 1;
    long long det_w_minus_1 = 0;

    // Block-diagonal action matrix on X*(T), row-major.
    std::vector<long long> matrix() const {
        int d = 0;
        for (const auto& p : parts) d += int(p.perm.size());
        std::vector<long long> m(std::size_t(d) * d, 0);
        int off = 0;
        for (const auto& p : parts) {
            for (std::size_t i = 0; i < p.perm.size(); ++i)
                m[(off + p.perm[i]) * std::size_t(d) + off + i] = p.sign[i];
            off += int(p.perm.size());
        }
        return m;
    }
    int lattice_dim() const {
        int d = 0;
        for (const auto& p : parts) d += int(p.perm.size());
        return d;
    }
    bool regular() const { return det_w_minus_1 != 0; }
    int order() const {
        int o = 1;
        for (const auto& p : parts) {
            std::vector<int> seen(p.perm.size(), 0);
            for (std::size_t i = 0; i < p.perm.size(); ++i) {
                if (seen[i]) continue;
                int len = 0, s = 1;
                for (std::size_t j = i; !seen[j]; j = p.perm[j]) {
                    seen[j] = 1;
                    ++len;
                    s *= p.sign[j];
                }
                int cyc = s == 1 ? len : 2 * len;
                o = std::lcm(o, cyc);
            }
        }
        return o;
    }
};

inline std::vector<WeylElement> weyl_set(const ComponentDatum& c) {
    check_menu(c.base);
    std::vector<std::vector<SignedPerm>> per;
    std::vector<std::vector<int>> sg;
    std::size_t total = 1;
    for (std::size_t f = 0; f < c.coset.size(); ++f) {
        per.push_back(detail::factor_weyl_set(c.base.factors[f], c.coset[f]));
        std::vector<int> s;
        for (const auto& w : per.back()) s.push_back(detail::factor_sgn0(c.base.factors[f], w));
        sg.push_back(std::move(s));
        total *= per.back().size();
    }
    std::vector<WeylElement> out;
    out.reserve(total);
    std::vector<std::size_t> idx(per.size(), 0);
    for (std::size_t t = 0; t < total; ++t) {
        WeylElement w;
        for (std::size_t f = 0; f < per.size(); ++f) {
            w.parts.push_back(per[f][idx[f]]);
            w.sgn0 *= sg[f][idx[f]];
        }
        auto m = w.matrix();
        int d = w.lattice_dim();
        for (int i = 0; i < d; ++i) m[std::size_t(i) * d + i] -= 1;
        w.det_w_minus_1 = detail::int_det(m, d);
        out.push_back(std::move(w));
        for (std::size_t f = 0; f < per.size(); ++f) {
            if (++idx[f] < per[f].size()) break;
            idx[f] = 0;
        }
    }
    return out;
}

// Order of the Weyl group of the identity component.
inline long long weyl_order(const ConnectedShape& s) {
    return (long long)weyl_set(ComponentDatum::identity_of(s)).size();
}

inline Rational i_number(const ComponentDatum& c) {
    auto ws = weyl_set(c);
    Rational sum = 0;
    for (const auto& w : ws)
        if (w.regular()) sum += Rational(w.sgn0, std::llabs(w.det_w_minus_1));
    return sum / Rational((long long)ws.size());
}

// Conjugacy class of a semisimple element with eigenvalues +-1 in one factor.
struct FactorClass {
    int p = 0;  // multiplicity of +1 (or rank of the symmetric part for a twist)
    int q = 0;  // multiplicity of -1 (or rank of the alternating part)
    std::vector<Factor> cent0;  // factors of the identity component of the centralizer
    int pi0 = 1;                // order of the component group of the centralizer in S^0
    bool elliptic = false;
    int neg_image = 0;        // index of the class of -s
    bool minus_in_cent0 = false;  // -I lies in the identity component of the centralizer
    int cent_dim = 0;
};

namespace detail {

inline void push_nontrivial(std::vector<Factor>& v, Factor f) {
    if (!f.trivial()) v.push_back(f);
}

inline std::vector<FactorClass> factor_classes(const Factor& f, Coset c) {
    std::vector<FactorClass> out;
    auto finish = [&](FactorClass k) {
        k.elliptic = std::none_of(k.cent0.begin(), k.cent0.end(), [](const Factor& g) { return g.central_torus(); });
        k.cent_dim = 0;
        for (const auto& g : k.cent0) k.cent_dim += g.dim();
        out.push_back(std::move(k));
    };
    switch (f.kind) {
    case FactorKind::GL:
        if (c == Coset::twist)
            for (int q = 0; q <= f.n; q += 2) {
                FactorClass k;
                k.p = f.n - q;
                k.q = q;
                push_nontrivial(k.cent0, SOf(k.p));
                push_nontrivial(k.cent0, Spf(q));
                k.pi0 = k.p >= 1 ? 2 : 1;
                k.minus_in_cent0 = k.p % 2 == 0;
                finish(k);
            }
        break;
    case FactorKind::Torus:
        if (c == Coset::twist) {
            FactorClass k;
            k.p = f.n;
            k.pi0 = 1 << f.n;
            finish(k);
        }
        break;
    case FactorKind::Sp:
        for (int q = 0; q <= f.n; q += 2) {
            FactorClass k;
            k.p = f.n - q;
            k.q = q;
            push_nontrivial(k.cent0, Spf(k.p));
            push_nontrivial(k.cent0, Spf(q));
            k.minus_in_cent0 = true;
            finish(k);
        }
        break;
    case FactorKind::SO:
        for (int q = (c == Coset::outer ? 1 : 0); q <= f.n; q += 2) {
            FactorClass k;
            k.p = f.n - q;
            k.q = q;
            push_nontrivial(k.cent0, SOf(k.p));
            push_nontrivial(k.cent0, SOf(q));
            k.pi0 = (k.p >= 1 && q >= 1) ? 2 : 1;
            k.minus_in_cent0 = k.p % 2 == 0 && q % 2 == 0;
            finish(k);
        }
        break;
    }
    for (auto& k : out) {
        k.neg_image = -1;
        bool swaps = f.kind == FactorKind::Sp || f.kind == FactorKind::SO;
        for (std::size_t j = 0; j < out.size(); ++j) {
            bool match = swaps ? (out[j].p == k.q && out[j].q == k.p) : (out[j].p == k.p && out[j].q == k.q);
            if (match) k.neg_image = int(j);
        }
    }
    return out;
}

} // namespace detail

// One S^0/Z-conjugacy class of elliptic elements in a component of S/Z.
struct EllipticClass {
    std::vector<int> factor_class;  // index into per-factor class lists
    std::vector<std::pair<int, int>> pattern;  // (p, q) per factor
    ConnectedShape centralizer0;     // identity component of the centralizer, with its central quotient
    Rational pi0 = 1;                // |pi_0| of the centralizer in the quotient
    bool central = false;            // centralizer has full dimension
    std::size_t orbit_size = 1;      // number of classes in the cover fused into this one
};

inline std::vector<EllipticClass> elliptic_classes(const ComponentDatum& c) {
    const auto& fs = c.base.factors;
    const auto& Z = c.base.central_quotient;
    std::vector<std::vector<FactorClass>> per;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        auto all = detail::factor_classes(fs[f], c.coset[f]);
        per.push_back(all);
    }
    std::vector<EllipticClass> out;
    std::size_t total = 1;
    for (const auto& v : per) total *= v.size();
    if (total == 0) return out;
    std::set<std::vector<int>> seen;
    std::vector<int> idx(fs.size(), 0);
    for (std::size_t t = 0; t < total; ++t) {
        bool elliptic = true;
        for (std::size_t f = 0; f < fs.size(); ++f) elliptic = elliptic && per[f][idx[f]].elliptic;
        if (elliptic && !seen.count(idx)) {
            std::size_t stab = 0;
            std::set<std::vector<int>> orbit;
            for (const auto& z : Z) {
                std::vector<int> img = idx;
                for (std::size_t f = 0; f < fs.size(); ++f)
                    if (z[f] == -1) img[f] = per[f][idx[f]].neg_image;
                if (img == idx) ++stab;
                orbit.insert(img);
            }
            seen.insert(orbit.begin(), orbit.end());

            EllipticClass e;
            e.factor_class = idx;
            e.orbit_size = orbit.size();
            std::vector<Factor> cent;
            std::vector<std::size_t> parent;
            int pi0 = 1, cdim = 0;
            for (std::size_t f = 0; f < fs.size(); ++f) {
                const auto& k = per[f][idx[f]];
                e.pattern.emplace_back(k.p, k.q);
                for (const auto& g : k.cent0) {
                    cent.push_back(g);
                    parent.push_back(f);
                }
                pi0 *= k.pi0;
                cdim += k.cent_dim;
            }
            std::vector<SignVector> zin;
            for (const auto& z : Z) {
                bool in = true;
                for (std::size_t f = 0; f < fs.size(); ++f)
                    if (z[f] == -1 && !per[f][idx[f]].minus_in_cent0) in = false;
                if (!in) continue;
                SignVector r;
                for (std::size_t g = 0; g < cent.size(); ++g) r.push_back(z[parent[g]]);
                zin.push_back(r);
            }
            e.centralizer0 = ConnectedShape::make(cent, zin);
            std::size_t zin_order = e.centralizer0.quotient_order();
            e.pi0 = Rational((long long)(stab * pi0 * zin_order), (long long)Z.size());
            e.central = cdim == c.base.dim();
            out.push_back(std::move(e));
        }
        for (std::size_t f = 0; f < fs.size(); ++f) {
            if (++idx[f] < int(per[f].size())) break;
            idx[f] = 0;
        }
    }
    return out;
}

namespace detail {

inline std::string shape_key(const ConnectedShape& s) {
    std::vector<std::size_t> order(s.factors.size());
    std::iota(order.begin(), order.end(), 0);
    auto column = [&](std::size_t f) {
        std::vector<int> col;
        for (const auto& z : s.central_quotient) col.push_back(z[f]);
        return col;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(s.factors[a].key(), column(a)) < std::make_pair(s.factors[b].key(), column(b));
    });
    std::ostringstream os;
    for (auto f : order) os << s.factors[f].name() << ";";
    std::vector<std::string> rows;
    for (const auto& z : s.central_quotient) {
        std::string r;
        for (auto f : order) r += z[f] < 0 ? '-' : '+';
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& r : rows) os << r << "|";
    return os.str();
}

inline ConnectedShape drop_trivial(const ConnectedShape& s) {
    std::vector<std::size_t> keep;
    for (std::size_t f = 0; f < s.factors.size(); ++f)
        if (!s.factors[f].trivial()) keep.push_back(f);
    if (keep.size() == s.factors.size()) return s;
    ConnectedShape t;
    for (auto f : keep) t.factors.push_back(s.factors[f]);
    std::set<SignVector> rows;
    for (const auto& z : s.central_quotient) {
        SignVector r;
        for (auto f : keep) r.push_back(z[f]);
        rows.insert(r);
    }
    t.central_quotient.push_back(SignVector(keep.size(), 1));
    for (const auto& r : rows)
        if (r != t.central_quotient[0]) t.central_quotient.push_back(r);
    return t;
}

struct SigmaMemo {
    std::mutex mu;
    std::map<std::string, Rational> table;
};

inline SigmaMemo& sigma_memo() {
    static SigmaMemo m;
    return m;
}

} // namespace detail

constexpr int kSigmaMaxDepth = 24;

// sigma(S) for connected S, by recursion on dimension: solve e(S) = i(S).
inline Rational sigma(const ConnectedShape& s0, int depth = 0) {
    if (depth > kSigmaMaxDepth) throw SemanticError("sigma recursion too deep: unsupported shape");
    ConnectedShape s = detail::drop_trivial(s0);
    if (s.infinite_center()) return 0;
    if (s.factors.empty()) return 1;
    check_menu(s);
    std::string key = detail::shape_key(s);
    {
        auto& m = detail::sigma_memo();
        std::lock_guard<std::mutex> lk(m.mu);
        auto it = m.table.find(key);
        if (it != m.table.end()) return it->second;
    }
    auto c = ComponentDatum::identity_of(s);
    Rational rest = i_number(c);
    Rational central_weight = 0;
    for (const auto& e : elliptic_classes(c)) {
        if (e.central) central_weight += Rational(1) / e.pi0;
        else rest -= sigma(e.centralizer0, depth + 1) / e.pi0;
    }
    if (central_weight == Rational(0)) throw InvariantError("no central classes in " + s.name());
    Rational out = rest / central_weight;
    auto& m = detail::sigma_memo();
    std::lock_guard<std::mutex> lk(m.mu);
    m.table.emplace(key, out);
    return out;
}

inline Rational e_number(const ComponentDatum& c) {
    check_menu(c.base);
    Rational sum = 0;
    for (const auto& e : elliptic_classes(c)) sum += sigma(e.centralizer0) / e.pi0;
    return sum;
}

} // namespace arthur
