#pragma once

#include "arthur/params.hpp"
#include "arthur/weylnum.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace arthur {

inline std::string constituent_name(const SimpleParameter& p) {
    return p.label + "[" + std::to_string(p.su2_dim) + "]";
}

// S_psi = prod_{I+} O(l_i) x prod_{I-} Sp(l_i) x prod_J GL(l_j)
struct CentralizerShape {
    SimpleDatumTag tag;
    IndexSplit split;
    std::vector<int> l;  // multiplicity per constituent index
    std::vector<std::string> names;

    int l_of(int i) const { return l[i]; }

    std::string name() const {
        std::vector<std::string> parts;
        for (int i : split.plus) parts.push_back("O(" + std::to_string(l[i]) + ")");
        for (int i : split.minus) parts.push_back("Sp(" + std::to_string(l[i]) + ")");
        for (int j : split.gl) parts.push_back("GL(" + std::to_string(l[j]) + ")");
        std::string out;
        for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " x " : "") + parts[k];
        return out.empty() ? "1" : out;
    }

    bool all_plus_even() const {
        return std::all_of(split.plus.begin(), split.plus.end(), [&](int i) { return l[i] % 2 == 0; });
    }

    // Identity component SO(l_i) x Sp(l_i) x GL(l_j), without trivial factors.
    ConnectedShape identity_component() const {
        std::vector<Factor> fs;
        for (int i : split.plus)
            if (l[i] >= 2) fs.push_back(SOf(l[i]));
        for (int i : split.minus) fs.push_back(Spf(l[i]));
        for (int j : split.gl) fs.push_back(GLf(l[j]));
        return ConnectedShape::make(fs);
    }

    // Identity component of S_psi / {+-1}; -1 lies in it iff every O(l_i) has l_i even.
    ConnectedShape reduced_identity_component() const {
        auto s = identity_component();
        if (!all_plus_even() || s.factors.empty()) return s;
        return ConnectedShape::make(s.factors, {SignVector(s.factors.size(), -1)});
    }

    bool finite_center() const {
        return split.gl.empty() &&
               std::none_of(split.plus.begin(), split.plus.end(), [&](int i) { return l[i] == 2; });
    }
};

inline CentralizerShape centralizer_shape(const GlobalParameter& psi, const SimpleDatumTag& tag) {
    if (!factors_through(psi, tag)) throw SemanticError("parameter does not factor through the datum");
    CentralizerShape s;
    s.tag = tag;
    s.split = split_indices(psi, tag.parity());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        s.l.push_back(psi[i].mult);
        s.names.push_back(constituent_name(psi[i].param));
    }
    return s;
}

// Sigma/<sigma-bar>: functions on a set of indices with values in Z/2, modulo the
// function that is 1 exactly on the odd-multiplicity indices.
struct FiniteTwoGroup {
    std::vector<std::string> labels;
    std::vector<int> l;
    unsigned sigma_bar = 0;

    static FiniteTwoGroup make(std::vector<std::string> labels, std::vector<int> l) {
        FiniteTwoGroup g;
        g.labels = std::move(labels);
        g.l = std::move(l);
        if (g.l.size() > 30) throw SemanticError("too many generators");
        for (std::size_t i = 0; i < g.l.size(); ++i)
            if (g.l[i] % 2) g.sigma_bar |= 1u << i;
        return g;
    }

    std::size_t rank() const { return l.size(); }
    unsigned full_mask() const { return rank() == 0 ? 0u : (rank() >= 32 ? ~0u : (1u << rank()) - 1u); }
    unsigned canonical(unsigned m) const { return std::min(m, m ^ sigma_bar); }

    std::size_t order() const {
        if (rank() == 0) return 1;
        return sigma_bar == 0 ? std::size_t(1) << rank() : std::size_t(1) << (rank() - 1);
    }

    std::vector<unsigned> elements() const {
        std::vector<unsigned> out;
        for (unsigned m = 0; m <= full_mask(); ++m) {
            if (canonical(m) == m) out.push_back(m);
            if (m == full_mask()) break;
        }
        return out;
    }

    std::vector<int> sign_vector(unsigned m) const {
        std::vector<int> v;
        for (std::size_t i = 0; i < rank(); ++i) v.push_back(m >> i & 1 ? -1 : 1);
        return v;
    }
};

inline FiniteTwoGroup component_group(const CentralizerShape& s) {
    std::vector<std::string> labels;
    std::vector<int> l;
    for (int i : s.split.plus) {
        labels.push_back(s.names[i]);
        l.push_back(s.l[i]);
    }
    return FiniteTwoGroup::make(labels, l);
}

// An element of Norm(T, S_psi) modulo T, realized factor by factor.
struct NormalizerElement {
    std::vector<SignedPerm> parts;  // one per factor: I+ then I- then J
    std::vector<int> d;             // e_0 sign data on O(odd) factors, 1 elsewhere

    bool operator<(const NormalizerElement& o) const { return std::tie(parts, d) < std::tie(o.parts, o.d); }
    bool operator==(const NormalizerElement& o) const { return parts == o.parts && d == o.d; }
};

struct LeviDiagram {
    CentralizerShape shape;
    FiniteTwoGroup S;
    std::vector<int> factor_index;       // constituent index per factor
    std::vector<char> factor_is_plus;
    std::vector<NormalizerElement> N;    // canonical representatives
    std::vector<unsigned> N_to_S;        // component in S (canonical mask)
    std::vector<std::size_t> N_to_W;     // index into W
    std::vector<std::vector<SignedPerm>> W;
    std::vector<char> W_in_W0;
    std::size_t W0_order = 0;
    std::vector<unsigned> S1;            // canonical masks
    std::vector<unsigned> R;             // masks over the even-l positions of S
    unsigned even_positions = 0;         // mask over S positions with l even

    unsigned S_to_R(unsigned m) const { return m & even_positions; }
    unsigned section_R_to_S(unsigned r) const { return S.canonical(r & even_positions); }
    std::size_t section_R_to_N(unsigned r) const;
    std::size_t W_order() const { return W.size(); }
    std::size_t N_order() const { return N.size(); }

    struct Check {
        bool order_identities = false;
        bool exact_component_sequence = false;
        bool exact_weyl_sequence = false;
        bool s1_to_r_trivial = false;
        bool section_ok = false;
        bool all() const {
            return order_identities && exact_component_sequence && exact_weyl_sequence && s1_to_r_trivial &&
                   section_ok;
        }
    };
    Check verify() const;
};

namespace detail {

inline NormalizerElement canonical_normalizer(const LeviDiagram& D, NormalizerElement u) {
    bool has_odd = false;
    for (std::size_t f = 0; f < D.factor_index.size(); ++f)
        if (D.factor_is_plus[f] && D.shape.l[D.factor_index[f]] % 2) has_odd = true;
    if (!has_odd) return u;
    NormalizerElement v = u;
    for (std::size_t f = 0; f < D.factor_index.size(); ++f)
        if (D.factor_is_plus[f] && D.shape.l[D.factor_index[f]] % 2) v.d[f] = -v.d[f];
    return std::min(u, v);
}

inline unsigned normalizer_component(const LeviDiagram& D, const NormalizerElement& u) {
    unsigned m = 0;
    for (std::size_t f = 0, pos = 0; f < D.factor_index.size(); ++f) {
        if (!D.factor_is_plus[f]) continue;
        int li = D.shape.l[D.factor_index[f]];
        int det = li % 2 ? u.d[f] : sign_pow(u.parts[f].flips());
        if (det < 0) m |= 1u << pos;
        ++pos;
    }
    return D.S.canonical(m);
}

} // namespace detail

inline LeviDiagram levi_diagram(const GlobalParameter& psi, const SimpleDatumTag& tag) {
    LeviDiagram D;
    D.shape = centralizer_shape(psi, tag);
    D.S = component_group(D.shape);
    std::vector<std::vector<SignedPerm>> per;
    std::vector<std::vector<int>> dvals;
    std::vector<Factor> w0_factors;
    auto add = [&](int i, bool plus, Factor f, Coset c1, bool both_cosets, bool odd) {
        D.factor_index.push_back(i);
        D.factor_is_plus.push_back(plus);
        auto ws = detail::factor_weyl_set(f, c1);
        if (both_cosets) {
            auto more = detail::factor_weyl_set(f, Coset::outer);
            ws.insert(ws.end(), more.begin(), more.end());
        }
        per.push_back(ws);
        dvals.push_back(odd ? std::vector<int>{1, -1} : std::vector<int>{1});
        w0_factors.push_back(f);
    };
    for (int i : D.shape.split.plus) {
        int li = D.shape.l[i];
        add(i, true, SOf(li), Coset::identity, li % 2 == 0 && li > 0, li % 2 == 1);
    }
    for (int i : D.shape.split.minus) add(i, false, Spf(D.shape.l[i]), Coset::identity, false, false);
    for (int j : D.shape.split.gl) add(j, false, GLf(D.shape.l[j]), Coset::identity, false, false);
    for (std::size_t p = 0; p < D.S.rank(); ++p)
        if (D.S.l[p] % 2 == 0) D.even_positions |= 1u << p;

    std::size_t total = 1;
    for (std::size_t f = 0; f < per.size(); ++f) total *= per[f].size() * dvals[f].size();
    if (total > 2000000) throw SemanticError("normalizer too large to enumerate");
    std::set<NormalizerElement> Nset;
    for (std::size_t t = 0; t < total; ++t) {
        NormalizerElement u;
        std::size_t rest = t;
        for (std::size_t f = 0; f < per.size(); ++f) {
            std::size_t a = rest % per[f].size();
            rest /= per[f].size();
            std::size_t b = rest % dvals[f].size();
            rest /= dvals[f].size();
            u.parts.push_back(per[f][a]);
            u.d.push_back(dvals[f][b]);
        }
        Nset.insert(detail::canonical_normalizer(D, u));
    }
    D.N.assign(Nset.begin(), Nset.end());

    std::map<std::vector<SignedPerm>, std::size_t> widx;
    for (const auto& u : D.N) {
        D.N_to_S.push_back(detail::normalizer_component(D, u));
        auto it = widx.find(u.parts);
        if (it == widx.end()) {
            it = widx.emplace(u.parts, D.W.size()).first;
            D.W.push_back(u.parts);
        }
        D.N_to_W.push_back(it->second);
    }
    for (const auto& w : D.W) {
        bool in = true;
        for (std::size_t f = 0; f < w.size(); ++f) {
            const auto& fa = w0_factors[f];
            if (fa.kind == FactorKind::SO && fa.n % 2 == 0 && w[f].flips() % 2) in = false;
        }
        D.W_in_W0.push_back(in);
        if (in) ++D.W0_order;
    }
    std::set<unsigned> s1;
    for (std::size_t k = 0; k < D.N.size(); ++k)
        if (D.W_in_W0[D.N_to_W[k]] && std::all_of(D.W[D.N_to_W[k]].begin(), D.W[D.N_to_W[k]].end(),
                                                  [](const SignedPerm& p) {
                                                      for (std::size_t i = 0; i < p.perm.size(); ++i)
                                                          if (p.perm[i] != int(i) || p.sign[i] != 1) return false;
                                                      return true;
                                                  }))
            s1.insert(D.N_to_S[k]);
    D.S1.assign(s1.begin(), s1.end());
    std::set<unsigned> r;
    for (unsigned m : D.S.elements()) r.insert(D.S_to_R(m));
    D.R.assign(r.begin(), r.end());
    return D;
}

inline std::size_t LeviDiagram::section_R_to_N(unsigned r) const {
    NormalizerElement u;
    for (std::size_t f = 0, pos = 0; f < factor_index.size(); ++f) {
        int li = shape.l[factor_index[f]];
        int rank = int(N.front().parts[f].perm.size());
        SignedPerm p{std::vector<int>(rank), std::vector<int>(rank, 1)};
        std::iota(p.perm.begin(), p.perm.end(), 0);
        if (factor_is_plus[f]) {
            if (li % 2 == 0 && (r >> pos & 1)) p.sign[rank - 1] = -1;
            ++pos;
        }
        u.parts.push_back(p);
        u.d.push_back(1);
    }
    u = detail::canonical_normalizer(*this, u);
    auto it = std::lower_bound(N.begin(), N.end(), u);
    if (it == N.end() || !(*it == u)) throw InvariantError("section lands outside the normalizer");
    return std::size_t(it - N.begin());
}

inline LeviDiagram::Check LeviDiagram::verify() const {
    Check c;
    std::size_t s1_order = S1.size();
    c.order_identities = N.size() == S.order() * W0_order && N.size() == W.size() * s1_order &&
                         R.size() * W0_order == W.size();
    // kernel of N -> S is W0 and N -> S is onto
    std::size_t ker = 0;
    std::set<unsigned> img;
    for (std::size_t k = 0; k < N.size(); ++k) {
        img.insert(N_to_S[k]);
        if (N_to_S[k] == 0) {
            ++ker;
            if (!W_in_W0[N_to_W[k]]) return c;
        }
    }
    c.exact_component_sequence = ker == W0_order && img.size() == S.order();
    // kernel of N -> W is S1, injecting into S
    std::size_t ker_w = 0;
    std::set<unsigned> s1img;
    for (std::size_t k = 0; k < N.size(); ++k) {
        const auto& w = W[N_to_W[k]];
        bool id = std::all_of(w.begin(), w.end(), [](const SignedPerm& p) {
            for (std::size_t i = 0; i < p.perm.size(); ++i)
                if (p.perm[i] != int(i) || p.sign[i] != 1) return false;
            return true;
        });
        if (id) {
            ++ker_w;
            s1img.insert(N_to_S[k]);
        }
    }
    c.exact_weyl_sequence = ker_w == s1_order && s1img.size() == s1_order;
    c.s1_to_r_trivial = std::all_of(S1.begin(), S1.end(), [&](unsigned m) { return S_to_R(m) == 0; }) &&
                        s1_order * R.size() == S.order();
    c.section_ok = true;
    for (unsigned r : R) {
        if (S_to_R(section_R_to_S(r)) != r) c.section_ok = false;
        std::size_t k = section_R_to_N(r);
        if (S_to_R(N_to_S[k]) != r || N_to_S[k] != section_R_to_S(r)) c.section_ok = false;
    }
    return c;
}

// A local constituent arising from a global one.
struct LocalPiece {
    std::string label;
    int parity = 1;
    int count = 1;  // copies of this local constituent inside one copy of the global one
};

using Refinement = std::map<int, std::vector<LocalPiece>>;  // keyed by constituent index

struct LocalizationMap {
    FiniteTwoGroup source;
    FiniteTwoGroup target;
    std::vector<std::vector<int>> matrix;  // target position x source position, counts mod 2
    std::vector<std::pair<unsigned, unsigned>> table;
    bool injective = false;

    unsigned apply(unsigned m) const {
        unsigned out = 0;
        for (std::size_t c = 0; c < target.rank(); ++c) {
            int s = 0;
            for (std::size_t p = 0; p < source.rank(); ++p)
                if (m >> p & 1) s += matrix[c][p];
            if (s % 2) out |= 1u << c;
        }
        return target.canonical(out);
    }
};

inline Refinement identity_refinement(const GlobalParameter& psi, const CentralizerShape& s) {
    Refinement r;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (!psi[i].param.self_dual()) continue;
        r[int(i)] = {LocalPiece{s.names[i], duality_sign(constituent_parity(psi[i].param)), 1}};
    }
    return r;
}

inline LocalizationMap localization_map(const GlobalParameter& psi, const CentralizerShape& s,
                                        const Refinement& ref) {
    LocalizationMap M;
    M.source = component_group(s);
    std::map<std::string, int> local_parity, local_mult;
    std::vector<std::string> order;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (!psi[i].param.self_dual()) continue;
        auto it = ref.find(int(i));
        if (it == ref.end()) throw SemanticError("refinement misses constituent " + s.names[i]);
        int gp = duality_sign(constituent_parity(psi[i].param));
        for (const auto& pc : it->second) {
            if (pc.count < 1) throw SemanticError("local piece count must be positive");
            if (pc.parity != gp)
                throw SemanticError("local piece " + pc.label + " does not preserve the parity of " + s.names[i]);
            auto [lp, fresh] = local_parity.emplace(pc.label, pc.parity);
            if (!fresh && lp->second != pc.parity) throw SemanticError("local label " + pc.label + " has two parities");
            if (fresh) order.push_back(pc.label);
            local_mult[pc.label] += pc.count * s.l[i];
        }
    }
    for (const auto& [k, v] : ref)
        if (k < 0 || k >= int(psi.size()) || !psi[k].param.self_dual())
            throw SemanticError("refinement names an unknown constituent");
    std::vector<std::string> tl;
    std::vector<int> tm;
    int parity = s.tag.parity();
    for (const auto& lab : order)
        if (local_parity[lab] == parity) {
            tl.push_back(lab);
            tm.push_back(local_mult[lab]);
        }
    M.target = FiniteTwoGroup::make(tl, tm);
    M.matrix.assign(tl.size(), std::vector<int>(M.source.rank(), 0));
    for (std::size_t p = 0; p < s.split.plus.size(); ++p) {
        int i = s.split.plus[p];
        for (const auto& pc : ref.at(i)) {
            auto c = std::find(tl.begin(), tl.end(), pc.label) - tl.begin();
            M.matrix[c][p] += pc.count;
        }
    }
    std::set<unsigned> image;
    for (unsigned m : M.source.elements()) {
        unsigned t = M.apply(m);
        M.table.emplace_back(m, t);
        image.insert(t);
    }
    if (M.apply(M.source.sigma_bar) != 0) throw InvariantError("localization does not respect the central element");
    M.injective = image.size() == M.source.order();
    return M;
}

} // namespace arthur
