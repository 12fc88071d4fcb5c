#pragma once

#include "arthur/centralizer.hpp"
#include "arthur/params.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arthur {

// U(N1) x U(N2), N1 >= N2 >= 0.
struct StandardDatum {
    int N1 = 0;
    int N2 = 0;
    int out_order = 1;
    Rational iota = 1;

    static StandardDatum make(int N1, int N2) {
        if (N1 < N2) std::swap(N1, N2);
        if (N2 < 0 || N1 < 1) throw SemanticError("invalid standard datum");
        StandardDatum d;
        d.N1 = N1;
        d.N2 = N2;
        d.out_order = (N1 == N2) ? 2 : 1;
        d.iota = N2 == 0 ? Rational(1) : (N1 == N2 ? Rational(1, 4) : Rational(1, 2));
        return d;
    }
    bool is_group_itself() const { return N2 == 0; }
    std::string name() const {
        return N2 == 0 ? "U(" + std::to_string(N1) + ")"
                       : "U(" + std::to_string(N1) + ") x U(" + std::to_string(N2) + ")";
    }
    bool operator==(const StandardDatum& o) const { return N1 == o.N1 && N2 == o.N2; }
};

inline std::vector<StandardDatum> enumerate_standard(int N) {
    if (N < 1) throw SemanticError("N must be positive");
    std::vector<StandardDatum> out;
    for (int N2 = 0; 2 * N2 <= N; ++N2) out.push_back(StandardDatum::make(N - N2, N2));
    return out;
}

struct TwistedDatum {
    int N1 = 0;
    int N2 = 0;
    int kappa1 = 1;
    int kappa2 = 1;
    bool is_simple = false;
    Rational iota = Rational(1, 2);

    // Parity of each factor U(N_i) with sign kappa_i.
    int parity1() const { return sign_pow(N1 - 1) * kappa1; }
    int parity2() const { return sign_pow(N2 - 1) * kappa2; }
    std::string name() const {
        auto sg = [](int k) { return k > 0 ? std::string("+") : std::string("-"); };
        if (is_simple) return "U(" + std::to_string(N1) + ")[" + sg(kappa1) + "]";
        return "U(" + std::to_string(N1) + ")[" + sg(kappa1) + "] x U(" + std::to_string(N2) + ")[" +
               sg(kappa2) + "]";
    }
};

inline std::vector<TwistedDatum> enumerate_twisted(int N) {
    if (N < 1) throw SemanticError("N must be positive");
    std::vector<TwistedDatum> out;
    for (int k : {1, -1}) {
        TwistedDatum d;
        d.N1 = N;
        d.kappa1 = k;
        d.kappa2 = 0;
        d.is_simple = true;
        d.iota = Rational(1, 2);
        out.push_back(d);
    }
    for (int N2 = 1; 2 * N2 <= N; ++N2) {
        int N1 = N - N2;
        std::vector<std::pair<int, int>> sigs;
        if ((N1 - N2) % 2 == 0) sigs = {{1, -1}, {-1, 1}};
        else sigs = {{1, 1}, {-1, -1}};
        if (N1 == N2) sigs.resize(1);
        for (auto [k1, k2] : sigs) {
            TwistedDatum d;
            d.N1 = N1;
            d.N2 = N2;
            d.kappa1 = k1;
            d.kappa2 = k2;
            d.iota = Rational(1, 4);
            out.push_back(d);
        }
    }
    return out;
}

// Multiplicities of the eigenvalues +1 and -1 of s on each constituent's factor.
struct EigenPattern {
    std::vector<std::pair<int, int>> counts;  // indexed by constituent
};

struct Correspondence {
    StandardDatum datum;
    int N_plus = 0;
    int N_minus = 0;
    SimpleDatumTag tag_plus;
    SimpleDatumTag tag_minus;
    std::optional<GlobalParameter> psi_plus;
    std::optional<GlobalParameter> psi_minus;
};

inline EigenPattern identity_pattern(const GlobalParameter& psi) {
    EigenPattern e;
    for (const auto& c : psi.constituents()) e.counts.emplace_back(c.mult, 0);
    return e;
}

inline Correspondence correspond(const GlobalParameter& psi, const SimpleDatumTag& tag, const EigenPattern& s) {
    auto shape = centralizer_shape(psi, tag);
    if (s.counts.size() != psi.size()) throw SemanticError("eigenvalue data has wrong length");
    for (std::size_t i = 0; i < psi.size(); ++i) {
        auto [a, b] = s.counts[i];
        if (a < 0 || b < 0 || a + b != psi[i].mult)
            throw SemanticError("eigenvalue counts of " + shape.names[i] + " do not add up to its multiplicity");
    }
    for (int i : shape.split.minus)
        if (s.counts[i].first % 2 || s.counts[i].second % 2)
            throw SemanticError("Sp factor of " + shape.names[i] + " needs even eigenvalue counts");
    for (int j : shape.split.gl)
        if (s.counts[j] != s.counts[psi.partner_index(j)])
            throw SemanticError("GL factor of " + shape.names[j] + " acts on both partners alike");
    std::vector<Constituent> plus, minus;
    Correspondence r;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        auto [a, b] = s.counts[i];
        if (a) plus.push_back({psi[i].param, a});
        if (b) minus.push_back({psi[i].param, b});
        r.N_plus += a * psi[i].param.degree();
        r.N_minus += b * psi[i].param.degree();
    }
    r.datum = StandardDatum::make(r.N_plus, r.N_minus);
    r.tag_plus = {r.N_plus, tag.kappa * sign_pow(tag.N - r.N_plus)};
    r.tag_minus = {r.N_minus, tag.kappa * sign_pow(tag.N - r.N_minus)};
    if (!plus.empty()) r.psi_plus = GlobalParameter::make(plus);
    if (!minus.empty()) r.psi_minus = GlobalParameter::make(minus);
    return r;
}

// Order of the component group of psi' = psi+ x psi- on U(N+) x U(N-).
inline std::size_t endoscopic_component_order(const Correspondence& c) {
    std::size_t o = 1;
    if (c.psi_plus) o *= component_group(centralizer_shape(*c.psi_plus, c.tag_plus)).order();
    if (c.psi_minus) o *= component_group(centralizer_shape(*c.psi_minus, c.tag_minus)).order();
    return o;
}

// A semisimple representative of x in S_psi: one -1 eigenvalue on each O(l_i) with x_i = 1.
inline EigenPattern representative(const GlobalParameter& psi, const CentralizerShape& shape, unsigned mask) {
    EigenPattern e = identity_pattern(psi);
    for (std::size_t p = 0; p < shape.split.plus.size(); ++p) {
        int i = shape.split.plus[p];
        if (mask >> p & 1) e.counts[i] = {psi[i].mult - 1, 1};
    }
    return e;
}

struct CollapseRow {
    unsigned x = 0;
    StandardDatum datum;
    std::size_t component_order = 1;
    Rational lhs;            // iota(G, G'_x) / |S_{psi'_x}|
    Rational fiber_sum;      // same, summed over the distinct psi' above x
    std::size_t fiber_size = 1;
};

struct CollapseReport {
    std::vector<CollapseRow> rows;
    Rational rhs;  // 1 / |S_psi|
    bool literal_holds = true;
    bool fiber_summed_holds = true;
};

// Checks iota(G,G'_x) |S_{psi'_x}|^{-1} = |S_psi|^{-1} for every x in S_psi, both literally for
// one representative and summed over the endoscopic parameters lying above x.
inline CollapseReport collapse_identity(const GlobalParameter& psi, const SimpleDatumTag& tag) {
    auto shape = centralizer_shape(psi, tag);
    auto S = component_group(shape);
    CollapseReport rep;
    rep.rhs = Rational(1, (long long)S.order());
    for (unsigned x : S.elements()) {
        CollapseRow row;
        row.x = x;
        auto c = correspond(psi, tag, representative(psi, shape, x));
        row.datum = c.datum;
        row.component_order = endoscopic_component_order(c);
        row.lhs = c.datum.iota / Rational((long long)row.component_order);

        // psi' recorded in datum orientation: larger side first, the +1 side first on ties
        auto oriented = [](const Correspondence& k) {
            std::optional<GlobalParameter> a = k.psi_plus, b = k.psi_minus;
            if (k.N_minus > k.N_plus) std::swap(a, b);
            auto key = [](const std::optional<GlobalParameter>& g) {
                std::vector<std::tuple<std::string, int, int>> v;
                if (g)
                    for (const auto& cc : g->constituents()) v.emplace_back(cc.param.label, cc.param.su2_dim, cc.mult);
                return v;
            };
            return std::make_pair(key(a), key(b));
        };
        std::set<decltype(oriented(c))> fiber;
        fiber.insert(oriented(c));
        row.fiber_sum = row.lhs;
        if (S.sigma_bar != 0) {
            auto c2 = correspond(psi, tag, representative(psi, shape, x ^ S.sigma_bar));
            if (fiber.insert(oriented(c2)).second)
                row.fiber_sum += c2.datum.iota / Rational((long long)endoscopic_component_order(c2));
        }
        row.fiber_size = fiber.size();
        if (row.lhs != rep.rhs) rep.literal_holds = false;
        if (row.fiber_sum != rep.rhs) rep.fiber_summed_holds = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace arthur
