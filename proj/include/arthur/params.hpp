#pragma once

#include "arthur/errors.hpp"
#include "arthur/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace arthur {

enum class Duality { orthogonal, symplectic, none };

inline int duality_sign(Duality d) {
    switch (d) {
    case Duality::orthogonal: return 1;
    case Duality::symplectic: return -1;
    case Duality::none: return 0;
    }
    return 0;
}

inline Duality duality_of_sign(int s) {
    return s > 0 ? Duality::orthogonal : Duality::symplectic;
}

inline const char* duality_name(Duality d) {
    switch (d) {
    case Duality::orthogonal: return "conjugate-orthogonal";
    case Duality::symplectic: return "conjugate-symplectic";
    case Duality::none: return "not-self-dual";
    }
    return "?";
}

struct SimpleParameter {
    std::string label;
    int deg_mu = 1;
    Duality duality = Duality::orthogonal;
    std::optional<std::string> partner;
    int su2_dim = 1;

    int degree() const { return deg_mu * su2_dim; }
    bool self_dual() const { return duality != Duality::none; }

    auto key() const { return std::tie(deg_mu, su2_dim, label); }
    bool operator==(const SimpleParameter& o) const {
        return label == o.label && deg_mu == o.deg_mu && duality == o.duality &&
               partner == o.partner && su2_dim == o.su2_dim;
    }
};

struct Constituent {
    SimpleParameter param;
    int mult = 1;
    bool operator==(const Constituent& o) const { return param == o.param && mult == o.mult; }
};

// Duality class of mu (x) nu^n: nu^n is orthogonal for odd n, symplectic for even n.
inline Duality constituent_parity(const SimpleParameter& sp) {
    if (!sp.self_dual()) return Duality::none;
    return duality_of_sign(duality_sign(sp.duality) * sign_pow(sp.su2_dim - 1));
}

// Sign of the simple datum U(m) through which mu factors.
inline int mu_kappa(const SimpleParameter& sp) {
    return duality_sign(sp.duality) * sign_pow(sp.deg_mu - 1);
}

// kappa_i = delta_i (-1)^{N_i - m_i - n_i + 1}, delta_i the sign of mu_i.
inline int constituent_kappa(const SimpleParameter& sp) {
    return mu_kappa(sp) * sign_pow(sp.degree() - sp.deg_mu - sp.su2_dim + 1);
}

class GlobalParameter {
public:
    GlobalParameter() = default;

    static GlobalParameter make(std::vector<Constituent> cs) {
        if (cs.empty()) throw SemanticError("parameter has no constituents");
        std::map<std::pair<std::string, int>, Constituent> merged;
        std::map<std::string, SimpleParameter> by_label;
        for (auto& c : cs) {
            const auto& p = c.param;
            if (p.label.empty()) throw SemanticError("empty constituent label");
            if (c.mult < 1) throw SemanticError("multiplicity of " + p.label + " must be positive");
            if (p.deg_mu < 1 || p.su2_dim < 1)
                throw SemanticError("degree and su2 dimension of " + p.label + " must be positive");
            if (p.self_dual() == p.partner.has_value())
                throw SemanticError("partner of " + p.label + " must be given iff it is not self-dual");
            auto [it, fresh] = by_label.emplace(p.label, p);
            if (!fresh && (it->second.deg_mu != p.deg_mu || it->second.duality != p.duality ||
                           it->second.partner != p.partner))
                throw SemanticError("conflicting declarations for " + p.label);
            auto k = std::make_pair(p.label, p.su2_dim);
            auto m = merged.find(k);
            if (m == merged.end()) merged.emplace(k, c);
            else m->second.mult += c.mult;
        }
        GlobalParameter g;
        for (auto& [k, c] : merged) g.cs_.push_back(c);
        std::sort(g.cs_.begin(), g.cs_.end(), [](const Constituent& a, const Constituent& b) {
            return a.param.key() < b.param.key();
        });
        for (const auto& c : g.cs_) {
            if (c.param.self_dual()) continue;
            const std::string& q = *c.param.partner;
            if (q == c.param.label) throw SemanticError(c.param.label + " cannot be its own partner");
            int j = g.find(q, c.param.su2_dim);
            if (j < 0) throw SemanticError("partner " + q + " of " + c.param.label + " is missing");
            const auto& d = g.cs_[j];
            if (d.param.self_dual() || *d.param.partner != c.param.label)
                throw SemanticError("partnering of " + c.param.label + " is not an involution");
            if (d.param.deg_mu != c.param.deg_mu)
                throw SemanticError("partners " + c.param.label + ", " + q + " differ in degree");
            if (d.mult != c.mult)
                throw SemanticError("partners " + c.param.label + ", " + q + " differ in multiplicity");
        }
        g.N_ = 0;
        for (const auto& c : g.cs_) g.N_ += c.mult * c.param.degree();
        return g;
    }

    const std::vector<Constituent>& constituents() const { return cs_; }
    const Constituent& operator[](std::size_t i) const { return cs_[i]; }
    std::size_t size() const { return cs_.size(); }
    int N() const { return N_; }

    int find(const std::string& label, int su2_dim) const {
        for (std::size_t i = 0; i < cs_.size(); ++i)
            if (cs_[i].param.label == label && cs_[i].param.su2_dim == su2_dim) return int(i);
        return -1;
    }
    int partner_index(std::size_t i) const {
        const auto& p = cs_[i].param;
        return p.self_dual() ? int(i) : find(*p.partner, p.su2_dim);
    }

    bool is_generic() const {
        return std::all_of(cs_.begin(), cs_.end(), [](const Constituent& c) { return c.param.su2_dim == 1; });
    }

    bool operator==(const GlobalParameter& o) const { return cs_ == o.cs_; }

private:
    std::vector<Constituent> cs_;
    int N_ = 0;
};

struct SimpleDatumTag {
    int N = 1;
    int kappa = 1;
    int parity() const { return sign_pow(N - 1) * kappa; }
    static SimpleDatumTag with_parity(int N, int parity) { return {N, sign_pow(N - 1) * parity}; }
    bool operator==(const SimpleDatumTag& o) const { return N == o.N && kappa == o.kappa; }
};

// Constituent indices split by comparison with the datum parity.
struct IndexSplit {
    std::vector<int> plus;   // same parity as the datum
    std::vector<int> minus;  // opposite parity
    std::vector<int> gl;     // one representative per non-self-dual pair
};

inline IndexSplit split_indices(const GlobalParameter& psi, int parity) {
    IndexSplit s;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const auto& p = psi[i].param;
        if (!p.self_dual()) {
            if (int(i) < psi.partner_index(i)) s.gl.push_back(int(i));
            continue;
        }
        if (duality_sign(constituent_parity(p)) == parity) s.plus.push_back(int(i));
        else s.minus.push_back(int(i));
    }
    return s;
}

inline bool factors_through(const GlobalParameter& psi, const SimpleDatumTag& tag) {
    if (psi.N() != tag.N)
        throw SemanticError("degree mismatch: parameter has N=" + std::to_string(psi.N()) +
                            ", datum has N=" + std::to_string(tag.N));
    auto s = split_indices(psi, tag.parity());
    return std::all_of(s.minus.begin(), s.minus.end(), [&](int i) { return psi[i].mult % 2 == 0; });
}

struct ChainMembership {
    bool in_sim = false;
    bool in_2 = false;
    bool in_ell = false;
    bool in_s_disc = false;
    bool in_disc = false;
    bool is_generic = false;

    bool consistent() const {
        return (!in_sim || in_2) && (!in_2 || in_ell) && (!in_ell || in_disc) &&
               (!in_2 || in_s_disc) && (!in_s_disc || in_disc);
    }
};

// Flags of the chains sim < 2 < ell < disc and 2 < s-disc < disc, read off from the
// centralizer O(l) x Sp(l) x GL(l) (or, for the twisted group, from its connected
// twisted centralizer).
inline ChainMembership classify(const GlobalParameter& psi, std::optional<SimpleDatumTag> tag = std::nullopt) {
    ChainMembership m;
    m.is_generic = psi.is_generic();
    if (!tag) {
        bool no_pairs = std::all_of(psi.constituents().begin(), psi.constituents().end(),
                                    [](const Constituent& c) { return c.param.self_dual(); });
        bool mult_one = std::all_of(psi.constituents().begin(), psi.constituents().end(),
                                    [](const Constituent& c) { return c.mult == 1; });
        m.in_sim = m.in_2 = psi.size() == 1 && psi[0].mult == 1 && psi[0].param.self_dual();
        m.in_ell = no_pairs && mult_one;
        m.in_s_disc = m.in_disc = no_pairs;
        return m;
    }
    if (!factors_through(psi, *tag)) return m;
    auto s = split_indices(psi, tag->parity());
    bool finite_center = s.gl.empty();
    bool plus_le2 = std::all_of(s.plus.begin(), s.plus.end(), [&](int i) { return psi[i].mult <= 2; });
    bool plus_one = std::all_of(s.plus.begin(), s.plus.end(), [&](int i) { return psi[i].mult == 1; });
    bool plus_not2 = std::all_of(s.plus.begin(), s.plus.end(), [&](int i) { return psi[i].mult != 2; });
    m.in_disc = finite_center;
    m.in_s_disc = finite_center && plus_not2;
    m.in_ell = finite_center && s.minus.empty() && plus_le2;
    m.in_2 = finite_center && s.minus.empty() && plus_one;
    m.in_sim = m.in_2 && s.plus.size() == 1;
    return m;
}

} // namespace arthur
