#pragma once

#include "arthur/centralizer.hpp"
#include "arthur/params.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace arthur {

// nu^a (x) nu^b = sum of nu^j, j = |a-b|+1, ..., a+b-1 in steps of 2
inline std::vector<int> clebsch_gordan(int a, int b) {
    std::vector<int> out;
    for (int j = std::abs(a - b) + 1; j <= a + b - 1; j += 2) out.push_back(j);
    return out;
}

inline int even_constituent_count(int a, int b) {
    return (a + b) % 2 == 1 ? std::min(a, b) : 0;
}

// Global root numbers eps(1/2, mu_k x mu_k'^c), keyed by unordered pairs of mu labels.
class RootNumberTable {
public:
    void set(const std::string& a, const std::string& b, int v) {
        if (v != 1 && v != -1) throw SemanticError("root number must be +1 or -1");
        if (a == b) throw SemanticError("root number entry needs two distinct labels");
        entries_[key(a, b)] = v;
    }
    std::optional<int> find(const std::string& a, const std::string& b) const {
        auto it = entries_.find(key(a, b));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }
    int get(const std::string& a, const std::string& b) const { return find(a, b).value_or(1); }
    const std::map<std::pair<std::string, std::string>, int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    bool operator==(const RootNumberTable& o) const { return entries_ == o.entries_; }

    // `label1 label2 -1` per line, `#` comments
    static RootNumberTable parse(const std::string& text) {
        RootNumberTable t;
        std::istringstream in(text);
        std::string line;
        int ln = 0;
        while (std::getline(in, line)) {
            ++ln;
            auto h = line.find('#');
            if (h != std::string::npos) line.resize(h);
            std::istringstream ls(line);
            std::string a, b, v;
            if (!(ls >> a)) continue;
            if (!(ls >> b >> v)) throw ParseError("expected `label label sign`", ln, 1);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing text in root number entry", ln, 1);
            if (v == "+1" || v == "1" || v == "+") t.set(a, b, 1);
            else if (v == "-1" || v == "-") t.set(a, b, -1);
            else throw ParseError("sign must be +1 or -1", ln, 1);
        }
        return t;
    }

private:
    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    std::map<std::pair<std::string, std::string>, int> entries_;
};

inline bool opposite_mu_parity(const SimpleParameter& a, const SimpleParameter& b) {
    return a.self_dual() && b.self_dual() && a.duality != b.duality;
}

// Rejects same-parity entries other than +1; returns opposite-parity pairs with no entry.
inline std::vector<std::pair<std::string, std::string>> validate_table(const GlobalParameter& psi,
                                                                       const RootNumberTable& t) {
    std::map<std::string, Duality> mu;
    for (const auto& c : psi.constituents())
        if (c.param.self_dual()) mu[c.param.label] = c.param.duality;
    for (const auto& [k, v] : t.entries()) {
        auto a = mu.find(k.first), b = mu.find(k.second);
        if (a == mu.end() || b == mu.end()) continue;
        if (a->second == b->second && v != 1)
            throw SemanticError("root number of same-parity pair " + k.first + ", " + k.second + " must be +1");
    }
    std::vector<std::pair<std::string, std::string>> missing;
    for (auto a = mu.begin(); a != mu.end(); ++a)
        for (auto b = std::next(a); b != mu.end(); ++b)
            if (a->second != b->second && !t.find(a->first, b->first)) missing.emplace_back(a->first, b->first);
    return missing;
}

enum class AdjointKind { RankinSelberg, RankinSelbergDual, AsaiPlus, AsaiMinus };

inline const char* adjoint_kind_name(AdjointKind k) {
    switch (k) {
    case AdjointKind::RankinSelberg: return "RankinSelberg";
    case AdjointKind::RankinSelbergDual: return "RankinSelbergDual";
    case AdjointKind::AsaiPlus: return "AsaiPlus";
    case AdjointKind::AsaiMinus: return "AsaiMinus";
    }
    return "?";
}

struct AdjointTerm {
    AdjointKind kind = AdjointKind::RankinSelberg;
    int k = 0;
    int k2 = 0;
    Duality duality = Duality::orthogonal;
    std::vector<int> su2_dims;
    std::string lambda;
    int dual_term = -1;  // index of the partner term under kappa -> kappa*, or itself
};

inline std::vector<AdjointTerm> adjoint_decomposition(const GlobalParameter& psi, const SimpleDatumTag& tag) {
    auto shape = centralizer_shape(psi, tag);
    auto std_name = [&](int i) { return "std_" + std::to_string(psi[i].mult); };
    std::vector<AdjointTerm> out;
    std::map<std::pair<int, int>, int> rs_index;
    int n = int(psi.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& pa = psi[a].param;
            const auto& pb = psi[b].param;
            AdjointTerm t;
            t.k = a;
            t.k2 = b;
            t.su2_dims = clebsch_gordan(pa.su2_dim, pb.su2_dim);
            t.lambda = std_name(a) + " (x) " + std_name(b);
            if (pa.self_dual() && pb.self_dual()) {
                t.kind = AdjointKind::RankinSelberg;
                t.duality = opposite_mu_parity(pa, pb) ? Duality::symplectic : Duality::orthogonal;
            } else if (psi.partner_index(a) == b) {
                t.kind = AdjointKind::RankinSelbergDual;
                t.duality = Duality::orthogonal;
                t.lambda = std_name(a) + " (x) " + std_name(b) + "*";
            } else {
                t.kind = AdjointKind::RankinSelberg;
                t.duality = Duality::none;
            }
            rs_index[{a, b}] = int(out.size());
            out.push_back(t);
        }
    for (auto& t : out) {
        if (t.duality != Duality::none) {
            t.dual_term = int(&t - out.data());
            continue;
        }
        int a = psi.partner_index(t.k), b = psi.partner_index(t.k2);
        if (a > b) std::swap(a, b);
        t.dual_term = rs_index.at({a, b});
    }
    for (int a = 0; a < n; ++a) {
        if (!psi[a].param.self_dual()) continue;
        for (auto kind : {AdjointKind::AsaiPlus, AdjointKind::AsaiMinus}) {
            AdjointTerm t;
            t.kind = kind;
            t.k = t.k2 = a;
            t.duality = Duality::orthogonal;
            t.su2_dims = clebsch_gordan(psi[a].param.su2_dim, psi[a].param.su2_dim);
            t.lambda = (kind == AdjointKind::AsaiPlus ? "Sym2(" : "Alt2(") + std_name(a) + ")";
            t.dual_term = int(out.size());
            out.push_back(t);
        }
    }
    (void)shape;
    return out;
}

struct SignCharacter {
    std::vector<int> exponent;  // per constituent index, mod 2; zero off I+
    std::vector<int> plus;      // constituent index per position of the component group
    FiniteTwoGroup group;
    unsigned s_psi = 0;
    int value_at_s_psi = 1;
    std::vector<std::pair<std::string, std::string>> missing_entries;

    int eval(unsigned mask) const {
        int e = 0;
        for (std::size_t p = 0; p < plus.size(); ++p)
            if (mask >> p & 1) e += exponent[plus[p]];
        return sign_pow(e);
    }
    // Evaluation on determinants per constituent index (+-1 each).
    int eval_dets(const std::vector<int>& dets) const {
        int v = 1;
        for (std::size_t i = 0; i < exponent.size(); ++i)
            if (exponent[i] % 2 && dets[i] < 0) v = -v;
        return v;
    }
    bool trivial() const {
        for (unsigned m : group.elements())
            if (eval(m) != 1) return false;
        return true;
    }
    // Exponent as a mask over positions of the component group.
    unsigned exponent_mask() const {
        unsigned m = 0;
        for (std::size_t p = 0; p < plus.size(); ++p)
            if (exponent[plus[p]] % 2) m |= 1u << p;
        return m;
    }
};

// Image of nu(-1) in S_psi: determinant (-1)^{(n_i - 1) l_i} on O(l_i).
inline unsigned s_psi_mask(const GlobalParameter& psi, const CentralizerShape& shape) {
    unsigned m = 0;
    for (std::size_t p = 0; p < shape.split.plus.size(); ++p) {
        int i = shape.split.plus[p];
        if ((psi[i].param.su2_dim - 1) * psi[i].mult % 2) m |= 1u << p;
    }
    return m;
}

inline SignCharacter epsilon_character(const GlobalParameter& psi, const SimpleDatumTag& tag,
                                       const RootNumberTable& table) {
    auto shape = centralizer_shape(psi, tag);
    SignCharacter ch;
    ch.missing_entries = validate_table(psi, table);
    ch.group = component_group(shape);
    ch.plus = shape.split.plus;
    ch.exponent.assign(psi.size(), 0);
    int n = int(psi.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& pa = psi[a].param;
            const auto& pb = psi[b].param;
            if (!opposite_mu_parity(pa, pb) || table.get(pa.label, pb.label) != -1) continue;
            int c = even_constituent_count(pa.su2_dim, pb.su2_dim);
            ch.exponent[a] += c * psi[b].mult;
            ch.exponent[b] += c * psi[a].mult;
        }
    std::vector<char> is_plus(psi.size(), 0);
    for (int i : shape.split.plus) is_plus[i] = 1;
    for (int i = 0; i < n; ++i) ch.exponent[i] = is_plus[i] ? ch.exponent[i] % 2 : 0;
    if (ch.eval(ch.group.sigma_bar) != 1) throw InvariantError("epsilon character is not trivial on the center");
    ch.s_psi = ch.group.canonical(s_psi_mask(psi, shape));
    ch.value_at_s_psi = ch.eval(ch.s_psi);
    return ch;
}

inline bool is_epsilon_parameter(const GlobalParameter& psi) {
    if (psi.size() != 2 || psi[0].mult != 1 || psi[1].mult != 1) return false;
    const auto& a = psi[0].param;
    const auto& b = psi[1].param;
    if (!a.self_dual() || !b.self_dual() || a.duality != b.duality) return false;
    int even = 0;
    for (int j : clebsch_gordan(a.su2_dim, b.su2_dim)) even += j % 2 == 0;
    return even % 2 == 1;
}

struct RelativeSignRow {
    std::size_t u = 0;
    unsigned x = 0;
    std::size_t w = 0;
    int eps1 = 1;
    int epsG = 1;
    int r_minus = 1;
};

struct RelativeSigns {
    LeviDiagram diagram;
    std::vector<RelativeSignRow> rows;
    std::vector<int> eps_GM;   // per W element
    std::vector<int> r_minus;  // per W element
    std::vector<int> s0;       // sgn0 of the W element on S_psi^0
    bool consistent = true;    // r-(w_u) = epsG(x_u) eps1(u) for every u
    bool fiber_constant = true;
    bool s0_equals_r_minus = true;
};

namespace detail {

struct WeightModel {
    std::vector<std::vector<std::vector<int>>> weights;  // per constituent, list of weight vectors
    std::vector<int> offset;                             // coordinate offset per factor
    int dim = 0;
};

inline WeightModel weight_model(const GlobalParameter& psi, const LeviDiagram& D) {
    WeightModel M;
    M.weights.resize(psi.size());
    for (std::size_t f = 0; f < D.factor_index.size(); ++f) {
        M.offset.push_back(M.dim);
        M.dim += int(D.N.front().parts[f].perm.size());
    }
    for (std::size_t f = 0; f < D.factor_index.size(); ++f) {
        int i = D.factor_index[f];
        int r = int(D.N.front().parts[f].perm.size());
        auto unit = [&](int a, int s) {
            std::vector<int> v(M.dim, 0);
            v[M.offset[f] + a] = s;
            return v;
        };
        bool gl = std::find(D.shape.split.gl.begin(), D.shape.split.gl.end(), i) != D.shape.split.gl.end();
        if (gl) {
            int j = psi.partner_index(i);
            for (int a = 0; a < r; ++a) {
                M.weights[i].push_back(unit(a, 1));
                M.weights[j].push_back(unit(a, -1));
            }
            continue;
        }
        for (int a = 0; a < r; ++a) {
            M.weights[i].push_back(unit(a, 1));
            M.weights[i].push_back(unit(a, -1));
        }
        if (D.shape.l[i] % 2) M.weights[i].push_back(std::vector<int>(M.dim, 0));
    }
    return M;
}

inline std::vector<int> apply_weyl(const WeightModel& M, const std::vector<SignedPerm>& w, const std::vector<int>& v) {
    std::vector<int> out(v.size(), 0);
    for (std::size_t f = 0; f < w.size(); ++f) {
        const auto& p = w[f];
        for (std::size_t a = 0; a < p.perm.size(); ++a)
            out[M.offset[f] + p.perm[a]] += p.sign[a] * v[M.offset[f] + a];
    }
    return out;
}

inline std::vector<int> vec_add(std::vector<int> a, const std::vector<int>& b, int s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

} // namespace detail

inline RelativeSigns relative_signs(const GlobalParameter& psi, const SimpleDatumTag& tag,
                                    const RootNumberTable& table) {
    RelativeSigns R;
    R.diagram = levi_diagram(psi, tag);
    const auto& D = R.diagram;
    auto M = detail::weight_model(psi, D);
    if (M.dim == 0) throw SemanticError("parameter is square-integrable: no proper Levi subgroup");
    auto eps = epsilon_character(psi, tag, table);

    struct Pair {
        int k, k2, c;
    };
    std::vector<Pair> kminus;
    for (int a = 0; a < int(psi.size()); ++a)
        for (int b = a + 1; b < int(psi.size()); ++b) {
            const auto& pa = psi[a].param;
            const auto& pb = psi[b].param;
            if (!opposite_mu_parity(pa, pb) || table.get(pa.label, pb.label) != -1) continue;
            int c = even_constituent_count(pa.su2_dim, pb.su2_dim);
            if (c) kminus.push_back({a, b, c});
        }

    // positive roots and the parity of |H^-_alpha|
    std::set<std::vector<int>> roots;
    for (const auto& wa : M.weights)
        for (const auto& wb : M.weights)
            for (const auto& x : wa)
                for (const auto& y : wb) {
                    auto d = detail::vec_add(x, y, -1);
                    if (!detail::lex_negative(d) && std::any_of(d.begin(), d.end(), [](int t) { return t != 0; }))
                        roots.insert(d);
                }
    std::map<std::vector<int>, int> hminus;
    for (const auto& alpha : roots) {
        int h = 0;
        for (const auto& p : kminus)
            for (const auto& x : M.weights[p.k])
                for (const auto& y : M.weights[p.k2])
                    if (detail::vec_add(x, y) == alpha) h += p.c;
        hminus[alpha] = h;
    }

    for (const auto& w : D.W) {
        int r = 1;
        for (const auto& alpha : roots)
            if (detail::lex_negative(detail::apply_weyl(M, w, alpha)) && hminus[alpha] % 2) r = -r;
        R.r_minus.push_back(r);
        int s = 1;
        for (std::size_t f = 0; f < w.size(); ++f) {
            int i = D.factor_index[f];
            Factor fa = D.factor_is_plus[f] ? SOf(D.shape.l[i])
                        : std::find(D.shape.split.minus.begin(), D.shape.split.minus.end(), i) !=
                                  D.shape.split.minus.end()
                            ? Spf(D.shape.l[i])
                            : GLf(D.shape.l[i]);
            s *= detail::factor_sgn0(fa, w[f]);
        }
        R.s0.push_back(s);
        if (s != r) R.s0_equals_r_minus = false;
    }

    std::vector<int> f_of(psi.size(), -1);
    for (std::size_t f = 0; f < D.factor_index.size(); ++f) f_of[D.factor_index[f]] = int(f);
    R.eps_GM.assign(D.W.size(), 0);
    for (std::size_t k = 0; k < D.N.size(); ++k) {
        const auto& u = D.N[k];
        RelativeSignRow row;
        row.u = k;
        row.x = D.N_to_S[k];
        row.w = D.N_to_W[k];
        row.epsG = eps.eval(row.x);
        for (const auto& p : kminus) {
            if (psi[p.k].mult % 2 == 0 || psi[p.k2].mult % 2 == 0) continue;
            int fa = f_of[p.k], fb = f_of[p.k2];
            int sa = u.d[fa] * sign_pow(u.parts[fa].flips());
            int sb = u.d[fb] * sign_pow(u.parts[fb].flips());
            if (p.c % 2 && sa * sb < 0) row.eps1 = -row.eps1;
        }
        row.r_minus = R.r_minus[row.w];
        int gm = row.epsG * row.eps1;
        if (row.r_minus != gm) R.consistent = false;
        if (R.eps_GM[row.w] == 0) R.eps_GM[row.w] = gm;
        else if (R.eps_GM[row.w] != gm) R.fiber_constant = false;
        R.rows.push_back(row);
    }
    return R;
}

} // namespace arthur
