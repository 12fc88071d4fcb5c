#pragma once

#include "arthur/centralizer.hpp"
#include "arthur/signs.hpp"
#include "arthur/weylnum.hpp"

#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arthur {

// m^G |S_psi|^{-1} eps(s_psi) sigma(S-bar^0)
inline Rational stable_coefficient(const GlobalParameter& psi, const SimpleDatumTag& tag,
                                   const RootNumberTable& table) {
    if (!factors_through(psi, tag)) return 0;
    auto shape = centralizer_shape(psi, tag);
    auto S = component_group(shape);
    auto eps = epsilon_character(psi, tag, table);
    Rational sig = sigma(shape.reduced_identity_component());
    return Rational(eps.value_at_s_psi, (long long)S.order()) * sig;
}

enum class PlaceKind { inert, split };

struct Place {
    std::string name;
    PlaceKind kind = PlaceKind::inert;
    std::optional<Refinement> refinement;  // inert places default to the identity refinement
};

struct GlobalPlacesModel {
    std::vector<Place> places;
};

struct LocalData {
    LocalizationMap map;
    bool trivial = false;  // split place: trivial local group
};

inline std::vector<LocalData> localize(const GlobalParameter& psi, const CentralizerShape& shape,
                                       const GlobalPlacesModel& model) {
    std::vector<LocalData> out;
    for (const auto& pl : model.places) {
        LocalData ld;
        if (pl.kind == PlaceKind::split) {
            ld.trivial = true;
            ld.map.source = component_group(shape);
            ld.map.target = FiniteTwoGroup::make({}, {});
            for (unsigned m : ld.map.source.elements()) ld.map.table.emplace_back(m, 0u);
            ld.map.injective = ld.map.source.order() == 1;
        } else {
            ld.map = localization_map(psi, shape, pl.refinement ? *pl.refinement : identity_refinement(psi, shape));
        }
        out.push_back(std::move(ld));
    }
    return out;
}

// A member of the global packet: one character of each local component group, given by an
// exponent mask over the local generators (trivial on the local central element).
struct PacketMember {
    std::vector<unsigned> local;  // per place

    bool operator<(const PacketMember& o) const { return local < o.local; }
};

inline std::vector<unsigned> local_characters(const FiniteTwoGroup& g) {
    std::vector<unsigned> out;
    for (unsigned e = 0; e <= g.full_mask(); ++e) {
        if (std::popcount(e & g.sigma_bar) % 2 == 0) out.push_back(e);
        if (e == g.full_mask()) break;
    }
    return out;
}

// Pull back of the member's local characters to a character of S_psi, as an exponent mask.
inline unsigned global_character(const std::vector<LocalData>& loc, const PacketMember& m) {
    unsigned g = 0;
    for (std::size_t v = 0; v < loc.size(); ++v) {
        if (loc[v].trivial) continue;
        const auto& M = loc[v].map;
        for (std::size_t p = 0; p < M.source.rank(); ++p) {
            int s = 0;
            for (std::size_t c = 0; c < M.target.rank(); ++c)
                if (m.local[v] >> c & 1) s += M.matrix[c][p];
            if (s % 2) g ^= 1u << p;
        }
    }
    return g;
}

inline bool same_character(const FiniteTwoGroup& S, unsigned e1, unsigned e2) {
    for (unsigned x : S.elements())
        if (std::popcount(x & (e1 ^ e2)) % 2) return false;
    return true;
}

// m(pi) = |S|^{-1} sum_x eps(x) <x, pi>
inline int character_sum_multiplicity(const FiniteTwoGroup& S, unsigned eps_mask, unsigned member_mask) {
    long long sum = 0;
    for (unsigned x : S.elements())
        sum += sign_pow(std::popcount(x & eps_mask)) * sign_pow(std::popcount(x & member_mask));
    if (sum % (long long)S.order() != 0) throw InvariantError("character sum is not an integer");
    long long m = sum / (long long)S.order();
    if (m != 0 && m != 1) throw InvariantError("multiplicity outside {0, 1}");
    return int(m);
}

inline int spectral_multiplicity(const GlobalParameter& psi, const SimpleDatumTag& tag, const RootNumberTable& table,
                                 const PacketMember& member, const GlobalPlacesModel& model) {
    if (!classify(psi, tag).in_2) throw SemanticError("parameter is not square-integrable for the datum");
    auto shape = centralizer_shape(psi, tag);
    auto eps = epsilon_character(psi, tag, table);
    auto loc = localize(psi, shape, model);
    if (member.local.size() != loc.size()) throw SemanticError("member has wrong number of places");
    for (std::size_t v = 0; v < loc.size(); ++v) {
        const auto& T = loc[v].map.target;
        if ((member.local[v] & ~T.full_mask()) || std::popcount(member.local[v] & T.sigma_bar) % 2)
            throw SemanticError("member character at place " + model.places[v].name + " is not a character");
    }
    return character_sum_multiplicity(eps.group, eps.exponent_mask(), global_character(loc, member));
}

struct PacketSummary {
    GlobalParameter psi;
    std::size_t component_order = 1;
    unsigned epsilon_mask = 0;
    std::size_t members = 0;
    std::size_t selected = 0;
    std::size_t character_matches = 0;
    std::vector<PacketMember> selected_members;
};

struct SpectrumReport {
    std::size_t candidates = 0;  // multiplicity vectors of the right degree
    std::vector<GlobalParameter> excluded;
    std::vector<PacketSummary> packets;
    std::size_t total_selected = 0;
};

inline SpectrumReport decompose_discrete_spectrum(const std::vector<SimpleParameter>& seed, const SimpleDatumTag& tag,
                                                  const RootNumberTable& table, const GlobalPlacesModel& model,
                                                  std::size_t member_limit = 1u << 16) {
    SpectrumReport rep;
    int n = int(seed.size());
    std::vector<int> l(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left != 0) return;
            std::vector<Constituent> cs;
            for (int k = 0; k < n; ++k)
                if (l[k]) cs.push_back({seed[k], l[k]});
            if (cs.empty()) return;
            ++rep.candidates;
            GlobalParameter psi;
            try {
                psi = GlobalParameter::make(cs);
            } catch (const SemanticError&) {
                return;
            }
            if (!classify(psi, tag).in_2) {
                rep.excluded.push_back(psi);
                return;
            }
            auto shape = centralizer_shape(psi, tag);
            auto eps = epsilon_character(psi, tag, table);
            auto loc = localize(psi, shape, model);
            PacketSummary ps;
            ps.psi = psi;
            ps.component_order = eps.group.order();
            ps.epsilon_mask = eps.exponent_mask();
            std::vector<std::vector<unsigned>> chars;
            std::size_t total = 1;
            for (const auto& ld : loc) {
                chars.push_back(local_characters(ld.map.target));
                total *= chars.back().size();
            }
            if (total > member_limit) throw SemanticError("packet too large to enumerate");
            ps.members = total;
            for (std::size_t t = 0; t < total; ++t) {
                PacketMember m;
                std::size_t r = t;
                for (const auto& c : chars) {
                    m.local.push_back(c[r % c.size()]);
                    r /= c.size();
                }
                unsigned g = global_character(loc, m);
                bool match = same_character(eps.group, g, ps.epsilon_mask);
                ps.character_matches += match;
                int mult = character_sum_multiplicity(eps.group, ps.epsilon_mask, g);
                if (mult == 1) {
                    ++ps.selected;
                    ps.selected_members.push_back(m);
                }
            }
            rep.total_selected += ps.selected;
            rep.packets.push_back(std::move(ps));
            return;
        }
        int d = seed[i].degree();
        for (int k = 0; k * d <= left; ++k) {
            l[i] = k;
            rec(i + 1, left - k * d);
        }
        l[i] = 0;
    };
    rec(0, tag.N);
    return rep;
}

} // namespace arthur
