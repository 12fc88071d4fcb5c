#pragma once

#include "arthur/centralizer.hpp"
#include "arthur/dsl.hpp"
#include "arthur/endoscopy.hpp"
#include "arthur/localcalc.hpp"
#include "arthur/multiplicity.hpp"
#include "arthur/params.hpp"
#include "arthur/signs.hpp"
#include "arthur/tadic.hpp"
#include "arthur/weylnum.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace arthur::report {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

inline ordered_json rational(const Rational& q) {
    return ordered_json{{"num", q.numerator()}, {"den", q.denominator()}};
}

inline ordered_json envelope(const std::string& command) {
    return ordered_json{{"schema_version", kSchemaVersion}, {"command", command}};
}

inline ordered_json sign_vector(const FiniteTwoGroup& g, unsigned m) {
    return g.sign_vector(m);
}

inline ordered_json chain(const ChainMembership& c) {
    return ordered_json{{"in_sim", c.in_sim},       {"in_2", c.in_2},       {"in_ell", c.in_ell},
                        {"in_s_disc", c.in_s_disc}, {"in_disc", c.in_disc}, {"is_generic", c.is_generic}};
}

inline ordered_json parameter(const GlobalParameter& psi) {
    ordered_json out = ordered_json::array();
    for (const auto& c : psi.constituents()) {
        ordered_json j{{"label", c.param.label},
                       {"deg_mu", c.param.deg_mu},
                       {"duality", duality_name(c.param.duality)},
                       {"su2_dim", c.param.su2_dim},
                       {"mult", c.mult},
                       {"parity", duality_name(constituent_parity(c.param))}};
        if (c.param.partner) j["partner"] = *c.param.partner;
        out.push_back(j);
    }
    return out;
}

inline ordered_json datum(const SimpleDatumTag& t) {
    return ordered_json{{"N", t.N}, {"kappa", t.kappa}, {"parity", t.parity()}};
}

inline ordered_json classify_report(const ParameterDocument& doc) {
    auto psi = doc.parameter();
    auto tag = doc.tag();
    auto j = envelope("classify");
    j["datum"] = datum(tag);
    j["parameter"] = parameter(psi);
    j["factors_through"] = factors_through(psi, tag);
    j["standard"] = chain(classify(psi, tag));
    j["twisted"] = chain(classify(psi));
    return j;
}

inline ordered_json shape_json(const ConnectedShape& s) {
    ordered_json f = ordered_json::array();
    for (const auto& x : s.factors) f.push_back(x.name());
    ordered_json z = ordered_json::array();
    for (std::size_t k = 1; k < s.central_quotient.size(); ++k) z.push_back(s.central_quotient[k]);
    return ordered_json{{"name", s.name()}, {"factors", f}, {"central_quotient", z}};
}

inline ordered_json centralizer_report(const ParameterDocument& doc) {
    auto psi = doc.parameter();
    auto tag = doc.tag();
    auto shape = centralizer_shape(psi, tag);
    auto S = component_group(shape);
    auto j = envelope("centralizer");
    j["datum"] = datum(tag);
    j["shape"] = shape.name();
    auto names = [&](const std::vector<int>& v) {
        ordered_json a = ordered_json::array();
        for (int i : v) a.push_back(ordered_json{{"constituent", shape.names[i]}, {"l", shape.l[i]}});
        return a;
    };
    j["orthogonal"] = names(shape.split.plus);
    j["symplectic"] = names(shape.split.minus);
    j["general_linear"] = names(shape.split.gl);
    j["component_group"] = ordered_json{{"order", S.order()},
                                        {"generators", S.labels},
                                        {"central_element", sign_vector(S, S.sigma_bar)}};
    ordered_json el = ordered_json::array();
    for (unsigned m : S.elements()) el.push_back(sign_vector(S, m));
    j["component_group"]["elements"] = el;
    j["reduced_identity_component"] = shape_json(shape.reduced_identity_component());
    auto D = levi_diagram(psi, tag);
    auto c = D.verify();
    j["levi_diagram"] = ordered_json{{"N", D.N_order()},
                                     {"W", D.W_order()},
                                     {"W0", D.W0_order},
                                     {"R", D.R.size()},
                                     {"S1", D.S1.size()},
                                     {"exact", c.all()}};
    if (!c.all()) throw InvariantError("Levi diagram is not exact");
    return j;
}

// Component of S-bar_psi indexed by x: outer coset on O(l_i) where x_i = 1.
inline ComponentDatum component_of(const CentralizerShape& shape, unsigned x) {
    std::vector<Factor> fs;
    std::vector<Coset> cs;
    for (std::size_t p = 0; p < shape.split.plus.size(); ++p) {
        fs.push_back(SOf(shape.l[shape.split.plus[p]]));
        cs.push_back(x >> p & 1 ? Coset::outer : Coset::identity);
    }
    for (int i : shape.split.minus) {
        fs.push_back(Spf(shape.l[i]));
        cs.push_back(Coset::identity);
    }
    for (int j : shape.split.gl) {
        fs.push_back(GLf(shape.l[j]));
        cs.push_back(Coset::identity);
    }
    std::vector<SignVector> z;
    if (shape.all_plus_even() && !fs.empty()) z.push_back(SignVector(fs.size(), -1));
    return ComponentDatum::make(ConnectedShape::make(fs, z), cs);
}

inline ordered_json arthur_report(const ParameterDocument& doc) {
    auto psi = doc.parameter();
    auto tag = doc.tag();
    auto table = doc.table();
    auto shape = centralizer_shape(psi, tag);
    auto S = component_group(shape);
    auto j = envelope("arthur");
    j["datum"] = datum(tag);
    auto red = shape.reduced_identity_component();
    j["reduced_identity_component"] = shape_json(red);
    j["sigma"] = rational(sigma(red));
    j["stable_coefficient"] = rational(stable_coefficient(psi, tag, table));
    ordered_json comps = ordered_json::array();
    for (unsigned x : S.elements()) {
        auto c = component_of(shape, x);
        Rational i = i_number(c), e = e_number(c);
        if (i != e) throw InvariantError("i(S) != e(S) on " + c.name());
        comps.push_back(ordered_json{{"x", sign_vector(S, x)}, {"component", c.name()}, {"i", rational(i)}, {"e", rational(e)}});
    }
    j["components"] = comps;
    return j;
}

inline ordered_json standard_json(const StandardDatum& d) {
    return ordered_json{{"N1", d.N1}, {"N2", d.N2}, {"name", d.name()}, {"out_order", d.out_order}, {"iota", rational(d.iota)}};
}

inline ordered_json endoscopy_tables(int N) {
    auto j = envelope("endoscopy");
    j["N"] = N;
    ordered_json st = ordered_json::array();
    for (const auto& d : enumerate_standard(N)) st.push_back(standard_json(d));
    ordered_json tw = ordered_json::array();
    for (const auto& d : enumerate_twisted(N)) {
        ordered_json t{{"N1", d.N1}, {"N2", d.N2}, {"name", d.name()}, {"simple", d.is_simple}, {"kappa1", d.kappa1}};
        if (!d.is_simple) t["kappa2"] = d.kappa2;
        t["iota"] = rational(d.iota);
        if (d.is_simple) t["parity"] = d.parity1();
        else t["parities"] = {d.parity1(), d.parity2()};
        tw.push_back(t);
    }
    j["standard"] = st;
    j["twisted"] = tw;
    return j;
}

inline ordered_json endoscopy_report(const ParameterDocument& doc) {
    auto psi = doc.parameter();
    auto tag = doc.tag();
    auto j = endoscopy_tables(tag.N);
    auto shape = centralizer_shape(psi, tag);
    auto S = component_group(shape);
    auto col = collapse_identity(psi, tag);
    ordered_json rows = ordered_json::array();
    for (const auto& r : col.rows) {
        auto c = correspond(psi, tag, representative(psi, shape, r.x));
        ordered_json row{{"x", sign_vector(S, r.x)}, {"datum", standard_json(r.datum)}};
        row["psi_plus"] = c.psi_plus ? parameter(*c.psi_plus) : ordered_json(nullptr);
        row["psi_minus"] = c.psi_minus ? parameter(*c.psi_minus) : ordered_json(nullptr);
        row["endoscopic_component_order"] = r.component_order;
        row["iota_over_order"] = rational(r.lhs);
        row["fiber_sum"] = rational(r.fiber_sum);
        rows.push_back(row);
    }
    j["correspondence"] = rows;
    j["collapse"] = ordered_json{{"target", rational(col.rhs)},
                                 {"literal_holds", col.literal_holds},
                                 {"fiber_summed_holds", col.fiber_summed_holds}};
    return j;
}

inline ordered_json epsilon_report(const ParameterDocument& doc) {
    auto psi = doc.parameter();
    auto tag = doc.tag();
    auto table = doc.table();
    auto eps = epsilon_character(psi, tag, table);
    auto j = envelope("epsilon");
    j["datum"] = datum(tag);
    ordered_json ex = ordered_json::object();
    for (int i : eps.plus) ex[constituent_name(psi[i].param)] = eps.exponent[i];
    j["exponents"] = ex;
    ordered_json vals = ordered_json::array();
    for (unsigned m : eps.group.elements())
        vals.push_back(ordered_json{{"x", sign_vector(eps.group, m)}, {"value", eps.eval(m)}});
    j["values"] = vals;
    j["trivial"] = eps.trivial();
    j["s_psi"] = sign_vector(eps.group, eps.s_psi);
    j["value_at_s_psi"] = eps.value_at_s_psi;
    ordered_json miss = ordered_json::array();
    for (const auto& [a, b] : eps.missing_entries) miss.push_back({a, b});
    j["missing_root_numbers"] = miss;
    j["is_epsilon_parameter"] = is_epsilon_parameter(psi);
    ordered_json adj = ordered_json::array();
    for (const auto& t : adjoint_decomposition(psi, tag)) {
        adj.push_back(ordered_json{{"kind", adjoint_kind_name(t.kind)},
                                   {"k", constituent_name(psi[t.k].param)},
                                   {"k2", constituent_name(psi[t.k2].param)},
                                   {"duality", duality_name(t.duality)},
                                   {"su2_dims", t.su2_dims},
                                   {"lambda", t.lambda},
                                   {"dual_term", t.dual_term}});
    }
    j["adjoint"] = adj;
    bool proper_levi = false;
    auto shape = centralizer_shape(psi, tag);
    for (int i = 0; i < int(psi.size()); ++i)
        if (shape.l[i] >= 2) proper_levi = true;
    if (proper_levi) {
        auto R = relative_signs(psi, tag, table);
        if (!R.consistent || !R.fiber_constant) throw InvariantError("spectral sign identity fails");
        j["relative_signs"] = ordered_json{{"N", R.diagram.N_order()},
                                           {"W", R.diagram.W_order()},
                                           {"r_minus", R.r_minus},
                                           {"eps_G_over_M", R.eps_GM},
                                           {"sgn0", R.s0},
                                           {"consistent", R.consistent},
                                           {"fiber_constant", R.fiber_constant}};
    } else {
        j["relative_signs"] = nullptr;
    }
    return j;
}

inline ordered_json multiplicity_report(const ParameterDocument& doc) {
    auto psi = doc.parameter();
    auto tag = doc.tag();
    auto table = doc.table();
    auto j = envelope("multiplicity");
    j["datum"] = datum(tag);
    j["stable_coefficient"] = rational(stable_coefficient(psi, tag, table));
    auto model = doc.places_model();
    std::vector<SimpleParameter> seed;
    for (const auto& c : psi.constituents()) seed.push_back(c.param);
    auto rep = decompose_discrete_spectrum(seed, tag, table, model);
    ordered_json packets = ordered_json::array();
    for (const auto& p : rep.packets) {
        ordered_json sel = ordered_json::array();
        for (const auto& m : p.selected_members) sel.push_back(m.local);
        packets.push_back(ordered_json{{"parameter", parameter(p.psi)},
                                       {"component_order", p.component_order},
                                       {"members", p.members},
                                       {"selected", p.selected},
                                       {"character_matches", p.character_matches},
                                       {"selected_members", sel}});
    }
    ordered_json places = ordered_json::array();
    for (const auto& pl : model.places)
        places.push_back(ordered_json{{"name", pl.name}, {"kind", pl.kind == PlaceKind::inert ? "inert" : "split"}});
    j["places"] = places;
    j["candidates"] = rep.candidates;
    j["excluded"] = rep.excluded.size();
    j["packets"] = packets;
    j["total_selected"] = rep.total_selected;
    return j;
}

inline ordered_json term_json(const IsobaricTerm& t) {
    ordered_json a = ordered_json::array();
    for (const auto& s : t) a.push_back(ordered_json{{"r", s.r}, {"k", s.k}, {"lambda", rational(s.lambda)}});
    return a;
}

inline ordered_json tadic_report(int n, int k, FieldCase f) {
    auto j = envelope("tadic");
    j["n"] = n;
    j["k"] = k;
    j["field"] = field_name(f);
    auto e = expand_detailed("r", n, k, f);
    ordered_json terms = ordered_json::array();
    for (const auto& [t, c] : e.combination.terms)
        terms.push_back(ordered_json{{"coefficient", c}, {"term", term_json(t)}, {"text", term_string(t)}});
    j["expansion"] = terms;
    j["w_star"] = w_star(n, k, f);
    j["sgn_w_star"] = perm_sign(w_star(n, k, f));
    auto ts = theta_star("r", n, k, f);
    j["theta_star"] = term_json(ts);
    auto tp = tempered_part(e.combination);
    ordered_json temp = ordered_json::array();
    for (const auto& [t, c] : tp.terms) temp.push_back(ordered_json{{"coefficient", c}, {"term", term_json(t)}});
    j["tempered"] = temp;
    j["sq_int_multiplicity"] = sq_int_multiplicity(ts, "r", n, k);
    auto m2 = mod2_reduce(tp);
    j["tempered_mod2"] = m2.empty() ? 0 : m2.begin()->second;
    j["coefficient_sum"] = e.combination.coefficient_sum();
    j["raw_sum"] = e.raw_sum;
    return j;
}

inline const std::vector<std::string>& document_commands() {
    static const std::vector<std::string> c = {"classify", "centralizer", "arthur", "endoscopy", "epsilon", "multiplicity"};
    return c;
}

inline ordered_json run(const std::string& command, const ParameterDocument& doc) {
    if (command == "classify") return classify_report(doc);
    if (command == "centralizer") return centralizer_report(doc);
    if (command == "arthur") return arthur_report(doc);
    if (command == "endoscopy") return endoscopy_report(doc);
    if (command == "epsilon") return epsilon_report(doc);
    if (command == "multiplicity") return multiplicity_report(doc);
    throw SemanticError("unknown command " + command);
}

} // namespace arthur::report
