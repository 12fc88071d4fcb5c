#pragma once

#include "arthur/errors.hpp"
#include "arthur/multiplicity.hpp"
#include "arthur/params.hpp"
#include "arthur/signs.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arthur {

struct MuDecl {
    std::string name;
    int deg = 1;
    Duality sd = Duality::orthogonal;
    bool operator==(const MuDecl& o) const { return name == o.name && deg == o.deg && sd == o.sd; }
};

struct PsiTerm {
    int mult = 1;
    std::string name;
    bool dual = false;  // NAME* : the dual of a non-self-dual mu
    int nu = 1;
    bool operator==(const PsiTerm& o) const {
        return mult == o.mult && name == o.name && dual == o.dual && nu == o.nu;
    }
};

struct PlaceDecl {
    std::string name;
    PlaceKind kind = PlaceKind::inert;
    bool operator==(const PlaceDecl& o) const { return name == o.name && kind == o.kind; }
};

struct ParameterDocument {
    int N = 1;
    int parity = 1;
    std::vector<MuDecl> mus;
    std::vector<PsiTerm> psi;
    std::optional<std::vector<std::tuple<std::string, std::string, int>>> roots;
    std::optional<std::vector<PlaceDecl>> places;

    bool operator==(const ParameterDocument& o) const {
        return N == o.N && parity == o.parity && mus == o.mus && psi == o.psi && roots == o.roots &&
               places == o.places;
    }

    SimpleDatumTag tag() const { return SimpleDatumTag::with_parity(N, parity); }

    GlobalParameter parameter() const {
        std::map<std::string, MuDecl> by_name;
        for (const auto& m : mus) by_name[m.name] = m;
        std::vector<Constituent> cs;
        for (const auto& t : psi) {
            auto it = by_name.find(t.name);
            if (it == by_name.end()) throw SemanticError("undeclared mu " + t.name);
            const auto& m = it->second;
            SimpleParameter sp;
            sp.deg_mu = m.deg;
            sp.duality = m.sd;
            sp.su2_dim = t.nu;
            sp.label = t.dual ? t.name + "*" : t.name;
            if (t.dual && m.sd != Duality::none) throw SemanticError(t.name + " is self-dual; " + t.name + "* is not defined");
            if (m.sd == Duality::none) sp.partner = t.dual ? t.name : t.name + "*";
            cs.push_back({sp, t.mult});
        }
        auto g = GlobalParameter::make(cs);
        if (g.N() != N) throw SemanticError("parameter has degree " + std::to_string(g.N()) + " but the group is U(" +
                                            std::to_string(N) + ")");
        return g;
    }

    RootNumberTable table() const {
        RootNumberTable t;
        if (roots)
            for (const auto& [a, b, v] : *roots) t.set(a, b, v);
        return t;
    }

    GlobalPlacesModel places_model() const {
        GlobalPlacesModel m;
        if (places)
            for (const auto& p : *places) m.places.push_back({p.name, p.kind, std::nullopt});
        return m;
    }
};

namespace detail {

struct Token {
    enum Kind { ident, integer, symbol, tensor, end } kind = end;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip();
            Token t;
            t.line = line_;
            t.col = col_;
            if (i_ >= s_.size()) {
                out.push_back(t);
                return out;
            }
            char c = s_[i_];
            if (std::isalpha((unsigned char)c) || c == '_') {
                t.kind = Token::ident;
                while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) t.text += advance();
            } else if (std::isdigit((unsigned char)c)) {
                t.kind = Token::integer;
                while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) t.text += advance();
                if (t.text.size() > 6) throw ParseError("integer too large", t.line, t.col);
            } else if (s_.compare(i_, 3, "(x)") == 0) {
                t.kind = Token::tensor;
                t.text = "(x)";
                advance();
                advance();
                advance();
            } else if (std::string("(){}[]:,=+-*").find(c) != std::string::npos) {
                t.kind = Token::symbol;
                t.text = std::string(1, advance());
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
            }
            out.push_back(t);
        }
    }

private:
    char advance() {
        char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
            } else if (std::isspace((unsigned char)c)) {
                advance();
            } else {
                break;
            }
        }
    }
    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    ParameterDocument document() {
        ParameterDocument d;
        keyword("group");
        keyword("U");
        sym("(");
        d.N = integer();
        if (d.N < 1) fail("group degree must be positive", prev_);
        sym(")");
        keyword("parity");
        d.parity = sign();
        while (is_ident("mu")) d.mus.push_back(decl());
        keyword("psi");
        sym("=");
        d.psi.push_back(term());
        while (is_sym("+")) {
            next();
            d.psi.push_back(term());
        }
        if (is_ident("roots")) {
            next();
            sym("{");
            d.roots.emplace();
            while (!is_sym("}")) {
                auto a = ident();
                sym(",");
                auto b = ident();
                sym(":");
                int v = sign();
                d.roots->emplace_back(a, b, v);
                if (is_sym(",")) next();
            }
            sym("}");
        }
        if (is_ident("places")) {
            next();
            sym("[");
            d.places.emplace();
            while (!is_sym("]")) {
                PlaceDecl p;
                p.name = ident();
                sym(":");
                auto k = peek();
                auto w = ident();
                if (w == "inert") p.kind = PlaceKind::inert;
                else if (w == "split") p.kind = PlaceKind::split;
                else fail("expected inert or split", k);
                d.places->push_back(p);
                if (is_sym(",")) next();
            }
            sym("]");
        }
        if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'", peek());
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.col); }
    const Token& peek() const { return t_[p_]; }
    Token next() {
        prev_ = t_[p_];
        if (t_[p_].kind != Token::end) ++p_;
        return prev_;
    }
    bool is_sym(const char* s) const { return peek().kind == Token::symbol && peek().text == s; }
    bool is_ident(const char* s) const { return peek().kind == Token::ident && peek().text == s; }
    std::string describe(const Token& t) const { return t.kind == Token::end ? "end of input" : "'" + t.text + "'"; }
    void sym(const char* s) {
        if (!is_sym(s)) fail(std::string("expected '") + s + "', found " + describe(peek()), peek());
        next();
    }
    void keyword(const char* s) {
        if (!is_ident(s)) fail(std::string("expected '") + s + "', found " + describe(peek()), peek());
        next();
    }
    std::string ident() {
        if (peek().kind != Token::ident) fail("expected identifier, found " + describe(peek()), peek());
        return next().text;
    }
    int integer() {
        if (peek().kind != Token::integer) fail("expected integer, found " + describe(peek()), peek());
        return std::stoi(next().text);
    }
    int sign() {
        int s;
        if (is_sym("+")) s = 1;
        else if (is_sym("-")) s = -1;
        else fail("expected sign, found " + describe(peek()), peek());
        next();
        if (peek().kind == Token::integer) {
            if (peek().text != "1") fail("sign must be +1 or -1", peek());
            next();
        }
        return s;
    }
    MuDecl decl() {
        keyword("mu");
        MuDecl m;
        m.name = ident();
        sym(":");
        keyword("deg");
        sym("=");
        m.deg = integer();
        if (m.deg < 1) fail("degree must be positive", prev_);
        sym(",");
        keyword("sd");
        sym("=");
        if (is_ident("none")) {
            next();
            m.sd = Duality::none;
        } else {
            m.sd = duality_of_sign(sign());
        }
        return m;
    }
    PsiTerm term() {
        PsiTerm t;
        if (peek().kind == Token::integer) {
            t.mult = integer();
            if (t.mult < 1) fail("multiplicity must be positive", prev_);
            sym("*");
        }
        t.name = ident();
        if (is_sym("*")) {
            next();
            t.dual = true;
        }
        if (peek().kind != Token::tensor) fail("expected '(x)', found " + describe(peek()), peek());
        next();
        keyword("nu");
        sym("(");
        t.nu = integer();
        if (t.nu < 1) fail("nu dimension must be positive", prev_);
        sym(")");
        return t;
    }

    std::vector<Token> t_;
    std::size_t p_ = 0;
    Token prev_;
};

} // namespace detail

inline ParameterDocument parse_document(const std::string& text) {
    detail::Lexer lx(text);
    detail::Parser ps(lx.run());
    return ps.document();
}

inline std::string print_document(const ParameterDocument& d) {
    std::ostringstream os;
    auto sg = [](int s) { return s > 0 ? "+" : "-"; };
    os << "group U(" << d.N << ") parity " << sg(d.parity) << "\n";
    for (const auto& m : d.mus)
        os << "mu " << m.name << ": deg=" << m.deg << ", sd="
           << (m.sd == Duality::none ? "none" : sg(duality_sign(m.sd))) << "\n";
    os << "psi = ";
    for (std::size_t i = 0; i < d.psi.size(); ++i) {
        const auto& t = d.psi[i];
        if (i) os << " + ";
        if (t.mult != 1) os << t.mult << "*";
        os << t.name << (t.dual ? "*" : "") << " (x) nu(" << t.nu << ")";
    }
    os << "\n";
    if (d.roots) {
        os << "roots {";
        for (const auto& [a, b, v] : *d.roots) os << " " << a << ", " << b << " : " << (v > 0 ? "+1" : "-1");
        os << " }\n";
    }
    if (d.places) {
        os << "places [";
        for (const auto& p : *d.places) os << " " << p.name << ": " << (p.kind == PlaceKind::inert ? "inert" : "split");
        os << " ]\n";
    }
    return os.str();
}

} // namespace arthur
