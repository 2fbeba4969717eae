#pragma once

/**
 * @file dsl.hpp
 * @brief Ring-expression language: AST, parser and pretty-printer.
 *
 * Grammar (EBNF):
 *
 *     program  = { "let" IDENT "=" ring ";" } ring ;
 *     ring     = rfactor { "x" rfactor } ;
 *     rfactor  = "Z" "/" INT | "F_" INT
 *              | "poly" "(" ring { "," elem } [ "," "var" "=" IDENT ] ")"
 *              | "quot" "(" ring "," elem { "," elem } ")"
 *              | "idealize" "(" ring "," module ")"
 *              | "(" ring ")" | IDENT ;
 *     module   = mfactor { "x" mfactor } ;
 *     mfactor  = "self" | "zero" | "quotmod" "(" elem { "," elem } ")" | "(" module ")" ;
 *     elem     = term { ("+" | "-") term } ;
 *     term     = unary { "*" unary } ;
 *     unary    = "-" unary | power ;
 *     power    = atom [ "^" INT ] ;
 *     atom     = INT | "#" INT | IDENT | "(" elem { "," elem } ")" | "pair" "(" elem "," elem ")" ;
 *
 * A parenthesized product stays a nested product node. "x" is reserved as the
 * product operator between ring and module factors and cannot be a let name.
 */

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oaf/error.hpp"

namespace oaf::dsl {

struct ElemExpr {
    enum class Kind { integer, index, ident, add, sub, mul, neg, pow, tuple, pair };
    Kind kind = Kind::integer;
    std::int64_t value = 0;  // integer, index, pow exponent
    std::string name;        // ident
    std::vector<ElemExpr> args;

    bool operator==(const ElemExpr&) const = default;
};

struct ModuleExpr {
    enum class Kind { self, zero, quotmod, product };
    Kind kind = Kind::self;
    std::vector<ElemExpr> gens;        // quotmod
    std::vector<ModuleExpr> factors;  // product

    bool operator==(const ModuleExpr&) const = default;
};

struct RingExpr {
    enum class Kind { zmod, field, poly, quot, idealize, product, ident };
    Kind kind = Kind::zmod;
    std::int64_t n = 0;              // zmod, field
    std::string name;                // ident; poly variable ("" = default)
    std::vector<RingExpr> children;  // poly/quot/idealize: {base}; product: factors
    std::vector<ElemExpr> elems;     // poly coefficients; quot generators
    std::vector<ModuleExpr> module;  // idealize: exactly one

    bool operator==(const RingExpr&) const = default;
};

struct Program {
    std::vector<std::pair<std::string, RingExpr>> lets;
    RingExpr body;

    bool operator==(const Program&) const = default;
};

// -- lexer ----------------------------------------------------------------

struct Token {
    enum class Kind { integer, ident, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::integer;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance();
            }
            if (t.text.size() > 15) throw SyntaxError(t.line, t.column, "integer literal too large");
            t.value = std::stoll(t.text);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::ident;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                t.text += src[i];
                advance();
            }
        } else if (std::string_view("()/,+-*^#=;").find(c) != std::string_view::npos) {
            t.kind = Token::Kind::symbol;
            t.text = std::string(1, c);
            advance();
        } else {
            throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

// -- parser ---------------------------------------------------------------

namespace detail {

inline bool is_field_name(const std::string& s) {
    if (s.size() < 3 || s.compare(0, 2, "F_") != 0) return false;
    for (std::size_t k = 2; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

/// Names that cannot be element variables.
inline bool is_reserved_variable(const std::string& s) {
    for (const char* k : {"let", "poly", "quot", "idealize", "self", "zero", "quotmod", "pair", "var", "Z"}) {
        if (s == k) return true;
    }
    return is_field_name(s);
}

/// Names that cannot be let bindings; "x" is the product operator.
inline bool is_keyword(const std::string& s) { return s == "x" || is_reserved_variable(s); }

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Program program() {
        Program p;
        while (is_ident("let")) {
            next();
            const Token& name = expect_ident();
            if (is_keyword(name.text)) throw SyntaxError(name.line, name.column, "'" + name.text + "' is reserved");
            expect("=");
            RingExpr r = ring();
            expect(";");
            p.lets.emplace_back(name.text, std::move(r));
        }
        p.body = ring();
        expect_end();
        return p;
    }

    RingExpr ring_only() {
        RingExpr r = ring();
        expect_end();
        return r;
    }

    ElemExpr elem_only() {
        ElemExpr e = elem();
        expect_end();
        return e;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_symbol(const char* s, std::size_t k = 0) const {
        return peek(k).kind == Token::Kind::symbol && peek(k).text == s;
    }
    bool is_ident(const char* s, std::size_t k = 0) const {
        return peek(k).kind == Token::Kind::ident && peek(k).text == s;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        const std::string got = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.line, t.column, msg + ", got " + got);
    }

    void expect(const char* s) {
        if (!is_symbol(s)) fail(std::string("expected '") + s + "'");
        next();
    }
    const Token& expect_ident() {
        if (peek().kind != Token::Kind::ident) fail("expected an identifier");
        return next();
    }
    std::int64_t expect_int() {
        if (peek().kind != Token::Kind::integer) fail("expected an integer");
        return next().value;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::end) fail("expected end of input");
    }

    RingExpr ring() {
        RingExpr first = rfactor();
        if (!is_ident("x")) return first;
        RingExpr prod;
        prod.kind = RingExpr::Kind::product;
        prod.children.push_back(std::move(first));
        while (is_ident("x")) {
            next();
            prod.children.push_back(rfactor());
        }
        return prod;
    }

    RingExpr rfactor() {
        RingExpr r;
        const Token& t = peek();
        if (is_symbol("(")) {
            next();
            r = ring();
            expect(")");
            return r;
        }
        if (t.kind != Token::Kind::ident) fail("expected a ring");
        if (t.text == "Z") {
            next();
            expect("/");
            r.kind = RingExpr::Kind::zmod;
            r.n = expect_int();
        } else if (is_field_name(t.text)) {
            next();
            r.kind = RingExpr::Kind::field;
            if (t.text.size() > 17) throw SyntaxError(t.line, t.column, "field size too large");
            r.n = std::stoll(t.text.substr(2));
        } else if (t.text == "poly") {
            next();
            expect("(");
            r.kind = RingExpr::Kind::poly;
            r.children.push_back(ring());
            while (is_symbol(",")) {
                next();
                if (is_ident("var") && is_symbol("=", 1)) {
                    next();
                    next();
                    const Token& v = expect_ident();
                    if (is_reserved_variable(v.text)) throw SyntaxError(v.line, v.column, "'" + v.text + "' is reserved");
                    r.name = v.text;
                    break;
                }
                r.elems.push_back(elem());
            }
            expect(")");
        } else if (t.text == "quot") {
            next();
            expect("(");
            r.kind = RingExpr::Kind::quot;
            r.children.push_back(ring());
            expect(",");
            r.elems.push_back(elem());
            while (is_symbol(",")) {
                next();
                r.elems.push_back(elem());
            }
            expect(")");
        } else if (t.text == "idealize") {
            next();
            expect("(");
            r.kind = RingExpr::Kind::idealize;
            r.children.push_back(ring());
            expect(",");
            r.module.push_back(module());
            expect(")");
        } else if (is_keyword(t.text)) {
            fail("expected a ring");
        } else {
            r.kind = RingExpr::Kind::ident;
            r.name = next().text;
        }
        return r;
    }

    ModuleExpr module() {
        ModuleExpr first = mfactor();
        if (!is_ident("x")) return first;
        ModuleExpr prod;
        prod.kind = ModuleExpr::Kind::product;
        prod.factors.push_back(std::move(first));
        while (is_ident("x")) {
            next();
            prod.factors.push_back(mfactor());
        }
        return prod;
    }

    ModuleExpr mfactor() {
        ModuleExpr m;
        if (is_symbol("(")) {
            next();
            m = module();
            expect(")");
        } else if (is_ident("self")) {
            next();
            m.kind = ModuleExpr::Kind::self;
        } else if (is_ident("zero")) {
            next();
            m.kind = ModuleExpr::Kind::zero;
        } else if (is_ident("quotmod")) {
            next();
            expect("(");
            m.kind = ModuleExpr::Kind::quotmod;
            m.gens.push_back(elem());
            while (is_symbol(",")) {
                next();
                m.gens.push_back(elem());
            }
            expect(")");
        } else {
            fail("expected a module (self, zero, quotmod(...))");
        }
        return m;
    }

    ElemExpr binary(ElemExpr::Kind k, ElemExpr a, ElemExpr b) {
        ElemExpr e;
        e.kind = k;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    ElemExpr elem() {
        ElemExpr e = term();
        while (is_symbol("+") || is_symbol("-")) {
            const auto k = next().text == "+" ? ElemExpr::Kind::add : ElemExpr::Kind::sub;
            e = binary(k, std::move(e), term());
        }
        return e;
    }

    ElemExpr term() {
        ElemExpr e = unary();
        while (is_symbol("*")) {
            next();
            e = binary(ElemExpr::Kind::mul, std::move(e), unary());
        }
        return e;
    }

    ElemExpr unary() {
        if (is_symbol("-")) {
            next();
            ElemExpr e;
            e.kind = ElemExpr::Kind::neg;
            e.args.push_back(unary());
            return e;
        }
        return power();
    }

    ElemExpr power() {
        ElemExpr a = atom();
        if (!is_symbol("^")) return a;
        next();
        ElemExpr e;
        e.kind = ElemExpr::Kind::pow;
        e.value = expect_int();
        e.args.push_back(std::move(a));
        return e;
    }

    ElemExpr atom() {
        ElemExpr e;
        const Token& t = peek();
        if (t.kind == Token::Kind::integer) {
            e.kind = ElemExpr::Kind::integer;
            e.value = next().value;
        } else if (is_symbol("#")) {
            next();
            e.kind = ElemExpr::Kind::index;
            e.value = expect_int();
        } else if (is_symbol("(")) {
            next();
            ElemExpr first = elem();
            if (!is_symbol(",")) {
                expect(")");
                return first;
            }
            e.kind = ElemExpr::Kind::tuple;
            e.args.push_back(std::move(first));
            while (is_symbol(",")) {
                next();
                e.args.push_back(elem());
            }
            expect(")");
        } else if (is_ident("pair")) {
            next();
            expect("(");
            e.kind = ElemExpr::Kind::pair;
            e.args.push_back(elem());
            expect(",");
            e.args.push_back(elem());
            expect(")");
        } else if (t.kind == Token::Kind::ident && !is_reserved_variable(t.text)) {
            e.kind = ElemExpr::Kind::ident;
            e.name = next().text;
        } else {
            fail("expected an element");
        }
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Program parse_program(std::string_view src) { return detail::Parser(src).program(); }

/// A single ring expression with no let bindings.
inline RingExpr parse_ring_expr(std::string_view src) { return detail::Parser(src).ring_only(); }

inline ElemExpr parse_elem(std::string_view src) { return detail::Parser(src).elem_only(); }

// -- printer --------------------------------------------------------------

namespace detail {

inline int precedence(const ElemExpr& e) {
    switch (e.kind) {
        case ElemExpr::Kind::add:
        case ElemExpr::Kind::sub: return 1;
        case ElemExpr::Kind::mul: return 2;
        case ElemExpr::Kind::neg: return 3;
        case ElemExpr::Kind::pow: return 4;
        default: return 5;
    }
}

inline std::string print_elem(const ElemExpr& e, int min_prec);

inline std::string print_elem_at(const ElemExpr& e, int min_prec) {
    std::string s = print_elem(e, 0);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

inline std::string join_elems(const std::vector<ElemExpr>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += print_elem(xs[i], 0);
    }
    return s;
}

inline std::string print_elem(const ElemExpr& e, int) {
    switch (e.kind) {
        case ElemExpr::Kind::integer: return std::to_string(e.value);
        case ElemExpr::Kind::index: return "#" + std::to_string(e.value);
        case ElemExpr::Kind::ident: return e.name;
        case ElemExpr::Kind::add: return print_elem_at(e.args[0], 1) + " + " + print_elem_at(e.args[1], 2);
        case ElemExpr::Kind::sub: return print_elem_at(e.args[0], 1) + " - " + print_elem_at(e.args[1], 2);
        case ElemExpr::Kind::mul: return print_elem_at(e.args[0], 2) + "*" + print_elem_at(e.args[1], 3);
        case ElemExpr::Kind::neg: return "-" + print_elem_at(e.args[0], 3);
        case ElemExpr::Kind::pow: return print_elem_at(e.args[0], 5) + "^" + std::to_string(e.value);
        case ElemExpr::Kind::tuple: return "(" + join_elems(e.args) + ")";
        case ElemExpr::Kind::pair: return "pair(" + join_elems(e.args) + ")";
    }
    return "?";
}

}  // namespace detail

inline std::string to_string(const ElemExpr& e) { return detail::print_elem(e, 0); }

inline std::string to_string(const ModuleExpr& m) {
    switch (m.kind) {
        case ModuleExpr::Kind::self: return "self";
        case ModuleExpr::Kind::zero: return "zero";
        case ModuleExpr::Kind::quotmod: return "quotmod(" + detail::join_elems(m.gens) + ")";
        case ModuleExpr::Kind::product: {
            std::string s;
            for (std::size_t i = 0; i < m.factors.size(); ++i) {
                if (i) s += " x ";
                const auto& f = m.factors[i];
                s += f.kind == ModuleExpr::Kind::product ? "(" + to_string(f) + ")" : to_string(f);
            }
            return s;
        }
    }
    return "?";
}

inline std::string to_string(const RingExpr& r) {
    switch (r.kind) {
        case RingExpr::Kind::zmod: return "Z/" + std::to_string(r.n);
        case RingExpr::Kind::field: return "F_" + std::to_string(r.n);
        case RingExpr::Kind::ident: return r.name;
        case RingExpr::Kind::poly: {
            std::string s = "poly(" + to_string(r.children[0]);
            for (const auto& c : r.elems) s += ", " + to_string(c);
            if (!r.name.empty()) s += ", var=" + r.name;
            return s + ")";
        }
        case RingExpr::Kind::quot: return "quot(" + to_string(r.children[0]) + ", " + detail::join_elems(r.elems) + ")";
        case RingExpr::Kind::idealize: return "idealize(" + to_string(r.children[0]) + ", " + to_string(r.module[0]) + ")";
        case RingExpr::Kind::product: {
            std::string s;
            for (std::size_t i = 0; i < r.children.size(); ++i) {
                if (i) s += " x ";
                const auto& f = r.children[i];
                s += f.kind == RingExpr::Kind::product ? "(" + to_string(f) + ")" : to_string(f);
            }
            return s;
        }
    }
    return "?";
}

inline std::string to_string(const Program& p) {
    std::string s;
    for (const auto& [name, r] : p.lets) s += "let " + name + " = " + to_string(r) + "; ";
    return s + to_string(p.body);
}

}  // namespace oaf::dsl
