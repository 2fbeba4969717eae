#pragma once

/**
 * @file elaborate.hpp
 * @brief Turns ring-expression ASTs into rings, modules and elements.
 *
 * Variables of polynomial rings stay visible through later constructions:
 * a quotient sees the images of its parent's variables, and A x| E sees the
 * variables of A embedded as (a, 0). Product elements are written as tuples
 * and trivial-extension elements as pair(a, e).
 */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oaf/dsl.hpp"
#include "oaf/module.hpp"

namespace oaf::dsl {

struct ElabModule;

/// An elaborated ring with the context needed to read element expressions.
struct ElabRing {
    FiniteRing ring;
    std::map<std::string, Elem> vars;
    std::vector<std::shared_ptr<const ElabRing>> factors;  // product factors
    std::shared_ptr<const ElabRing> base;                  // trivial extension: A
    std::shared_ptr<const ElabModule> module;              // trivial extension: E
};

struct ElabModule {
    FiniteModule module;
    ModuleExpr::Kind kind = ModuleExpr::Kind::self;
    std::shared_ptr<const ElabRing> base;
    std::vector<Elem> projection;                            // quotmod: A -> E
    std::vector<std::shared_ptr<const ElabModule>> factors;  // product
};

namespace detail {

[[noreturn]] inline void semantic(const std::string& msg) { throw Error(ErrorKind::semantic, msg); }

inline bool is_prime_number(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

inline Elem checked_index(const FiniteRing& r, std::int64_t v) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= r.order()) {
        semantic("element index #" + std::to_string(v) + " out of range for " + r.description());
    }
    return static_cast<Elem>(v);
}

}  // namespace detail

Elem elaborate_module_elem(const ElabModule& m, const ElemExpr& e);

/// Reads an element expression in the given ring.
inline Elem elaborate_elem(const ElabRing& ctx, const ElemExpr& e) {
    const FiniteRing& r = ctx.ring;
    using K = ElemExpr::Kind;
    switch (e.kind) {
        case K::integer: return r.from_int(e.value);
        case K::index: return detail::checked_index(r, e.value);
        case K::ident: {
            auto it = ctx.vars.find(e.name);
            if (it == ctx.vars.end()) detail::semantic("unknown variable '" + e.name + "' in " + r.description());
            return it->second;
        }
        case K::add: return r.add(elaborate_elem(ctx, e.args[0]), elaborate_elem(ctx, e.args[1]));
        case K::sub: return r.sub(elaborate_elem(ctx, e.args[0]), elaborate_elem(ctx, e.args[1]));
        case K::mul: return r.mul(elaborate_elem(ctx, e.args[0]), elaborate_elem(ctx, e.args[1]));
        case K::neg: return r.neg(elaborate_elem(ctx, e.args[0]));
        case K::pow: return r.pow(elaborate_elem(ctx, e.args[0]), static_cast<std::uint64_t>(e.value));
        case K::tuple: {
            if (ctx.factors.size() != e.args.size()) {
                detail::semantic("tuple of length " + std::to_string(e.args.size()) + " does not match " + r.description());
            }
            std::vector<Elem> parts;
            for (std::size_t i = 0; i < e.args.size(); ++i) parts.push_back(elaborate_elem(*ctx.factors[i], e.args[i]));
            return product_element(r, parts);
        }
        case K::pair: {
            if (!ctx.base || !ctx.module) detail::semantic("pair(...) needs a trivial extension, got " + r.description());
            const Elem a = elaborate_elem(*ctx.base, e.args[0]);
            const Elem m = elaborate_module_elem(*ctx.module, e.args[1]);
            return extension_element(r, a, m);
        }
    }
    detail::semantic("bad element expression");
}

/// Reads a module element: over A for self and quotient modules, as a tuple for products.
inline Elem elaborate_module_elem(const ElabModule& m, const ElemExpr& e) {
    switch (m.kind) {
        case ModuleExpr::Kind::self: return elaborate_elem(*m.base, e);
        case ModuleExpr::Kind::quotmod: return m.projection[elaborate_elem(*m.base, e)];
        case ModuleExpr::Kind::zero:
            if (e.kind == ElemExpr::Kind::integer && e.value == 0) return 0;
            detail::semantic("the zero module has only the element 0");
        case ModuleExpr::Kind::product: {
            if (e.kind != ElemExpr::Kind::tuple || e.args.size() != m.factors.size()) {
                detail::semantic("module product elements are tuples of length " + std::to_string(m.factors.size()));
            }
            std::size_t v = 0;
            for (std::size_t i = 0; i < m.factors.size(); ++i) {
                v = v * m.factors[i]->module.order() + elaborate_module_elem(*m.factors[i], e.args[i]);
            }
            return static_cast<Elem>(v);
        }
    }
    detail::semantic("bad module element");
}

class Elaborator {
public:
    explicit Elaborator(Config cfg = {}) : cfg_(cfg) {}

    std::shared_ptr<const ElabRing> program(const Program& p) {
        env_.clear();
        for (const auto& [name, expr] : p.lets) {
            if (env_.count(name)) detail::semantic("'" + name + "' is bound twice");
            env_[name] = ring(expr);
        }
        return ring(p.body);
    }

    std::shared_ptr<const ElabRing> ring(const RingExpr& e) {
        using K = RingExpr::Kind;
        auto out = std::make_shared<ElabRing>();
        switch (e.kind) {
            case K::zmod:
                if (e.n < 2) detail::semantic("Z/n needs n >= 2, got " + std::to_string(e.n));
                out->ring = make_zmod(e.n, cfg_);
                break;
            case K::field:
                if (!detail::is_prime_number(e.n)) detail::semantic("F_" + std::to_string(e.n) + ": " + std::to_string(e.n) + " is not prime");
                out->ring = make_zmod(e.n, cfg_);
                break;
            case K::ident: {
                auto it = env_.find(e.name);
                if (it == env_.end()) detail::semantic("unbound ring name '" + e.name + "'");
                return it->second;
            }
            case K::poly: {
                auto base = ring(e.children[0]);
                std::vector<Elem> coeffs;
                for (const auto& c : e.elems) coeffs.push_back(elaborate_elem(*base, c));
                std::string var = e.name.empty() ? default_variable(*base) : e.name;
                if (base->vars.count(var)) detail::semantic("variable '" + var + "' is already used in " + base->ring.description());
                if (coeffs.size() < 2) detail::semantic("poly modulus must have degree >= 1");
                if (coeffs.back() != base->ring.one()) detail::semantic("poly modulus must be monic");
                out->ring = make_poly_quotient(base->ring, coeffs, var);
                out->vars = base->vars;
                out->vars[var] = static_cast<Elem>(std::uint64_t{base->ring.one()} * base->ring.order());
                break;
            }
            case K::quot: {
                auto parent = ring(e.children[0]);
                std::vector<Elem> gens;
                for (const auto& g : e.elems) gens.push_back(elaborate_elem(*parent, g));
                const Ideal i = ideal_generated_by(parent->ring, gens);
                if (!i.is_proper()) detail::semantic("quot by the unit ideal");
                const QuotientMap q = make_quotient_map(parent->ring, i);
                out->ring = q.ring;
                for (const auto& [v, x] : parent->vars) out->vars[v] = q.projection[x];
                break;
            }
            case K::idealize: {
                auto base = ring(e.children[0]);
                auto mod = module(e.module[0], base);
                out->ring = make_trivial_extension(base->ring, mod->module);
                for (const auto& [v, x] : base->vars) out->vars[v] = extension_element(out->ring, x, 0);
                out->base = base;
                out->module = mod;
                break;
            }
            case K::product: {
                std::vector<FiniteRing> rs;
                for (const auto& c : e.children) {
                    out->factors.push_back(ring(c));
                    rs.push_back(out->factors.back()->ring);
                }
                out->ring = make_product(rs);
                break;
            }
        }
        return out;
    }

    std::shared_ptr<const ElabModule> module(const ModuleExpr& e, const std::shared_ptr<const ElabRing>& base) {
        auto out = std::make_shared<ElabModule>();
        out->kind = e.kind;
        out->base = base;
        const FiniteRing& a = base->ring;
        switch (e.kind) {
            case ModuleExpr::Kind::self: out->module = make_module_self(a); break;
            case ModuleExpr::Kind::zero: out->module = make_module_zero(a); break;
            case ModuleExpr::Kind::quotmod: {
                std::vector<Elem> gens;
                for (const auto& g : e.gens) gens.push_back(elaborate_elem(*base, g));
                const Ideal i = ideal_generated_by(a, gens);
                if (!i.is_proper()) detail::semantic("quotmod by the unit ideal");
                out->module = make_module_quotient(a, i);
                out->projection = make_quotient_map(a, i).projection;
                break;
            }
            case ModuleExpr::Kind::product: {
                std::vector<FiniteModule> ms;
                for (const auto& f : e.factors) {
                    out->factors.push_back(module(f, base));
                    ms.push_back(out->factors.back()->module);
                }
                out->module = make_module_product(ms);
                break;
            }
        }
        return out;
    }

private:
    static std::string default_variable(const ElabRing& base) {
        for (const char* v : {"x", "y", "z", "t", "u", "v", "w", "s"}) {
            if (!base.vars.count(v)) return v;
        }
        detail::semantic("no free default variable name; use var=NAME");
    }

    Config cfg_;
    std::map<std::string, std::shared_ptr<const ElabRing>> env_;
};

/// Parses and elaborates a program.
inline std::shared_ptr<const ElabRing> elaborate(std::string_view src, const Config& cfg = {}) {
    return Elaborator(cfg).program(parse_program(src));
}

inline FiniteRing ring_from_string(std::string_view src, const Config& cfg = {}) { return elaborate(src, cfg)->ring; }

/// Parses a comma-separated generator list ("2", "x, y^2", "0") in the given ring.
inline std::vector<Elem> parse_generators(const ElabRing& ctx, std::string_view src) {
    std::vector<Elem> out;
    const std::string text(src);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            out.push_back(elaborate_elem(ctx, parse_elem(std::string_view(text).substr(start, i - start))));
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        }
    }
    return out;
}

}  // namespace oaf::dsl
