#include "ringlab/expr.hpp"

#include <cctype>

#include "overload.hpp"

namespace ringlab {

namespace {

struct Token {
    enum Kind { Ident, Int, LParen, RParen, Comma, End } kind;
    std::string text;
    std::uint64_t value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            tok_.text = "<end of input>";
            return;
        }
        const char c = text_[pos_];
        if (c == '(') {
            tok_ = {Token::LParen, "(", 0, line_, col_};
            bump();
        } else if (c == ')') {
            tok_ = {Token::RParen, ")", 0, line_, col_};
            bump();
        } else if (c == ',') {
            tok_ = {Token::Comma, ",", 0, line_, col_};
            bump();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                bump();
            }
            if (digits.size() > 18)
                throw ParseError("integer literal too large", tok_.line, tok_.col);
            tok_.kind = Token::Int;
            tok_.text = digits;
            tok_.value = std::stoull(digits);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                name += text_[pos_];
                bump();
            }
            tok_.kind = Token::Ident;
            tok_.text = name;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    RingExprPtr ring_expr() {
        RingExprPtr e = ring();
        expect_end();
        return e;
    }

    InstanceExpr instance_expr() {
        const Token& t = lex_.peek();
        InstanceExpr out;
        if (t.kind == Token::Ident && t.text == "ideal") {
            out = ideal();
        } else if (t.kind == Token::Ident && t.text == "mod") {
            out = module();
        } else {
            out = ring();
        }
        expect_end();
        return out;
    }

private:
    void expect_end() {
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw ParseError("trailing input '" + t.text + "'", t.line, t.col);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != kind)
            throw ParseError("expected " + what + ", found '" + t.text + "'", t.line,
                             t.col);
        return t;
    }

    RingExprPtr ring() {
        Token t = expect(Token::Ident, "a ring expression");
        auto make = [](RingExpr e) { return std::make_shared<const RingExpr>(std::move(e)); };
        if (t.text == "Zint") return make(RingExpr{RingExpr::Zint{}});
        if (t.text == "Zmod") {
            expect(Token::LParen, "'('");
            const Token n = expect(Token::Int, "an integer");
            expect(Token::RParen, "')'");
            if (n.value > 65535)
                throw ParseError("Zmod argument too large", n.line, n.col);
            return make(RingExpr{RingExpr::Zmod{static_cast<unsigned>(n.value)}});
        }
        if (t.text == "prod") {
            expect(Token::LParen, "'('");
            RingExpr::Prod node;
            node.parts.push_back(ring());
            while (lex_.peek().kind == Token::Comma) {
                lex_.take();
                node.parts.push_back(ring());
            }
            expect(Token::RParen, "')'");
            if (node.parts.size() < 2)
                throw ParseError("prod needs at least two rings", t.line, t.col);
            return make(RingExpr{std::move(node)});
        }
        if (t.text == "trivext") {
            expect(Token::LParen, "'('");
            RingExprPtr base = ring();
            expect(Token::Comma, "','");
            ModuleExpr mod = module();
            expect(Token::RParen, "')'");
            return make(RingExpr{RingExpr::Trivext{std::move(base), std::move(mod)}});
        }
        auto ring_ideal = [&](auto tag) {
            expect(Token::LParen, "'('");
            RingExprPtr base = ring();
            expect(Token::Comma, "','");
            IdealExpr ideal_expr = ideal();
            expect(Token::RParen, "')'");
            using Node = decltype(tag);
            return make(RingExpr{Node{std::move(base), std::move(ideal_expr)}});
        };
        if (t.text == "dup") return ring_ideal(RingExpr::Dup{});
        if (t.text == "quot") return ring_ideal(RingExpr::Quot{});
        if (t.text == "loc") return ring_ideal(RingExpr::Loc{});
        throw ParseError("unknown ring constructor '" + t.text + "'", t.line, t.col);
    }

    ModuleExpr module() {
        const Token t = expect(Token::Ident, "a module expression");
        if (t.text != "mod")
            throw ParseError("expected 'mod', found '" + t.text + "'", t.line, t.col);
        expect(Token::LParen, "'('");
        ModuleExpr out;
        out.orders.push_back(order());
        while (lex_.peek().kind == Token::Comma) {
            lex_.take();
            out.orders.push_back(order());
        }
        expect(Token::RParen, "')'");
        return out;
    }

    unsigned order() {
        const Token n = expect(Token::Int, "a cyclic order");
        if (n.value == 0 || n.value > 65535)
            throw ParseError("cyclic order out of range", n.line, n.col);
        return static_cast<unsigned>(n.value);
    }

    IdealExpr ideal() {
        const Token t = expect(Token::Ident, "an ideal expression");
        if (t.text != "ideal")
            throw ParseError("expected 'ideal', found '" + t.text + "'", t.line, t.col);
        expect(Token::LParen, "'('");
        IdealExpr out;
        out.generators.push_back(element());
        while (lex_.peek().kind == Token::Comma) {
            lex_.take();
            out.generators.push_back(element());
        }
        expect(Token::RParen, "')'");
        return out;
    }

    ElemLit element() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Int) {
            return ElemLit{lex_.take().value};
        }
        if (t.kind == Token::LParen) {
            lex_.take();
            std::vector<ElemLit> parts;
            parts.push_back(element());
            expect(Token::Comma, "','");
            parts.push_back(element());
            while (lex_.peek().kind == Token::Comma) {
                lex_.take();
                parts.push_back(element());
            }
            expect(Token::RParen, "')'");
            return ElemLit{std::move(parts)};
        }
        throw ParseError("expected an element literal, found '" + t.text + "'", t.line,
                         t.col);
    }

    Lexer lex_;
};

}  // namespace

RingExprPtr parse_ring_expr(std::string_view text) { return Parser(text).ring_expr(); }

InstanceExpr parse_instance_expr(std::string_view text) {
    return Parser(text).instance_expr();
}

namespace {

std::string print_elem(const ElemLit& lit) {
    if (lit.is_int()) return std::to_string(lit.as_int());
    std::string out = "(";
    const auto& parts = lit.as_tuple();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += print_elem(parts[i]);
    }
    return out + ")";
}

}  // namespace

std::string print_expr(const IdealExpr& expr) {
    std::string out = "ideal(";
    for (std::size_t i = 0; i < expr.generators.size(); ++i) {
        if (i) out += ", ";
        out += print_elem(expr.generators[i]);
    }
    return out + ")";
}

std::string print_expr(const ModuleExpr& expr) {
    std::string out = "mod(";
    for (std::size_t i = 0; i < expr.orders.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(expr.orders[i]);
    }
    return out + ")";
}

std::string print_expr(const RingExpr& expr) {
    return std::visit(
        detail::overloaded{
            [](const RingExpr::Zmod& n) { return "Zmod(" + std::to_string(n.n) + ")"; },
            [](const RingExpr::Zint&) { return std::string("Zint"); },
            [](const RingExpr::Prod& p) {
                std::string out = "prod(";
                for (std::size_t i = 0; i < p.parts.size(); ++i) {
                    if (i) out += ", ";
                    out += print_expr(*p.parts[i]);
                }
                return out + ")";
            },
            [](const RingExpr::Trivext& t) {
                return "trivext(" + print_expr(*t.base) + ", " + print_expr(t.mod) + ")";
            },
            [](const RingExpr::Dup& d) {
                return "dup(" + print_expr(*d.base) + ", " + print_expr(d.ideal) + ")";
            },
            [](const RingExpr::Quot& q) {
                return "quot(" + print_expr(*q.base) + ", " + print_expr(q.ideal) + ")";
            },
            [](const RingExpr::Loc& l) {
                return "loc(" + print_expr(*l.base) + ", " + print_expr(l.ideal) + ")";
            },
        },
        expr.node);
}

namespace {

bool elem_equal(const ElemLit& a, const ElemLit& b) {
    if (a.is_int() != b.is_int()) return false;
    if (a.is_int()) return a.as_int() == b.as_int();
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (!elem_equal(ta[i], tb[i])) return false;
    return true;
}

bool ideal_expr_equal(const IdealExpr& a, const IdealExpr& b) {
    if (a.generators.size() != b.generators.size()) return false;
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        if (!elem_equal(a.generators[i], b.generators[i])) return false;
    return true;
}

}  // namespace

bool expr_equal(const RingExpr& a, const RingExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        detail::overloaded{
            [&](const RingExpr::Zmod& x) { return x.n == std::get<RingExpr::Zmod>(b.node).n; },
            [&](const RingExpr::Zint&) { return true; },
            [&](const RingExpr::Prod& x) {
                const auto& y = std::get<RingExpr::Prod>(b.node);
                if (x.parts.size() != y.parts.size()) return false;
                for (std::size_t i = 0; i < x.parts.size(); ++i)
                    if (!expr_equal(*x.parts[i], *y.parts[i])) return false;
                return true;
            },
            [&](const RingExpr::Trivext& x) {
                const auto& y = std::get<RingExpr::Trivext>(b.node);
                return expr_equal(*x.base, *y.base) && x.mod.orders == y.mod.orders;
            },
            [&](const RingExpr::Dup& x) {
                const auto& y = std::get<RingExpr::Dup>(b.node);
                return expr_equal(*x.base, *y.base) && ideal_expr_equal(x.ideal, y.ideal);
            },
            [&](const RingExpr::Quot& x) {
                const auto& y = std::get<RingExpr::Quot>(b.node);
                return expr_equal(*x.base, *y.base) && ideal_expr_equal(x.ideal, y.ideal);
            },
            [&](const RingExpr::Loc& x) {
                const auto& y = std::get<RingExpr::Loc>(b.node);
                return expr_equal(*x.base, *y.base) && ideal_expr_equal(x.ideal, y.ideal);
            },
        },
        a.node);
}

namespace {

RingPtr elaborate_finite(const RingExpr& expr, const ElaborateOptions& options);

void check_size(const RingPtr& ring, const ElaborateOptions& options) {
    if (ring->size() > options.max_size)
        throw SemanticError("ring " + ring->provenance() + " has " +
                            std::to_string(ring->size()) +
                            " elements, above the size guard of " +
                            std::to_string(options.max_size));
}

RingPtr elaborate_finite(const RingExpr& expr, const ElaborateOptions& options) {
    RingPtr out = std::visit(
        detail::overloaded{
            [&](const RingExpr::Zmod& n) { return make_zmod(n.n); },
            [&](const RingExpr::Zint&) -> RingPtr {
                throw SemanticError(
                    "Zint is symbolic and cannot be used inside ring constructions");
            },
            [&](const RingExpr::Prod& p) {
                std::vector<RingPtr> factors;
                for (const auto& part : p.parts)
                    factors.push_back(elaborate_finite(*part, options));
                return direct_product(factors);
            },
            [&](const RingExpr::Trivext& t) {
                RingPtr base = elaborate_finite(*t.base, options);
                return trivext(base, elaborate_module(t.mod, base));
            },
            [&](const RingExpr::Dup& d) {
                RingPtr base = elaborate_finite(*d.base, options);
                return dup(base, elaborate_ideal(d.ideal, base));
            },
            [&](const RingExpr::Quot& q) {
                RingPtr base = elaborate_finite(*q.base, options);
                return quotient(base, elaborate_ideal(q.ideal, base)).target;
            },
            [&](const RingExpr::Loc& l) {
                RingPtr base = elaborate_finite(*l.base, options);
                return localize_at_prime(base, elaborate_ideal(l.ideal, base)).target;
            },
        },
        expr.node);
    check_size(out, options);
    return out;
}

}  // namespace

Elaborated elaborate(const RingExpr& expr, const ElaborateOptions& options) {
    if (std::holds_alternative<RingExpr::Zint>(expr.node)) return {nullptr, true};
    return {elaborate_finite(expr, options), false};
}

elem_t elaborate_element(const ElemLit& lit, const RingPtr& ring) {
    if (lit.is_int()) return ring->scale(lit.as_int(), ring->one());
    const auto& parts = lit.as_tuple();
    return std::visit(
        detail::overloaded{
            [&](const detail::ProductOp& op) -> elem_t {
                if (parts.size() != op.factors.size())
                    throw SemanticError("tuple literal has " + std::to_string(parts.size()) +
                                        " components; " + ring->provenance() + " needs " +
                                        std::to_string(op.factors.size()));
                elem_t out = 0;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    out += elaborate_element(parts[i], op.factors[i]) * op.stride[i];
                return out;
            },
            [&](const detail::TrivextOp& op) -> elem_t {
                if (parts.size() != 2)
                    throw SemanticError("a trivext element literal is a pair (a, e)");
                return trivext_encode(ring, elaborate_element(parts[0], op.base),
                                      elaborate_module_element(parts[1], op.mod));
            },
            [&](const detail::DupOp& op) -> elem_t {
                if (parts.size() != 2)
                    throw SemanticError(
                        "a duplication element literal is a pair (a, b) in A x A");
                return dup_encode(ring, elaborate_element(parts[0], op.base),
                                  elaborate_element(parts[1], op.base));
            },
            [&](const auto&) -> elem_t {
                throw SemanticError("tuple literals do not address elements of " +
                                    ring->provenance() +
                                    "; use integer literals (k means k*1)");
            },
        },
        ring->op());
}

elem_t elaborate_module_element(const ElemLit& lit, const ModulePtr& mod) {
    if (const auto* op = std::get_if<detail::CyclicModOp>(&mod->op())) {
        if (lit.is_int()) {
            if (op->orders.size() != 1)
                throw SemanticError("module " + mod->provenance() +
                                    " elements are tuples of " +
                                    std::to_string(op->orders.size()) + " residues");
            return static_cast<elem_t>(lit.as_int() % op->orders[0]);
        }
        const auto& parts = lit.as_tuple();
        if (parts.size() != op->orders.size())
            throw SemanticError("module element tuple has " + std::to_string(parts.size()) +
                                " components; " + mod->provenance() + " needs " +
                                std::to_string(op->orders.size()));
        elem_t out = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!parts[i].is_int())
                throw SemanticError("module residues must be integers");
            out += static_cast<elem_t>((parts[i].as_int() % op->orders[i]) * op->stride[i]);
        }
        return out;
    }
    if (const auto* op = std::get_if<detail::IdealModOp>(&mod->op())) {
        const elem_t r = elaborate_element(lit, mod->ring());
        if (r >= op->pos.size() || op->pos[r] >= mod->size())
            throw SemanticError("element lies outside the module " + mod->provenance());
        return op->pos[r];
    }
    throw SemanticError("element literals do not address " + mod->provenance());
}

Ideal elaborate_ideal(const IdealExpr& expr, const RingPtr& ring) {
    std::vector<elem_t> gens;
    gens.reserve(expr.generators.size());
    for (const ElemLit& lit : expr.generators)
        gens.push_back(elaborate_element(lit, ring));
    return Ideal::span(ring, gens);
}

std::uint64_t elaborate_integer_ideal(const IdealExpr& expr) {
    std::uint64_t g = 0;
    for (const ElemLit& lit : expr.generators) {
        if (!lit.is_int())
            throw SemanticError("ideals of Zint are generated by integer literals");
        std::uint64_t b = lit.as_int();
        while (b) {
            g %= b;
            std::swap(g, b);
        }
    }
    return g;
}

ModulePtr elaborate_module(const ModuleExpr& expr, const RingPtr& ring) {
    return make_module(ring, expr.orders);
}

}  // namespace ringlab
