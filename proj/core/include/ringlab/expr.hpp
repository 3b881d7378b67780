#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Expression language:
//   ring    := "Zmod(" INT ")" | "Zint"
//            | "prod(" ring {"," ring}+ ")"
//            | "trivext(" ring "," module ")"
//            | "dup(" ring "," ideal ")"
//            | "quot(" ring "," ideal ")"
//            | "loc(" ring "," ideal ")"
//   module  := "mod(" INT {"," INT}* ")"
//   ideal   := "ideal(" elem {"," elem}* ")"
//   elem    := INT | "(" elem {"," elem}+ ")"
// Integer element literals mean k*1 in the ambient ring; tuple literals
// address the coordinates of products, trivial extensions (pair of base
// element and module element), duplications (a pair in A x A) and
// multi-component modules.

struct ElemLit {
    std::variant<std::uint64_t, std::vector<ElemLit>> value;

    bool is_int() const { return value.index() == 0; }
    std::uint64_t as_int() const { return std::get<0>(value); }
    const std::vector<ElemLit>& as_tuple() const { return std::get<1>(value); }
};

struct ModuleExpr {
    std::vector<unsigned> orders;
};

struct IdealExpr {
    std::vector<ElemLit> generators;
};

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

struct RingExpr {
    struct Zmod {
        unsigned n;
    };
    struct Zint {};
    struct Prod {
        std::vector<RingExprPtr> parts;
    };
    struct Trivext {
        RingExprPtr base;
        ModuleExpr mod;
    };
    struct Dup {
        RingExprPtr base;
        IdealExpr ideal;
    };
    struct Quot {
        RingExprPtr base;
        IdealExpr ideal;
    };
    struct Loc {
        RingExprPtr base;
        IdealExpr ideal;
    };

    std::variant<Zmod, Zint, Prod, Trivext, Dup, Quot, Loc> node;
};

/// One CLI argument: a ring, ideal, or module expression.
using InstanceExpr = std::variant<RingExprPtr, IdealExpr, ModuleExpr>;

RingExprPtr parse_ring_expr(std::string_view text);  // throws ParseError
InstanceExpr parse_instance_expr(std::string_view text);

std::string print_expr(const RingExpr& expr);
std::string print_expr(const IdealExpr& expr);
std::string print_expr(const ModuleExpr& expr);
bool expr_equal(const RingExpr& a, const RingExpr& b);

struct ElaborateOptions {
    std::size_t max_size = 4096;  // refuse larger carriers
};

/// A ring expression elaborated to an actual ring; Zint selects the
/// symbolic integer backend instead and leaves `ring` null.
struct Elaborated {
    RingPtr ring;
    bool integers = false;
};

Elaborated elaborate(const RingExpr& expr, const ElaborateOptions& options = {});

/// Element and ideal literals are interpreted in the given ring.
elem_t elaborate_element(const ElemLit& lit, const RingPtr& ring);
elem_t elaborate_module_element(const ElemLit& lit, const ModulePtr& mod);
Ideal elaborate_ideal(const IdealExpr& expr, const RingPtr& ring);
/// For Zint: the ideal generated by the literals (gcd).
std::uint64_t elaborate_integer_ideal(const IdealExpr& expr);
ModulePtr elaborate_module(const ModuleExpr& expr, const RingPtr& ring);

}  // namespace ringlab
