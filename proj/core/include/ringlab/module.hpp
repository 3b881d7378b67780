#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

namespace detail {

// Module operation rules, mirroring the ring side.
struct CyclicModOp {
    std::vector<unsigned> orders;  // direct sum of Z/d_i
    std::vector<elem_t> stride;
};
struct IdealModOp {
    std::vector<elem_t> elems;  // subset of the ring, module index -> ring elem
    std::vector<elem_t> pos;    // ring elem -> module index, or npos
};
struct TableModOp {
    std::vector<std::uint16_t> add;  // |E| x |E|
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> act;  // |A| x |E|
};
using ModOp = std::variant<CyclicModOp, IdealModOp, TableModOp>;

struct ModuleCaches {
    std::once_flag submodules_once;
    std::vector<ElemSet> submodules;  // canonical order
};

}  // namespace detail

/// A finite module over a finite ring: an abelian group on {0, .., size-1}
/// (index 0 the zero element) with a scalar action of the ring. Immutable
/// after construction.
class FiniteModule {
public:
    const RingPtr& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    elem_t zero() const { return 0; }

    elem_t add(elem_t e, elem_t f) const;
    elem_t neg(elem_t e) const;
    elem_t act(elem_t a, elem_t e) const;  // scalar a in the ring times e

    const std::string& provenance() const { return provenance_; }
    const detail::ModOp& op() const { return op_; }
    detail::ModuleCaches& caches() const { return caches_; }

    static ModulePtr create(RingPtr ring, detail::ModOp op, std::size_t size,
                            std::string provenance);

private:
    FiniteModule(RingPtr ring, detail::ModOp op, std::size_t size, std::string provenance);

    RingPtr ring_;
    detail::ModOp op_;
    std::size_t size_;
    std::string provenance_;
    mutable detail::ModuleCaches caches_;
};

/// Direct sum of cyclic groups Z/d_1 + ... + Z/d_k with the reduction
/// action. The base ring must be additively generated by 1 (a copy of Z/n)
/// and every order must divide n; violations are rejected with a message
/// naming the offending order.
ModulePtr make_module(const RingPtr& ring, const std::vector<unsigned>& cyclic_orders);

/// The ring as a module over itself.
ModulePtr regular_module(const RingPtr& ring);

/// An ideal viewed as a module over its ring (action = ring multiplication).
ModulePtr ideal_module(const Ideal& ideal);

/// A submodule, stored as its canonical element set.
struct Submodule {
    ModulePtr module;
    ElemSet elements;

    std::size_t count() const { return elements.count(); }
    bool is_zero() const { return elements.count() == 1; }
    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.module == b.module && a.elements == b.elements;
    }
};

/// Closure of a seed under + and the scalar action.
ElemSet module_span_set(const FiniteModule& mod, std::span<const elem_t> seed);
Submodule module_span(const ModulePtr& mod, std::span<const elem_t> generators);

/// Every submodule exactly once, canonical (size, encoding) order. Cached.
std::vector<Submodule> submodules(const ModulePtr& mod);

/// The submodule IE generated by scalar multiples a*e, a in I, e in E.
Submodule ideal_times_module(const Ideal& ideal, const ModulePtr& mod);
/// Same with an arbitrary submodule in place of E.
Submodule ideal_times_submodule(const Ideal& ideal, const Submodule& sub);

/// Zero-divisors on the module: ring elements killing some nonzero element.
ElemSet module_zero_divisors(const ModulePtr& mod);

bool is_simple(const ModulePtr& mod);
/// E = aE for every regular a (always true over a finite ring, where the
/// regular elements are exactly the units).
bool is_divisible(const ModulePtr& mod);

struct ModuleWitness {
    Submodule sub;
    Ideal scaler;  // sub = scaler * E
};

/// Nonzero and every submodule has the form IE; optionally reports one
/// witnessing ideal per submodule.
bool is_multiplication_module(const ModulePtr& mod,
                              std::vector<ModuleWitness>* witnesses = nullptr);

Ideal annihilator(const ModulePtr& mod);
/// Primes containing the annihilator.
std::vector<Ideal> support(const ModulePtr& mod);

/// Localized module E_P over the localized ring, built from classes of
/// pairs (e, s) like the ring localization.
ModulePtr localize_module(const ModulePtr& mod, const Ideal& prime);

/// Exhaustive module axiom check; returns the first violation, if any.
std::optional<std::string> check_module_axioms(const FiniteModule& mod);

/// Module element in expression-language form (residue or tuple).
std::string module_element_to_string(const ModulePtr& mod, elem_t e);

}  // namespace ringlab
