#include "ringlab/construct.hpp"

#include <limits>

#include "overload.hpp"

namespace ringlab {

namespace {
constexpr elem_t kNoPos = std::numeric_limits<elem_t>::max();

const detail::ProductOp* as_product(const RingPtr& ring) {
    return std::get_if<detail::ProductOp>(&ring->op());
}
const detail::TrivextOp* as_trivext(const RingPtr& ring) {
    return std::get_if<detail::TrivextOp>(&ring->op());
}
const detail::DupOp* as_dup(const RingPtr& ring) {
    return std::get_if<detail::DupOp>(&ring->op());
}
}  // namespace

RingPtr direct_product(const std::vector<RingPtr>& factors) {
    if (factors.size() < 2)
        throw SemanticError("a direct product needs at least two factors");
    detail::ProductOp op;
    op.factors = factors;
    op.stride.resize(factors.size());
    std::size_t size = 1;
    std::string prov = "prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) prov += ", ";
        prov += factors[i]->provenance();
    }
    prov += ")";
    elem_t stride = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
        op.stride[i] = stride;
        stride = static_cast<elem_t>(stride * factors[i]->size());
        size *= factors[i]->size();
    }
    elem_t one = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        one += factors[i]->one() * op.stride[i];
    ConstructionTag tag{ConstructionKind::Product, {}};
    for (const auto& f : factors) tag.components.push_back(f->provenance());
    return FiniteRing::create(std::move(op), size, one, std::move(prov), std::move(tag));
}

RingPtr trivext(const RingPtr& ring, const ModulePtr& mod) {
    if (mod->ring() != ring)
        throw SemanticError("trivext needs a module over the given ring");
    const std::size_t size = ring->size() * mod->size();
    const elem_t one = static_cast<elem_t>(ring->one() * mod->size());
    std::string prov = "trivext(" + ring->provenance() + ", " + mod->provenance() + ")";
    ConstructionTag tag{ConstructionKind::Trivext,
                        {ring->provenance(), mod->provenance()}};
    return FiniteRing::create(detail::TrivextOp{ring, mod}, size, one, std::move(prov),
                              std::move(tag));
}

RingPtr dup(const RingPtr& ring, const Ideal& ideal) {
    if (ideal.ring() != ring) throw SemanticError("dup needs an ideal of the given ring");
    detail::DupOp op;
    op.base = ring;
    op.ideal_elems = ideal.elements().to_list();
    op.pos.assign(ring->size(), kNoPos);
    for (std::size_t i = 0; i < op.ideal_elems.size(); ++i)
        op.pos[op.ideal_elems[i]] = static_cast<elem_t>(i);
    const std::size_t size = ring->size() * op.ideal_elems.size();
    const elem_t one = static_cast<elem_t>(ring->one() * op.ideal_elems.size());
    const std::string lit = ideal_literal_string(ideal);
    std::string prov = "dup(" + ring->provenance() + ", " + lit + ")";
    ConstructionTag tag{ConstructionKind::Dup, {ring->provenance(), lit}};
    return FiniteRing::create(std::move(op), size, one, std::move(prov), std::move(tag));
}

bool is_product(const RingPtr& ring) { return as_product(ring) != nullptr; }

std::vector<RingPtr> product_components(const RingPtr& ring) {
    const auto* op = as_product(ring);
    if (!op) throw SemanticError(ring->provenance() + " is not a direct product");
    return op->factors;
}

bool is_trivext(const RingPtr& ring) { return as_trivext(ring) != nullptr; }

RingPtr trivext_base(const RingPtr& ring) {
    const auto* op = as_trivext(ring);
    if (!op) throw SemanticError(ring->provenance() + " is not a trivial extension");
    return op->base;
}

ModulePtr trivext_module(const RingPtr& ring) {
    const auto* op = as_trivext(ring);
    if (!op) throw SemanticError(ring->provenance() + " is not a trivial extension");
    return op->mod;
}

elem_t trivext_encode(const RingPtr& trivext_ring, elem_t a, elem_t e) {
    const auto* op = as_trivext(trivext_ring);
    if (!op) throw SemanticError(trivext_ring->provenance() + " is not a trivial extension");
    return static_cast<elem_t>(a * op->mod->size() + e);
}

std::pair<elem_t, elem_t> trivext_decode(const RingPtr& trivext_ring, elem_t x) {
    const auto* op = as_trivext(trivext_ring);
    if (!op) throw SemanticError(trivext_ring->provenance() + " is not a trivial extension");
    const auto m = static_cast<elem_t>(op->mod->size());
    return {x / m, x % m};
}

bool is_dup(const RingPtr& ring) { return as_dup(ring) != nullptr; }

RingPtr dup_base(const RingPtr& ring) {
    const auto* op = as_dup(ring);
    if (!op) throw SemanticError(ring->provenance() + " is not a duplication");
    return op->base;
}

Ideal dup_along(const RingPtr& ring) {
    const auto* op = as_dup(ring);
    if (!op) throw SemanticError(ring->provenance() + " is not a duplication");
    ElemSet s(op->base->size());
    for (elem_t i : op->ideal_elems) s.set(i);
    return Ideal(op->base, std::move(s));
}

elem_t dup_encode(const RingPtr& dup_ring, elem_t a, elem_t b) {
    const auto* op = as_dup(dup_ring);
    if (!op) throw SemanticError(dup_ring->provenance() + " is not a duplication");
    const elem_t delta = op->base->sub(b, a);
    if (op->pos[delta] == kNoPos)
        throw SemanticError("pair (" + element_to_string(op->base, a) + "," +
                            element_to_string(op->base, b) +
                            ") is not in the duplication: the difference lies outside "
                            "the ideal");
    return static_cast<elem_t>(a * op->ideal_elems.size() + op->pos[delta]);
}

std::pair<elem_t, elem_t> dup_decode(const RingPtr& dup_ring, elem_t x) {
    const auto* op = as_dup(dup_ring);
    if (!op) throw SemanticError(dup_ring->provenance() + " is not a duplication");
    const auto m = static_cast<elem_t>(op->ideal_elems.size());
    const elem_t a = x / m;
    return {a, op->base->add(a, op->ideal_elems[x % m])};
}

Ideal homogeneous_ideal(const RingPtr& trivext_ring, const Ideal& ideal, const Submodule& sub) {
    const auto* op = as_trivext(trivext_ring);
    if (!op) throw SemanticError(trivext_ring->provenance() + " is not a trivial extension");
    if (ideal.ring() != op->base || sub.module != op->mod)
        throw SemanticError("homogeneous ideal parts do not match the extension");
    const Submodule ie = ideal_times_module(ideal, op->mod);
    if (!ie.elements.is_subset_of(sub.elements))
        throw SemanticError("I*E is not contained in V; " + ideal_literal_string(ideal) +
                            " x V is not an ideal of " + trivext_ring->provenance());
    ElemSet out(trivext_ring->size());
    for (elem_t a : ideal.elements().to_list())
        for (elem_t v : sub.elements.to_list())
            out.set(static_cast<elem_t>(a * op->mod->size() + v));
    return Ideal(trivext_ring, std::move(out));
}

std::optional<HomogeneousParts> homogeneous_parts(const RingPtr& trivext_ring,
                                                  const Ideal& ideal) {
    const auto* op = as_trivext(trivext_ring);
    if (!op) throw SemanticError(trivext_ring->provenance() + " is not a trivial extension");
    const auto m = static_cast<elem_t>(op->mod->size());
    ElemSet first(op->base->size()), second(m);
    for (elem_t x : ideal.elements().to_list()) {
        first.set(x / m);
        if (x / m == 0) second.set(x % m);
    }
    for (elem_t a : first.to_list())
        for (elem_t v : second.to_list())
            if (!ideal.contains(static_cast<elem_t>(a * m + v))) return std::nullopt;
    if (ideal.count() != first.count() * second.count()) return std::nullopt;
    return HomogeneousParts{Ideal(op->base, first), Submodule{op->mod, second}};
}

Ideal dup_ideal(const RingPtr& dup_ring, const Ideal& sub_ideal) {
    const auto* op = as_dup(dup_ring);
    if (!op) throw SemanticError(dup_ring->provenance() + " is not a duplication");
    if (sub_ideal.ring() != op->base)
        throw SemanticError("dup_ideal needs an ideal of the duplication's base ring");
    const auto m = static_cast<elem_t>(op->ideal_elems.size());
    ElemSet out(dup_ring->size());
    for (elem_t h : sub_ideal.elements().to_list())
        for (elem_t p = 0; p < m; ++p) out.set(h * m + p);
    return Ideal(dup_ring, std::move(out));
}

}  // namespace ringlab
