#include "ringlab/module.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "overload.hpp"

namespace ringlab {

namespace {
constexpr elem_t kNoPos = std::numeric_limits<elem_t>::max();
}

FiniteModule::FiniteModule(RingPtr ring, detail::ModOp op, std::size_t size,
                           std::string provenance)
    : ring_(std::move(ring)), op_(std::move(op)), size_(size), provenance_(std::move(provenance)) {}

ModulePtr FiniteModule::create(RingPtr ring, detail::ModOp op, std::size_t size,
                               std::string provenance) {
    if (size == 0) throw SemanticError("module '" + provenance + "' has no zero element");
    if (size > 65535)
        throw SemanticError("module '" + provenance + "' exceeds the supported carrier size");
    return std::shared_ptr<FiniteModule>(
        new FiniteModule(std::move(ring), std::move(op), size, std::move(provenance)));
}

elem_t FiniteModule::add(elem_t e, elem_t f) const {
    return std::visit(
        detail::overloaded{
            [&](const detail::CyclicModOp& op) -> elem_t {
                elem_t out = 0;
                for (std::size_t i = 0; i < op.orders.size(); ++i) {
                    const elem_t d = op.orders[i];
                    const elem_t ei = (e / op.stride[i]) % d;
                    const elem_t fi = (f / op.stride[i]) % d;
                    out += ((ei + fi) % d) * op.stride[i];
                }
                return out;
            },
            [&](const detail::IdealModOp& op) -> elem_t {
                return op.pos[ring_->add(op.elems[e], op.elems[f])];
            },
            [&](const detail::TableModOp& op) -> elem_t { return op.add[e * size_ + f]; },
        },
        op_);
}

elem_t FiniteModule::neg(elem_t e) const {
    return std::visit(
        detail::overloaded{
            [&](const detail::CyclicModOp& op) -> elem_t {
                elem_t out = 0;
                for (std::size_t i = 0; i < op.orders.size(); ++i) {
                    const elem_t d = op.orders[i];
                    const elem_t ei = (e / op.stride[i]) % d;
                    out += ((d - ei) % d) * op.stride[i];
                }
                return out;
            },
            [&](const detail::IdealModOp& op) -> elem_t {
                return op.pos[ring_->neg(op.elems[e])];
            },
            [&](const detail::TableModOp& op) -> elem_t { return op.neg[e]; },
        },
        op_);
}

elem_t FiniteModule::act(elem_t a, elem_t e) const {
    return std::visit(
        detail::overloaded{
            [&](const detail::CyclicModOp& op) -> elem_t {
                const std::uint64_t r = ring_->integer_residue(a);
                elem_t out = 0;
                for (std::size_t i = 0; i < op.orders.size(); ++i) {
                    const elem_t d = op.orders[i];
                    const elem_t ei = (e / op.stride[i]) % d;
                    out += static_cast<elem_t>((r * ei) % d) * op.stride[i];
                }
                return out;
            },
            [&](const detail::IdealModOp& op) -> elem_t {
                return op.pos[ring_->mul(a, op.elems[e])];
            },
            [&](const detail::TableModOp& op) -> elem_t { return op.act[a * size_ + e]; },
        },
        op_);
}

ModulePtr make_module(const RingPtr& ring, const std::vector<unsigned>& cyclic_orders) {
    if (cyclic_orders.empty()) throw SemanticError("a module needs at least one cyclic order");
    if (!ring->generated_by_one())
        throw SemanticError("module base ring " + ring->provenance() +
                            " is not additively generated by 1; the reduction action "
                            "is not defined");
    const unsigned exponent = ring->additive_order_of_one();
    std::string prov = "mod(";
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        if (i) prov += ", ";
        prov += std::to_string(cyclic_orders[i]);
    }
    prov += ")";
    std::size_t size = 1;
    for (unsigned d : cyclic_orders) {
        if (d == 0 || exponent % d != 0)
            throw SemanticError("cyclic order " + std::to_string(d) +
                                " does not divide the additive exponent " +
                                std::to_string(exponent) + " of " + ring->provenance());
        size *= d;
    }
    detail::CyclicModOp op;
    op.orders = cyclic_orders;
    op.stride.resize(cyclic_orders.size());
    elem_t stride = 1;
    for (std::size_t i = cyclic_orders.size(); i-- > 0;) {
        op.stride[i] = stride;
        stride *= cyclic_orders[i];
    }
    return FiniteModule::create(ring, std::move(op), size, std::move(prov));
}

ModulePtr regular_module(const RingPtr& ring) {
    detail::IdealModOp op;
    const auto n = static_cast<elem_t>(ring->size());
    op.elems.resize(n);
    op.pos.resize(n);
    for (elem_t a = 0; a < n; ++a) op.elems[a] = op.pos[a] = a;
    return FiniteModule::create(ring, std::move(op), n, "regular(" + ring->provenance() + ")");
}

ModulePtr ideal_module(const Ideal& ideal) {
    detail::IdealModOp op;
    op.elems = ideal.elements().to_list();
    op.pos.assign(ideal.ring()->size(), kNoPos);
    for (std::size_t i = 0; i < op.elems.size(); ++i)
        op.pos[op.elems[i]] = static_cast<elem_t>(i);
    const std::size_t size = op.elems.size();
    return FiniteModule::create(ideal.ring(), std::move(op), size,
                                "module(" + ideal_literal_string(ideal) + ")");
}

ElemSet module_span_set(const FiniteModule& mod, std::span<const elem_t> seed) {
    const auto n = static_cast<elem_t>(mod.size());
    const auto rn = static_cast<elem_t>(mod.ring()->size());
    ElemSet out(n);
    std::vector<elem_t> members, queue;
    auto enqueue = [&](elem_t x) {
        if (!out.test(x)) {
            out.set(x);
            queue.push_back(x);
        }
    };
    enqueue(0);
    for (elem_t s : seed) enqueue(s);
    while (!queue.empty()) {
        const elem_t x = queue.back();
        queue.pop_back();
        members.push_back(x);
        for (elem_t r = 0; r < rn; ++r) enqueue(mod.act(r, x));
        enqueue(mod.neg(x));
        for (elem_t y : members) enqueue(mod.add(x, y));
    }
    return out;
}

Submodule module_span(const ModulePtr& mod, std::span<const elem_t> generators) {
    return Submodule{mod, module_span_set(*mod, generators)};
}

std::vector<Submodule> submodules(const ModulePtr& mod) {
    auto& caches = mod->caches();
    std::call_once(caches.submodules_once, [&] {
        const auto n = static_cast<elem_t>(mod->size());
        std::unordered_set<ElemSet, ElemSetHash> seen;
        std::vector<ElemSet> cyclic;
        for (elem_t e = 0; e < n; ++e) {
            ElemSet s = module_span_set(*mod, std::span<const elem_t>(&e, 1));
            if (seen.insert(s).second) cyclic.push_back(s);
        }
        std::vector<ElemSet> work(cyclic), found(cyclic);
        while (!work.empty()) {
            ElemSet cur = std::move(work.back());
            work.pop_back();
            for (const ElemSet& c : cyclic) {
                if (c.is_subset_of(cur)) continue;
                ElemSet s(mod->size());
                for (elem_t x : cur.to_list())
                    for (elem_t y : c.to_list()) s.set(mod->add(x, y));
                if (seen.insert(s).second) {
                    work.push_back(s);
                    found.push_back(std::move(s));
                }
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const ElemSet& a, const ElemSet& b) { return canonical_less(a, b); });
        caches.submodules = std::move(found);
    });
    std::vector<Submodule> out;
    out.reserve(caches.submodules.size());
    for (const ElemSet& s : caches.submodules) out.push_back({mod, s});
    return out;
}

Submodule ideal_times_module(const Ideal& ideal, const ModulePtr& mod) {
    Submodule whole{mod, ElemSet(mod->size())};
    for (elem_t e = 0; e < mod->size(); ++e) whole.elements.set(e);
    return ideal_times_submodule(ideal, whole);
}

Submodule ideal_times_submodule(const Ideal& ideal, const Submodule& sub) {
    const auto& mod = sub.module;
    if (ideal.ring() != mod->ring())
        throw SemanticError("ideal and module live over different rings");
    std::vector<elem_t> seed;
    for (elem_t a : ideal.elements().to_list())
        for (elem_t e : sub.elements.to_list()) seed.push_back(mod->act(a, e));
    return Submodule{mod, module_span_set(*mod, seed)};
}

ElemSet module_zero_divisors(const ModulePtr& mod) {
    const auto rn = static_cast<elem_t>(mod->ring()->size());
    ElemSet out(rn);
    for (elem_t a = 0; a < rn; ++a) {
        for (elem_t e = 1; e < mod->size(); ++e) {
            if (mod->act(a, e) == 0) {
                out.set(a);
                break;
            }
        }
    }
    return out;
}

bool is_simple(const ModulePtr& mod) {
    return mod->size() >= 2 && submodules(mod).size() == 2;
}

bool is_divisible(const ModulePtr& mod) {
    const auto rn = static_cast<elem_t>(mod->ring()->size());
    for (elem_t a = 0; a < rn; ++a) {
        if (!mod->ring()->is_regular(a)) continue;
        ElemSet image(mod->size());
        for (elem_t e = 0; e < mod->size(); ++e) image.set(mod->act(a, e));
        if (image.count() != mod->size()) return false;
    }
    return true;
}

bool is_multiplication_module(const ModulePtr& mod, std::vector<ModuleWitness>* witnesses) {
    if (mod->size() < 2) return false;  // the definition asks for a nonzero module
    const auto lattice = all_ideals(mod->ring());
    for (const Submodule& sub : submodules(mod)) {
        bool found = false;
        for (const Ideal& ideal : lattice) {
            if (ideal_times_module(ideal, mod).elements == sub.elements) {
                if (witnesses) witnesses->push_back({sub, ideal});
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Ideal annihilator(const ModulePtr& mod) {
    const auto rn = static_cast<elem_t>(mod->ring()->size());
    ElemSet out(rn);
    for (elem_t a = 0; a < rn; ++a) {
        bool kills = true;
        for (elem_t e = 0; e < mod->size(); ++e) {
            if (mod->act(a, e) != 0) {
                kills = false;
                break;
            }
        }
        if (kills) out.set(a);
    }
    return Ideal(mod->ring(), std::move(out));
}

std::vector<Ideal> support(const ModulePtr& mod) {
    const Ideal ann = annihilator(mod);
    std::vector<Ideal> out;
    for (const Ideal& p : prime_ideals(mod->ring()))
        if (ann.elements().is_subset_of(p.elements())) out.push_back(p);
    return out;
}

ModulePtr localize_module(const ModulePtr& mod, const Ideal& prime) {
    const RingHom hom = localize_at_prime(mod->ring(), prime);
    const auto& ring = *mod->ring();
    const auto n = static_cast<elem_t>(ring.size());
    const auto en = static_cast<elem_t>(mod->size());

    std::vector<elem_t> s_list;
    for (elem_t a = 0; a < n; ++a)
        if (!prime.contains(a)) s_list.push_back(a);
    const auto ns = static_cast<elem_t>(s_list.size());

    std::vector<char> killed(en, 0);
    for (elem_t e = 0; e < en; ++e)
        for (elem_t u : s_list)
            if (mod->act(u, e) == 0) {
                killed[e] = 1;
                break;
            }

    const std::size_t pairs = static_cast<std::size_t>(en) * ns;
    auto related = [&](elem_t e, elem_t s, elem_t f, elem_t t) {
        return killed[mod->add(mod->act(t, e), mod->neg(mod->act(s, f)))] != 0;
    };
    std::vector<elem_t> cls(pairs, kNoPos);
    std::vector<std::pair<elem_t, elem_t>> reps;
    for (std::size_t p = 0; p < pairs; ++p) {
        if (cls[p] != kNoPos) continue;
        const elem_t e = static_cast<elem_t>(p / ns), s = s_list[p % ns];
        const auto id = static_cast<elem_t>(reps.size());
        reps.emplace_back(e, s);
        cls[p] = id;
        for (std::size_t r = p + 1; r < pairs; ++r) {
            if (cls[r] != kNoPos) continue;
            if (related(e, s, static_cast<elem_t>(r / ns), s_list[r % ns])) cls[r] = id;
        }
    }

    std::vector<elem_t> s_pos(n, kNoPos);
    for (elem_t i = 0; i < ns; ++i) s_pos[s_list[i]] = i;
    auto class_of = [&](elem_t e, elem_t s) { return cls[std::size_t{e} * ns + s_pos[s]]; };

    const std::size_t q = reps.size();
    const auto& target = hom.target;
    // the canonical ring map is surjective here, so scalars lift to A
    std::vector<elem_t> pre(target->size(), kNoPos);
    for (elem_t a = 0; a < n; ++a)
        if (pre[hom(a)] == kNoPos) pre[hom(a)] = a;

    detail::TableModOp op;
    op.add.resize(q * q);
    op.neg.resize(q);
    op.act.resize(target->size() * q);
    for (std::size_t x = 0; x < q; ++x) {
        const auto [e, s] = reps[x];
        op.neg[x] = static_cast<std::uint16_t>(class_of(mod->neg(e), s));
        for (std::size_t y = 0; y < q; ++y) {
            const auto [f, t] = reps[y];
            op.add[x * q + y] = static_cast<std::uint16_t>(
                class_of(mod->add(mod->act(t, e), mod->act(s, f)), ring.mul(s, t)));
        }
        for (elem_t ax = 0; ax < target->size(); ++ax) {
            op.act[ax * q + x] =
                static_cast<std::uint16_t>(class_of(mod->act(pre[ax], e), s));
        }
    }
    return FiniteModule::create(target, std::move(op), q,
                                "loc-module(" + mod->provenance() + ", " +
                                    ideal_literal_string(prime) + ")");
}

std::optional<std::string> check_module_axioms(const FiniteModule& mod) {
    const auto n = static_cast<elem_t>(mod.ring()->size());
    const auto en = static_cast<elem_t>(mod.size());
    const auto& ring = *mod.ring();
    for (elem_t e = 0; e < en; ++e) {
        if (mod.add(e, 0) != e) return "0 is not the module identity";
        if (mod.add(e, mod.neg(e)) != 0) return "module negation fails";
        if (mod.act(ring.one(), e) != e) return "1 does not act as identity";
        for (elem_t f = 0; f < en; ++f) {
            if (mod.add(e, f) != mod.add(f, e)) return "module addition is not commutative";
            for (elem_t g = 0; g < en; ++g)
                if (mod.add(mod.add(e, f), g) != mod.add(e, mod.add(f, g)))
                    return "module addition is not associative";
        }
    }
    for (elem_t a = 0; a < n; ++a) {
        for (elem_t e = 0; e < en; ++e) {
            for (elem_t f = 0; f < en; ++f)
                if (mod.act(a, mod.add(e, f)) != mod.add(mod.act(a, e), mod.act(a, f)))
                    return "action does not distribute over module addition";
            for (elem_t b = 0; b < n; ++b) {
                if (mod.act(ring.add(a, b), e) != mod.add(mod.act(a, e), mod.act(b, e)))
                    return "action does not distribute over ring addition";
                if (mod.act(ring.mul(a, b), e) != mod.act(a, mod.act(b, e)))
                    return "action is not associative";
            }
        }
    }
    return std::nullopt;
}

std::string module_element_to_string(const ModulePtr& mod, elem_t e) {
    return std::visit(
        detail::overloaded{
            [&](const detail::CyclicModOp& op) {
                if (op.orders.size() == 1) return std::to_string(e);
                std::string out = "(";
                for (std::size_t i = 0; i < op.orders.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string((e / op.stride[i]) % op.orders[i]);
                }
                return out + ")";
            },
            [&](const detail::IdealModOp& op) {
                return element_to_string(mod->ring(), op.elems[e]);
            },
            [&](const detail::TableModOp&) { return std::to_string(e); },
        },
        mod->op());
}

}  // namespace ringlab
