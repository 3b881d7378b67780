#include "ringlab/ring.hpp"

#include <algorithm>
#include <limits>

#include "overload.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"

namespace ringlab {

namespace {

constexpr elem_t kNoPos = std::numeric_limits<elem_t>::max();

// Carrier indices must fit the uint16 tables used by quotients and
// localizations.
constexpr std::size_t kMaxCarrier = 65535;

}  // namespace

FiniteRing::FiniteRing(detail::RingOp op, std::size_t size, elem_t one,
                       std::string provenance, ConstructionTag tag)
    : op_(std::move(op)),
      size_(size),
      one_(one),
      provenance_(std::move(provenance)),
      tag_(std::move(tag)),
      units_(size),
      regulars_(size),
      idempotents_(size),
      nilpotents_(size) {}

RingPtr FiniteRing::create(detail::RingOp op, std::size_t size, elem_t one,
                           std::string provenance, ConstructionTag tag) {
    if (size < 2)
        throw SemanticError("ring '" + provenance +
                            "' would have fewer than 2 elements; the zero ring has no "
                            "nonzero unit");
    if (size > kMaxCarrier)
        throw SemanticError("ring '" + provenance + "' has " + std::to_string(size) +
                            " elements, beyond the supported carrier size");
    if (one == 0)
        throw SemanticError("ring '" + provenance + "' identifies 1 with 0");
    std::shared_ptr<FiniteRing> ring(
        new FiniteRing(std::move(op), size, one, std::move(provenance), std::move(tag)));
    ring->compute_structure();
    return ring;
}

void FiniteRing::compute_structure() {
    const auto n = static_cast<elem_t>(size_);
    // light unitality sanity; full axioms live in check_ring_axioms
    for (elem_t a = 0; a < n; ++a) {
        if (add(0, a) != a || mul(one_, a) != a)
            throw SemanticError("ring '" + provenance_ + "' has malformed operation tables");
    }
    for (elem_t a = 0; a < n; ++a) {
        bool unit = false, regular = true;
        for (elem_t b = 0; b < n; ++b) {
            const elem_t p = mul(a, b);
            if (p == one_) unit = true;
            if (b != 0 && p == 0) regular = false;
        }
        if (unit) units_.set(a);
        if (regular) regulars_.set(a);
        if (mul(a, a) == a) idempotents_.set(a);
        elem_t x = a;
        for (elem_t k = 0; k < n; ++k) {
            if (x == 0) {
                nilpotents_.set(a);
                break;
            }
            x = mul(x, a);
        }
    }
    // additive order of 1 and, when 1 generates (A, +), the residue table
    residue_.assign(size_, kNoPos);
    elem_t x = 0;
    unsigned ord = 0;
    do {
        if (residue_[x] == kNoPos) residue_[x] = ord;
        x = add(x, one_);
        ++ord;
    } while (x != 0);
    ord_one_ = ord;
    if (ord_one_ != size_) residue_.clear();
}

elem_t FiniteRing::add(elem_t a, elem_t b) const {
    return std::visit(
        detail::overloaded{
            [&](const detail::ZmodOp& op) -> elem_t { return (a + b) % op.n; },
            [&](const detail::TableOp& op) -> elem_t { return op.add[a * size_ + b]; },
            [&](const detail::ProductOp& op) -> elem_t {
                elem_t out = 0;
                for (std::size_t i = 0; i < op.factors.size(); ++i) {
                    const auto s = static_cast<elem_t>(op.factors[i]->size());
                    const elem_t ai = (a / op.stride[i]) % s;
                    const elem_t bi = (b / op.stride[i]) % s;
                    out += op.factors[i]->add(ai, bi) * op.stride[i];
                }
                return out;
            },
            [&](const detail::TrivextOp& op) -> elem_t {
                const auto m = static_cast<elem_t>(op.mod->size());
                return op.base->add(a / m, b / m) * m + op.mod->add(a % m, b % m);
            },
            [&](const detail::DupOp& op) -> elem_t {
                const auto m = static_cast<elem_t>(op.ideal_elems.size());
                const elem_t sa = op.base->add(a / m, b / m);
                const elem_t si =
                    op.base->add(op.ideal_elems[a % m], op.ideal_elems[b % m]);
                return sa * m + op.pos[si];
            },
        },
        op_);
}

elem_t FiniteRing::neg(elem_t a) const {
    return std::visit(
        detail::overloaded{
            [&](const detail::ZmodOp& op) -> elem_t { return a == 0 ? 0 : op.n - a; },
            [&](const detail::TableOp& op) -> elem_t { return op.neg[a]; },
            [&](const detail::ProductOp& op) -> elem_t {
                elem_t out = 0;
                for (std::size_t i = 0; i < op.factors.size(); ++i) {
                    const auto s = static_cast<elem_t>(op.factors[i]->size());
                    out += op.factors[i]->neg((a / op.stride[i]) % s) * op.stride[i];
                }
                return out;
            },
            [&](const detail::TrivextOp& op) -> elem_t {
                const auto m = static_cast<elem_t>(op.mod->size());
                return op.base->neg(a / m) * m + op.mod->neg(a % m);
            },
            [&](const detail::DupOp& op) -> elem_t {
                const auto m = static_cast<elem_t>(op.ideal_elems.size());
                return op.base->neg(a / m) * m +
                       op.pos[op.base->neg(op.ideal_elems[a % m])];
            },
        },
        op_);
}

elem_t FiniteRing::mul(elem_t a, elem_t b) const {
    return std::visit(
        detail::overloaded{
            [&](const detail::ZmodOp& op) -> elem_t {
                return static_cast<elem_t>((std::uint64_t{a} * b) % op.n);
            },
            [&](const detail::TableOp& op) -> elem_t { return op.mul[a * size_ + b]; },
            [&](const detail::ProductOp& op) -> elem_t {
                elem_t out = 0;
                for (std::size_t i = 0; i < op.factors.size(); ++i) {
                    const auto s = static_cast<elem_t>(op.factors[i]->size());
                    const elem_t ai = (a / op.stride[i]) % s;
                    const elem_t bi = (b / op.stride[i]) % s;
                    out += op.factors[i]->mul(ai, bi) * op.stride[i];
                }
                return out;
            },
            [&](const detail::TrivextOp& op) -> elem_t {
                // (a,e)(b,f) = (ab, af + be)
                const auto m = static_cast<elem_t>(op.mod->size());
                const elem_t ra = a / m, e = a % m;
                const elem_t rb = b / m, f = b % m;
                return op.base->mul(ra, rb) * m +
                       op.mod->add(op.mod->act(ra, f), op.mod->act(rb, e));
            },
            [&](const detail::DupOp& op) -> elem_t {
                // (a, a+i)(b, b+j) = (ab, ab + (aj + bi + ij))
                const auto m = static_cast<elem_t>(op.ideal_elems.size());
                const elem_t ra = a / m, i = op.ideal_elems[a % m];
                const elem_t rb = b / m, j = op.ideal_elems[b % m];
                const auto& A = *op.base;
                const elem_t delta = A.add(A.add(A.mul(ra, j), A.mul(rb, i)), A.mul(i, j));
                return A.mul(ra, rb) * m + op.pos[delta];
            },
        },
        op_);
}

elem_t FiniteRing::power(elem_t a, unsigned k) const {
    elem_t out = one_;
    elem_t base = a;
    while (k) {
        if (k & 1) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

elem_t FiniteRing::scale(std::uint64_t k, elem_t a) const {
    elem_t out = 0;
    elem_t base = a;
    while (k) {
        if (k & 1) out = add(out, base);
        base = add(base, base);
        k >>= 1;
    }
    return out;
}

elem_t FiniteRing::integer_residue(elem_t a) const {
    if (!generated_by_one())
        throw SemanticError("ring '" + provenance_ +
                            "' is not additively generated by 1; no canonical integer "
                            "residues");
    return residue_[a];
}

namespace detail {

RingPtr make_table_ring(std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul,
                        std::size_t size, elem_t one, std::string provenance,
                        ConstructionTag tag) {
    TableOp op{std::move(add), std::move(mul), {}};
    op.neg.assign(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            if (op.add[a * size + b] == 0) {
                op.neg[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
    return FiniteRing::create(std::move(op), size, one, std::move(provenance),
                              std::move(tag));
}

}  // namespace detail

RingPtr make_zmod(unsigned n) {
    if (n < 2)
        throw SemanticError("Zmod(" + std::to_string(n) +
                            ") is rejected: rings here have a nonzero unit");
    return FiniteRing::create(detail::ZmodOp{n}, n, 1, "Zmod(" + std::to_string(n) + ")",
                              ConstructionTag{ConstructionKind::Base, {}});
}

std::optional<std::string> check_ring_axioms(const FiniteRing& ring) {
    const auto n = static_cast<elem_t>(ring.size());
    const elem_t one = ring.one();
    for (elem_t a = 0; a < n; ++a) {
        if (ring.add(a, 0) != a) return "0 is not an additive identity";
        if (ring.add(a, ring.neg(a)) != 0) return "negation fails";
        if (ring.mul(a, one) != a) return "1 is not a multiplicative identity";
    }
    for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
            if (ring.add(a, b) != ring.add(b, a)) return "addition is not commutative";
            if (ring.mul(a, b) != ring.mul(b, a))
                return "multiplication is not commutative";
            for (elem_t c = 0; c < n; ++c) {
                if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)))
                    return "addition is not associative";
                if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
                    return "multiplication is not associative";
                if (ring.mul(a, ring.add(b, c)) !=
                    ring.add(ring.mul(a, b), ring.mul(a, c)))
                    return "distributivity fails";
            }
        }
    }
    return std::nullopt;
}

bool is_ring_hom(const RingHom& hom) {
    const auto n = static_cast<elem_t>(hom.source->size());
    if (hom.map.size() != n) return false;
    if (hom(0) != 0 || hom(hom.source->one()) != hom.target->one()) return false;
    for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
            if (hom(hom.source->add(a, b)) != hom.target->add(hom(a), hom(b))) return false;
            if (hom(hom.source->mul(a, b)) != hom.target->mul(hom(a), hom(b))) return false;
        }
    }
    return true;
}

bool is_field(const RingPtr& ring) { return ring->units().count() == ring->size() - 1; }

bool is_reduced(const RingPtr& ring) { return ring->nilpotents().count() == 1; }

bool is_domain(const RingPtr& ring) {
    return ring->regular_elements().count() == ring->size() - 1;
}

std::optional<Ideal> local_maximal_ideal(const RingPtr& ring) {
    auto maxes = maximal_ideals(ring);
    if (maxes.size() == 1) return maxes.front();
    return std::nullopt;
}

bool is_local(const RingPtr& ring) { return local_maximal_ideal(ring).has_value(); }

Ideal nilradical(const RingPtr& ring) { return Ideal(ring, ring->nilpotents()); }

RingHom quotient(const RingPtr& ring, const Ideal& ideal) {
    if (ideal.ring() != ring) throw SemanticError("ideal belongs to a different ring");
    if (!ideal.is_proper())
        throw SemanticError("quotient by the unit ideal would be the zero ring");

    auto& caches = ring->caches();
    {
        std::lock_guard<std::mutex> lock(caches.hom_mutex);
        auto it = caches.quotients.find(ideal.elements());
        if (it != caches.quotients.end()) return it->second;
    }

    const auto n = static_cast<elem_t>(ring->size());
    const auto members = ideal.elements().to_list();
    std::vector<elem_t> coset(n, kNoPos);
    std::vector<elem_t> reps;
    for (elem_t a = 0; a < n; ++a) {
        if (coset[a] != kNoPos) continue;
        const auto id = static_cast<elem_t>(reps.size());
        reps.push_back(a);
        for (elem_t i : members) coset[ring->add(a, i)] = id;
    }
    const std::size_t q = reps.size();
    std::vector<std::uint16_t> add(q * q), mul(q * q);
    for (std::size_t x = 0; x < q; ++x) {
        for (std::size_t y = 0; y < q; ++y) {
            add[x * q + y] = static_cast<std::uint16_t>(coset[ring->add(reps[x], reps[y])]);
            mul[x * q + y] = static_cast<std::uint16_t>(coset[ring->mul(reps[x], reps[y])]);
        }
    }
    const std::string lit = ideal_literal_string(ideal);
    RingPtr target = detail::make_table_ring(
        std::move(add), std::move(mul), q, coset[ring->one()],
        "quot(" + ring->provenance() + ", " + lit + ")",
        ConstructionTag{ConstructionKind::Quotient, {ring->provenance(), lit}});

    RingHom hom{ring, std::move(target), std::move(coset)};
    std::lock_guard<std::mutex> lock(caches.hom_mutex);
    return caches.quotients.emplace(ideal.elements(), std::move(hom)).first->second;
}

RingHom localize_at_prime(const RingPtr& ring, const Ideal& prime) {
    if (prime.ring() != ring) throw SemanticError("ideal belongs to a different ring");
    if (!is_prime(prime))
        throw SemanticError("localization requires a prime ideal; " +
                            ideal_literal_string(prime) + " of " +
                            ring->provenance() + " is not prime");

    auto& caches = ring->caches();
    {
        std::lock_guard<std::mutex> lock(caches.hom_mutex);
        auto it = caches.localizations.find(prime.elements());
        if (it != caches.localizations.end()) return it->second;
    }

    const auto n = static_cast<elem_t>(ring->size());
    std::vector<elem_t> s_list;
    std::vector<elem_t> s_pos(n, kNoPos);
    for (elem_t a = 0; a < n; ++a) {
        if (!prime.contains(a)) {
            s_pos[a] = static_cast<elem_t>(s_list.size());
            s_list.push_back(a);
        }
    }
    const auto ns = static_cast<elem_t>(s_list.size());

    // killed[d]: some u in S multiplies d to zero. Makes the pair relation
    // (a,s) ~ (b,t)  iff  u(at - bs) = 0 for some u in S  an O(1) test.
    std::vector<char> killed(n, 0);
    for (elem_t d = 0; d < n; ++d)
        for (elem_t u : s_list)
            if (ring->mul(u, d) == 0) {
                killed[d] = 1;
                break;
            }

    const std::size_t pairs = static_cast<std::size_t>(n) * ns;
    auto related = [&](elem_t a, elem_t s, elem_t b, elem_t t) {
        return killed[ring->sub(ring->mul(a, t), ring->mul(b, s))] != 0;
    };
    std::vector<elem_t> cls(pairs, kNoPos);
    std::vector<std::pair<elem_t, elem_t>> reps;
    for (std::size_t p = 0; p < pairs; ++p) {
        if (cls[p] != kNoPos) continue;
        const elem_t a = static_cast<elem_t>(p / ns), s = s_list[p % ns];
        const auto id = static_cast<elem_t>(reps.size());
        reps.emplace_back(a, s);
        cls[p] = id;
        for (std::size_t q = p + 1; q < pairs; ++q) {
            if (cls[q] != kNoPos) continue;
            if (related(a, s, static_cast<elem_t>(q / ns), s_list[q % ns]))
                cls[q] = id;
        }
    }

    const std::size_t q = reps.size();
    auto class_of = [&](elem_t a, elem_t s) { return cls[std::size_t{a} * ns + s_pos[s]]; };
    std::vector<std::uint16_t> add(q * q), mul(q * q);
    for (std::size_t x = 0; x < q; ++x) {
        for (std::size_t y = 0; y < q; ++y) {
            const auto [a, s] = reps[x];
            const auto [b, t] = reps[y];
            add[x * q + y] = static_cast<std::uint16_t>(class_of(
                ring->add(ring->mul(a, t), ring->mul(b, s)), ring->mul(s, t)));
            mul[x * q + y] =
                static_cast<std::uint16_t>(class_of(ring->mul(a, b), ring->mul(s, t)));
        }
    }
    const std::string lit = ideal_literal_string(prime);
    RingPtr target = detail::make_table_ring(
        std::move(add), std::move(mul), q, class_of(ring->one(), ring->one()),
        "loc(" + ring->provenance() + ", " + lit + ")",
        ConstructionTag{ConstructionKind::Localization, {ring->provenance(), lit}});

    std::vector<elem_t> canonical(n);
    for (elem_t a = 0; a < n; ++a) canonical[a] = class_of(a, ring->one());
    RingHom hom{ring, std::move(target), std::move(canonical)};
    std::lock_guard<std::mutex> lock(caches.hom_mutex);
    return caches.localizations.emplace(prime.elements(), std::move(hom)).first->second;
}

std::string element_to_string(const RingPtr& ring, elem_t a) {
    return std::visit(
        detail::overloaded{
            [&](const detail::ZmodOp&) { return std::to_string(a); },
            [&](const detail::TableOp&) { return std::to_string(a); },
            [&](const detail::ProductOp& op) {
                std::string out = "(";
                for (std::size_t i = 0; i < op.factors.size(); ++i) {
                    const auto s = static_cast<elem_t>(op.factors[i]->size());
                    if (i) out += ",";
                    out += element_to_string(op.factors[i], (a / op.stride[i]) % s);
                }
                return out + ")";
            },
            [&](const detail::TrivextOp& op) {
                const auto m = static_cast<elem_t>(op.mod->size());
                return "(" + element_to_string(op.base, a / m) + "," +
                       module_element_to_string(op.mod, a % m) + ")";
            },
            [&](const detail::DupOp& op) {
                const auto m = static_cast<elem_t>(op.ideal_elems.size());
                const elem_t base = a / m;
                const elem_t second = op.base->add(base, op.ideal_elems[a % m]);
                return "(" + element_to_string(op.base, base) + "," +
                       element_to_string(op.base, second) + ")";
            },
        },
        ring->op());
}

}  // namespace ringlab
