#include "ringlab/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlab {

Ideal::Ideal(RingPtr ring, ElemSet elements) : ring_(std::move(ring)), elements_(std::move(elements)) {
    if (!ring_) throw SemanticError("ideal needs a ring");
    const auto n = static_cast<elem_t>(ring_->size());
    if (elements_.universe() != n) throw SemanticError("ideal element set has wrong universe");
    if (!elements_.test(0)) throw SemanticError("ideal does not contain 0");
    const auto members = elements_.to_list();
    for (elem_t x : members) {
        for (elem_t y : members)
            if (!elements_.test(ring_->add(x, y)))
                throw SemanticError("element set is not closed under addition");
        for (elem_t r = 0; r < n; ++r)
            if (!elements_.test(ring_->mul(r, x)))
                throw SemanticError("element set is not closed under ring multiples");
    }
}

Ideal Ideal::span(const RingPtr& ring, std::span<const elem_t> generators) {
    return Ideal(ring, ideal_span_set(*ring, generators));
}

Ideal Ideal::span(const RingPtr& ring, std::initializer_list<elem_t> generators) {
    return span(ring, std::span<const elem_t>(generators.begin(), generators.size()));
}

Ideal Ideal::zero(const RingPtr& ring) { return span(ring, {}); }

Ideal Ideal::unit(const RingPtr& ring) { return span(ring, {ring->one()}); }

bool Ideal::is_regular() const {
    for (elem_t a : elements_.to_list())
        if (ring_->is_regular(a)) return true;
    return false;
}

ElemSet ideal_span_set(const FiniteRing& ring, std::span<const elem_t> seed) {
    const auto n = static_cast<elem_t>(ring.size());
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
        for (elem_t r = 0; r < n; ++r) enqueue(ring.mul(r, x));
        for (elem_t y : members) enqueue(ring.add(x, y));
    }
    return out;
}

namespace {

// Product set of two ideals: closure of the pairwise products.
ElemSet product_set(const FiniteRing& ring, const ElemSet& a, const ElemSet& b) {
    std::vector<elem_t> seed;
    const auto la = a.to_list(), lb = b.to_list();
    seed.reserve(la.size() * lb.size());
    for (elem_t x : la)
        for (elem_t y : lb) seed.push_back(ring.mul(x, y));
    return ideal_span_set(ring, seed);
}

// Sums of ideals are already closed pointwise.
ElemSet sum_set(const FiniteRing& ring, const ElemSet& a, const ElemSet& b) {
    ElemSet out(ring.size());
    for (elem_t x : a.to_list())
        for (elem_t y : b.to_list()) out.set(ring.add(x, y));
    return out;
}

ElemSet radical_set(const FiniteRing& ring, const ElemSet& ideal) {
    const auto n = static_cast<elem_t>(ring.size());
    ElemSet out(n);
    for (elem_t x = 0; x < n; ++x) {
        elem_t p = x;
        for (elem_t k = 0; k < n; ++k) {
            if (ideal.test(p)) {
                out.set(x);
                break;
            }
            p = ring.mul(p, x);
        }
    }
    return out;
}

bool prime_set(const FiniteRing& ring, const ElemSet& ideal) {
    const auto n = static_cast<elem_t>(ring.size());
    if (ideal.count() == ring.size()) return false;
    for (elem_t a = 0; a < n; ++a) {
        if (ideal.test(a)) continue;
        for (elem_t b = a; b < n; ++b) {
            if (ideal.test(b)) continue;
            if (ideal.test(ring.mul(a, b))) return false;
        }
    }
    return true;
}

void build_lattice(const RingPtr& ring) {
    auto& caches = ring->caches();
    std::call_once(caches.lattice_once, [&] {
        const auto n = static_cast<elem_t>(ring->size());
        std::unordered_set<ElemSet, ElemSetHash> seen;
        std::vector<ElemSet> principals;
        for (elem_t a = 0; a < n; ++a) {
            ElemSet s = ideal_span_set(*ring, std::span<const elem_t>(&a, 1));
            if (seen.insert(s).second) principals.push_back(s);
        }
        // Closing under sums with principal ideals reaches every ideal
        // (each is a finite sum of principal ones) and the result is closed
        // under pairwise sums.
        std::vector<ElemSet> work(principals.begin(), principals.end());
        std::vector<ElemSet> found(work);
        while (!work.empty()) {
            ElemSet cur = std::move(work.back());
            work.pop_back();
            for (const ElemSet& p : principals) {
                if (p.is_subset_of(cur)) continue;
                ElemSet s = sum_set(*ring, cur, p);
                if (seen.insert(s).second) {
                    work.push_back(s);
                    found.push_back(std::move(s));
                }
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const ElemSet& a, const ElemSet& b) { return canonical_less(a, b); });
        caches.ideals = std::move(found);
        for (std::size_t i = 0; i < caches.ideals.size(); ++i)
            caches.ideal_index.emplace(caches.ideals[i], i);
    });
}

void build_flags(const RingPtr& ring) {
    build_lattice(ring);
    auto& caches = ring->caches();
    std::call_once(caches.flags_once, [&] {
        const auto& ideals = caches.ideals;
        const std::size_t m = ideals.size();
        std::vector<std::uint8_t> prime(m, 0), maximal(m, 0), rad(m, 0);
        std::vector<unsigned> cap(m, 1);
        for (std::size_t i = 0; i < m; ++i) {
            prime[i] = prime_set(*ring, ideals[i]) ? 1 : 0;
            rad[i] = (radical_set(*ring, ideals[i]) == ideals[i]) ? 1 : 0;
            ElemSet power = ideals[i];
            unsigned k = 1;
            for (;;) {
                ElemSet next = product_set(*ring, power, ideals[i]);
                if (next == power) break;
                power = std::move(next);
                ++k;
            }
            cap[i] = k;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!prime[i]) continue;
            bool is_max = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i || ideals[j].count() == ring->size()) continue;
                if (ideals[i].is_subset_of(ideals[j]) && !(ideals[i] == ideals[j])) {
                    is_max = false;
                    break;
                }
            }
            maximal[i] = is_max ? 1 : 0;
        }
        caches.prime_flag = std::move(prime);
        caches.maximal_flag = std::move(maximal);
        caches.radical_flag = std::move(rad);
        caches.power_cap = std::move(cap);
    });
}

std::size_t lattice_index(const Ideal& ideal) {
    build_lattice(ideal.ring());
    const auto& caches = ideal.ring()->caches();
    auto it = caches.ideal_index.find(ideal.elements());
    if (it == caches.ideal_index.end())
        throw SemanticError("set is not an ideal of this ring");
    return it->second;
}

}  // namespace

std::vector<Ideal> all_ideals(const RingPtr& ring) {
    build_lattice(ring);
    const auto& caches = ring->caches();
    std::vector<Ideal> out;
    out.reserve(caches.ideals.size());
    for (const ElemSet& s : caches.ideals) out.emplace_back(ring, s);
    return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw SemanticError("ideal sum across different rings");
    return Ideal(a.ring(), sum_set(*a.ring(), a.elements(), b.elements()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw SemanticError("ideal product across different rings");
    return Ideal(a.ring(), product_set(*a.ring(), a.elements(), b.elements()));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring())
        throw SemanticError("ideal intersection across different rings");
    ElemSet s = a.elements();
    s &= b.elements();
    return Ideal(a.ring(), std::move(s));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw SemanticError("ideal quotient across different rings");
    const auto& ring = *a.ring();
    const auto n = static_cast<elem_t>(ring.size());
    const auto lb = b.elements().to_list();
    ElemSet out(n);
    for (elem_t x = 0; x < n; ++x) {
        bool ok = true;
        for (elem_t y : lb) {
            if (!a.contains(ring.mul(x, y))) {
                ok = false;
                break;
            }
        }
        if (ok) out.set(x);
    }
    return Ideal(a.ring(), std::move(out));
}

Ideal ideal_power(const Ideal& a, unsigned k) {
    if (k == 0) return Ideal::unit(a.ring());
    Ideal out = a;
    for (unsigned i = 1; i < k; ++i) out = ideal_product(out, a);
    return out;
}

Ideal radical(const Ideal& ideal) {
    return Ideal(ideal.ring(), radical_set(*ideal.ring(), ideal.elements()));
}

bool is_radical(const Ideal& ideal) {
    build_flags(ideal.ring());
    return ideal.ring()->caches().radical_flag[lattice_index(ideal)] != 0;
}

bool is_prime(const Ideal& ideal) {
    build_flags(ideal.ring());
    return ideal.ring()->caches().prime_flag[lattice_index(ideal)] != 0;
}

bool is_maximal(const Ideal& ideal) {
    build_flags(ideal.ring());
    return ideal.ring()->caches().maximal_flag[lattice_index(ideal)] != 0;
}

bool is_primary(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const auto& ring = *ideal.ring();
    const auto n = static_cast<elem_t>(ring.size());
    const ElemSet rad = radical_set(ring, ideal.elements());
    for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
            if (ideal.contains(ring.mul(a, b)) && !ideal.contains(a) && !rad.test(b))
                return false;
        }
    }
    return true;
}

std::vector<Ideal> prime_ideals(const RingPtr& ring) {
    build_flags(ring);
    const auto& caches = ring->caches();
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < caches.ideals.size(); ++i)
        if (caches.prime_flag[i]) out.emplace_back(ring, caches.ideals[i]);
    return out;
}

std::vector<Ideal> maximal_ideals(const RingPtr& ring) {
    build_flags(ring);
    const auto& caches = ring->caches();
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < caches.ideals.size(); ++i)
        if (caches.maximal_flag[i]) out.emplace_back(ring, caches.ideals[i]);
    return out;
}

std::vector<Ideal> minimal_primes(const Ideal& ideal) {
    std::vector<Ideal> over;
    for (const Ideal& p : prime_ideals(ideal.ring()))
        if (ideal.elements().is_subset_of(p.elements())) over.push_back(p);
    std::vector<Ideal> out;
    for (const Ideal& p : over) {
        bool minimal = true;
        for (const Ideal& q : over) {
            if (&q == &p) continue;
            if (q.elements().is_subset_of(p.elements()) && !(q == p)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(p);
    }
    return out;
}

bool is_principal(const Ideal& ideal, elem_t* generator) {
    for (elem_t g : ideal.elements().to_list()) {
        if (ideal_span_set(*ideal.ring(), std::span<const elem_t>(&g, 1)) ==
            ideal.elements()) {
            if (generator) *generator = g;
            return true;
        }
    }
    return false;
}

bool is_invertible(const Ideal& ideal) {
    if (!ideal.is_regular()) return false;
    if (is_principal(ideal)) return true;  // principal => locally principal
    for (const Ideal& m : maximal_ideals(ideal.ring())) {
        RingHom hom = localize_at_prime(ideal.ring(), m);
        if (!is_principal(image_ideal(hom, ideal))) return false;
    }
    return true;
}

bool is_multiplication_ideal(const Ideal& ideal,
                             std::vector<MultiplicationWitness>* witnesses) {
    build_lattice(ideal.ring());
    const auto& lattice = ideal.ring()->caches().ideals;
    for (const ElemSet& contained : lattice) {
        if (!contained.is_subset_of(ideal.elements())) continue;
        bool found = false;
        for (const ElemSet& cofactor : lattice) {
            if (product_set(*ideal.ring(), cofactor, ideal.elements()) == contained) {
                if (witnesses)
                    witnesses->push_back({Ideal(ideal.ring(), contained),
                                          Ideal(ideal.ring(), cofactor)});
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Ideal image_ideal(const RingHom& hom, const Ideal& ideal) {
    if (hom.source != ideal.ring())
        throw SemanticError("ideal does not live in the map's source ring");
    std::vector<elem_t> seed;
    for (elem_t a : ideal.elements().to_list()) seed.push_back(hom(a));
    return Ideal::span(hom.target, seed);
}

Ideal preimage_ideal(const RingHom& hom, const Ideal& ideal) {
    if (hom.target != ideal.ring())
        throw SemanticError("ideal does not live in the map's target ring");
    ElemSet out(hom.source->size());
    for (elem_t a = 0; a < hom.source->size(); ++a)
        if (ideal.contains(hom(a))) out.set(a);
    return Ideal(hom.source, std::move(out));
}

unsigned power_stabilization_index(const Ideal& ideal) {
    build_flags(ideal.ring());
    return ideal.ring()->caches().power_cap[lattice_index(ideal)];
}

std::vector<elem_t> minimal_generators(const Ideal& ideal) {
    std::vector<elem_t> gens;
    ElemSet span = ideal_span_set(*ideal.ring(), {});
    for (elem_t a : ideal.elements().to_list()) {
        if (span.test(a)) continue;
        gens.push_back(a);
        span = ideal_span_set(*ideal.ring(), gens);
        if (span == ideal.elements()) break;
    }
    return gens;
}

std::string ideal_literal_string(const Ideal& ideal) {
    const auto gens = minimal_generators(ideal);
    std::string out = "ideal(";
    if (gens.empty()) out += "0";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += element_to_string(ideal.ring(), gens[i]);
    }
    return out + ")";
}

}  // namespace ringlab
