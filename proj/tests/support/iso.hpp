#pragma once

// Ring-isomorphism helpers for the tests: a cheap invariant-vector
// comparison for any size, and an exhaustive search for carriers up to 16.

#include <array>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab::testsupport {

struct InvariantVector {
    std::size_t size = 0;
    std::size_t units = 0;
    std::size_t ideals = 0;
    std::size_t nilradical = 0;

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

inline InvariantVector invariant_vector(const RingPtr& ring) {
    return {ring->size(), ring->units().count(), all_ideals(ring).size(),
            ring->nilpotents().count()};
}

namespace detail {

// How each element arises from the generator closure: as a generator, a sum,
// or a product of earlier elements.
struct Recipe {
    enum Kind { Generator, Sum, Product } kind = Generator;
    elem_t a = 0, b = 0;   // operand element indices
    std::size_t gen = 0;   // index into the generator list
};

struct Presentation {
    std::vector<elem_t> generators;
    std::vector<elem_t> order;            // closure discovery order
    std::vector<Recipe> recipe;           // indexed by ring element
};

inline Presentation present(const FiniteRing& ring) {
    const auto n = static_cast<elem_t>(ring.size());
    Presentation p;
    p.recipe.resize(n);
    std::vector<char> known(n, 0);
    auto close = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            const auto snapshot = p.order;
            for (elem_t x : snapshot) {
                for (elem_t y : snapshot) {
                    for (int op = 0; op < 2; ++op) {
                        const elem_t z = op ? ring.mul(x, y) : ring.add(x, y);
                        if (known[z]) continue;
                        known[z] = 1;
                        p.recipe[z] = {op ? Recipe::Product : Recipe::Sum, x, y, 0};
                        p.order.push_back(z);
                        changed = true;
                    }
                }
            }
        }
    };
    auto add_generator = [&](elem_t g) {
        known[g] = 1;
        p.recipe[g] = {Recipe::Generator, 0, 0, p.generators.size()};
        p.generators.push_back(g);
        p.order.push_back(g);
        close();
    };
    add_generator(0);
    add_generator(ring.one());
    for (elem_t a = 0; a < n; ++a)
        if (!known[a]) add_generator(a);
    return p;
}

}  // namespace detail

/// Exhaustive isomorphism test for rings with at most 16 elements: images
/// are chosen for a generating set only, the rest of the map is forced by
/// the closure recipes, and the candidate is verified on all pairs.
inline bool isomorphic_exhaustive(const RingPtr& lhs, const RingPtr& rhs) {
    if (lhs->size() != rhs->size()) return false;
    const auto n = static_cast<elem_t>(lhs->size());
    const auto pres = detail::present(*lhs);
    const std::size_t k = pres.generators.size();

    std::vector<elem_t> image(k, 0);
    std::vector<elem_t> map(n, 0);

    auto attempt = [&]() -> bool {
        std::vector<char> used(n, 0);
        for (elem_t x : pres.order) {
            const auto& r = pres.recipe[x];
            elem_t y = 0;
            switch (r.kind) {
                case detail::Recipe::Generator: y = image[r.gen]; break;
                case detail::Recipe::Sum: y = rhs->add(map[r.a], map[r.b]); break;
                case detail::Recipe::Product: y = rhs->mul(map[r.a], map[r.b]); break;
            }
            if (used[y]) return false;  // not injective
            used[y] = 1;
            map[x] = y;
        }
        for (elem_t a = 0; a < n; ++a)
            for (elem_t b = 0; b < n; ++b) {
                if (map[lhs->add(a, b)] != rhs->add(map[a], map[b])) return false;
                if (map[lhs->mul(a, b)] != rhs->mul(map[a], map[b])) return false;
            }
        return true;
    };

    // generator 0 is 0, generator 1 is the identity; their images are fixed
    image[0] = 0;
    image[1] = rhs->one();
    std::vector<elem_t> free_slots;
    for (std::size_t g = 2; g < k; ++g) free_slots.push_back(static_cast<elem_t>(g));

    std::vector<elem_t> choice(free_slots.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < free_slots.size(); ++i)
            image[free_slots[i]] = choice[i];
        if (attempt()) return true;
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < n) break;
            choice[i] = 0;
        }
        if (i == choice.size()) return false;
        if (free_slots.empty()) return false;
    }
}

/// Invariant vectors agree, plus the exhaustive search when both carriers
/// are small enough for it.
inline bool isomorphic(const RingPtr& lhs, const RingPtr& rhs) {
    if (!(invariant_vector(lhs) == invariant_vector(rhs))) return false;
    if (lhs->size() <= 16) return isomorphic_exhaustive(lhs, rhs);
    return true;
}

}  // namespace ringlab::testsupport
