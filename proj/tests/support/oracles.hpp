#pragma once

// Independent brute-force oracles for the test suites. Everything here
// enumerates, closes and compares sets directly, without going through the
// library's span/lattice/search code paths it is used to validate.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab::oracle {

using Mask = std::uint32_t;  // subsets of carriers up to 20 elements

inline std::vector<elem_t> mask_elems(Mask m) {
    std::vector<elem_t> out;
    for (elem_t i = 0; i < 32; ++i)
        if (m & (Mask{1} << i)) out.push_back(i);
    return out;
}

inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Canonical subset order used by the library: size first, then the owner of
// the smallest differing element sorts first.
inline bool mask_less(Mask a, Mask b) {
    const int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    if (ca != cb) return ca < cb;
    const Mask diff = a ^ b;
    if (!diff) return false;
    return (a >> __builtin_ctz(diff)) & 1;
}

// Dumb fixpoint closure under + and ring multiples.
inline Mask close_mask(const FiniteRing& ring, Mask seed) {
    const auto n = static_cast<elem_t>(ring.size());
    Mask cur = seed | 1;  // always contains 0
    for (;;) {
        Mask next = cur;
        for (elem_t x = 0; x < n; ++x) {
            if (!(cur & (Mask{1} << x))) continue;
            for (elem_t y = 0; y < n; ++y) {
                if (cur & (Mask{1} << y)) next |= Mask{1} << ring.add(x, y);
                next |= Mask{1} << ring.mul(y, x);
            }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

inline bool is_ideal_mask(const FiniteRing& ring, Mask m) {
    if (!(m & 1)) return false;
    return close_mask(ring, m) == m;
}

// Every ideal by raw subset enumeration; only for carriers <= 20.
inline std::vector<Mask> all_ideal_masks(const FiniteRing& ring) {
    const auto n = ring.size();
    std::vector<Mask> out;
    for (Mask m = 1; m < (Mask{1} << n); m += 2)
        if (is_ideal_mask(ring, m)) out.push_back(m);
    std::sort(out.begin(), out.end(), mask_less);
    return out;
}

inline Mask mul_masks(const FiniteRing& ring, Mask a, Mask b) {
    Mask seed = 0;
    for (elem_t x : mask_elems(a))
        for (elem_t y : mask_elems(b)) seed |= Mask{1} << ring.mul(x, y);
    return close_mask(ring, seed);
}

inline Mask radical_mask(const FiniteRing& ring, Mask m) {
    const auto n = static_cast<elem_t>(ring.size());
    Mask out = 0;
    for (elem_t x = 0; x < n; ++x) {
        elem_t p = x;
        for (elem_t k = 0; k < n; ++k) {
            if (m & (Mask{1} << p)) {
                out |= Mask{1} << x;
                break;
            }
            p = ring.mul(p, x);
        }
    }
    return out;
}

inline bool prime_mask(const FiniteRing& ring, Mask m) {
    const auto n = static_cast<elem_t>(ring.size());
    if (__builtin_popcount(m) == static_cast<int>(ring.size())) return false;
    for (elem_t a = 0; a < n; ++a) {
        if (m & (Mask{1} << a)) continue;
        for (elem_t b = a; b < n; ++b) {
            if (m & (Mask{1} << b)) continue;
            if (m & (Mask{1} << ring.mul(a, b))) return false;
        }
    }
    return true;
}

// In a finite ring the regular elements are the units, but the oracle tests
// regularity directly.
inline bool regular_mask_element(const FiniteRing& ring, elem_t a) {
    for (elem_t b = 1; b < ring.size(); ++b)
        if (ring.mul(a, b) == 0) return false;
    return true;
}

inline bool invertible_mask(const FiniteRing& ring, Mask m) {
    // On a finite carrier regular means unit, so a regular ideal is the
    // whole ring; the oracle checks exactly that characterization.
    bool regular = false;
    for (elem_t a : mask_elems(m))
        if (regular_mask_element(ring, a)) regular = true;
    if (!regular) return false;
    return __builtin_popcount(m) == static_cast<int>(ring.size());
}

struct BfsFactorization {
    Mask invertible = 0;
    std::vector<Mask> parts;  // ascending in mask_less
};

// Depth-unbounded breadth-first search over products of alphabet ideals,
// one level per additional factor, seeded at each invertible candidate.
// Returns the least solution in (n, [invertible] + parts) or nullopt once a
// level adds no product state never seen before.
inline std::optional<BfsFactorization> bfs_factor(const FiniteRing& ring, Mask target,
                                                  const std::vector<Mask>& alphabet,
                                                  const std::vector<Mask>& invertibles) {
    struct State {
        Mask inv;
        Mask product;
        std::vector<Mask> parts;
    };
    auto state_less = [](const State& a, const State& b) {
        if (a.inv != b.inv) return mask_less(a.inv, b.inv);
        const std::size_t k = std::min(a.parts.size(), b.parts.size());
        for (std::size_t i = 0; i < k; ++i)
            if (a.parts[i] != b.parts[i]) return mask_less(a.parts[i], b.parts[i]);
        return a.parts.size() < b.parts.size();
    };

    std::vector<State> level;
    for (Mask j : invertibles) level.push_back({j, j, {}});
    std::vector<std::pair<Mask, Mask>> seen;  // (inv, product) pairs
    auto mark_seen = [&](Mask inv, Mask prod) {
        const auto key = std::make_pair(inv, prod);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) return false;
        seen.push_back(key);
        return true;
    };
    for (const State& s : level) mark_seen(s.inv, s.product);

    for (;;) {
        std::vector<State> next;
        bool fresh = false;
        for (const State& s : level) {
            for (Mask h : alphabet) {
                State t{s.inv, mul_masks(ring, s.product, h), s.parts};
                t.parts.push_back(h);
                std::sort(t.parts.begin(), t.parts.end(), mask_less);
                if (mark_seen(t.inv, t.product)) fresh = true;
                next.push_back(std::move(t));
            }
        }
        // keep only the least parts per (inv, product) to bound the frontier
        std::sort(next.begin(), next.end(), [&](const State& a, const State& b) {
            if (a.inv != b.inv) return a.inv < b.inv;
            if (a.product != b.product) return a.product < b.product;
            return state_less(a, b);
        });
        std::vector<State> frontier;
        for (auto& s : next) {
            if (!frontier.empty() && frontier.back().inv == s.inv &&
                frontier.back().product == s.product)
                continue;
            frontier.push_back(std::move(s));
        }

        const State* best = nullptr;
        for (const State& s : frontier)
            if (s.product == target && (!best || state_less(s, *best))) best = &s;
        if (best) return BfsFactorization{best->inv, best->parts};
        if (!fresh) return std::nullopt;
        level = std::move(frontier);
    }
}

}  // namespace ringlab::oracle
