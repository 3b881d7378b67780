#include "ringlab/factor.hpp"

#include <unordered_map>
#include <unordered_set>

namespace ringlab {

namespace {

struct SearchKey {
    ElemSet partial;
    std::uint32_t from;
    std::uint32_t depth;

    friend bool operator==(const SearchKey& a, const SearchKey& b) {
        return a.from == b.from && a.depth == b.depth && a.partial == b.partial;
    }
};

struct SearchKeyHash {
    std::size_t operator()(const SearchKey& k) const {
        return k.partial.hash() ^ (std::size_t{k.from} << 17) ^ (std::size_t{k.depth} << 3);
    }
};

// Closure of pairwise products, working on raw sets.
ElemSet product_set(const FiniteRing& ring, const ElemSet& a, const ElemSet& b) {
    std::vector<elem_t> seed;
    const auto la = a.to_list(), lb = b.to_list();
    seed.reserve(la.size() * lb.size());
    for (elem_t x : la)
        for (elem_t y : lb) seed.push_back(ring.mul(x, y));
    return ideal_span_set(ring, seed);
}

struct Search {
    const FiniteRing& ring;
    const ElemSet& target;
    const std::vector<ElemSet>& lattice;
    std::vector<std::size_t> alphabet;  // lattice indices, canonical ascending
    std::vector<unsigned> caps;
    std::unordered_set<SearchKey, SearchKeyHash> failed;
    std::vector<std::size_t> chosen;  // alphabet positions, non-decreasing

    bool dfs(const ElemSet& partial, std::size_t from, unsigned depth) {
        if (depth == 0) return partial == target;
        if (!target.is_subset_of(partial)) return false;
        SearchKey key{partial, static_cast<std::uint32_t>(from),
                      static_cast<std::uint32_t>(depth)};
        if (failed.contains(key)) return false;
        for (std::size_t pos = from; pos < alphabet.size(); ++pos) {
            unsigned used = 0;
            for (auto it = chosen.rbegin(); it != chosen.rend() && *it == pos; ++it) ++used;
            if (used >= caps[pos]) continue;
            ElemSet next = product_set(ring, partial, lattice[alphabet[pos]]);
            if (!target.is_subset_of(next)) continue;
            chosen.push_back(pos);
            if (dfs(next, pos, depth - 1)) return true;
            chosen.pop_back();
        }
        failed.insert(std::move(key));
        return false;
    }
};

}  // namespace

Ideal factorization_product(const Factorization& f) {
    Ideal out = f.invertible_part;
    for (const Ideal& part : f.parts) out = ideal_product(out, part);
    return out;
}

std::optional<Factorization> factor_ideal(const Ideal& target, FactorMode mode) {
    if (!target.is_proper())
        throw SemanticError("the unit ideal is not a factorization target");
    const RingPtr& ring = target.ring();
    // force lattice + flags
    all_ideals(ring);
    auto& caches = ring->caches();
    is_radical(target);  // builds the flag tables
    const auto& lattice = caches.ideals;

    const bool primes = mode == FactorMode::PrimesOnly || mode == FactorMode::InvPrimes;
    const bool with_invertible =
        mode == FactorMode::InvRadical || mode == FactorMode::InvPrimes;

    Search search{*ring, target.elements(), lattice, {}, {}, {}, {}};
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (!target.elements().is_subset_of(lattice[i])) continue;
        if (lattice[i].count() == ring->size()) continue;  // parts are proper
        const bool admissible = primes ? caches.prime_flag[i] != 0
                                       : caches.radical_flag[i] != 0;
        if (!admissible) continue;
        search.alphabet.push_back(i);
        search.caps.push_back(caches.power_cap[i]);
    }
    if (search.alphabet.empty()) return std::nullopt;

    // Invertible candidates containing the target, canonical ascending; the
    // unit ideal always qualifies. Without an invertible part the search is
    // seeded at the unit ideal (an empty partial product).
    std::vector<std::size_t> inv_candidates;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (!target.elements().is_subset_of(lattice[i])) continue;
        if (with_invertible) {
            if (is_invertible(Ideal(ring, lattice[i]))) inv_candidates.push_back(i);
        } else if (lattice[i].count() == ring->size()) {
            inv_candidates.push_back(i);
        }
    }

    unsigned max_depth = 0;
    for (unsigned c : search.caps) max_depth += c;

    for (unsigned depth = 1; depth <= max_depth; ++depth) {
        for (std::size_t j : inv_candidates) {
            if (search.dfs(lattice[j], 0, depth)) {
                Factorization out{Ideal(ring, lattice[j]), {}};
                for (std::size_t pos : search.chosen)
                    out.parts.emplace_back(ring, lattice[search.alphabet[pos]]);
                return out;
            }
        }
    }
    return std::nullopt;
}

std::optional<Factorization> factor_inv_radical(const Ideal& target, bool require_regular) {
    if (require_regular && !target.is_regular())
        throw SemanticError("factorization target must be a regular ideal");
    return factor_ideal(target, FactorMode::InvRadical);
}

std::optional<std::vector<Ideal>> factor_radicals_only(const Ideal& target) {
    auto f = factor_ideal(target, FactorMode::RadicalsOnly);
    if (!f) return std::nullopt;
    return std::move(f->parts);
}

std::optional<std::vector<Ideal>> factor_primes_only(const Ideal& target) {
    auto f = factor_ideal(target, FactorMode::PrimesOnly);
    if (!f) return std::nullopt;
    return std::move(f->parts);
}

std::optional<Factorization> factor_inv_primes(const Ideal& target) {
    return factor_ideal(target, FactorMode::InvPrimes);
}

}  // namespace ringlab
