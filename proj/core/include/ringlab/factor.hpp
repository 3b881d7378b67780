#pragma once

#include <optional>
#include <vector>

#include "ringlab/ideal.hpp"

namespace ringlab {

/// Which factor alphabet a search runs over.
enum class FactorMode {
    InvRadical,    // invertible ideal times proper radical ideals
    RadicalsOnly,  // proper radical ideals, no invertible part
    PrimesOnly,    // prime ideals, no invertible part
    InvPrimes,     // invertible ideal times prime ideals
};

/// A factorization J * H_1 ... H_n of an ideal, n >= 1. The invertible part
/// may be the unit ideal; in the *Only modes it always is. Parts are listed
/// in canonical ideal order.
struct Factorization {
    Ideal invertible_part;
    std::vector<Ideal> parts;
};

/// Multiplies a factorization back out.
Ideal factorization_product(const Factorization& f);

/// Searches for a factorization of a proper ideal in the given mode, or
/// nullopt when none exists.
///
/// Candidate factors all contain the target (every factor contains the
/// product), the exponent of each part is capped at its power-stabilization
/// index, and failed states are memoized by (partial product, remaining
/// alphabet, remaining depth). Any factorization exceeding a cap collapses
/// to one within it with the same product, so the search is complete. The
/// result is the lexicographically least in (n, part encodings).
std::optional<Factorization> factor_ideal(const Ideal& target, FactorMode mode);

/// Invertible times nonempty product of proper radical ideals. When
/// require_regular is set the target must be a regular ideal.
std::optional<Factorization> factor_inv_radical(const Ideal& target,
                                                bool require_regular = false);
std::optional<std::vector<Ideal>> factor_radicals_only(const Ideal& target);
std::optional<std::vector<Ideal>> factor_primes_only(const Ideal& target);
std::optional<Factorization> factor_inv_primes(const Ideal& target);

}  // namespace ringlab
