#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ringlab::ints {

/// Ideal nZ of the integers, encoded by n >= 0: 0 is the zero ideal,
/// 1 the unit ideal. Products multiply, containment is divisibility
/// (0 is contained in everything).
using IntIdeal = std::uint64_t;

/// Squarefree kernel: product of the distinct prime divisors.
/// 0 -> 0 (the zero ideal is prime, hence radical), 1 -> 1.
IntIdeal int_radical(IntIdeal n);

bool is_squarefree(IntIdeal n);
std::vector<std::pair<IntIdeal, unsigned>> prime_factorization(IntIdeal n);

struct IntFactorization {
    IntIdeal invertible;          // m
    std::vector<IntIdeal> parts;  // squarefree d_i > 1 (or the single 0)
};

/// Factors nZ (n != 1) as an invertible ideal times a nonempty product of
/// proper radical ideals: m * d_1 ... d_k = n. Canonical least solution in
/// (k, m, parts): k = 1 always suffices, minimized by m = n / rad(n) and
/// d_1 = rad(n); 0 -> (1, [0]).
IntFactorization int_factor_isp(IntIdeal n);

/// Product of proper radical ideals only (no invertible part): greedy
/// peeling of squarefree kernels, parts ascending. Exists for every n != 1.
std::vector<IntIdeal> int_factor_sp(IntIdeal n);

struct IspCertificate {
    IntIdeal bound;
    std::uint64_t checked;  // number of ideals verified (includes 0)
};

/// Certifies the invertible-times-radicals property over Z for every ideal
/// nZ with 2 <= n <= bound plus the zero ideal, re-multiplying each
/// factorization. Throws on any failure.
IspCertificate int_prove_isp(IntIdeal bound);

}  // namespace ringlab::ints
