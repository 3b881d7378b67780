#include "ringlab/integers.hpp"

#include <stdexcept>

#include "ringlab/errors.hpp"

namespace ringlab::ints {

std::vector<std::pair<IntIdeal, unsigned>> prime_factorization(IntIdeal n) {
    std::vector<std::pair<IntIdeal, unsigned>> out;
    for (IntIdeal p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

IntIdeal int_radical(IntIdeal n) {
    if (n <= 1) return n;  // (0) is prime hence radical; (1) is the unit ideal
    IntIdeal rad = 1;
    for (const auto& [p, e] : prime_factorization(n)) rad *= p;
    return rad;
}

bool is_squarefree(IntIdeal n) {
    if (n == 0) return true;  // radical: (0) is prime in Z
    if (n == 1) return false;
    return int_radical(n) == n;
}

IntFactorization int_factor_isp(IntIdeal n) {
    if (n == 1) throw SemanticError("the unit ideal (1) is not a factorization target");
    if (n == 0) return {1, {0}};
    // Least in (k, m, parts): k = 1 always works, m is minimized by the
    // largest squarefree divisor, which is rad(n).
    const IntIdeal rad = int_radical(n);
    return {n / rad, {rad}};
}

std::vector<IntIdeal> int_factor_sp(IntIdeal n) {
    if (n == 1) throw SemanticError("the unit ideal (1) is not a factorization target");
    if (n == 0) return {0};
    std::vector<IntIdeal> parts;
    while (n > 1) {
        const IntIdeal rad = int_radical(n);
        parts.push_back(rad);
        n /= rad;
    }
    // peeling yields non-increasing kernels; report ascending
    std::reverse(parts.begin(), parts.end());
    return parts;
}

IspCertificate int_prove_isp(IntIdeal bound) {
    std::uint64_t checked = 0;
    auto verify = [&](IntIdeal n) {
        const IntFactorization f = int_factor_isp(n);
        IntIdeal product = f.invertible;
        if (f.parts.empty()) throw std::logic_error("empty radical part list");
        for (IntIdeal d : f.parts) {
            if (!is_squarefree(d) || d == 1)
                throw std::logic_error("part " + std::to_string(d) +
                                       " is not a proper radical ideal");
            product *= d;
        }
        if (product != n)
            throw std::logic_error("factorization of " + std::to_string(n) +
                                   " does not multiply back");
        ++checked;
    };
    verify(0);
    for (IntIdeal n = 2; n <= bound; ++n) verify(n);
    return {bound, checked};
}

}  // namespace ringlab::ints
