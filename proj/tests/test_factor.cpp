#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/construct.hpp"
#include "ringlab/factor.hpp"
#include "ringlab/module.hpp"
#include "support/oracles.hpp"

using namespace ringlab;

namespace {

ElemSet set_of(const RingPtr& ring, std::initializer_list<elem_t> elems) {
    ElemSet s(ring->size());
    for (elem_t e : elems) s.set(e);
    return s;
}

RingPtr example_4_1_ring() {
    auto z4 = make_zmod(4);
    return trivext(z4, make_module(z4, {2}));
}

Ideal zero_times_module(const RingPtr& t) {
    auto mod = trivext_module(t);
    ElemSet whole(mod->size());
    for (elem_t e = 0; e < mod->size(); ++e) whole.set(e);
    return homogeneous_ideal(t, Ideal::zero(trivext_base(t)), Submodule{mod, whole});
}

std::vector<RingPtr> oracle_rings() {
    std::vector<RingPtr> out;
    for (unsigned n : {4u, 6u, 8u, 9u, 12u, 16u}) out.push_back(make_zmod(n));
    out.push_back(example_4_1_ring());
    auto z2 = make_zmod(2);
    out.push_back(trivext(z2, make_module(z2, {2, 2})));
    out.push_back(direct_product({make_zmod(2), make_zmod(2)}));
    auto z4 = make_zmod(4);
    out.push_back(dup(z4, Ideal::span(z4, {2})));
    return out;
}

// Runs the library search and the independent breadth-first oracle over the
// same target and compares outcome and canonical answer.
void compare_with_oracle(const RingPtr& ring, const Ideal& target, FactorMode mode) {
    const auto& R = *ring;
    const bool primes_mode =
        mode == FactorMode::PrimesOnly || mode == FactorMode::InvPrimes;
    const bool with_inv = mode == FactorMode::InvRadical || mode == FactorMode::InvPrimes;

    std::vector<oracle::Mask> alphabet;
    for (oracle::Mask m : oracle::all_ideal_masks(R)) {
        if (__builtin_popcount(m) == static_cast<int>(R.size())) continue;
        const bool admissible =
            primes_mode ? oracle::prime_mask(R, m) : oracle::radical_mask(R, m) == m;
        if (admissible) alphabet.push_back(m);
    }
    std::vector<oracle::Mask> invertibles;
    for (oracle::Mask m : oracle::all_ideal_masks(R))
        if (with_inv ? oracle::invertible_mask(R, m)
                     : __builtin_popcount(m) == static_cast<int>(R.size()))
            invertibles.push_back(m);

    oracle::Mask target_mask = 0;
    for (elem_t e : target.elements().to_list()) target_mask |= oracle::Mask{1} << e;

    const auto expected = oracle::bfs_factor(R, target_mask, alphabet, invertibles);
    const auto actual = factor_ideal(target, mode);

    INFO(ring->provenance(), " target ", ideal_literal_string(target), " mode ",
         static_cast<int>(mode));
    REQUIRE(actual.has_value() == expected.has_value());
    if (!actual) return;

    oracle::Mask inv_mask = 0;
    for (elem_t e : actual->invertible_part.elements().to_list())
        inv_mask |= oracle::Mask{1} << e;
    CHECK(inv_mask == expected->invertible);
    REQUIRE(actual->parts.size() == expected->parts.size());
    for (std::size_t i = 0; i < actual->parts.size(); ++i) {
        oracle::Mask part = 0;
        for (elem_t e : actual->parts[i].elements().to_list())
            part |= oracle::Mask{1} << e;
        CHECK(part == expected->parts[i]);
    }
}

}  // namespace

TEST_CASE("(4) in Z/8 factors as the unit ideal times (2)(2)") {
    auto z8 = make_zmod(8);
    const auto f = factor_inv_radical(Ideal::span(z8, {4}));
    REQUIRE(f.has_value());
    CHECK_FALSE(f->invertible_part.is_proper());
    REQUIRE(f->parts.size() == 2);
    CHECK(f->parts[0].elements() == set_of(z8, {0, 2, 4, 6}));
    CHECK(f->parts[1].elements() == set_of(z8, {0, 2, 4, 6}));
    CHECK(factorization_product(*f) == Ideal::span(z8, {4}));

    const auto sp = factor_radicals_only(Ideal::span(z8, {4}));
    REQUIRE(sp.has_value());
    CHECK(sp->size() == 2);
}

TEST_CASE("0 x E in the Example 4.1 ring admits no factorization") {
    auto t = example_4_1_ring();
    const Ideal target = zero_times_module(t);
    CHECK_FALSE(factor_inv_radical(target).has_value());
    CHECK_FALSE(factor_radicals_only(target).has_value());
    CHECK_FALSE(factor_primes_only(target).has_value());
}

TEST_CASE("the zero ideal of the reduced ring Z/6 is its own radical factor") {
    auto z6 = make_zmod(6);
    const auto f = factor_inv_radical(Ideal::zero(z6));
    REQUIRE(f.has_value());
    CHECK_FALSE(f->invertible_part.is_proper());
    REQUIRE(f->parts.size() == 1);
    CHECK(f->parts[0].is_zero());
}

TEST_CASE("prime factorization of the zero ideal of Z/6") {
    auto z6 = make_zmod(6);
    const auto parts = factor_primes_only(Ideal::zero(z6));
    REQUIRE(parts.has_value());
    REQUIRE(parts->size() == 2);
    // canonical order: (3) = {0,3} before (2) = {0,2,4}
    CHECK((*parts)[0].elements() == set_of(z6, {0, 3}));
    CHECK((*parts)[1].elements() == set_of(z6, {0, 2, 4}));
}

TEST_CASE("factoring the unit ideal is rejected") {
    auto z8 = make_zmod(8);
    CHECK_THROWS_AS(static_cast<void>(factor_inv_radical(Ideal::unit(z8))),
                    SemanticError);
    CHECK_THROWS_AS(
        static_cast<void>(factor_inv_radical(Ideal::span(z8, {2}), true)),
        SemanticError);  // (2) is not regular
}

TEST_CASE("successful factorizations multiply back to the target") {
    for (const auto& ring : oracle_rings()) {
        for (const Ideal& ideal : all_ideals(ring)) {
            if (!ideal.is_proper()) continue;
            for (FactorMode mode : {FactorMode::InvRadical, FactorMode::RadicalsOnly,
                                    FactorMode::PrimesOnly, FactorMode::InvPrimes}) {
                const auto f = factor_ideal(ideal, mode);
                if (!f) continue;
                CHECK(factorization_product(*f) == ideal);
                CHECK(f->parts.size() >= 1);
                for (const Ideal& part : f->parts) {
                    CHECK(part.is_proper());
                    CHECK(ideal.elements().is_subset_of(part.elements()));
                }
            }
        }
    }
}

TEST_CASE("with a trivial invertible part the searches coincide") {
    for (const auto& ring : oracle_rings()) {
        for (const Ideal& ideal : all_ideals(ring)) {
            if (!ideal.is_proper()) continue;
            CHECK(factor_inv_radical(ideal).has_value() ==
                  factor_radicals_only(ideal).has_value());
            CHECK(factor_inv_primes(ideal).has_value() ==
                  factor_primes_only(ideal).has_value());
        }
    }
}

TEST_CASE("all four searches agree with the breadth-first oracle") {
    for (const auto& ring : oracle_rings()) {
        if (ring->size() > 16) continue;
        for (const Ideal& ideal : all_ideals(ring)) {
            if (!ideal.is_proper()) continue;
            for (FactorMode mode : {FactorMode::InvRadical, FactorMode::RadicalsOnly,
                                    FactorMode::PrimesOnly, FactorMode::InvPrimes})
                compare_with_oracle(ring, ideal, mode);
        }
    }
}
