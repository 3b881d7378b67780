#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/construct.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"
#include "support/oracles.hpp"

using namespace ringlab;

namespace {

ElemSet set_of(const RingPtr& ring, std::initializer_list<elem_t> elems) {
    ElemSet s(ring->size());
    for (elem_t e : elems) s.set(e);
    return s;
}

std::vector<RingPtr> small_rings() {
    std::vector<RingPtr> out;
    for (unsigned n : {4u, 6u, 8u, 9u, 12u, 16u}) out.push_back(make_zmod(n));
    auto z4 = make_zmod(4);
    out.push_back(trivext(z4, make_module(z4, {2})));
    auto z2 = make_zmod(2);
    out.push_back(trivext(z2, make_module(z2, {2, 2})));
    out.push_back(direct_product({make_zmod(2), make_zmod(2)}));
    out.push_back(dup(z4, Ideal::span(z4, {2})));
    return out;
}

}  // namespace

TEST_CASE("all_ideals of Z/8 in canonical order") {
    auto z8 = make_zmod(8);
    const auto ideals = all_ideals(z8);
    REQUIRE(ideals.size() == 4);
    CHECK(ideals[0].elements() == set_of(z8, {0}));
    CHECK(ideals[1].elements() == set_of(z8, {0, 4}));
    CHECK(ideals[2].elements() == set_of(z8, {0, 2, 4, 6}));
    CHECK(ideals[3].elements() == set_of(z8, {0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("ideal counts follow divisor lattices") {
    CHECK(all_ideals(make_zmod(12)).size() == 6);
    CHECK(all_ideals(direct_product({make_zmod(2), make_zmod(2)})).size() == 4);
}

TEST_CASE("all_ideals agrees with raw subset enumeration") {
    for (const auto& ring : small_rings()) {
        if (ring->size() > 16) continue;
        INFO(ring->provenance());
        const auto masks = oracle::all_ideal_masks(*ring);
        const auto ideals = all_ideals(ring);
        REQUIRE(ideals.size() == masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) {
            ElemSet expect(ring->size());
            for (elem_t e : oracle::mask_elems(masks[i])) expect.set(e);
            CHECK(ideals[i].elements() == expect);
        }
    }
}

TEST_CASE("trivext ideal lattice carries every homogeneous 0 x V") {
    auto f2 = make_zmod(2);
    auto plane = make_module(f2, {2, 2});
    auto t = trivext(f2, plane);
    const auto ideals = all_ideals(t);
    std::size_t homogeneous_zero = 0;
    for (const Submodule& v : submodules(plane)) {
        const Ideal hv = homogeneous_ideal(t, Ideal::zero(f2), v);
        CHECK(std::find(ideals.begin(), ideals.end(), hv) != ideals.end());
        ++homogeneous_zero;
    }
    CHECK(homogeneous_zero == 5);
}

TEST_CASE("ideal arithmetic basics") {
    auto z8 = make_zmod(8);
    const Ideal two = Ideal::span(z8, {2});
    CHECK(ideal_product(two, two).elements() == set_of(z8, {0, 4}));
    CHECK(ideal_product(ideal_product(two, two), two).elements() == set_of(z8, {0}));
    CHECK(ideal_power(two, 3).is_zero());

    for (const auto& ring : small_rings())
        for (const Ideal& ideal : all_ideals(ring))
            CHECK(ideal_product(ideal, Ideal::unit(ring)) == ideal);

    auto z6 = make_zmod(6);
    CHECK_THROWS_AS(ideal_product(two, Ideal::span(z6, {2})), SemanticError);
}

TEST_CASE("ideal quotient matches its definition") {
    for (const auto& ring : small_rings()) {
        if (ring->size() > 12) continue;
        const auto ideals = all_ideals(ring);
        for (const Ideal& a : ideals) {
            for (const Ideal& b : ideals) {
                const Ideal q = ideal_quotient(a, b);
                for (elem_t x = 0; x < ring->size(); ++x) {
                    bool sends = true;
                    for (elem_t y : b.elements().to_list())
                        if (!a.contains(ring->mul(x, y))) {
                            sends = false;
                            break;
                        }
                    CHECK(q.contains(x) == sends);
                }
            }
        }
    }
}

TEST_CASE("radical, primes, primary") {
    auto z12 = make_zmod(12);
    CHECK(radical(Ideal::span(z12, {4})).elements() == set_of(z12, {0, 2, 4, 6, 8, 10}));

    const auto min = minimal_primes(Ideal::zero(z12));
    REQUIRE(min.size() == 2);
    CHECK(min[0].elements() == set_of(z12, {0, 3, 6, 9}));
    CHECK(min[1].elements() == set_of(z12, {0, 2, 4, 6, 8, 10}));

    auto z8 = make_zmod(8);
    CHECK(is_prime(Ideal::span(z8, {2})));
    CHECK_FALSE(is_prime(Ideal::span(z8, {4})));
    CHECK(is_maximal(Ideal::span(z8, {2})));

    CHECK(is_primary(Ideal::span(z12, {4})));
    CHECK_FALSE(is_primary(Ideal::span(z12, {6})));
}

TEST_CASE("radical laws") {
    for (const auto& ring : small_rings()) {
        const auto ideals = all_ideals(ring);
        for (const Ideal& ideal : ideals) {
            const Ideal r = radical(ideal);
            CHECK(ideal.elements().is_subset_of(r.elements()));
            CHECK(radical(r) == r);
        }
        for (const Ideal& a : ideals)
            for (const Ideal& b : ideals)
                CHECK(radical(ideal_product(a, b)) == radical(ideal_intersection(a, b)));
    }
}

TEST_CASE("lattice is closed under the ideal operations") {
    for (const auto& ring : small_rings()) {
        const auto ideals = all_ideals(ring);
        auto present = [&](const Ideal& ideal) {
            return std::find(ideals.begin(), ideals.end(), ideal) != ideals.end();
        };
        for (const Ideal& a : ideals) {
            CHECK(present(radical(a)));
            for (const Ideal& b : ideals) {
                CHECK(present(ideal_sum(a, b)));
                CHECK(present(ideal_product(a, b)));
                CHECK(present(ideal_intersection(a, b)));
            }
        }
    }
}

TEST_CASE("invertibility collapses to the unit ideal on finite rings") {
    auto z8 = make_zmod(8);
    CHECK_FALSE(is_invertible(Ideal::span(z8, {2})));
    CHECK(is_invertible(Ideal::unit(z8)));
    for (const auto& ring : small_rings())
        for (const Ideal& ideal : all_ideals(ring))
            CHECK(is_invertible(ideal) == !ideal.is_proper());
}

TEST_CASE("multiplication ideals") {
    auto z8 = make_zmod(8);
    std::vector<MultiplicationWitness> witnesses;
    CHECK(is_multiplication_ideal(Ideal::span(z8, {2}), &witnesses));
    for (const auto& w : witnesses)
        CHECK(ideal_product(w.cofactor, Ideal::span(z8, {2})) == w.contained);
    CHECK(is_multiplication_ideal(Ideal::unit(z8)));

    auto z4 = make_zmod(4);
    auto t = trivext(z4, make_module(z4, {2}));
    const Ideal zero_e = homogeneous_ideal(
        t, Ideal::zero(z4), Submodule{trivext_module(t), [&] {
                                ElemSet whole(2);
                                whole.set(0);
                                whole.set(1);
                                return whole;
                            }()});
    CHECK_FALSE(is_multiplication_ideal(zero_e));
}

TEST_CASE("principal generators and power stabilization") {
    auto z8 = make_zmod(8);
    elem_t gen = 99;
    CHECK(is_principal(Ideal::span(z8, {2}), &gen));
    CHECK(gen == 2);
    CHECK(power_stabilization_index(Ideal::span(z8, {2})) == 3);
    CHECK(power_stabilization_index(Ideal::unit(z8)) == 1);
    CHECK(minimal_generators(Ideal::span(z8, {2})) == std::vector<elem_t>{2});
    CHECK(ideal_literal_string(Ideal::span(z8, {2})) == "ideal(2)");
    CHECK(ideal_literal_string(Ideal::zero(z8)) == "ideal(0)");
}

TEST_CASE("image and preimage of ideals through quotients") {
    auto z12 = make_zmod(12);
    auto hom = quotient(z12, Ideal::span(z12, {4}));
    const Ideal image = image_ideal(hom, Ideal::span(z12, {2}));
    CHECK(image.count() * 2 == hom.target->size());
    const Ideal pre = preimage_ideal(hom, Ideal::zero(hom.target));
    CHECK(pre == Ideal::span(z12, {4}));
}
