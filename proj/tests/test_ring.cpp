#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/construct.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"
#include "support/iso.hpp"

using namespace ringlab;
using testsupport::invariant_vector;
using testsupport::isomorphic;

namespace {

std::vector<RingPtr> sample_rings() {
    std::vector<RingPtr> out;
    for (unsigned n : {2u, 3u, 4u, 6u, 8u, 9u, 12u, 16u}) out.push_back(make_zmod(n));
    out.push_back(direct_product({make_zmod(2), make_zmod(3)}));
    out.push_back(direct_product({make_zmod(2), make_zmod(2)}));
    auto z4 = make_zmod(4);
    out.push_back(trivext(z4, make_module(z4, {2})));
    auto z2 = make_zmod(2);
    out.push_back(trivext(z2, make_module(z2, {2, 2})));
    auto z8 = make_zmod(8);
    out.push_back(dup(z8, Ideal::span(z8, {2})));
    out.push_back(quotient(make_zmod(12), Ideal::span(make_zmod(12), {4})).target);
    {
        auto z12 = make_zmod(12);
        out.push_back(localize_at_prime(z12, Ideal::span(z12, {2})).target);
    }
    return out;
}

ElemSet set_of(const RingPtr& ring, std::initializer_list<elem_t> elems) {
    ElemSet s(ring->size());
    for (elem_t e : elems) s.set(e);
    return s;
}

}  // namespace

TEST_CASE("Zmod arithmetic") {
    auto z8 = make_zmod(8);
    CHECK(z8->size() == 8);
    CHECK(z8->add(1, 7) == 0);
    CHECK(z8->mul(3, 3) == 1);
    CHECK(z8->neg(3) == 5);
    CHECK(z8->power(2, 3) == 0);
    CHECK(z8->scale(10, 1) == 2);

    auto f2 = make_zmod(2);
    CHECK(is_field(f2));

    CHECK_THROWS_AS(make_zmod(1), SemanticError);
    CHECK_THROWS_AS(make_zmod(0), SemanticError);
}

TEST_CASE("units and regular elements") {
    CHECK(make_zmod(8)->units() == set_of(make_zmod(8), {1, 3, 5, 7}));
    CHECK(make_zmod(6)->units() == set_of(make_zmod(6), {1, 5}));
    CHECK(make_zmod(2)->units() == set_of(make_zmod(2), {1}));

    // in a finite ring the regular elements are exactly the units
    for (const auto& ring : sample_rings())
        CHECK(ring->regular_elements() == ring->units());
}

TEST_CASE("idempotents, nilradical, locality") {
    CHECK(make_zmod(6)->idempotents() == set_of(make_zmod(6), {0, 1, 3, 4}));

    auto z12 = make_zmod(12);
    CHECK(nilradical(z12).elements() == set_of(z12, {0, 6}));
    CHECK(is_reduced(make_zmod(6)));
    CHECK_FALSE(is_reduced(make_zmod(12)));

    auto z8 = make_zmod(8);
    auto m = local_maximal_ideal(z8);
    REQUIRE(m.has_value());
    CHECK(m->elements() == set_of(z8, {0, 2, 4, 6}));
    CHECK_FALSE(is_local(make_zmod(6)));

    CHECK(is_domain(make_zmod(7)));
    CHECK_FALSE(is_domain(make_zmod(6)));
}

TEST_CASE("ring axioms hold exhaustively on the samples") {
    for (const auto& ring : sample_rings()) {
        INFO(ring->provenance());
        CHECK_FALSE(check_ring_axioms(*ring).has_value());
    }
}

TEST_CASE("quotient rings") {
    auto z12 = make_zmod(12);
    auto by4 = quotient(z12, Ideal::span(z12, {4}));
    CHECK(by4.target->size() == 4);
    CHECK(isomorphic(by4.target, make_zmod(4)));
    CHECK(is_ring_hom(by4));

    // kernel is the ideal
    ElemSet kernel(z12->size());
    for (elem_t a = 0; a < z12->size(); ++a)
        if (by4(a) == 0) kernel.set(a);
    CHECK(kernel == Ideal::span(z12, {4}).elements());

    auto z8 = make_zmod(8);
    auto by2 = quotient(z8, Ideal::span(z8, {2}));
    CHECK(isomorphic(by2.target, make_zmod(2)));

    // coset count
    for (const auto& ring : sample_rings()) {
        for (const Ideal& ideal : all_ideals(ring)) {
            if (!ideal.is_proper()) continue;
            CHECK(quotient(ring, ideal).target->size() * ideal.count() == ring->size());
        }
    }

    CHECK_THROWS_AS(quotient(z8, Ideal::unit(z8)), SemanticError);
}

TEST_CASE("localization at primes matches the CRT picture") {
    auto z12 = make_zmod(12);
    auto at2 = localize_at_prime(z12, Ideal::span(z12, {2}));
    CHECK(at2.target->size() == 4);
    CHECK(isomorphic(at2.target, make_zmod(4)));
    CHECK(is_ring_hom(at2));

    auto at3 = localize_at_prime(z12, Ideal::span(z12, {3}));
    CHECK(isomorphic(at3.target, make_zmod(3)));

    // localizing a local ring at its maximal ideal changes nothing
    auto z8 = make_zmod(8);
    auto atm = localize_at_prime(z8, Ideal::span(z8, {2}));
    CHECK(isomorphic(atm.target, z8));

    CHECK_THROWS_AS(localize_at_prime(z12, Ideal::span(z12, {4})), SemanticError);
}

TEST_CASE("product of localizations at minimal primes rebuilds Z/n") {
    for (unsigned n : {12u, 18u, 24u, 30u, 36u, 45u, 60u}) {
        auto ring = make_zmod(n);
        const auto minimal = minimal_primes(Ideal::zero(ring));
        std::vector<RingPtr> locals;
        for (const Ideal& p : minimal)
            locals.push_back(localize_at_prime(ring, p).target);
        const RingPtr rebuilt =
            locals.size() == 1 ? locals.front() : direct_product(locals);
        INFO("n = ", n);
        CHECK(invariant_vector(rebuilt) == invariant_vector(ring));
        if (n <= 16) CHECK(isomorphic(rebuilt, ring));
    }
}

TEST_CASE("quotient and localization commute on Z/n cases") {
    struct Case {
        unsigned n;
        elem_t ideal_gen;
        elem_t prime_gen;
    };
    for (const Case c : {Case{12, 4, 2}, Case{24, 8, 2}, Case{18, 9, 3}}) {
        auto ring = make_zmod(c.n);
        const Ideal ideal = Ideal::span(ring, {c.ideal_gen});
        const Ideal prime = Ideal::span(ring, {c.prime_gen});
        REQUIRE(ideal.elements().is_subset_of(prime.elements()));

        auto quot_hom = quotient(ring, ideal);
        const Ideal prime_in_quot = image_ideal(quot_hom, prime);
        auto path1 = localize_at_prime(quot_hom.target, prime_in_quot).target;

        auto loc_hom = localize_at_prime(ring, prime);
        const Ideal ideal_in_loc = image_ideal(loc_hom, ideal);
        const RingPtr path2 = ideal_in_loc.is_proper()
                                  ? quotient(loc_hom.target, ideal_in_loc).target
                                  : loc_hom.target;

        INFO("n = ", c.n);
        CHECK(invariant_vector(path1) == invariant_vector(path2));
        if (path1->size() <= 16) CHECK(isomorphic(path1, path2));
    }
}

TEST_CASE("element rendering follows the expression language") {
    auto z4 = make_zmod(4);
    auto t = trivext(z4, make_module(z4, {2}));
    CHECK(element_to_string(t, trivext_encode(t, 2, 1)) == "(2,1)");
    auto z8 = make_zmod(8);
    auto d = dup(z8, Ideal::span(z8, {2}));
    CHECK(element_to_string(d, dup_encode(d, 1, 3)) == "(1,3)");
    CHECK(element_to_string(direct_product({make_zmod(2), make_zmod(3)}), 5) == "(1,2)");
}

TEST_CASE("integer residues exist exactly for rings generated by 1") {
    CHECK(make_zmod(9)->generated_by_one());
    CHECK(make_zmod(9)->integer_residue(7) == 7);
    auto crt = direct_product({make_zmod(2), make_zmod(3)});
    CHECK(crt->generated_by_one());  // isomorphic to Z/6
    auto klein = direct_product({make_zmod(2), make_zmod(2)});
    CHECK_FALSE(klein->generated_by_one());
    CHECK_THROWS_AS(klein->integer_residue(1), SemanticError);
}
