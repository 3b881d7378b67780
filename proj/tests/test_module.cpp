#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/construct.hpp"
#include "ringlab/module.hpp"

using namespace ringlab;

namespace {

std::vector<ModulePtr> sample_modules() {
    std::vector<ModulePtr> out;
    auto z4 = make_zmod(4);
    out.push_back(make_module(z4, {2}));
    out.push_back(make_module(z4, {4}));
    auto z2 = make_zmod(2);
    out.push_back(make_module(z2, {2}));
    out.push_back(make_module(z2, {2, 2}));
    auto z6 = make_zmod(6);
    out.push_back(make_module(z6, {6}));
    out.push_back(make_module(z6, {2}));
    out.push_back(regular_module(make_zmod(9)));
    auto z8 = make_zmod(8);
    out.push_back(ideal_module(Ideal::span(z8, {2})));
    return out;
}

}  // namespace

TEST_CASE("make_module and the reduction action") {
    auto z4 = make_zmod(4);
    auto e = make_module(z4, {2});
    CHECK(e->size() == 2);
    // M = (2) annihilates E
    CHECK(e->act(2, 1) == 0);
    CHECK(e->act(3, 1) == 1);
    CHECK(annihilator(e).elements().test(2));

    auto f2 = make_zmod(2);
    auto plane = make_module(f2, {2, 2});
    CHECK(plane->size() == 4);

    CHECK_THROWS_WITH_AS(static_cast<void>(make_module(f2, {3})),
                         doctest::Contains("3"), SemanticError);
    auto klein = direct_product({f2, make_zmod(2)});
    CHECK_THROWS_AS(static_cast<void>(make_module(klein, {2})), SemanticError);
}

TEST_CASE("module axioms hold exhaustively on the samples") {
    for (const auto& mod : sample_modules()) {
        INFO(mod->provenance(), " over ", mod->ring()->provenance());
        CHECK_FALSE(check_module_axioms(*mod).has_value());
    }
}

TEST_CASE("submodule enumeration") {
    auto f2 = make_zmod(2);
    CHECK(submodules(make_module(f2, {2, 2})).size() == 5);

    auto z4 = make_zmod(4);
    CHECK(submodules(make_module(z4, {2})).size() == 2);

    // closure: every enumerated set is closed under + and the action
    for (const auto& mod : sample_modules()) {
        for (const Submodule& sub : submodules(mod)) {
            CHECK(sub.elements.test(0));
            const auto members = sub.elements.to_list();
            for (elem_t x : members) {
                for (elem_t y : members) CHECK(sub.elements.test(mod->add(x, y)));
                for (elem_t a = 0; a < mod->ring()->size(); ++a)
                    CHECK(sub.elements.test(mod->act(a, x)));
            }
        }
    }
}

TEST_CASE("module predicates") {
    auto f2 = make_zmod(2);
    CHECK(is_simple(make_module(f2, {2})));
    CHECK_FALSE(is_simple(make_module(f2, {2, 2})));

    // ideals of a field are 0 and the field, so IE never hits a line
    CHECK_FALSE(is_multiplication_module(make_module(f2, {2, 2})));
    CHECK(is_multiplication_module(make_module(f2, {2})));
    std::vector<ModuleWitness> witnesses;
    auto z6 = make_zmod(6);
    CHECK(is_multiplication_module(make_module(z6, {6}), &witnesses));
    for (const auto& w : witnesses)
        CHECK(ideal_times_module(w.scaler, w.sub.module).elements == w.sub.elements);

    // over a finite ring regular elements are units, so every module divides
    for (const auto& mod : sample_modules()) CHECK(is_divisible(mod));
}

TEST_CASE("IE is always a submodule and annihilator is an ideal") {
    for (const auto& mod : sample_modules()) {
        const auto subs = submodules(mod);
        for (const Ideal& ideal : all_ideals(mod->ring())) {
            const Submodule ie = ideal_times_module(ideal, mod);
            CHECK(std::find(subs.begin(), subs.end(), ie) != subs.end());
        }
        CHECK_NOTHROW(static_cast<void>(annihilator(mod)));
    }
}

TEST_CASE("support matches nonvanishing localizations") {
    for (const auto& mod : sample_modules()) {
        const auto supp = support(mod);
        for (const Ideal& p : prime_ideals(mod->ring())) {
            const bool in_support = std::find(supp.begin(), supp.end(), p) != supp.end();
            const auto localized = localize_module(mod, p);
            INFO(mod->provenance(), " at ", ideal_literal_string(p));
            CHECK(in_support == (localized->size() > 1));
        }
    }
}

TEST_CASE("localized modules satisfy the axioms") {
    auto z12 = make_zmod(12);
    auto e = make_module(z12, {6});
    for (const Ideal& p : prime_ideals(z12)) {
        auto localized = localize_module(e, p);
        CHECK_FALSE(check_module_axioms(*localized).has_value());
    }
}

TEST_CASE("zero divisors on a module") {
    auto z4 = make_zmod(4);
    auto e = make_module(z4, {2});
    const ElemSet z = module_zero_divisors(e);
    CHECK(z.test(0));
    CHECK(z.test(2));
    CHECK_FALSE(z.test(1));
    CHECK_FALSE(z.test(3));
}
