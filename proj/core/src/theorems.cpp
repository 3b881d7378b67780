#include "ringlab/theorems.hpp"

#include <functional>

namespace ringlab {

std::string_view to_string(TheoremOutcome o) {
    switch (o) {
        case TheoremOutcome::Pass: return "pass";
        case TheoremOutcome::Fail: return "fail";
        case TheoremOutcome::Inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

std::string b2s(bool b) { return b ? "true" : "false"; }

bool strongly(const RingPtr& r) { return holds(is_strongly_isp(r).verdict); }
bool ispv(const RingPtr& r) { return holds(is_isp(r).verdict); }
bool total_quotient(const RingPtr& r) { return holds(is_total_quotient(r).verdict); }
bool vnr(const RingPtr& r) { return holds(is_von_neumann_regular(r).verdict); }
bool special_primary(const RingPtr& r) { return holds(is_special_primary(r).verdict); }
bool almost_mult(const RingPtr& r) { return holds(is_almost_multiplication(r).verdict); }

// For finite rings a domain is a field, so ISP-domain means domain and
// the all-proper-ideals factorization property.
bool isp_domain(const RingPtr& r) { return is_domain(r) && strongly(r); }

bool zero_dimensional(const RingPtr& r) {
    for (const Ideal& p : prime_ideals(r))
        if (!is_maximal(p)) return false;
    return true;
}

bool nonzero_primes_maximal(const RingPtr& r) {
    for (const Ideal& p : prime_ideals(r))
        if (!p.is_zero() && !is_maximal(p)) return false;
    return true;
}

// S = A \ (Z(A) u Z(E))
std::vector<elem_t> saturated_set(const RingPtr& ring, const ModulePtr& mod) {
    const ElemSet ze = module_zero_divisors(mod);
    std::vector<elem_t> out;
    for (elem_t a = 0; a < ring->size(); ++a)
        if (ring->is_regular(a) && !ze.test(a)) out.push_back(a);
    return out;
}

bool scales_to_whole(const RingPtr& ring, const ModulePtr& mod) {
    for (elem_t s : saturated_set(ring, mod)) {
        ElemSet image(mod->size());
        for (elem_t e = 0; e < mod->size(); ++e) image.set(mod->act(s, e));
        if (image.count() != mod->size()) return false;
    }
    return true;
}

struct Part {
    bool applicable = false;
    bool ok = false;
};

Part implication(TheoremResult& res, const std::string& label, bool hyp,
                 const std::function<bool()>& conclusion) {
    const bool concl = conclusion();
    res.transcript.emplace_back(label + ": hypothesis", b2s(hyp));
    res.transcript.emplace_back(label + ": conclusion", b2s(concl));
    if (!hyp)
        res.transcript.emplace_back(
            label + ": note", concl ? "inapplicable; conclusion holds anyway"
                                    : "inapplicable; contrapositive consistent");
    return {hyp, concl};
}

TheoremOutcome combine(std::initializer_list<Part> parts) {
    bool any_fail = false, any_pass = false;
    for (const Part& p : parts) {
        if (p.applicable && !p.ok) any_fail = true;
        if (p.applicable && p.ok) any_pass = true;
    }
    if (any_fail) return TheoremOutcome::Fail;
    return any_pass ? TheoremOutcome::Pass : TheoremOutcome::Inapplicable;
}

RingPtr need_ring(const TheoremInstance& inst, const std::string& id) {
    if (!inst.ring) throw SemanticError(id + " needs a ring instance");
    return inst.ring;
}

std::vector<RingPtr> need_factors(const TheoremInstance& inst, const std::string& id) {
    if (!inst.factors.empty()) return inst.factors;
    if (inst.ring && is_product(inst.ring)) return product_components(inst.ring);
    throw SemanticError(id + " needs a direct product instance");
}

RingPtr product_of(const TheoremInstance& inst, const std::vector<RingPtr>& factors) {
    if (inst.ring && is_product(inst.ring)) return inst.ring;
    return direct_product(factors);
}

struct TrivextInstance {
    RingPtr base;
    ModulePtr mod;
    RingPtr ext;
};

TrivextInstance need_trivext(const TheoremInstance& inst, const std::string& id) {
    if (inst.ring && inst.module) {
        RingPtr ext = (inst.composite && is_trivext(inst.composite))
                          ? inst.composite
                          : trivext(inst.ring, inst.module);
        return {inst.ring, inst.module, ext};
    }
    if (inst.ring && is_trivext(inst.ring))
        return {trivext_base(inst.ring), trivext_module(inst.ring), inst.ring};
    throw SemanticError(id + " needs a ring and a module (or a trivext ring)");
}

struct DupInstance {
    RingPtr base;
    Ideal ideal;
    RingPtr dup_ring;
};

DupInstance need_dup(const TheoremInstance& inst, const std::string& id) {
    if (inst.ring && inst.ideal) {
        RingPtr d = (inst.composite && is_dup(inst.composite)) ? inst.composite
                                                               : dup(inst.ring, *inst.ideal);
        return {inst.ring, *inst.ideal, d};
    }
    if (inst.ring && is_dup(inst.ring))
        return {dup_base(inst.ring), dup_along(inst.ring), inst.ring};
    throw SemanticError(id + " needs a ring and an ideal (or a dup ring)");
}

TheoremResult check_prop_2_2(const TheoremInstance& inst) {
    TheoremResult res{"prop-2.2", TheoremOutcome::Inapplicable, {}};
    const auto factors = need_factors(inst, res.id);
    const RingPtr product = product_of(inst, factors);
    bool all = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool v = ispv(factors[i]);
        res.transcript.emplace_back("isp(factor " + std::to_string(i) + ")", b2s(v));
        all = all && v;
    }
    const bool lhs = ispv(product);
    res.transcript.emplace_back("isp(product)", b2s(lhs));
    const Part p = implication(res, "equivalence", true, [&] { return lhs == all; });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_thm_exten(const TheoremInstance& inst) {
    TheoremResult res{"thm-exten", TheoremOutcome::Inapplicable, {}};
    const auto [base, mod, ext] = need_trivext(inst, res.id);
    const auto s = saturated_set(base, mod);
    res.transcript.emplace_back("|S|", std::to_string(s.size()));
    const bool hyp = scales_to_whole(base, mod);
    res.transcript.emplace_back("E = sE for all s in S", b2s(hyp));
    const Part p = implication(res, "equivalence", hyp, [&] {
        bool rhs = true;
        for (const Ideal& ideal : all_ideals(base)) {
            if (!ideal.is_proper()) continue;
            bool meets_s = false;
            for (elem_t x : s)
                if (ideal.contains(x)) {
                    meets_s = true;
                    break;
                }
            if (!meets_s) continue;
            if (!factor_inv_radical(ideal)) {
                rhs = false;
                break;
            }
        }
        return ispv(ext) == rhs;
    });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_thm_dup(const TheoremInstance& inst) {
    TheoremResult res{"thm-dup", TheoremOutcome::Inapplicable, {}};
    const auto d = need_dup(inst, res.id);
    const Part p1 =
        implication(res, "(1) isp(dup) => isp(base)", ispv(d.dup_ring),
                    [&] { return ispv(d.base); });
    bool scaled = true;
    for (elem_t a : d.base->regular_elements().to_list()) {
        ElemSet image(d.base->size());
        for (elem_t i : d.ideal.elements().to_list()) image.set(d.base->mul(a, i));
        if (!(image == d.ideal.elements())) {
            scaled = false;
            break;
        }
    }
    res.transcript.emplace_back("I = aI for all regular a", b2s(scaled));
    const Part p2 = implication(res, "(2) equivalence", scaled, [&] {
        return ispv(d.dup_ring) == ispv(d.base);
    });
    res.outcome = combine({p1, p2});
    return res;
}

TheoremResult check_lemma_regu(const TheoremInstance& inst) {
    TheoremResult res{"lemma-regu", TheoremOutcome::Inapplicable, {}};
    const auto d = need_dup(inst, res.id);
    const auto m = d.ideal.count();

    bool lhs = true;  // every regular ideal of dup has the form H bowtie I
    for (const Ideal& l : all_ideals(d.dup_ring)) {
        if (!l.is_regular()) continue;
        ElemSet h(d.base->size());
        for (elem_t x : l.elements().to_list()) h.set(static_cast<elem_t>(x / m));
        bool shaped = false;
        if (ideal_span_set(*d.base, h.to_list()) == h) {
            const Ideal hi(d.base, h);
            shaped = hi.is_regular() && dup_ideal(d.dup_ring, hi) == l;
        }
        if (!shaped) {
            lhs = false;
            break;
        }
    }
    bool rhs = true;
    for (elem_t a : d.base->regular_elements().to_list()) {
        ElemSet image(d.base->size());
        for (elem_t i : d.ideal.elements().to_list()) image.set(d.base->mul(a, i));
        if (!(image == d.ideal.elements())) {
            rhs = false;
            break;
        }
    }
    res.transcript.emplace_back("regular ideals shaped H bowtie I", b2s(lhs));
    res.transcript.emplace_back("I = aI for all regular a", b2s(rhs));
    const Part p = implication(res, "equivalence", true, [&] { return lhs == rhs; });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_lemma_inver(const TheoremInstance& inst) {
    TheoremResult res{"lemma-inver", TheoremOutcome::Inapplicable, {}};
    const auto d = need_dup(inst, res.id);
    std::size_t applicable = 0;
    bool ok = true;
    for (const Ideal& j : all_ideals(d.base)) {
        const Ideal jbow = dup_ideal(d.dup_ring, j);
        if (!is_invertible(jbow)) continue;
        ++applicable;
        if (!is_invertible(j)) {
            ok = false;
            res.transcript.emplace_back("violation at J", ideal_literal_string(j));
            break;
        }
    }
    res.transcript.emplace_back("invertible J bowtie I instances",
                                std::to_string(applicable));
    const Part p = implication(res, "J bowtie I invertible => J invertible",
                               applicable > 0, [&] { return ok; });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_lemma_p_jp(const TheoremInstance& inst) {
    TheoremResult res{"lemma-p=jp", TheoremOutcome::Inapplicable, {}};
    const RingPtr ring = need_ring(inst, res.id);
    std::size_t instances = 0;
    bool ok = true;
    for (const Ideal& p : prime_ideals(ring)) {
        for (const Ideal& i : all_ideals(ring)) {
            if (i == p || !p.elements().is_subset_of(i.elements())) continue;
            if (!is_multiplication_ideal(i)) continue;
            ++instances;
            if (!(ideal_product(i, p) == p)) {
                ok = false;
                res.transcript.emplace_back(
                    "violation", ideal_literal_string(p) + " inside " +
                                     ideal_literal_string(i));
                break;
            }
        }
        if (!ok) break;
    }
    res.transcript.emplace_back("prime-inside-multiplication-ideal instances",
                                std::to_string(instances));
    const Part p = implication(res, "P = IP", instances > 0, [&] { return ok; });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_prop_sisp(const TheoremInstance& inst) {
    TheoremResult res{"prop-sisp", TheoremOutcome::Inapplicable, {}};
    const RingPtr ring = need_ring(inst, res.id);
    const bool hyp = strongly(ring);
    res.transcript.emplace_back("strongly_isp(A)", b2s(hyp));

    const Part p1 = implication(res, "(1) A/P is an ISP-domain", hyp, [&] {
        for (const Ideal& p : prime_ideals(ring)) {
            if (!isp_domain(quotient(ring, p).target)) return false;
        }
        return true;
    });
    const Part p2 = implication(res, "(2) fraction rings stay strongly ISP", hyp, [&] {
        for (const Ideal& p : prime_ideals(ring)) {
            if (!strongly(localize_at_prime(ring, p).target)) return false;
        }
        return true;
    });

    std::vector<Part> parts{p1, p2};
    if (!inst.factors.empty() || (inst.ring && is_product(inst.ring))) {
        const auto factors = need_factors(inst, res.id);
        const RingPtr product = product_of(inst, factors);
        bool all = true;
        for (const auto& f : factors) all = all && strongly(f);
        const bool lhs = strongly(product);
        res.transcript.emplace_back("strongly_isp(product)", b2s(lhs));
        parts.push_back(
            implication(res, "(3) product equivalence", true, [&] { return lhs == all; }));
    }
    res.outcome = combine({parts[0], parts[1], parts.size() > 2 ? parts[2] : Part{}});
    return res;
}

TheoremResult check_prop_spr(const TheoremInstance& inst) {
    TheoremResult res{"prop-spr", TheoremOutcome::Inapplicable, {}};
    const RingPtr ring = need_ring(inst, res.id);
    const bool local = is_local(ring);
    const bool zerodim = zero_dimensional(ring);
    const bool sisp = strongly(ring);
    res.transcript.emplace_back("local", b2s(local));
    res.transcript.emplace_back("zero-dimensional", b2s(zerodim));
    res.transcript.emplace_back("strongly_isp", b2s(sisp));
    const Part p = implication(res, "special primary", local && zerodim && sisp,
                               [&] { return special_primary(ring); });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_thm_sispamr(const TheoremInstance& inst) {
    TheoremResult res{"thm-sispamr", TheoremOutcome::Inapplicable, {}};
    const RingPtr ring = need_ring(inst, res.id);
    const bool sisp = strongly(ring);
    const bool dim = nonzero_primes_maximal(ring);
    res.transcript.emplace_back("strongly_isp", b2s(sisp));
    res.transcript.emplace_back("nonzero primes maximal", b2s(dim));
    const Part p = implication(res, "almost multiplication", sisp && dim,
                               [&] { return almost_mult(ring); });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_cor_nsisp(const TheoremInstance& inst) {
    TheoremResult res{"cor-nsisp", TheoremOutcome::Inapplicable, {}};
    const RingPtr ring = need_ring(inst, res.id);
    res.transcript.emplace_back("noetherian", "true (finite ring)");
    const bool zpi = holds(is_zpi(ring).verdict);
    const bool ssp = holds(is_ssp(ring).verdict);
    const bool sisp = strongly(ring);
    res.transcript.emplace_back("zpi", b2s(zpi));
    res.transcript.emplace_back("ssp", b2s(ssp));
    res.transcript.emplace_back("strongly_isp", b2s(sisp));
    const Part p = implication(res, "three-way equivalence", true,
                               [&] { return zpi == ssp && ssp == sisp; });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_prop_strong(const TheoremInstance& inst) {
    TheoremResult res{"prop-strong", TheoremOutcome::Inapplicable, {}};
    const auto t = need_trivext(inst, res.id);
    const bool ext_strong = strongly(t.ext);
    res.transcript.emplace_back("strongly_isp(trivext)", b2s(ext_strong));

    const Part p1 = implication(res, "(1) base inherits", ext_strong,
                                [&] { return strongly(t.base); });
    const bool base_vnr = vnr(t.base);
    const bool mult = is_multiplication_module(t.mod);
    res.transcript.emplace_back("von_neumann_regular(base)", b2s(base_vnr));
    res.transcript.emplace_back("multiplication module", b2s(mult));
    const Part p2 = implication(res, "(2) vNr base, multiplication module",
                                base_vnr && mult, [&] { return ext_strong; });
    const bool scaled = scales_to_whole(t.base, t.mod);
    res.transcript.emplace_back("E = sE for all s in S", b2s(scaled));
    const Part p3 = implication(res, "(3) module is multiplication", ext_strong && scaled,
                                [&] { return mult; });
    res.outcome = combine({p1, p2, p3});
    return res;
}

TheoremResult check_prop_supp(const TheoremInstance& inst) {
    TheoremResult res{"prop-supp", TheoremOutcome::Inapplicable, {}};
    const auto t = need_trivext(inst, res.id);
    const bool ext_strong = strongly(t.ext);
    const bool dim = zero_dimensional(t.ext);
    res.transcript.emplace_back("strongly_isp(trivext)", b2s(ext_strong));
    res.transcript.emplace_back("primes of trivext maximal", b2s(dim));
    const Part p = implication(res, "support localizations", ext_strong && dim, [&] {
        for (const Ideal& m : support(t.mod)) {
            if (!is_maximal(m)) continue;
            const RingHom hom = localize_at_prime(t.base, m);
            if (!is_field(hom.target)) return false;
            const ModulePtr em = localize_module(t.mod, m);
            if (em->size() != hom.target->size()) return false;
            // free of rank one: some element generates with zero annihilator
            bool cyclic = false;
            for (elem_t e = 0; e < em->size() && !cyclic; ++e) {
                if (module_span_set(*em, std::span<const elem_t>(&e, 1)).count() !=
                    em->size())
                    continue;
                bool faithful = true;
                for (elem_t a = 1; a < hom.target->size(); ++a)
                    if (em->act(a, e) == 0) {
                        faithful = false;
                        break;
                    }
                cyclic = faithful;
            }
            if (!cyclic) return false;
        }
        return true;
    });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_prop_car(const TheoremInstance& inst) {
    TheoremResult res{"prop-car", TheoremOutcome::Inapplicable, {}};
    const auto t = need_trivext(inst, res.id);
    const bool domain = is_domain(t.base);
    const bool divisible = is_divisible(t.mod);
    res.transcript.emplace_back("base is a domain", b2s(domain));
    res.transcript.emplace_back("module divisible", b2s(divisible));
    const bool simple = is_simple(t.mod);
    res.transcript.emplace_back("module simple", b2s(simple));
    const Part p = implication(res, "equivalence", domain && divisible, [&] {
        return strongly(t.ext) == (isp_domain(t.base) && simple);
    });
    res.outcome = combine({p});
    return res;
}

TheoremResult check_thm_dupli(const TheoremInstance& inst) {
    TheoremResult res{"thm-dupli", TheoremOutcome::Inapplicable, {}};
    const auto d = need_dup(inst, res.id);
    const bool dup_strong = strongly(d.dup_ring);
    res.transcript.emplace_back("strongly_isp(dup)", b2s(dup_strong));
    const Part p1 = implication(res, "(1) base inherits", dup_strong,
                                [&] { return strongly(d.base); });
    const bool idem = ideal_product(d.ideal, d.ideal) == d.ideal;
    res.transcript.emplace_back("ideal idempotent", b2s(idem));
    const Part p2 = implication(res, "(2) equivalence", idem, [&] {
        return dup_strong == strongly(d.base);
    });
    res.outcome = combine({p1, p2});
    return res;
}

TheoremResult check_remark_tq_dup(const TheoremInstance& inst) {
    TheoremResult res{"remark-tq-dup", TheoremOutcome::Inapplicable, {}};
    const auto d = need_dup(inst, res.id);
    const bool tq = total_quotient(d.base);
    res.transcript.emplace_back("total_quotient(base)", b2s(tq));
    const Part p = implication(res, "dup is total quotient", tq,
                               [&] { return total_quotient(d.dup_ring); });
    res.outcome = combine({p});
    return res;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{
        "prop-2.2",  "thm-exten",   "thm-dup",    "lemma-regu", "lemma-inver",
        "lemma-p=jp", "prop-sisp",  "prop-spr",   "thm-sispamr", "cor-nsisp",
        "prop-strong", "prop-supp", "prop-car",   "thm-dupli",  "remark-tq-dup"};
    return ids;
}

std::vector<std::pair<std::string, TheoremInstance>> corpus_instances(const RingPtr& ring) {
    std::vector<std::pair<std::string, TheoremInstance>> out;
    const TheoremInstance plain{ring, {}, nullptr, std::nullopt, nullptr};
    if (is_product(ring))
        out.emplace_back("prop-2.2", TheoremInstance{ring, product_components(ring),
                                                     nullptr, std::nullopt, nullptr});
    if (is_trivext(ring)) {
        const TheoremInstance t{trivext_base(ring), {}, trivext_module(ring), std::nullopt,
                                ring};
        out.emplace_back("thm-exten", t);
        out.emplace_back("prop-strong", t);
        out.emplace_back("prop-supp", t);
        out.emplace_back("prop-car", t);
    }
    if (is_dup(ring)) {
        const TheoremInstance d{dup_base(ring), {}, nullptr, dup_along(ring), ring};
        out.emplace_back("thm-dup", d);
        out.emplace_back("lemma-regu", d);
        out.emplace_back("lemma-inver", d);
        out.emplace_back("thm-dupli", d);
        out.emplace_back("remark-tq-dup", d);
    }
    out.emplace_back("lemma-p=jp", plain);
    out.emplace_back("prop-sisp", plain);
    out.emplace_back("prop-spr", plain);
    out.emplace_back("thm-sispamr", plain);
    out.emplace_back("cor-nsisp", plain);

    // stable ordering by theorem id listing
    const auto& ids = theorem_ids();
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return std::find(ids.begin(), ids.end(), a.first) <
               std::find(ids.begin(), ids.end(), b.first);
    });
    return out;
}

TheoremResult check_theorem(const std::string& id, const TheoremInstance& instance) {
    if (id == "prop-2.2") return check_prop_2_2(instance);
    if (id == "thm-exten") return check_thm_exten(instance);
    if (id == "thm-dup") return check_thm_dup(instance);
    if (id == "lemma-regu") return check_lemma_regu(instance);
    if (id == "lemma-inver") return check_lemma_inver(instance);
    if (id == "lemma-p=jp") return check_lemma_p_jp(instance);
    if (id == "prop-sisp") return check_prop_sisp(instance);
    if (id == "prop-spr") return check_prop_spr(instance);
    if (id == "thm-sispamr") return check_thm_sispamr(instance);
    if (id == "cor-nsisp") return check_cor_nsisp(instance);
    if (id == "prop-strong") return check_prop_strong(instance);
    if (id == "prop-supp") return check_prop_supp(instance);
    if (id == "prop-car") return check_prop_car(instance);
    if (id == "thm-dupli") return check_thm_dupli(instance);
    if (id == "remark-tq-dup") return check_remark_tq_dup(instance);
    throw SemanticError("unknown theorem id: " + id);
}

}  // namespace ringlab
