#include "ringlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ringlab {

using json = nlohmann::ordered_json;

namespace {

json elems_json(const ElemSet& s) {
    json out = json::array();
    for (elem_t a : s.to_list()) out.push_back(a);
    return out;
}

json ideal_json(const Ideal& ideal) { return elems_json(ideal.elements()); }

std::string elems_text(const RingPtr& ring, const ElemSet& s) {
    std::string out = "{";
    bool first = true;
    for (elem_t a : s.to_list()) {
        if (!first) out += ",";
        out += element_to_string(ring, a);
        first = false;
    }
    return out + "}";
}

json property_json(const PropertyVerdict& p) {
    json out;
    out["name"] = p.name;
    out["verdict"] = std::string(to_string(p.verdict));
    if (!p.note.empty()) out["note"] = p.note;
    if (p.counterexample) out["counterexample"] = ideal_json(*p.counterexample);
    if (p.witness_element) out["witness_element"] = *p.witness_element;
    if (!p.factorizations.empty()) {
        json fz = json::array();
        for (const auto& [ideal, f] : p.factorizations) {
            json one;
            one["ideal"] = ideal_json(ideal);
            one["invertible_part"] = ideal_json(f.invertible_part);
            json parts = json::array();
            for (const Ideal& part : f.parts) parts.push_back(ideal_json(part));
            one["parts"] = parts;
            fz.push_back(std::move(one));
        }
        out["factorizations"] = std::move(fz);
    }
    return out;
}

json classification_json(const ClassificationReport& r) {
    json out;
    out["ring"] = {{"provenance", r.provenance}, {"size", r.size}};
    json structure;
    structure["local"] = r.local;
    structure["field"] = r.field;
    structure["reduced"] = r.reduced;
    structure["domain"] = r.domain;
    if (r.maximal_ideal) structure["maximal_ideal"] = ideal_json(*r.maximal_ideal);
    out["structure"] = std::move(structure);
    json props = json::array();
    for (const auto& p : r.properties) props.push_back(property_json(p));
    out["properties"] = std::move(props);
    out["implications"] = r.implications_pass ? "pass" : "fail";
    return out;
}

// Zint reports carry no ring pointer; detect by size 0.
std::string report_text(const ClassificationReport& r, const RingPtr& ring) {
    std::ostringstream out;
    out << "ring: " << r.provenance << "\n";
    if (r.size) out << "size: " << r.size << "\n";
    out << "local: " << (r.local ? "true" : "false");
    if (r.maximal_ideal && ring)
        out << "  (maximal ideal " << elems_text(ring, r.maximal_ideal->elements()) << ")";
    out << "\n";
    out << "field: " << (r.field ? "true" : "false") << "\n";
    out << "reduced: " << (r.reduced ? "true" : "false") << "\n";
    out << "domain: " << (r.domain ? "true" : "false") << "\n";
    for (const auto& p : r.properties) {
        out << p.name << ": " << to_string(p.verdict);
        if (!p.note.empty()) out << "  -- " << p.note;
        if (p.counterexample && ring)
            out << "  [counterexample " << elems_text(ring, p.counterexample->elements())
                << "]";
        if (p.witness_element && ring)
            out << "  [witness " << element_to_string(ring, *p.witness_element) << "]";
        else if (p.witness_element)
            out << "  [witness " << *p.witness_element << "]";
        out << "\n";
        if (ring)
            for (const auto& [ideal, f] : p.factorizations) {
                out << "    " << elems_text(ring, ideal.elements()) << " = "
                    << elems_text(ring, f.invertible_part.elements());
                for (const Ideal& part : f.parts)
                    out << " * " << elems_text(ring, part.elements());
                out << "\n";
            }
    }
    out << "implications: " << (r.implications_pass ? "pass" : "fail") << "\n";
    return out.str();
}

// Reports describe rings by provenance only, so renderers re-elaborate
// nothing; classification callers pass the ring for element formatting.
RingPtr ring_of(const ClassificationReport& r) {
    if (!r.properties.empty())
        for (const auto& p : r.properties) {
            if (p.counterexample) return p.counterexample->ring();
            if (!p.factorizations.empty()) return p.factorizations.front().first.ring();
        }
    return nullptr;
}

}  // namespace

std::string ideal_label(const Ideal& ideal) {
    elem_t gen = 0;
    if (is_principal(ideal, &gen))
        return "(" + element_to_string(ideal.ring(), gen) + ")";
    std::string out = "{";
    bool first = true;
    for (elem_t a : ideal.elements().to_list()) {
        if (!first) out += ",";
        out += element_to_string(ideal.ring(), a);
        first = false;
    }
    return out + "}";
}

std::string render_classification(const ClassificationReport& r, const ReportOptions& options) {
    if (options.json) {
        json out = classification_json(r);
        json top;
        top["command"] = "classify";
        top["report"] = std::move(out);
        return top.dump(2) + "\n";
    }
    return report_text(r, ring_of(r));
}

std::string render_classification_batch(const std::vector<ClassificationReport>& reports,
                                        const ReportOptions& options) {
    if (options.json) {
        json top;
        top["command"] = "classify-corpus";
        json entries = json::array();
        for (const auto& r : reports) entries.push_back(classification_json(r));
        top["entries"] = std::move(entries);
        return top.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : reports) {
        out += report_text(r, ring_of(r));
        out += "\n";
    }
    return out;
}

std::string render_factorization(const RingPtr& ring, const Ideal& target,
                                 const std::string& mode,
                                 const std::optional<Factorization>& result,
                                 const ReportOptions& options) {
    if (options.json) {
        json out;
        out["command"] = "factor";
        out["ring"] = ring->provenance();
        out["ideal"] = ideal_json(target);
        out["mode"] = mode;
        if (result) {
            out["result"] = "factored";
            out["invertible_part"] = ideal_json(result->invertible_part);
            json parts = json::array();
            for (const Ideal& part : result->parts) parts.push_back(ideal_json(part));
            out["parts"] = std::move(parts);
        } else {
            out["result"] = "none";
        }
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "ring: " << ring->provenance() << "\n";
    out << "ideal: " << elems_text(ring, target.elements()) << "\n";
    out << "mode: " << mode << "\n";
    if (!result) {
        out << "result: none\n";
        return out.str();
    }
    out << "result: factored\n";
    out << "invertible_part: " << elems_text(ring, result->invertible_part.elements())
        << "\n";
    out << "parts:";
    for (const Ideal& part : result->parts)
        out << " " << elems_text(ring, part.elements());
    out << "\n";
    return out.str();
}

std::string render_int_factorization(std::uint64_t n, const std::string& mode,
                                     const ints::IntFactorization& result,
                                     const ReportOptions& options) {
    if (options.json) {
        json out;
        out["command"] = "factor";
        out["ring"] = "Zint";
        out["ideal"] = n;
        out["mode"] = mode;
        out["result"] = "factored";
        out["invertible_part"] = result.invertible;
        out["parts"] = result.parts;
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "ring: Zint\n";
    out << "ideal: (" << n << ")\n";
    out << "mode: " << mode << "\n";
    out << "result: factored\n";
    out << "invertible_part: (" << result.invertible << ")\n";
    out << "parts:";
    for (auto d : result.parts) out << " (" << d << ")";
    out << "\n";
    return out.str();
}

std::string render_ideals(const RingPtr& ring, const ReportOptions& options) {
    const auto ideals = all_ideals(ring);
    if (options.json) {
        json out;
        out["command"] = "ideals";
        out["ring"] = ring->provenance();
        out["count"] = ideals.size();
        json list = json::array();
        for (const Ideal& ideal : ideals) {
            json one;
            one["elements"] = ideal_json(ideal);
            one["size"] = ideal.count();
            elem_t gen = 0;
            if (is_principal(ideal, &gen)) one["principal_generator"] = gen;
            one["regular"] = ideal.is_regular();
            one["radical"] = is_radical(ideal);
            one["prime"] = is_prime(ideal);
            one["maximal"] = is_maximal(ideal);
            one["primary"] = is_primary(ideal);
            list.push_back(std::move(one));
        }
        out["ideals"] = std::move(list);
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "ring: " << ring->provenance() << "\n";
    out << "ideals: " << ideals.size() << "\n";
    for (const Ideal& ideal : ideals) {
        out << "  " << elems_text(ring, ideal.elements()) << "  size " << ideal.count();
        if (is_prime(ideal)) out << " prime";
        if (is_maximal(ideal)) out << " maximal";
        else if (is_radical(ideal)) out << " radical";
        if (is_primary(ideal) && !is_prime(ideal)) out << " primary";
        out << "\n";
    }
    return out.str();
}

std::string render_spectrum(const RingPtr& ring, const ReportOptions& options) {
    const auto primes = prime_ideals(ring);
    const auto minimal = minimal_primes(Ideal::zero(ring));
    auto is_minimal = [&](const Ideal& p) {
        return std::find(minimal.begin(), minimal.end(), p) != minimal.end();
    };
    if (options.json) {
        json out;
        out["command"] = "spec";
        out["ring"] = ring->provenance();
        json list = json::array();
        for (const Ideal& p : primes) {
            json one;
            one["elements"] = ideal_json(p);
            one["minimal"] = is_minimal(p);
            one["maximal"] = is_maximal(p);
            list.push_back(std::move(one));
        }
        out["spectrum"] = std::move(list);
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "ring: " << ring->provenance() << "\n";
    out << "spectrum: " << primes.size() << " prime(s)\n";
    for (const Ideal& p : primes) {
        out << "  " << elems_text(ring, p.elements());
        if (is_minimal(p)) out << " minimal";
        if (is_maximal(p)) out << " maximal";
        out << "\n";
    }
    return out.str();
}

std::string render_theorem(const TheoremResult& result, const ReportOptions& options) {
    if (options.json) {
        json out;
        out["command"] = "check";
        out["theorem"] = result.id;
        out["outcome"] = std::string(to_string(result.outcome));
        json transcript = json::array();
        for (const auto& [label, value] : result.transcript)
            transcript.push_back({{"step", label}, {"value", value}});
        out["transcript"] = std::move(transcript);
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "theorem: " << result.id << "\n";
    for (const auto& [label, value] : result.transcript)
        out << "  " << label << ": " << value << "\n";
    out << "outcome: " << to_string(result.outcome) << "\n";
    return out.str();
}

std::string render_theorem_batch(const std::vector<TheoremResult>& results,
                                 const ReportOptions& options) {
    if (options.json) {
        json out;
        out["command"] = "check-corpus";
        json entries = json::array();
        for (const auto& r : results) {
            json one;
            one["theorem"] = r.id;
            one["outcome"] = std::string(to_string(r.outcome));
            json transcript = json::array();
            for (const auto& [label, value] : r.transcript)
                transcript.push_back({{"step", label}, {"value", value}});
            one["transcript"] = std::move(transcript);
            entries.push_back(std::move(one));
        }
        out["entries"] = std::move(entries);
        std::size_t fails = 0;
        for (const auto& r : results)
            if (r.outcome == TheoremOutcome::Fail) ++fails;
        out["failures"] = fails;
        return out.dump(2) + "\n";
    }
    std::string out;
    std::size_t fails = 0;
    for (const auto& r : results) {
        out += render_theorem(r, options);
        if (r.outcome == TheoremOutcome::Fail) ++fails;
        out += "\n";
    }
    out += "failures: " + std::to_string(fails) + "\n";
    return out;
}

}  // namespace ringlab
