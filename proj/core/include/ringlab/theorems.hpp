#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/module.hpp"

namespace ringlab {

enum class TheoremOutcome { Pass, Fail, Inapplicable };
std::string_view to_string(TheoremOutcome o);

/// Inputs for one transfer-theorem check. Which fields apply depends on the
/// theorem id:
///   prop-2.2, prop-sisp (part 3)       : factors (>= 2 rings)
///   thm-exten, prop-strong, prop-supp,
///   prop-car                           : ring + module
///   thm-dup, lemma-regu, lemma-inver,
///   thm-dupli, remark-tq-dup           : ring + ideal
///   lemma-p=jp, prop-sisp (1,2),
///   prop-spr, thm-sispamr, cor-nsisp   : ring only
struct TheoremInstance {
    RingPtr ring;
    std::vector<RingPtr> factors;
    ModulePtr module;
    std::optional<Ideal> ideal;
    /// Optional prebuilt trivext/dup of (ring, module/ideal); reused instead
    /// of reconstructing, so cached classifications carry over.
    RingPtr composite;
};

struct TheoremResult {
    std::string id;
    TheoremOutcome outcome = TheoremOutcome::Inapplicable;
    // Named intermediate verdicts, in evaluation order. When the hypothesis
    // fails, the contrapositive is still evaluated and recorded so an
    // inapplicable instance carries a consistency note.
    std::vector<std::pair<std::string, std::string>> transcript;
};

const std::vector<std::string>& theorem_ids();

/// Evaluates hypothesis and conclusion on the instance. Pass iff the
/// hypothesis holds and the conclusion follows; a failed hypothesis is
/// reported as inapplicable, never as pass.
TheoremResult check_theorem(const std::string& id, const TheoremInstance& instance);

/// The theorem instances a corpus ring gives rise to: ring-level checks for
/// every ring, plus the product/trivext/dup transfer checks matching its
/// construction. Ordered by theorem_ids().
std::vector<std::pair<std::string, TheoremInstance>> corpus_instances(const RingPtr& ring);

}  // namespace ringlab
