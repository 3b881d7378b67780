#pragma once

#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/factor.hpp"
#include "ringlab/integers.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

struct ReportOptions {
    bool json = false;
};

// All renderers are deterministic: fixed field order, canonical ideal
// order, no timestamps. Byte-identical output across runs and thread
// counts.

std::string render_classification(const ClassificationReport& report,
                                  const ReportOptions& options);
std::string render_classification_batch(const std::vector<ClassificationReport>& reports,
                                        const ReportOptions& options);
std::string render_factorization(const RingPtr& ring, const Ideal& target,
                                 const std::string& mode,
                                 const std::optional<Factorization>& result,
                                 const ReportOptions& options);
std::string render_int_factorization(std::uint64_t n, const std::string& mode,
                                     const ints::IntFactorization& result,
                                     const ReportOptions& options);
std::string render_ideals(const RingPtr& ring, const ReportOptions& options);
std::string render_spectrum(const RingPtr& ring, const ReportOptions& options);
std::string render_theorem(const TheoremResult& result, const ReportOptions& options);
std::string render_theorem_batch(const std::vector<TheoremResult>& results,
                                 const ReportOptions& options);

std::string ideal_label(const Ideal& ideal);

}  // namespace ringlab
