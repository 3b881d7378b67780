#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/factor.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Three-valued verdict. Vacuous-true marks properties whose quantification
/// domain is empty (e.g. "every proper regular ideal ..." on a finite ring,
/// which has none), so degenerate truths stay visibly distinct.
enum class Verdict { False, True, VacuousTrue };

inline bool holds(Verdict v) { return v != Verdict::False; }
std::string_view to_string(Verdict v);

struct PropertyVerdict {
    std::string name;
    Verdict verdict = Verdict::False;
    std::optional<Ideal> counterexample;     // for false factorization verdicts
    std::optional<elem_t> witness_element;   // for elementwise failures
    std::string note;                        // vacuity reason etc.
    // For factorization-based true verdicts: one entry per proper ideal in
    // canonical order.
    std::vector<std::pair<Ideal, Factorization>> factorizations;
};

struct ClassificationReport {
    std::string provenance;
    std::size_t size = 0;

    bool local = false;
    bool field = false;
    bool reduced = false;
    bool domain = false;
    std::optional<Ideal> maximal_ideal;  // when local

    std::vector<PropertyVerdict> properties;  // fixed schema order
    bool implications_pass = false;

    const PropertyVerdict* find(std::string_view name) const;
};

struct ClassifyOptions {
    unsigned threads = 1;
};

/// Every regular element is a unit (always true on finite rings).
PropertyVerdict is_total_quotient(const RingPtr& ring);

/// Every proper regular ideal factors as invertible times a nonempty
/// product of proper radical ideals. Vacuous-true on finite rings, which
/// have no proper regular ideals.
PropertyVerdict is_isp(const RingPtr& ring, unsigned threads = 1);
/// Same factorization demand for every proper ideal, zero included.
PropertyVerdict is_strongly_isp(const RingPtr& ring, unsigned threads = 1);
/// Every proper regular ideal is a product of proper radical ideals.
PropertyVerdict is_sp(const RingPtr& ring, unsigned threads = 1);
/// Every proper ideal is a product of proper radical ideals.
PropertyVerdict is_ssp(const RingPtr& ring, unsigned threads = 1);
/// Every proper ideal is a product of prime ideals.
PropertyVerdict is_zpi(const RingPtr& ring, unsigned threads = 1);
/// Every proper ideal is invertible times a nonempty product of primes.
PropertyVerdict is_zpui(const RingPtr& ring, unsigned threads = 1);

/// Spec(A) = {M} and every proper ideal is a power of M. Fields qualify
/// (M = 0 and the only proper ideal is 0 = M^1).
PropertyVerdict is_special_primary(const RingPtr& ring);
/// Every localization at a prime is special primary (a finite localization
/// is never a rank-one discrete valuation domain).
PropertyVerdict is_almost_multiplication(const RingPtr& ring);
/// For every a there is x with a = a^2 x.
PropertyVerdict is_von_neumann_regular(const RingPtr& ring);
/// Every regular ideal is generated by its regular elements.
PropertyVerdict is_marot(const RingPtr& ring);
/// Every proper regular ideal is a product of primes (vacuous-true here).
PropertyVerdict is_dedekind(const RingPtr& ring);

/// Runs every predicate, attaches witnesses, validates the implication
/// diagram (throws std::logic_error naming both verdicts on violation).
/// Deterministic: identical provenance expressions produce byte-identical
/// reports regardless of the thread count.
///
/// Note: on total quotient rings (every finite ring is one) strongly-ISP
/// and SSP coincide, since the only invertible ideal is the unit ideal;
/// classify checks this equivalence as part of the diagram.
ClassificationReport classify(const RingPtr& ring, const ClassifyOptions& options = {});

/// The one-way arrows among the ring classes: total quotient => ISP,
/// SP => ISP, SSP => strongly ISP, ZPUI => strongly ISP, von Neumann
/// regular => strongly ISP, strongly ISP => ISP.
bool check_implications(const ClassificationReport& report);
bool check_implications(const RingPtr& ring);

/// Report for the symbolic integer backend (the ring expression "Zint").
/// Factorization-based verdicts are certified by enumerating every ideal nZ
/// up to the bound; the certificate runs before the report is produced.
ClassificationReport classify_integers(std::uint64_t certificate_bound = 10000);

}  // namespace ringlab
