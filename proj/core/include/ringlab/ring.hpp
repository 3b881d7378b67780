#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ringlab/elem_set.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

class FiniteRing;
class FiniteModule;
class Ideal;

using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

enum class ConstructionKind { Base, Product, Trivext, Dup, Quotient, Localization };

/// Provenance record: how a ring was built and from which components.
struct ConstructionTag {
    ConstructionKind kind = ConstructionKind::Base;
    std::vector<std::string> components;
};

/// A ring map given by its value table on the source carrier.
struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<elem_t> map;

    elem_t operator()(elem_t a) const { return map[a]; }
};

namespace detail {

// Structured operation rules. Rings store the rule of their construction,
// not n x n tables (except quotients/localizations, whose carriers are
// re-indexed equivalence classes and have no residual structure to exploit).
struct ZmodOp {
    unsigned n;
};
struct TableOp {
    std::vector<std::uint16_t> add;  // row-major size x size
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
};
struct ProductOp {
    std::vector<RingPtr> factors;
    std::vector<elem_t> stride;  // stride[i] = prod of sizes of factors after i
};
struct TrivextOp {
    RingPtr base;
    ModulePtr mod;  // index = a * |E| + e
};
struct DupOp {
    RingPtr base;
    std::vector<elem_t> ideal_elems;  // sorted; element (a, a+i) has index a * |I| + pos(i)
    std::vector<elem_t> pos;          // base elem -> position in ideal_elems, or npos
};
using RingOp = std::variant<ZmodOp, TableOp, ProductOp, TrivextOp, DupOp>;

struct CanonicalLess {
    bool operator()(const ElemSet& a, const ElemSet& b) const { return canonical_less(a, b); }
};

struct CachedFactorization {
    ElemSet invertible;
    std::vector<ElemSet> parts;
};

// Plain-data mirror of a classifier verdict; stored on the ring so repeated
// theorem checks do not recompute factorization sweeps.
struct CachedProperty {
    int verdict = 0;  // 0 false, 1 true, 2 vacuous-true
    std::optional<ElemSet> counterexample;
    std::optional<elem_t> witness_element;
    std::string note;
    std::vector<std::pair<ElemSet, CachedFactorization>> factorizations;
};

// Write-once caches attached to each ring. Values never depend on thread
// schedule, so concurrent fills race benignly toward identical content.
struct RingCaches {
    std::once_flag lattice_once;
    std::vector<ElemSet> ideals;  // every ideal, canonical order
    std::unordered_map<ElemSet, std::size_t, ElemSetHash> ideal_index;

    std::once_flag flags_once;
    std::vector<std::uint8_t> prime_flag, maximal_flag, radical_flag;
    std::vector<unsigned> power_cap;  // smallest k with I^k = I^(k+1)

    std::mutex hom_mutex;
    std::map<ElemSet, RingHom, CanonicalLess> localizations;  // keyed by prime
    std::map<ElemSet, RingHom, CanonicalLess> quotients;      // keyed by ideal

    std::mutex prop_mutex;
    std::map<std::string, CachedProperty> properties;
};

RingPtr make_table_ring(std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul,
                        std::size_t size, elem_t one, std::string provenance,
                        ConstructionTag tag);

}  // namespace detail

/// A finite commutative ring with identity on the carrier {0, .., size-1}.
/// Index 0 is the additive identity and the identity is a distinct index,
/// so the zero ring is unrepresentable. Values are immutable after
/// construction; structural sets are computed eagerly, the ideal lattice and
/// derived classifications fill write-once caches. Safe for shared reads.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    std::size_t size() const { return size_; }
    elem_t zero() const { return 0; }
    elem_t one() const { return one_; }

    elem_t add(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
    elem_t mul(elem_t a, elem_t b) const;
    elem_t power(elem_t a, unsigned k) const;       // a^k, a^0 = 1
    elem_t scale(std::uint64_t k, elem_t a) const;  // k-fold additive multiple

    const std::string& provenance() const { return provenance_; }
    const ConstructionTag& construction() const { return tag_; }

    const ElemSet& units() const { return units_; }
    const ElemSet& regular_elements() const { return regulars_; }
    const ElemSet& idempotents() const { return idempotents_; }
    const ElemSet& nilpotents() const { return nilpotents_; }

    bool is_unit(elem_t a) const { return units_.test(a); }
    bool is_regular(elem_t a) const { return regulars_.test(a); }
    bool is_nilpotent(elem_t a) const { return nilpotents_.test(a); }

    /// Additive order of 1; equals size() exactly when 1 generates (A, +),
    /// i.e. when the ring is a copy of Z/n and integer residues make sense.
    unsigned additive_order_of_one() const { return ord_one_; }
    bool generated_by_one() const { return ord_one_ == size_; }
    /// For rings generated by 1: the k with a = k*1.
    elem_t integer_residue(elem_t a) const;

    const detail::RingOp& op() const { return op_; }
    detail::RingCaches& caches() const { return caches_; }

    static RingPtr create(detail::RingOp op, std::size_t size, elem_t one,
                          std::string provenance, ConstructionTag tag);

private:
    FiniteRing(detail::RingOp op, std::size_t size, elem_t one, std::string provenance,
               ConstructionTag tag);
    void compute_structure();

    detail::RingOp op_;
    std::size_t size_;
    elem_t one_;
    std::string provenance_;
    ConstructionTag tag_;

    ElemSet units_, regulars_, idempotents_, nilpotents_;
    unsigned ord_one_ = 0;
    std::vector<elem_t> residue_;  // discrete log base 1, when generated_by_one

    mutable detail::RingCaches caches_;
};

/// Z/nZ with index i representing residue i. Rejects n <= 1.
RingPtr make_zmod(unsigned n);

/// An element bound to its ring; convenience wrapper over raw indices.
struct RingElement {
    RingPtr ring;
    elem_t index = 0;

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        return {a.ring, a.ring->add(a.index, b.index)};
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        return {a.ring, a.ring->mul(a.index, b.index)};
    }
    friend RingElement operator-(const RingElement& a) {
        return {a.ring, a.ring->neg(a.index)};
    }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring == b.ring && a.index == b.index;
    }
};

/// Exhaustive commutative-ring axiom check; returns a description of the
/// first violated axiom, or nullopt. Intended for tests (O(size^3)).
std::optional<std::string> check_ring_axioms(const FiniteRing& ring);

/// Exhaustive homomorphism check over the source carrier.
bool is_ring_hom(const RingHom& hom);

bool is_field(const RingPtr& ring);
bool is_reduced(const RingPtr& ring);
bool is_domain(const RingPtr& ring);

/// The unique maximal ideal when the ring is local, nullopt otherwise.
std::optional<Ideal> local_maximal_ideal(const RingPtr& ring);
bool is_local(const RingPtr& ring);

Ideal nilradical(const RingPtr& ring);

/// Ring of cosets A/I with the projection map. Cosets are indexed by their
/// least element, ascending, so the coset of 0 is index 0. Rejects I = A.
RingHom quotient(const RingPtr& ring, const Ideal& ideal);

/// Fraction ring A_P for a prime P, S = A \ P, built from classes of pairs
/// (a, s) under (a,s) ~ (b,t) iff u(at - bs) = 0 for some u in S, with the
/// canonical map a -> a/1. Rejects non-prime P. Results are cached per ring.
RingHom localize_at_prime(const RingPtr& ring, const Ideal& prime);

/// Renders an element the way the expression language writes it: residues
/// for Z/n-like rings, tuples for products, (a, e) pairs for trivial
/// extensions, (a, b) pairs in A x A for duplications, raw indices otherwise.
std::string element_to_string(const RingPtr& ring, elem_t a);

}  // namespace ringlab
