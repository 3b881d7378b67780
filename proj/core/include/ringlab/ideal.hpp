#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// An ideal of a finite ring, stored as the canonical element set.
/// Two equal ideals of the same ring have identical encodings.
class Ideal {
public:
    /// Wraps an element set; verifies closure under + and ring multiples.
    Ideal(RingPtr ring, ElemSet elements);

    /// The ideal generated by the given elements.
    static Ideal span(const RingPtr& ring, std::span<const elem_t> generators);
    static Ideal span(const RingPtr& ring, std::initializer_list<elem_t> generators);
    static Ideal zero(const RingPtr& ring);
    static Ideal unit(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const ElemSet& elements() const { return elements_; }
    std::size_t count() const { return elements_.count(); }
    bool contains(elem_t a) const { return elements_.test(a); }

    bool is_proper() const { return elements_.count() != ring_->size(); }
    bool is_zero() const { return elements_.count() == 1; }
    /// Contains at least one regular element.
    bool is_regular() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_ == b.ring_ && a.elements_ == b.elements_;
    }

private:
    RingPtr ring_;
    ElemSet elements_;
};

inline bool canonical_less(const Ideal& a, const Ideal& b) {
    return canonical_less(a.elements(), b.elements());
}

/// Closure of a seed set under addition and ring multiples (the ideal it
/// generates), as a raw element set.
ElemSet ideal_span_set(const FiniteRing& ring, std::span<const elem_t> seed);

/// Every ideal of the ring exactly once, in canonical (size, encoding)
/// order: the closure of the principal ideals under ideal sums. Cached.
std::vector<Ideal> all_ideals(const RingPtr& ring);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (a : b) = {x : x*b in a}.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned k);

Ideal radical(const Ideal& ideal);
bool is_radical(const Ideal& ideal);
bool is_prime(const Ideal& ideal);
bool is_maximal(const Ideal& ideal);
bool is_primary(const Ideal& ideal);

/// All prime (resp. maximal) ideals, canonical order. Cached on the ring.
std::vector<Ideal> prime_ideals(const RingPtr& ring);
std::vector<Ideal> maximal_ideals(const RingPtr& ring);
std::vector<Ideal> minimal_primes(const Ideal& ideal);

/// True when some single element generates the ideal; reports the least one.
bool is_principal(const Ideal& ideal, elem_t* generator = nullptr);

/// Invertibility test following the ideal-theoretic characterization:
/// the ideal is regular, finitely generated (automatic here), and its image
/// in the localization at every maximal ideal is principal. Principal
/// regular ideals short-circuit (they are locally principal).
bool is_invertible(const Ideal& ideal);

/// Witness that a contained ideal is a multiple of the given one.
struct MultiplicationWitness {
    Ideal contained;
    Ideal cofactor;  // contained = cofactor * ideal
};

/// True iff every ideal contained in the given one factors through it;
/// optionally reports one witness per contained ideal.
bool is_multiplication_ideal(const Ideal& ideal,
                             std::vector<MultiplicationWitness>* witnesses = nullptr);

/// Ideal generated by the image of an ideal under a ring map.
Ideal image_ideal(const RingHom& hom, const Ideal& ideal);
/// Preimage of an ideal (always an ideal).
Ideal preimage_ideal(const RingHom& hom, const Ideal& ideal);

/// Smallest k >= 1 with I^k = I^(k+1). Cached per ideal on the ring.
unsigned power_stabilization_index(const Ideal& ideal);

/// Greedy minimal generating list in ascending element order.
std::vector<elem_t> minimal_generators(const Ideal& ideal);
/// The expression-language literal generating this ideal, e.g. "ideal(2)".
std::string ideal_literal_string(const Ideal& ideal);

}  // namespace ringlab
