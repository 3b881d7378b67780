#pragma once

#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Componentwise product of k >= 2 rings.
RingPtr direct_product(const std::vector<RingPtr>& factors);

/// Trivial ring extension (idealization) of a ring by one of its modules:
/// carrier A x E with (a,e)(b,f) = (ab, af + be). Index = a * |E| + e.
RingPtr trivext(const RingPtr& ring, const ModulePtr& mod);

/// Amalgamated duplication along an ideal: the subring
/// {(a, a+i) : a in A, i in I} of A x A. Index = a * |I| + position of i.
RingPtr dup(const RingPtr& ring, const Ideal& ideal);

bool is_product(const RingPtr& ring);
std::vector<RingPtr> product_components(const RingPtr& ring);

bool is_trivext(const RingPtr& ring);
RingPtr trivext_base(const RingPtr& ring);
ModulePtr trivext_module(const RingPtr& ring);
elem_t trivext_encode(const RingPtr& trivext_ring, elem_t a, elem_t e);
std::pair<elem_t, elem_t> trivext_decode(const RingPtr& trivext_ring, elem_t x);

bool is_dup(const RingPtr& ring);
RingPtr dup_base(const RingPtr& ring);
/// The ideal the duplication was taken along, as an ideal of the base.
Ideal dup_along(const RingPtr& ring);
/// Encodes the pair (a, b) in A x A; rejects b - a outside the ideal.
elem_t dup_encode(const RingPtr& dup_ring, elem_t a, elem_t b);
/// Decodes to the pair (a, b) in A x A.
std::pair<elem_t, elem_t> dup_decode(const RingPtr& dup_ring, elem_t x);

/// The homogeneous ideal I x V of a trivial extension; requires IE <= V.
Ideal homogeneous_ideal(const RingPtr& trivext_ring, const Ideal& ideal, const Submodule& sub);

/// Whether an ideal of a trivial extension has the form I x V, and if so
/// which I and V.
struct HomogeneousParts {
    Ideal ideal;
    Submodule sub;
};
std::optional<HomogeneousParts> homogeneous_parts(const RingPtr& trivext_ring, const Ideal& ideal);

/// The ideal H bowtie I = {(h, h+i) : h in H, i in I} of a duplication.
Ideal dup_ideal(const RingPtr& dup_ring, const Ideal& sub_ideal);

}  // namespace ringlab
