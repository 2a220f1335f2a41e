#pragma once

// S-ring constructors and generalized wreath product detection.

#include <span>
#include <vector>

#include "srings/abelian.hpp"
#include "srings/sring.hpp"

namespace srings {

SRing full_group_ring(const AbelianGroup& g);
// {{e}, G \ {e}}. Throws kArgument for the trivial group.
SRing rank2(const AbelianGroup& g);

// The subgroup of Aut(G) generated by `gens`, as a list of image tables
// (identity first). Throws kArgument if a map is not an automorphism of g.
std::vector<std::vector<Elem>> generated_automorphism_group(const AbelianGroup& g,
                                                            std::span<const GroupHom> gens);
// Orbits of <gens> as an S-ring.
SRing cyclotomic(const AbelianGroup& g, std::span<const GroupHom> gens);

// The direct product G1 x G2 written with the concatenated factor list; the
// element (g1, g2) has index g1 * |G2| + g2.
AbelianGroup direct_product(const AbelianGroup& g1, const AbelianGroup& g2);
inline Elem pair_elem(const AbelianGroup& g2, Elem g1, Elem e2) { return g1 * g2.order() + e2; }

// Classes X1 x X2.
SRing tensor(const SRing& a1, const SRing& a2);
// Classes X1 x {e2} and G1 x X2 for X2 != {e2}.
SRing wreath(const SRing& a1, const SRing& a2);

struct GwrWitness {
  Section section;  // U/L
  bool proper = false;  // L != e and U != G
};

// Every A-section U/L (L <= U A-subgroups) with L <= rad(X) for each basic
// set X outside U. Ordered by (|U|, U, |L|, L).
std::vector<GwrWitness> gwr_sections(const SRing& a);
bool is_gwr(const SRing& a, const Subgroup& u, const Subgroup& l);

// The coarsest S-ring in which every seed is an A-set.
SRing closure(const AbelianGroup& g, std::span<const ElemSet> seeds);

}  // namespace srings
