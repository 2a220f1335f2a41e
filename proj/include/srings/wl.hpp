#pragma once

// Two-dimensional Weisfeiler-Leman refinement.
//
// Colors are renumbered canonically every round: the new color of a pair is
// the rank of its key (old color, color of the transposed pair, diagonal
// flag, sorted multiset of color pairs along paths of length two) among all
// keys of that round. Nothing depends on vertex labels, so isomorphic inputs
// produce the same color sequence and the same trace.

#include <cstdint>
#include <span>
#include <vector>

#include "srings/abelian.hpp"
#include "srings/sring.hpp"

namespace srings {

struct RelationColoring {
  std::uint32_t n = 0;               // vertices 0..n-1
  std::vector<std::uint32_t> color;  // color[u * n + v]
  std::uint32_t num_colors = 0;

  std::uint32_t at(std::uint32_t u, std::uint32_t v) const { return color[std::size_t(u) * n + v]; }
};

// Renumbers colors densely, preserving their relative order.
RelationColoring normalize_coloring(std::uint32_t n, std::vector<std::uint32_t> color);

// Coarsest coherent refinement. If `trace` is given it receives one hash per
// round, a label-independent fingerprint of the refinement history.
RelationColoring wl_stabilize(const RelationColoring& initial,
                              std::vector<std::uint64_t>* trace = nullptr);

// True if for equal-colored pairs (u, w) all path counts agree.
bool is_coherent(const RelationColoring& c);

// The Cayley-scheme coloring of an S-ring: color(u, v) = class of v - u.
RelationColoring scheme_coloring(const SRing& a);

struct CayleyScheme {
  SRing ring;
  // WL color of each basic set; colors are canonical (see above).
  std::vector<std::uint32_t> color_of_class;
  std::vector<std::uint64_t> trace;
};

// Largest group handled by the full G x G refinement in cayley_scheme.
inline constexpr std::uint32_t kFullWlMaxOrder = 64;

// The least Cayley scheme in which the diagonal and every R(seed) are unions
// of basic relations. Small groups run WL on all of G x G and check that the
// result is translation invariant; larger groups refine the translation-
// invariant coloring of the pairs (e, z), which yields the same colors.

CayleyScheme cayley_scheme(const AbelianGroup& g, std::span<const ElemSet> seeds,
                           std::uint32_t full_wl_max_order = kFullWlMaxOrder);

// scheme_from_cayley_graph(G, X) = cayley_scheme(G, {X}).ring.
SRing scheme_from_cayley_graph(const AbelianGroup& g, std::span<const Elem> x);

}  // namespace srings
