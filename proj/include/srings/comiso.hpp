#pragma once

// Combinatorial isomorphisms of Cayley schemes: point bijections that map
// basic relations onto basic relations, the algebraic isomorphisms they
// induce, and several ways of finding one that induces a given algebraic
// isomorphism.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srings/abelian.hpp"
#include "srings/algiso.hpp"
#include "srings/construct.hpp"
#include "srings/sring.hpp"

namespace srings {

struct PointMap {
  AbelianGroup source;
  AbelianGroup target;
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
  bool is_bijective() const;
  PointMap inverse() const;
  // x -> then(this(x))
  PointMap then(const PointMap& next) const;
  bool operator==(const PointMap& o) const {
    return source == o.source && target == o.target && image == o.image;
  }
};

PointMap identity_map(const AbelianGroup& g);
// x -> x + t
PointMap translation(const AbelianGroup& g, Elem t);
PointMap from_hom(const GroupHom& h);

// The class map X -> X' with R(X)^f = R(X'). Throws kNotAnIsomorphism (the
// message names a pair (u, v) whose relation is split) when f is not a
// bijection or does not map basic relations onto basic relations.
AlgebraicIso induced_algiso(const PointMap& f, const SRing& a, const SRing& b);
// Same check without throwing.
bool induces(const PointMap& f, const SRing& a, const SRing& b, std::span<const std::size_t> class_map);

enum class IsoMethod { kBrute, kCayley, kGwrAssembly, kPipeline };
std::string to_string(IsoMethod m);

struct IsoCertificate {
  PointMap point_map;
  AlgebraicIso induced;
  IsoMethod method;

  // Recomputes the induced algebraic isomorphism of f and throws kInternal if
  // it differs from phi.
  static IsoCertificate make(PointMap f, const AlgebraicIso& phi, IsoMethod method);
};

inline constexpr std::uint32_t kBruteForceMaxOrder = 32;

// Backtracking over point images with f(e) = e (right translations of the
// target keep the induced map, so this loses nothing). Every assignment
// filters the remaining domains by the colors of the pairs it creates.
// Returns some f with phi_f = phi, or nullopt when none exists. Throws kSize
// above max_order.
std::optional<PointMap> find_inducing_iso_bruteforce(const SRing& a, const SRing& b,
                                                     const AlgebraicIso& phi,
                                                     std::uint32_t max_order = kBruteForceMaxOrder);
// Calls visit for every f in iso(A, A', phi) with f(e) = e.
void for_each_inducing_iso(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                           const std::function<bool(const PointMap&)>& visit,
                           std::uint32_t max_order = kBruteForceMaxOrder);

// Scans the group isomorphisms G -> G' for one inducing phi. Requires the
// source to be C_p x C_{p^k} or a cyclic p-group with p in {2, 3}; throws
// kShape otherwise. nullopt only means that no Cayley isomorphism works.
std::optional<PointMap> find_cayley_inducing(const SRing& a, const SRing& b, const AlgebraicIso& phi);

// The sections U, G/L and U/L of a generalized wreath product and their
// images under phi, realized as explicit quotient groups.
struct GwrFrame {
  Section u, gl, ul;        // U/e, G/L, U/L in G
  Section u2, gl2, ul2;     // the same for U' = U^phi, L' = L^phi in G'
  SectionIso phi_u, phi_gl, phi_ul;
};
GwrFrame gwr_frame(const SRing& a, const SRing& b, const AlgebraicIso& phi, const GwrWitness& w);

// Glues a bijection G -> G' from f1 in iso(A_U, A'_U', phi_U) and f2 in
// iso(A_{G/L}, A'_{G'/L'}, phi_{G/L}) (both on the quotient groups of the
// frame). Each U-coset X = x0 + U with least element x0 is sent onto
// X' = X^{f2} by x -> f1(h_X(x - x0)) + x0', where x0' is the least element
// of X' and h_X is an automorphism of A_U lifting the correction on U/L.
// Throws kArgument if f1 or f2 induce the wrong maps and kAutLifting if some
// correction does not lift.
PointMap assemble_gwr_iso(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                          const GwrWitness& w, const PointMap& f1, const PointMap& f2);

// The three properties characterizing iso(A, A', phi) for a U/L-wreath
// product: f maps U-cosets and L-cosets onto U'- and L'-cosets, f^{G/L}
// induces phi_{G/L}, and every coset restriction translated back to U
// induces phi_U. Returns the first failing property (empty when all hold).
std::string check_gwr_properties(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                                 const GwrWitness& w, const PointMap& f);

// Color automorphisms of the Cayley scheme of A, described by a stabilizer
// chain of the point stabilizer of e (the translations make the group
// transitive, so |Aut| = |G| |Aut_e|).
struct AutGroup {
  AbelianGroup group;
  std::vector<Elem> base;
  // transversal[i]: one automorphism per point of the orbit of base[i] under
  // the pointwise stabilizer of e and base[0..i).
  std::vector<std::vector<PointMap>> transversal;

  unsigned __int128 order() const;
  std::string order_string() const;
  // Translations plus every transversal element.
  std::vector<PointMap> generators() const;
  // All elements, sorted by image table. Throws kSize above limit.
  std::vector<PointMap> elements(std::uint64_t limit = 1u << 20) const;
  bool contains(const PointMap& f) const;
};

AutGroup aut_group(const SRing& a, std::uint32_t max_order = kBruteForceMaxOrder);

// Aut(A_U) acting on U/L equals Aut(A_{U/L}): every generator of Aut(A_{U/L})
// lifts. Needs |U| within the brute-force bound.
bool aut_projection_is_full(const SRing& a, const Section& ul,
                            std::uint32_t max_order = kBruteForceMaxOrder);

struct CascadeOptions {
  bool use_cayley = true;
  bool use_gwr = true;
  bool use_brute = true;
  std::uint32_t brute_max_order = kBruteForceMaxOrder;
};

// Cayley search, then generalized wreath assembly over each proper witness
// (solving the pieces recursively), then brute force. Returns nullopt only
// when brute force proves iso(A, A', phi) empty; throws kSize when it is
// needed above its bound.
std::optional<IsoCertificate> find_inducing_iso(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                                                const CascadeOptions& opts = {});

enum class PipelineVerdict { kIsomorphic, kNonIsomorphic };

struct PipelineResult {
  PipelineVerdict verdict;
  // Why the graphs differ: "order", "wl-trace", "rank", "algebraic".
  std::string obstruction;
  std::optional<IsoCertificate> certificate;
  SRing scheme_a, scheme_b;
};

// Decides Cay(G, X) ~ Cay(G', X') for G = C_p x C_{p^k}, p in {2, 3}. Throws
// kShape for other sources.
PipelineResult graph_iso_pipeline(const AbelianGroup& g, std::span<const Elem> x,
                                  const AbelianGroup& g2, std::span<const Elem> x2,
                                  const CascadeOptions& opts = {});

// "pointmap <source> <target>" then "x -> y" lines with element literals.
std::string to_text(const PointMap& f);

}  // namespace srings
