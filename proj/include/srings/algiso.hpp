#pragma once

// Algebraic isomorphisms: bijections of basic sets preserving every
// structure constant.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srings/abelian.hpp"
#include "srings/sring.hpp"

namespace srings {

struct AlgebraicIso {
  SRing source;
  SRing target;
  std::vector<std::size_t> class_map;  // source class index -> target class index

  std::size_t operator()(std::size_t i) const { return class_map[i]; }
};

struct AlgisoCheck {
  bool ok = true;
  // A violating triple (X, Y, Z) with c^Z_{X,Y} != c^{Z'}_{X',Y'}, when the
  // failure is a structure constant mismatch.
  std::optional<std::array<std::size_t, 3>> witness;
  std::string reason;
};

// Throws kArgument on rank mismatch. Size mismatches are reported at the
// triple (X, X^{-1}, {e}) since |X| = c^{e}_{X,X^{-1}}.
AlgisoCheck verify_algiso(const SRing& a, const SRing& b, std::span<const std::size_t> class_map);

AlgebraicIso identity_algiso(const SRing& a);
AlgebraicIso inverse(const AlgebraicIso& phi);
// x -> psi(phi(x))
AlgebraicIso compose(const AlgebraicIso& phi, const AlgebraicIso& psi);

// Backtracking over source classes in (size, index) order. Candidates must
// agree in size, in being symmetric, in |<X>| and |rad(X)|; after each
// assignment every fully assigned triple is checked together with the
// containments between <X>, rad(X) and the already assigned classes.
// `visit` returns false to stop.
void for_each_algiso(const SRing& a, const SRing& b,
                     const std::function<bool(const AlgebraicIso&)>& visit);
std::vector<AlgebraicIso> enumerate_algisos(const SRing& a, const SRing& b);
// Stops after the first hit.
std::optional<AlgebraicIso> find_algiso(const SRing& a, const SRing& b);

// Union of the images of the classes of an A-set. Throws kArgument if s is
// not an A-set of the source.
ElemSet image_of_aset(const AlgebraicIso& phi, std::span<const Elem> s);
Subgroup image_of_subgroup(const AlgebraicIso& phi, const Subgroup& h);

struct SectionIso {
  Section source_section;  // U/L in G
  Section target_section;  // U^phi / L^phi in G'
  AlgebraicIso iso;        // A_{U/L} -> A'_{U'/L'}
};

// phi_S on the quotient S-rings. Throws kNotASection if U or L is not an
// A-subgroup.
SectionIso induced_on_section(const AlgebraicIso& phi, const Section& s);

// "algiso <rank>" then "i -> j" lines.
std::string to_text(const AlgebraicIso& phi);

}  // namespace srings
