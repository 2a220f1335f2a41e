#pragma once

// Schur rings over finite abelian groups.
//
// An S-ring is stored as its partition of the group into basic sets. Basic
// sets are kept in canonical order: {e} first, then by (size, least element),
// so class indices are reproducible across runs and platforms.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srings/abelian.hpp"

namespace srings {

class SRing {
 public:
  // Validates the three S-ring axioms and canonically orders the classes.
  // Throws kNotAPartition, kIdentityNotSingleton, kNotInverseClosed or
  // kNotModuleClosed (the message names the offending classes/elements).
  static SRing validate(const AbelianGroup& g, std::vector<ElemSet> partition);

  const AbelianGroup& group() const { return impl_->group; }
  std::size_t rank() const { return impl_->classes.size(); }
  const std::vector<ElemSet>& classes() const { return impl_->classes; }
  const ElemSet& cls(std::size_t i) const { return impl_->classes[i]; }
  std::size_t class_of(Elem x) const { return impl_->class_of[x]; }
  static constexpr std::size_t identity_index() { return 0; }
  // Index of X^{-1}.
  std::size_t inverse_index(std::size_t i) const { return impl_->inverse[i]; }

  // c^Z_{X,Y}: the number of pairs (x, y) in X x Y with x + y = z for any z in Z.
  std::uint32_t constant(std::size_t x, std::size_t y, std::size_t z) const {
    const std::size_t r = rank();
    return tensor()[(x * r + y) * r + z];
  }
  // Dense rank^3 tensor, computed once on first use.
  const std::vector<std::uint32_t>& tensor() const;

  bool operator==(const SRing& o) const {
    return impl_ == o.impl_ || (group() == o.group() && classes() == o.classes());
  }

 private:
  struct Impl {
    AbelianGroup group;
    std::vector<ElemSet> classes;
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint32_t> inverse;
    mutable std::once_flag tensor_once;
    mutable std::vector<std::uint32_t> tensor;
  };
  explicit SRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Canonical order of a partition: {e} first, then (size, least element).
void sort_classes(std::vector<ElemSet>& classes);

// Color of the pair (u, v) in the Cayley scheme: the index of the basic set
// containing v - u, so that R(X) = {(g, x + g)}.
inline std::size_t relation_color(const SRing& a, Elem u, Elem v) {
  return a.class_of(a.group().sub(v, u));
}

std::uint32_t structure_constant(const SRing& a, std::size_t x, std::size_t y, std::size_t z);

bool is_a_set(const SRing& a, std::span<const Elem> s);
// Class indices whose union is s, or nullopt if s is not an A-set.
std::optional<std::vector<std::size_t>> decompose_a_set(const SRing& a, std::span<const Elem> s);
// Union of the given classes, sorted.
ElemSet union_of_classes(const SRing& a, std::span<const std::size_t> idx);

// All A-subgroups sorted by order then element list. Computed as the joins
// of the subgroups <X> generated by basic sets, which are exactly the
// A-subgroups.
std::vector<Subgroup> a_subgroups(const SRing& a);
bool is_a_subgroup(const SRing& a, const Subgroup& h);

// rad(S) = {g : S + g = S}. Throws kArgument on an empty set.
Subgroup radical(const AbelianGroup& g, std::span<const Elem> s);

// Shape C_{p^k} (cyclic) or C_p x C_{p^k} written with factors [p, p^k].
struct PShape {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  bool cyclic = false;
};
std::optional<PShape> p_shape(const AbelianGroup& g);

// rad(A). Cyclic groups: rad(X) for the class X of a generator.
// C_p x C_{p^k}: the join of rad(X) over the highest basic sets.
// Any other factor list throws kShape.
Subgroup sring_radical(const SRing& a);
// Classes containing an element of maximal order. Throws kShape like above.
std::vector<std::size_t> highest_basic_sets(const SRing& a);

// A_{U/L} over the canonical quotient group. Throws kNotASection unless U and
// L are A-subgroups.
SRing quotient_sring(const SRing& a, const Section& s);

// The permutation X -> X^(m) of class indices. Throws kArgument unless
// gcd(m, |G|) = 1; throws kInternal if an image is not a basic set.
std::vector<std::size_t> rational_conjugate(const SRing& a, std::int64_t m);

// X^[p] = {p x : x in X, |X cap (H + x)| != 0 mod p}, H = {g : p g = 0}.
ElemSet power_set_p(const SRing& a, std::size_t x, std::uint32_t p);

bool is_quasi_thin(const SRing& a);
// An A-subgroup H = C2 x C2 with A_H = ZH and A_{G/H} = Z(G/H), if any.
std::optional<Subgroup> klein_obstruction(const SRing& a);
bool is_symmetric(const SRing& a);
// The set of class sizes, ascending.
std::vector<std::uint32_t> valency_profile(const SRing& a);

// Text form: "sring <group> rank=<r>", one line per class, and with
// with_tensor the nonzero entries as "c X Y Z = n".
std::string to_text(const SRing& a, bool with_tensor = false);
// Parses the text form (tensor lines are ignored) and validates.
SRing parse_sring(std::string_view text);

}  // namespace srings
