#pragma once

// Finite abelian groups given as a direct product of cyclic factors.
//
// Elements are residue tuples (x_1, ..., x_r) with 0 <= x_i < d_i. Inside the
// library an element is addressed by its index in lexicographic order of the
// tuples (the first coordinate is the most significant digit), so the
// identity is always index 0 and iteration order is deterministic.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srings {

using Elem = std::uint32_t;
using ElemSet = std::vector<Elem>;  // always sorted, duplicate free

inline constexpr Elem kNoElem = 0xffffffffu;

class AbelianGroup {
 public:
  // The trivial group C1.
  AbelianGroup();

  // Throws kInvalidFactor when a factor is < 2. An empty list gives C1.
  static AbelianGroup make(std::vector<std::uint32_t> factors);

  // Parses "C2xC8" (case-insensitive). "C1" is the trivial group.
  static AbelianGroup parse(std::string_view literal);

  std::span<const std::uint32_t> factors() const { return impl_->factors; }
  std::uint32_t order() const { return impl_->order; }
  std::size_t num_factors() const { return impl_->factors.size(); }
  std::uint32_t exponent() const { return impl_->exponent; }

  static constexpr Elem identity() { return 0; }

  Elem add(Elem x, Elem y) const {
    return impl_->has_table ? impl_->add_table[std::size_t(x) * impl_->order + y]
                            : add_slow(x, y);
  }
  Elem neg(Elem x) const { return impl_->neg[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  // m * x, any integer m.
  Elem mul(std::int64_t m, Elem x) const;

  std::uint32_t element_order(Elem x) const { return impl_->elem_order[x]; }

  std::vector<std::uint32_t> coords(Elem x) const;
  Elem from_coords(std::span<const std::int64_t> coords) const;
  // Unit vector of the i-th cyclic factor.
  Elem generator(std::size_t i) const;

  // Invariant factors d_1 | d_2 | ... | d_s (ascending, no 1's).
  std::vector<std::uint32_t> invariant_factors() const;
  bool isomorphic_to(const AbelianGroup& other) const;

  std::string to_string() const;
  std::string format(Elem x) const;
  std::string format(std::span<const Elem> xs) const;
  // "(x1,...,xr)". Throws kParse.
  Elem parse_element(std::string_view literal) const;

  bool operator==(const AbelianGroup& other) const {
    return impl_ == other.impl_ || impl_->factors == other.impl_->factors;
  }

 private:
  struct Impl {
    std::vector<std::uint32_t> factors;
    std::vector<std::uint32_t> strides;
    std::uint32_t order = 1;
    std::uint32_t exponent = 1;
    bool has_table = false;
    std::vector<Elem> add_table;
    std::vector<Elem> neg;
    std::vector<std::uint32_t> elem_order;
  };

  explicit AbelianGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Elem add_slow(Elem x, Elem y) const;

  std::shared_ptr<const Impl> impl_;
};

// A subgroup of some group; the owning group is implied by context.
struct Subgroup {
  ElemSet elements;
  std::vector<Elem> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

// U/L together with an explicit identification of U/L with a group in
// invariant-factor form.
struct Section {
  Subgroup upper;  // U
  Subgroup lower;  // L
  AbelianGroup quotient;
  // Indexed by elements of the ambient group; kNoElem outside U.
  std::vector<Elem> projection;
  // Least element of U in each coset, indexed by quotient element.
  std::vector<Elem> lift;

  Elem project(Elem x) const { return projection[x]; }
};

// Homomorphism given by the images of the canonical generators.
struct GroupHom {
  AbelianGroup source;
  AbelianGroup target;
  std::vector<Elem> images;

  Elem apply(Elem x) const;
  std::vector<Elem> table() const;
  bool is_bijective() const;
  GroupHom compose(const GroupHom& then) const;  // x -> then(this(x))
  bool operator==(const GroupHom& o) const {
    return source == o.source && target == o.target && images == o.images;
  }
};

inline constexpr std::uint32_t kDefaultSubgroupBound = 256;

Subgroup subgroup_generated(const AbelianGroup& g, std::span<const Elem> gens);
// Sorted by order, then lexicographically by element list.
std::vector<Subgroup> all_subgroups(const AbelianGroup& g,
                                    std::uint32_t max_order = kDefaultSubgroupBound);
Section quotient(const AbelianGroup& g, const Subgroup& upper, const Subgroup& lower);
Section quotient(const AbelianGroup& g, const Subgroup& lower);  // G/L
Subgroup whole_group(const AbelianGroup& g);
Subgroup trivial_subgroup();

// Calls visit for every homomorphism in lexicographic order of the generator
// images; visit returns false to stop early.
void for_each_hom(const AbelianGroup& source, const AbelianGroup& target, bool iso_only,
                  const std::function<bool(const GroupHom&)>& visit);
std::vector<GroupHom> enumerate_homs(const AbelianGroup& source, const AbelianGroup& target,
                                     bool iso_only);
std::vector<GroupHom> automorphisms(const AbelianGroup& g);
// Builds the map from generator images, checking d_i * image_i = 0.
GroupHom make_hom(const AbelianGroup& source, const AbelianGroup& target,
                  std::vector<Elem> images);

// Every abelian group of the given order, each in invariant-factor form,
// ordered by the factor lists.
std::vector<AbelianGroup> abelian_groups_of_order(std::uint32_t n);

// Translate of a set: {x + t : x in s}, sorted.
ElemSet translate(const AbelianGroup& g, std::span<const Elem> s, Elem t);
// {m x : x in s} as a set.
ElemSet power_image(const AbelianGroup& g, std::span<const Elem> s, std::int64_t m);
// {-x : x in s}.
ElemSet inverse_set(const AbelianGroup& g, std::span<const Elem> s);

}  // namespace srings
