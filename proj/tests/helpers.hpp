#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "srings/abelian.hpp"
#include "srings/construct.hpp"
#include "srings/sring.hpp"

namespace testing_helpers {

using namespace srings;

inline Elem el(const AbelianGroup& g, std::initializer_list<std::int64_t> c) {
  std::vector<std::int64_t> v(c);
  return g.from_coords(v);
}

inline ElemSet set_of(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Random subset of G \ {e} with each element kept with probability q.
inline ElemSet random_subset(const AbelianGroup& g, std::mt19937& rng, double q = 0.4) {
  std::bernoulli_distribution keep(q);
  ElemSet out;
  for (Elem x = 1; x < g.order(); ++x)
    if (keep(rng)) out.push_back(x);
  return out;
}

// A mixed bag of S-rings built from every constructor over groups of order
// at most max_order.
inline std::vector<SRing> constructor_zoo(std::uint32_t max_order, std::uint32_t seed = 7) {
  std::mt19937 rng(seed);
  std::vector<SRing> out;
  for (std::uint32_t n = 2; n <= max_order; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      out.push_back(full_group_ring(g));
      out.push_back(rank2(g));
      GroupHom inv{g, g, {}};
      for (std::size_t i = 0; i < g.num_factors(); ++i) inv.images.push_back(g.neg(g.generator(i)));
      out.push_back(cyclotomic(g, std::span<const GroupHom>(&inv, 1)));
      auto autos = automorphisms(g);
      if (autos.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
        GroupHom one = autos[pick(rng)];
        out.push_back(cyclotomic(g, std::span<const GroupHom>(&one, 1)));
      }
      for (int t = 0; t < 3; ++t) {
        ElemSet s = random_subset(g, rng);
        out.push_back(closure(g, std::span<const ElemSet>(&s, 1)));
      }
    }
  // products of small pieces
  std::vector<SRing> small;
  for (std::uint32_t n = 2; n <= 4; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      small.push_back(full_group_ring(g));
      small.push_back(rank2(g));
    }
  for (const auto& a : small)
    for (const auto& b : small)
      if (a.group().order() * b.group().order() <= max_order) {
        out.push_back(tensor(a, b));
        out.push_back(wreath(a, b));
      }
  return out;
}

}  // namespace testing_helpers
