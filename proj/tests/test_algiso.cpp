#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srings/algiso.hpp"
#include "srings/construct.hpp"
#include "srings/error.hpp"

using namespace srings;
using testing_helpers::el;

TEST(Verify, IdentityAndRationalConjugates) {
  for (const auto& a : testing_helpers::constructor_zoo(16, 4)) {
    EXPECT_TRUE(verify_algiso(a, a, identity_algiso(a).class_map).ok);
    for (std::int64_t m = 1; m < 2 * std::int64_t(a.group().order()); ++m) {
      if (std::gcd(m, std::int64_t(a.group().order())) != 1) continue;
      auto perm = rational_conjugate(a, m);
      ASSERT_TRUE(verify_algiso(a, a, perm).ok);
    }
  }
}

TEST(Verify, SizeMismatchWitness) {
  auto c4 = AbelianGroup::make({4});
  auto a = SRing::validate(c4, {{0}, {2}, {1, 3}});
  std::vector<std::size_t> swap = {0, 2, 1};
  auto check = verify_algiso(a, a, swap);
  EXPECT_FALSE(check.ok);
  ASSERT_TRUE(check.witness);
  EXPECT_EQ((*check.witness)[2], 0u);
  EXPECT_EQ((*check.witness)[1], a.inverse_index((*check.witness)[0]));
  EXPECT_THROW(verify_algiso(a, rank2(c4), swap), Error);
}

TEST(Enumerate, Examples) {
  auto z4 = full_group_ring(AbelianGroup::make({4}));
  EXPECT_EQ(enumerate_algisos(z4, z4).size(), 2u);
  auto r9 = rank2(AbelianGroup::make({9}));
  auto r33 = rank2(AbelianGroup::make({3, 3}));
  EXPECT_EQ(enumerate_algisos(r9, r33).size(), 1u);
  EXPECT_TRUE(enumerate_algisos(full_group_ring(AbelianGroup::make({4})),
                                full_group_ring(AbelianGroup::make({2, 2})))
                  .empty());
}

TEST(Enumerate, GroupRingsGiveGroupIsomorphisms) {
  for (auto factors : std::vector<std::vector<std::uint32_t>>{{2, 4}, {3, 3}, {2, 2, 2}, {2, 8}}) {
    auto g = AbelianGroup::make(factors);
    auto z = full_group_ring(g);
    EXPECT_EQ(enumerate_algisos(z, z).size(), automorphisms(g).size()) << g.to_string();
  }
}

TEST(Enumerate, MatchesUnprunedSearch) {
  auto zoo = testing_helpers::constructor_zoo(16, 9);
  std::size_t compared = 0;
  for (const auto& a : zoo)
    for (const auto& b : zoo) {
      if (a.group().order() != b.group().order() || a.rank() != b.rank()) continue;
      if (oracle::brute_algiso_cost(a) > 5e4) continue;
      std::set<std::vector<std::size_t>> fast;
      for (const auto& phi : enumerate_algisos(a, b)) {
        EXPECT_TRUE(fast.insert(phi.class_map).second) << "duplicate";
        EXPECT_TRUE(verify_algiso(a, b, phi.class_map).ok);
      }
      ASSERT_EQ(fast, oracle::brute_algisos(a, b)) << to_text(a) << to_text(b);
      ++compared;
    }
  EXPECT_GT(compared, 100u);
}

TEST(Enumerate, EarlyStop) {
  auto z = full_group_ring(AbelianGroup::make({2, 4}));
  int n = 0;
  for_each_algiso(z, z, [&](const AlgebraicIso&) { return ++n < 3; });
  EXPECT_EQ(n, 3);
  EXPECT_TRUE(find_algiso(z, z).has_value());
}

TEST(Invariants, SubgroupImagesSymmetryAndValencies) {
  auto zoo = testing_helpers::constructor_zoo(16, 13);
  for (const auto& a : zoo)
    for (const auto& b : zoo) {
      if (a.group().order() != b.group().order() || a.rank() != b.rank() || a.rank() > 12) continue;
      for (const auto& phi : enumerate_algisos(a, b)) {
        EXPECT_EQ(is_symmetric(a), is_symmetric(b));
        EXPECT_EQ(valency_profile(a), valency_profile(b));
        for (std::size_t x = 0; x < a.rank(); ++x) {
          const auto& gx = subgroup_generated(a.group(), a.cls(x));
          const auto& gy = subgroup_generated(b.group(), b.cls(phi(x)));
          ASSERT_EQ(image_of_aset(phi, gx.elements), gy.elements);
          ASSERT_EQ(image_of_aset(phi, radical(a.group(), a.cls(x)).elements),
                    radical(b.group(), b.cls(phi(x))).elements);
          ASSERT_EQ(b.inverse_index(phi(x)), phi(a.inverse_index(x)));
        }
      }
    }
}

TEST(Images, Examples) {
  auto g = AbelianGroup::make({2, 4});
  auto a = rank2(g);
  auto phi = identity_algiso(a);
  EXPECT_EQ(image_of_aset(phi, ElemSet{0}), (ElemSet{0}));
  EXPECT_EQ(image_of_aset(phi, whole_group(g).elements), whole_group(g).elements);
  EXPECT_THROW(image_of_aset(phi, ElemSet{1}), Error);
}

TEST(Sections, InducedMaps) {
  auto g = AbelianGroup::make({2, 8});
  auto z = full_group_ring(g);
  for (const auto& phi : enumerate_algisos(z, z)) {
    auto s = induced_on_section(phi, quotient(g, trivial_subgroup()));
    EXPECT_EQ(s.iso.class_map, phi.class_map);
    auto top = induced_on_section(phi, quotient(g, whole_group(g)));
    EXPECT_EQ(top.iso.class_map.size(), 1u);
    for (const auto& u : all_subgroups(g))
      for (const auto& l : all_subgroups(g)) {
        if (!std::includes(u.elements.begin(), u.elements.end(), l.elements.begin(), l.elements.end())) continue;
        auto si = induced_on_section(phi, quotient(g, u, l));
        EXPECT_TRUE(verify_algiso(si.iso.source, si.iso.target, si.iso.class_map).ok);
      }
  }
}

TEST(Text, Dump) {
  auto a = rank2(AbelianGroup::make({3}));
  EXPECT_EQ(to_text(identity_algiso(a)), "algiso 2\n0 -> 0\n1 -> 1\n");
}
