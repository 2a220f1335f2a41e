#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srings/construct.hpp"
#include "srings/error.hpp"
#include "srings/sring.hpp"

using namespace srings;
using testing_helpers::el;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

SRing from_lists(const AbelianGroup& g, std::vector<ElemSet> classes) {
  return SRing::validate(g, std::move(classes));
}

}  // namespace

TEST(Validate, Examples) {
  auto c3 = AbelianGroup::make({3});
  EXPECT_EQ(from_lists(c3, {{0}, {1, 2}}).rank(), 2u);
  auto c4 = AbelianGroup::make({4});
  EXPECT_EQ(kind_of([&] { from_lists(c4, {{0}, {1}, {2, 3}}); }), ErrorKind::kNotInverseClosed);
  auto v4 = AbelianGroup::make({2, 2});
  auto z = from_lists(v4, {{0}, {1}, {2}, {3}});
  EXPECT_EQ(z.rank(), 4u);
  EXPECT_EQ(z, full_group_ring(v4));
}

TEST(Validate, Errors) {
  auto c4 = AbelianGroup::make({4});
  EXPECT_EQ(kind_of([&] { from_lists(c4, {{0}, {1, 3}}); }), ErrorKind::kNotAPartition);
  EXPECT_EQ(kind_of([&] { from_lists(c4, {{0}, {1, 3}, {2, 3}}); }), ErrorKind::kNotAPartition);
  EXPECT_EQ(kind_of([&] { from_lists(c4, {{0, 2}, {1, 3}}); }), ErrorKind::kIdentityNotSingleton);
  auto c6 = AbelianGroup::make({6});
  EXPECT_EQ(kind_of([&] { from_lists(c6, {{0}, {1, 5}, {2, 3, 4}}); }), ErrorKind::kNotModuleClosed);
}

TEST(Validate, CanonicalOrder) {
  auto c5 = AbelianGroup::make({5});
  auto a = from_lists(c5, {{3, 2}, {4, 1}, {0}});
  EXPECT_EQ(a.cls(0), (ElemSet{0}));
  EXPECT_EQ(a.cls(1), (ElemSet{1, 4}));
  EXPECT_EQ(a.cls(2), (ElemSet{2, 3}));
  EXPECT_EQ(a.inverse_index(1), 1u);
}

TEST(Constants, Examples) {
  auto c4 = AbelianGroup::make({4});
  auto r2 = rank2(c4);
  // X = G \ {e}: of the 9 sums x + y, those equal to 1 are 2+3 and 3+2
  std::uint32_t direct = 0;
  for (Elem x : r2.cls(1))
    for (Elem y : r2.cls(1)) direct += c4.add(x, y) == 1;
  EXPECT_EQ(direct, 2u);
  EXPECT_EQ(structure_constant(r2, 1, 1, 1), 2u);
  auto zg = full_group_ring(AbelianGroup::make({2, 4}));
  const auto& g = zg.group();
  for (std::size_t x = 0; x < zg.rank(); ++x)
    for (std::size_t y = 0; y < zg.rank(); ++y)
      for (std::size_t z = 0; z < zg.rank(); ++z)
        EXPECT_EQ(zg.constant(x, y, z), g.add(zg.cls(x)[0], zg.cls(y)[0]) == zg.cls(z)[0] ? 1u : 0u);
  EXPECT_THROW(structure_constant(zg, 0, 0, 99), Error);
}

TEST(Constants, TensorIdentities) {
  for (const auto& a : testing_helpers::constructor_zoo(16)) {
    const std::size_t r = a.rank();
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) {
        std::uint64_t total = 0;
        for (std::size_t z = 0; z < r; ++z) {
          total += std::uint64_t(a.constant(x, y, z)) * a.cls(z).size();
          ASSERT_EQ(a.constant(x, y, z), a.constant(y, x, z));
        }
        ASSERT_EQ(total, a.cls(x).size() * a.cls(y).size());
        ASSERT_EQ(a.constant(x, y, 0), y == a.inverse_index(x) ? a.cls(x).size() : 0u);
      }
  }
}

TEST(Constants, MatchSchemeIntersectionNumbers) {
  for (const auto& a : testing_helpers::constructor_zoo(12)) {
    const std::size_t r = a.rank();
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        for (std::size_t z = 0; z < r; ++z)
          ASSERT_EQ(a.constant(x, y, z), oracle::intersection_number(a, x, y, z));
  }
}

TEST(ASets, Basics) {
  auto r2 = rank2(AbelianGroup::make({4}));
  EXPECT_TRUE(is_a_set(r2, ElemSet{}));
  EXPECT_TRUE(is_a_set(r2, r2.cls(1)));
  EXPECT_FALSE(is_a_set(r2, ElemSet{1}));
  auto d = decompose_a_set(r2, ElemSet{0, 1, 2, 3});
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (std::vector<std::size_t>{0, 1}));
}

TEST(ASubgroups, ZGAndRank2) {
  auto g = AbelianGroup::make({2, 4});
  EXPECT_EQ(a_subgroups(full_group_ring(g)).size(), all_subgroups(g).size());
  auto subs = a_subgroups(rank2(g));
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_EQ(subs[0].order(), 1u);
  EXPECT_EQ(subs[1].order(), 8u);
}

TEST(ASubgroups, MatchFilterOverAllSubgroups) {
  for (const auto& a : testing_helpers::constructor_zoo(16)) {
    std::set<ElemSet> fast, slow;
    for (const auto& h : a_subgroups(a)) fast.insert(h.elements);
    for (const auto& h : all_subgroups(a.group()))
      if (is_a_set(a, h.elements)) slow.insert(h.elements);
    ASSERT_EQ(fast, slow) << to_text(a);
  }
}

TEST(Radical, Examples) {
  auto g = AbelianGroup::make({3, 9});
  EXPECT_EQ(radical(g, whole_group(g).elements).order(), 27u);
  EXPECT_EQ(radical(g, ElemSet{5}).order(), 1u);
  Elem b = el(g, {1, 0});
  ElemSet bA1 = testing_helpers::set_of({b, g.add(b, el(g, {0, 3})), g.add(b, el(g, {0, 6}))});
  auto r = radical(g, bA1);
  EXPECT_EQ(r.elements, testing_helpers::set_of({0, el(g, {0, 3}), el(g, {0, 6})}));
  EXPECT_THROW(radical(g, ElemSet{}), Error);
}

TEST(Radical, SringRadical) {
  auto d = AbelianGroup::make({2, 4});
  EXPECT_EQ(sring_radical(full_group_ring(d)).order(), 1u);
  auto c8 = AbelianGroup::make({8});
  auto wr = from_lists(c8, {{0}, {4}, {2, 6}, {1, 3, 5, 7}});
  EXPECT_GT(sring_radical(wr).order(), 1u);
  EXPECT_EQ(sring_radical(rank2(c8)).order(), 1u);
  EXPECT_EQ(kind_of([&] { sring_radical(full_group_ring(AbelianGroup::make({4, 4}))); }), ErrorKind::kShape);
  EXPECT_EQ(kind_of([&] { sring_radical(full_group_ring(AbelianGroup::make({4, 2}))); }), ErrorKind::kShape);
}

TEST(Highest, Examples) {
  auto d = AbelianGroup::make({2, 4});
  auto zd = full_group_ring(d);
  auto h = highest_basic_sets(zd);
  EXPECT_EQ(h.size(), 4u);
  for (auto i : h) EXPECT_EQ(d.element_order(zd.cls(i)[0]), 4u);
  auto r = highest_basic_sets(rank2(AbelianGroup::make({9})));
  EXPECT_EQ(r, (std::vector<std::size_t>{1}));
}

TEST(Quotient, Examples) {
  auto g = AbelianGroup::make({2, 8});
  for (const auto& a : {full_group_ring(g), rank2(g)}) {
    EXPECT_EQ(quotient_sring(a, quotient(g, trivial_subgroup())), a);
    auto top = quotient_sring(a, quotient(g, whole_group(g)));
    EXPECT_EQ(top.rank(), 1u);
    EXPECT_EQ(top.group().order(), 1u);
  }
  auto zg = full_group_ring(g);
  for (const auto& u : all_subgroups(g))
    for (const auto& l : all_subgroups(g)) {
      if (!std::includes(u.elements.begin(), u.elements.end(), l.elements.begin(), l.elements.end())) continue;
      auto q = quotient_sring(zg, quotient(g, u, l));
      EXPECT_EQ(q.rank(), u.order() / l.order());
    }
  Elem a1[] = {el(g, {0, 4})};
  EXPECT_EQ(kind_of([&] { quotient_sring(rank2(g), quotient(g, subgroup_generated(g, a1))); }),
            ErrorKind::kNotASection);
}

TEST(Quotient, NestedSections) {
  for (const auto& a : testing_helpers::constructor_zoo(16, 11)) {
    const auto& g = a.group();
    auto subs = a_subgroups(a);
    for (const auto& u : subs)
      for (const auto& l : subs) {
        if (!std::includes(u.elements.begin(), u.elements.end(), l.elements.begin(), l.elements.end())) continue;
        auto s = quotient(g, u, l);
        auto as = quotient_sring(a, s);
        for (const auto& u2 : a_subgroups(as)) {
          // T = U2/{e} inside U/L corresponds to the section pi^-1(U2)/L of G.
          ElemSet pre;
          for (Elem x : u.elements)
            if (u2.contains(s.project(x))) pre.push_back(x);
          auto s1 = quotient(g, subgroup_generated(g, pre), l);
          auto s2 = quotient(as.group(), u2, trivial_subgroup());
          auto composite = quotient_sring(a, s1);
          auto nested = quotient_sring(as, s2);
          ASSERT_EQ(composite.rank(), nested.rank());
          // The identifications of both quotients with pi^-1(U2)/L agree on
          // points, so classes must correspond under that point map.
          std::vector<Elem> to_nested(composite.group().order(), kNoElem);
          for (Elem x : pre) to_nested[s1.project(x)] = s2.project(s.project(x));
          for (const auto& c : composite.classes()) {
            ElemSet img;
            for (Elem x : c) img.push_back(to_nested[x]);
            std::sort(img.begin(), img.end());
            ASSERT_EQ(nested.cls(nested.class_of(img[0])), img);
          }
        }
      }
  }
}

TEST(Rational, Conjugation) {
  for (const auto& a : testing_helpers::constructor_zoo(16, 3)) {
    auto id = rational_conjugate(a, 1);
    for (std::size_t i = 0; i < a.rank(); ++i) EXPECT_EQ(id[i], i);
    auto inv = rational_conjugate(a, -1);
    for (std::size_t i = 0; i < a.rank(); ++i) EXPECT_EQ(inv[i], a.inverse_index(i));
  }
  auto g = AbelianGroup::make({2, 8});
  EXPECT_EQ(kind_of([&] { rational_conjugate(full_group_ring(g), 2); }), ErrorKind::kArgument);
}

TEST(PowerSet, Examples) {
  auto c4 = AbelianGroup::make({4});
  auto z = full_group_ring(c4);
  EXPECT_EQ(power_set_p(z, z.class_of(1), 2), (ElemSet{2}));
  EXPECT_EQ(power_set_p(z, 0, 2), (ElemSet{0}));
  EXPECT_EQ(kind_of([&] { power_set_p(z, 1, 3); }), ErrorKind::kArgument);
  EXPECT_EQ(kind_of([&] { power_set_p(z, 1, 4); }), ErrorKind::kArgument);
}

TEST(QuasiThin, Examples) {
  auto v4 = AbelianGroup::make({2, 2});
  auto obs = klein_obstruction(full_group_ring(v4));
  ASSERT_TRUE(obs);
  EXPECT_EQ(obs->order(), 4u);
  EXPECT_FALSE(is_quasi_thin(rank2(AbelianGroup::make({9}))));
  auto c8 = AbelianGroup::make({8});
  GroupHom sigma = make_hom(c8, c8, {3});  // x -> a1 - x on the generator
  auto a = cyclotomic(c8, std::span<const GroupHom>(&sigma, 1));
  EXPECT_TRUE(is_quasi_thin(a));
  EXPECT_FALSE(klein_obstruction(a));
  EXPECT_EQ(a.rank(), 5u);
}

TEST(Symmetry, Profiles) {
  auto z = full_group_ring(AbelianGroup::make({2, 2, 2}));
  EXPECT_TRUE(is_symmetric(z));
  EXPECT_EQ(valency_profile(z), (std::vector<std::uint32_t>{1}));
  EXPECT_FALSE(is_symmetric(full_group_ring(AbelianGroup::make({3}))));
}

TEST(Text, RoundTrip) {
  for (const auto& a : testing_helpers::constructor_zoo(12, 5)) {
    auto text = to_text(a, true);
    EXPECT_EQ(parse_sring(text), a);
    EXPECT_EQ(text.rfind("sring " + a.group().to_string() + " rank=" + std::to_string(a.rank()), 0), 0u);
  }
  EXPECT_THROW(parse_sring("sring C3 rank=3\n(0)\n(1) (2)\n"), Error);
  EXPECT_THROW(parse_sring("nonsense"), Error);
}
