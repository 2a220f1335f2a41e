#include "srings/construct.hpp"

#include <algorithm>
#include <set>

#include "srings/error.hpp"
#include "srings/wl.hpp"

namespace srings {

SRing full_group_ring(const AbelianGroup& g) {
  std::vector<ElemSet> classes(g.order());
  for (Elem x = 0; x < g.order(); ++x) classes[x] = {x};
  return SRing::validate(g, std::move(classes));
}

SRing rank2(const AbelianGroup& g) {
  if (g.order() < 2) fail(ErrorKind::kArgument, "rank 2 needs a nontrivial group");
  ElemSet rest;
  for (Elem x = 1; x < g.order(); ++x) rest.push_back(x);
  return SRing::validate(g, {{0}, rest});
}

std::vector<std::vector<Elem>> generated_automorphism_group(const AbelianGroup& g,
                                                            std::span<const GroupHom> gens) {
  std::vector<std::vector<Elem>> tables;
  for (const auto& h : gens) {
    if (!(h.source == g) || !(h.target == g) || !h.is_bijective())
      fail(ErrorKind::kArgument, "generator is not an automorphism of " + g.to_string());
    tables.push_back(h.table());
  }
  std::vector<Elem> id(g.order());
  for (Elem x = 0; x < g.order(); ++x) id[x] = x;
  std::set<std::vector<Elem>> seen{id};
  std::vector<std::vector<Elem>> out{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& t : tables) {
      std::vector<Elem> c(g.order());
      for (Elem x = 0; x < g.order(); ++x) c[x] = t[out[i][x]];
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  return out;
}

SRing cyclotomic(const AbelianGroup& g, std::span<const GroupHom> gens) {
  auto group = generated_automorphism_group(g, gens);
  std::vector<char> done(g.order(), 0);
  std::vector<ElemSet> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ElemSet orbit;
    for (const auto& t : group) orbit.push_back(t[x]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (Elem y : orbit) done[y] = 1;
    classes.push_back(std::move(orbit));
  }
  return SRing::validate(g, std::move(classes));
}

AbelianGroup direct_product(const AbelianGroup& g1, const AbelianGroup& g2) {
  std::vector<std::uint32_t> f(g1.factors().begin(), g1.factors().end());
  f.insert(f.end(), g2.factors().begin(), g2.factors().end());
  return AbelianGroup::make(std::move(f));
}

SRing tensor(const SRing& a1, const SRing& a2) {
  const auto& g2 = a2.group();
  AbelianGroup g = direct_product(a1.group(), g2);
  std::vector<ElemSet> classes;
  for (const auto& x1 : a1.classes())
    for (const auto& x2 : a2.classes()) {
      ElemSet c;
      for (Elem u : x1)
        for (Elem v : x2) c.push_back(pair_elem(g2, u, v));
      classes.push_back(std::move(c));
    }
  return SRing::validate(g, std::move(classes));
}

SRing wreath(const SRing& a1, const SRing& a2) {
  const auto& g1 = a1.group();
  const auto& g2 = a2.group();
  AbelianGroup g = direct_product(g1, g2);
  std::vector<ElemSet> classes;
  for (const auto& x1 : a1.classes()) {
    ElemSet c;
    for (Elem u : x1) c.push_back(pair_elem(g2, u, 0));
    classes.push_back(std::move(c));
  }
  for (std::size_t j = 1; j < a2.rank(); ++j) {
    ElemSet c;
    for (Elem u = 0; u < g1.order(); ++u)
      for (Elem v : a2.cls(j)) c.push_back(pair_elem(g2, u, v));
    classes.push_back(std::move(c));
  }
  return SRing::validate(g, std::move(classes));
}

namespace {

bool subset(const ElemSet& a, const ElemSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

bool is_gwr(const SRing& a, const Subgroup& u, const Subgroup& l) {
  if (!subset(l.elements, u.elements) || !is_a_subgroup(a, u) || !is_a_subgroup(a, l)) return false;
  for (const auto& c : a.classes()) {
    if (u.contains(c[0])) continue;
    if (!subset(l.elements, radical(a.group(), c).elements)) return false;
  }
  return true;
}

std::vector<GwrWitness> gwr_sections(const SRing& a) {
  const auto& g = a.group();
  auto subs = a_subgroups(a);
  std::vector<Subgroup> rads;
  for (const auto& c : a.classes()) rads.push_back(radical(g, c));
  std::vector<GwrWitness> out;
  for (const auto& u : subs)
    for (const auto& l : subs) {
      if (!subset(l.elements, u.elements)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < a.rank() && ok; ++i)
        if (!u.contains(a.cls(i)[0]) && !subset(l.elements, rads[i].elements)) ok = false;
      if (!ok) continue;
      GwrWitness w;
      w.section = quotient(g, u, l);
      w.proper = l.order() > 1 && u.order() < g.order();
      out.push_back(std::move(w));
    }
  return out;
}

SRing closure(const AbelianGroup& g, std::span<const ElemSet> seeds) {
  return cayley_scheme(g, seeds).ring;
}

}  // namespace srings
