#pragma once

// Brute-force reference implementations used only by the tests. Each one
// recomputes a library result from the definitions, with no shared code path
// beyond group arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <map>
#include <set>

#include "srings/abelian.hpp"
#include "srings/sring.hpp"
#include "srings/wl.hpp"

namespace oracle {

using srings::AbelianGroup;
using srings::Elem;
using srings::ElemSet;

// All subsets that contain 0 and are closed under addition.
inline std::vector<ElemSet> subgroups_by_subset_closure(const AbelianGroup& g) {
  const std::uint32_t n = g.order();
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (Elem x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      for (Elem y = 0; y < n; ++y)
        if ((mask >> y & 1) && !(mask >> g.add(x, y) & 1)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    ElemSet s;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

// Number of bijections G -> H that are homomorphisms.
inline std::size_t count_isomorphisms_by_bijections(const AbelianGroup& g, const AbelianGroup& h) {
  if (g.order() != h.order()) return 0;
  std::vector<Elem> perm(h.order());
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      for (Elem y = 0; y < g.order(); ++y)
        if (perm[g.add(x, y)] != h.add(perm[x], perm[y])) {
          ok = false;
          break;
        }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}


// c^Z_{X,Y} read off the Cayley scheme: for one pair (u, w) in R(Z), count the
// v with (u, v) in R(X) and (v, w) in R(Y).
inline std::uint32_t intersection_number(const srings::SRing& a, std::size_t x, std::size_t y,
                                         std::size_t z) {
  const auto& g = a.group();
  const Elem u = 3 % g.order();
  const Elem w = g.add(a.cls(z).back(), u);
  std::uint32_t count = 0;
  for (Elem v = 0; v < g.order(); ++v)
    if (srings::relation_color(a, u, v) == x && srings::relation_color(a, v, w) == y) ++count;
  return count;
}

// Textbook WL: repeat "color := (color, transposed color, multiset of color
// pairs over midpoints)" until the number of colors stops growing. Returns the
// color of every pair with arbitrary numbering.
inline std::vector<std::uint32_t> naive_wl(std::uint32_t n, std::vector<std::uint32_t> color) {
  std::size_t classes = std::set<std::uint32_t>(color.begin(), color.end()).size();
  while (true) {
    using Sig = std::pair<std::vector<std::uint32_t>, std::map<std::pair<std::uint32_t, std::uint32_t>, int>>;
    std::map<Sig, std::uint32_t> ids;
    std::vector<std::uint32_t> next(color.size());
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t w = 0; w < n; ++w) {
        Sig s;
        s.first = {color[u * n + w], color[w * n + u], u == w ? 1u : 0u};
        for (std::uint32_t v = 0; v < n; ++v) ++s.second[{color[u * n + v], color[v * n + w]}];
        auto it = ids.emplace(std::move(s), static_cast<std::uint32_t>(ids.size())).first;
        next[u * n + w] = it->second;
      }
    color = std::move(next);
    if (ids.size() == classes) return color;
    classes = ids.size();
  }
}

// Same partition of the index set, ignoring the numbering.
inline bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::uint32_t, std::uint32_t> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fx] = ab.emplace(a[i], b[i]);
    auto [y, fy] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

// Schur-Wielandt style closure: refine a partition of G by inverses and by
// the product-count functions of all class pairs until nothing splits.
inline std::vector<ElemSet> product_refinement_closure(const AbelianGroup& g,
                                                       const std::vector<ElemSet>& seeds) {
  const std::uint32_t n = g.order();
  std::vector<std::vector<std::uint32_t>> sig(n);
  for (Elem z = 0; z < n; ++z) {
    sig[z].push_back(z == 0);
    for (const auto& s : seeds) sig[z].push_back(std::binary_search(s.begin(), s.end(), z));
  }
  auto partition_from = [&](const std::vector<std::vector<std::uint32_t>>& sg) {
    std::map<std::vector<std::uint32_t>, ElemSet> m;
    for (Elem z = 0; z < n; ++z) m[sg[z]].push_back(z);
    std::vector<ElemSet> out;
    for (auto& [k, v] : m) out.push_back(v);
    return out;
  };
  auto part = partition_from(sig);
  while (true) {
    std::vector<std::uint32_t> cls(n);
    for (std::uint32_t i = 0; i < part.size(); ++i)
      for (Elem z : part[i]) cls[z] = i;
    std::vector<std::vector<std::uint32_t>> next(n);
    for (Elem z = 0; z < n; ++z) next[z] = {cls[z], cls[g.neg(z)]};
    for (const auto& x : part)
      for (const auto& y : part) {
        std::vector<std::uint32_t> cnt(n, 0);
        for (Elem u : x)
          for (Elem v : y) ++cnt[g.add(u, v)];
        for (Elem z = 0; z < n; ++z) next[z].push_back(cnt[z]);
      }
    auto refined = partition_from(next);
    if (refined.size() == part.size()) return part;
    part = std::move(refined);
  }
}


// Every bijection of class indices that fixes sizes (and {e}) and preserves
// all structure constants, found without any pruning beyond class size.
inline std::set<std::vector<std::size_t>> brute_algisos(const srings::SRing& a, const srings::SRing& b) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t r = a.rank();
  if (b.rank() != r) return out;
  std::vector<std::size_t> m(r);
  std::vector<char> used(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == r) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k)
            if (a.constant(i, j, k) != b.constant(m[i], m[j], m[k])) return;
      out.insert(m);
      return;
    }
    for (std::size_t y = 0; y < r; ++y) {
      if (used[y] || a.cls(x).size() != b.cls(y).size()) continue;
      used[y] = 1;
      m[x] = y;
      rec(x + 1);
      used[y] = 0;
    }
  };
  rec(0);
  return out;
}

// Number of size-compatible bijections brute_algisos would try.
inline double brute_algiso_cost(const srings::SRing& a) {
  std::map<std::size_t, int> by_size;
  for (const auto& c : a.classes()) ++by_size[c.size()];
  double cost = 1;
  for (auto [s, k] : by_size)
    for (int i = 2; i <= k; ++i) cost *= i;
  return cost;
}

// All bijections f: G -> G' (as image tables) with
// class_b(f(v) - f(u)) = cmap[class_a(v - u)] for every pair, by running
// through every permutation. Only for |G| <= 8.
inline std::vector<std::vector<Elem>> colored_isos_by_permutations(const srings::SRing& a,
                                                                   const srings::SRing& b,
                                                                   const std::vector<std::size_t>& cmap) {
  const auto& g = a.group();
  const auto& g2 = b.group();
  std::vector<std::vector<Elem>> out;
  if (g.order() != g2.order()) return out;
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    bool ok = true;
    for (Elem u = 0; u < g.order() && ok; ++u)
      for (Elem v = 0; v < g.order(); ++v)
        if (b.class_of(g2.sub(perm[v], perm[u])) != cmap[a.class_of(g.sub(v, u))]) {
          ok = false;
          break;
        }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Directed graph isomorphism by plain backtracking: vertices of the first
// graph are mapped in order 0, 1, 2, ... and each new image is checked
// against every earlier vertex in both directions. Vertex 0 is sent to every
// vertex of the second graph unless fix_zero is set (fine when the second
// graph is vertex transitive).
inline bool graphs_isomorphic(const std::vector<std::vector<char>>& adj1,
                              const std::vector<std::vector<char>>& adj2, bool fix_zero) {
  const std::size_t n = adj1.size();
  if (adj2.size() != n) return false;
  auto degs = [n](const std::vector<std::vector<char>>& adj) {
    std::vector<std::pair<int, int>> d(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        d[u].first += adj[u][v];
        d[v].second += adj[u][v];
      }
    return d;
  };
  auto d1 = degs(adj1), d2 = degs(adj2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  std::vector<std::size_t> img(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || d1[u] != d2[y]) continue;
      if (u == 0 && fix_zero && y != 0) continue;
      if (adj1[u][u] != adj2[y][y]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < u && ok; ++w)
        ok = adj1[w][u] == adj2[img[w]][y] && adj1[u][w] == adj2[y][img[w]];
      if (!ok) continue;
      img[u] = y;
      used[y] = 1;
      if (rec(u + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return rec(0);
}

inline std::vector<std::vector<char>> cayley_adjacency(const AbelianGroup& g, const ElemSet& x) {
  std::vector<char> in(g.order(), 0);
  for (Elem e : x) in[e] = 1;
  std::vector<std::vector<char>> adj(g.order(), std::vector<char>(g.order(), 0));
  for (Elem u = 0; u < g.order(); ++u)
    for (Elem v = 0; v < g.order(); ++v) adj[u][v] = in[g.sub(v, u)];
  return adj;
}

// Every S-ring over g as a sorted class list, by running through all set
// partitions of G \ {e} (restricted growth strings) and testing inverse
// closure and constant products from the definitions. Bell(|G|-1) cases.
inline std::vector<std::vector<ElemSet>> srings_by_partitions(const AbelianGroup& g) {
  const std::uint32_t n = g.order();
  std::vector<std::vector<ElemSet>> out;
  std::vector<std::uint32_t> block(n, 0);
  auto check = [&](std::uint32_t nblocks) {
    std::vector<ElemSet> cls(nblocks + 1);
    cls[0].push_back(0);
    for (Elem x = 1; x < n; ++x) cls[block[x] + 1].push_back(x);
    std::vector<std::uint32_t> id(n, 0);
    for (Elem x = 1; x < n; ++x) id[x] = block[x] + 1;
    for (const auto& c : cls) {
      const std::uint32_t b = id[g.neg(c[0])];
      for (Elem x : c)
        if (id[g.neg(x)] != b) return;
    }
    std::vector<std::uint32_t> cnt(n);
    for (const auto& c1 : cls)
      for (const auto& c2 : cls) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (Elem x : c1)
          for (Elem y : c2) ++cnt[g.add(x, y)];
        for (const auto& c : cls)
          for (Elem z : c)
            if (cnt[z] != cnt[c[0]]) return;
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(cls);
  };
  if (n == 1) {
    out.push_back({{0}});
    return out;
  }
  std::function<void(Elem, std::uint32_t)> rec = [&](Elem x, std::uint32_t used) {
    if (x == n) {
      check(used);
      return;
    }
    for (std::uint32_t b = 0; b <= used; ++b) {
      block[x] = b;
      rec(x + 1, std::max(used, b + 1));
    }
  };
  block[1] = 0;
  rec(2, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
