#include "srings/wl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "srings/error.hpp"

namespace srings {
namespace {

using Key = std::vector<std::uint64_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer folded into a running hash
  v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (v ^ (v >> 31));
}

// Ranks keys[i] among the distinct keys; returns the number of distinct keys
// and folds them into *hash.
std::uint32_t rank_keys(const std::vector<Key>& keys, std::vector<std::uint32_t>& out,
                        std::uint64_t* hash) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  out.assign(keys.size(), 0);
  std::uint32_t next = 0;
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) {
      h = mix(h, keys[order[i]].size());
      for (auto v : keys[order[i]]) h = mix(h, v);
    }
    out[order[i]] = next;
  }
  if (hash) *hash = h;
  return keys.empty() ? 0 : next + 1;
}

std::uint64_t pair_code(std::uint32_t a, std::uint32_t b) { return (std::uint64_t(a) << 32) | b; }

}  // namespace

RelationColoring normalize_coloring(std::uint32_t n, std::vector<std::uint32_t> color) {
  if (color.size() != std::size_t(n) * n) fail(ErrorKind::kArgument, "coloring has wrong size");
  std::vector<std::uint32_t> vals = color;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& c : color) c = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
  return RelationColoring{n, std::move(color), static_cast<std::uint32_t>(vals.size())};
}

RelationColoring wl_stabilize(const RelationColoring& initial, std::vector<std::uint64_t>* trace) {
  const std::uint32_t n = initial.n;
  RelationColoring cur = normalize_coloring(n, initial.color);
  if (trace) trace->clear();
  std::vector<Key> keys(std::size_t(n) * n);
  std::vector<std::uint32_t> next;
  while (true) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t w = 0; w < n; ++w) {
        Key& k = keys[std::size_t(u) * n + w];
        k.resize(n + 3);
        k[0] = cur.at(u, w);
        k[1] = cur.at(w, u);
        k[2] = u == w;
        for (std::uint32_t v = 0; v < n; ++v) k[3 + v] = pair_code(cur.at(u, v), cur.at(v, w));
        std::sort(k.begin() + 3, k.end());
      }
    std::uint64_t h = 0;
    const std::uint32_t count = rank_keys(keys, next, &h);
    if (trace) trace->push_back(h);
    const bool stable = count == cur.num_colors;
    cur.color = next;
    cur.num_colors = count;
    if (stable) break;
  }
  return cur;
}

bool is_coherent(const RelationColoring& c) {
  const std::uint32_t n = c.n;
  std::map<std::uint32_t, std::vector<std::uint32_t>> first_counts;
  const std::uint32_t k = c.num_colors;
  std::vector<std::uint32_t> cnt(std::size_t(k) * k);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t w = 0; w < n; ++w) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (std::uint32_t v = 0; v < n; ++v) ++cnt[std::size_t(c.at(u, v)) * k + c.at(v, w)];
      auto [it, fresh] = first_counts.emplace(c.at(u, w), cnt);
      if (!fresh && it->second != cnt) return false;
    }
  return true;
}

RelationColoring scheme_coloring(const SRing& a) {
  const std::uint32_t n = a.group().order();
  std::vector<std::uint32_t> color(std::size_t(n) * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) color[std::size_t(u) * n + v] = static_cast<std::uint32_t>(relation_color(a, u, v));
  return normalize_coloring(n, std::move(color));
}

CayleyScheme cayley_scheme(const AbelianGroup& g, std::span<const ElemSet> seeds,
                           std::uint32_t full_wl_max_order) {
  const std::uint32_t n = g.order();
  // Initial color of z: (z is not the identity, membership in each seed), so
  // the diagonal gets color 0.
  std::vector<std::vector<std::uint32_t>> sig(n, std::vector<std::uint32_t>(seeds.size() + 1, 0));
  for (Elem z = 1; z < n; ++z) sig[z][0] = 1;
  for (std::size_t s = 0; s < seeds.size(); ++s)
    for (Elem x : seeds[s]) {
      if (x >= n) fail(ErrorKind::kArgument, "seed element outside " + g.to_string());
      sig[x][s + 1] = 1;
    }
  std::vector<std::vector<std::uint32_t>> vals = sig;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<std::uint32_t> c(n);
  for (Elem z = 0; z < n; ++z)
    c[z] = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), sig[z]) - vals.begin());

  CayleyScheme out{SRing::validate(AbelianGroup(), {{0}}), {}, {}};
  std::vector<std::uint32_t> final_color(n);
  if (n <= full_wl_max_order) {
    std::vector<std::uint32_t> color(std::size_t(n) * n);
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v) color[std::size_t(u) * n + v] = c[g.sub(v, u)];
    RelationColoring st = wl_stabilize(RelationColoring{n, std::move(color), 0}, &out.trace);
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (st.at(u, v) != st.at(0, g.sub(v, u)))
          fail(ErrorKind::kInternal, "WL stabilization broke translation invariance");
    for (Elem z = 0; z < n; ++z) final_color[z] = st.at(0, z);
  } else {
    std::uint32_t num = static_cast<std::uint32_t>(vals.size());
    std::vector<Key> keys(n);
    std::vector<std::uint32_t> next;
    while (true) {
      for (Elem z = 0; z < n; ++z) {
        Key& k = keys[z];
        k.resize(n + 3);
        k[0] = c[z];
        k[1] = c[g.neg(z)];
        k[2] = z == 0;
        for (Elem v = 0; v < n; ++v) k[3 + v] = pair_code(c[v], c[g.sub(z, v)]);
        std::sort(k.begin() + 3, k.end());
      }
      std::uint64_t h = 0;
      const std::uint32_t count = rank_keys(keys, next, &h);
      out.trace.push_back(h);
      const bool stable = count == num;
      c = next;
      num = count;
      if (stable) break;
    }
    final_color = c;
  }

  std::uint32_t num_colors = *std::max_element(final_color.begin(), final_color.end()) + 1;
  std::vector<ElemSet> classes(num_colors);
  for (Elem z = 0; z < n; ++z) classes[final_color[z]].push_back(z);
  out.ring = SRing::validate(g, classes);
  out.color_of_class.resize(out.ring.rank());
  for (std::size_t i = 0; i < out.ring.rank(); ++i) out.color_of_class[i] = final_color[out.ring.cls(i)[0]];
  return out;
}

SRing scheme_from_cayley_graph(const AbelianGroup& g, std::span<const Elem> x) {
  ElemSet seed(x.begin(), x.end());
  std::sort(seed.begin(), seed.end());
  return cayley_scheme(g, std::span<const ElemSet>(&seed, 1)).ring;
}

}  // namespace srings
