#include "srings/comiso.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "srings/error.hpp"
#include "srings/wl.hpp"

namespace srings {

bool PointMap::is_bijective() const {
  if (image.size() != source.order() || source.order() != target.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (Elem y : image) {
    if (y >= target.order() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

PointMap PointMap::inverse() const {
  if (!is_bijective()) fail(ErrorKind::kArgument, "point map is not a bijection");
  std::vector<Elem> inv(image.size());
  for (Elem x = 0; x < image.size(); ++x) inv[image[x]] = x;
  return PointMap{target, source, std::move(inv)};
}

PointMap PointMap::then(const PointMap& next) const {
  if (!(target == next.source)) fail(ErrorKind::kArgument, "cannot compose point maps");
  std::vector<Elem> out(image.size());
  for (Elem x = 0; x < image.size(); ++x) out[x] = next.image[image[x]];
  return PointMap{source, next.target, std::move(out)};
}

PointMap identity_map(const AbelianGroup& g) {
  std::vector<Elem> img(g.order());
  std::iota(img.begin(), img.end(), Elem{0});
  return PointMap{g, g, std::move(img)};
}

PointMap translation(const AbelianGroup& g, Elem t) {
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.add(x, t);
  return PointMap{g, g, std::move(img)};
}

PointMap from_hom(const GroupHom& h) { return PointMap{h.source, h.target, h.table()}; }

namespace {

[[noreturn]] void split_relation(const AbelianGroup& g, Elem u, Elem v, const std::string& why) {
  fail(ErrorKind::kNotAnIsomorphism,
       "pair (" + g.format(u) + ", " + g.format(v) + ") " + why);
}

}  // namespace

AlgebraicIso induced_algiso(const PointMap& f, const SRing& a, const SRing& b) {
  const AbelianGroup& g = a.group();
  const AbelianGroup& g2 = b.group();
  if (!(f.source == g) || !(f.target == g2)) fail(ErrorKind::kArgument, "point map groups do not match");
  if (!f.is_bijective()) fail(ErrorKind::kNotAnIsomorphism, "point map is not a bijection");
  if (a.rank() != b.rank()) fail(ErrorKind::kNotAnIsomorphism, "ranks differ");
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> m(a.rank(), none);
  const Elem n = g.order();
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      const std::size_t x = a.class_of(g.sub(v, u));
      const std::size_t y = b.class_of(g2.sub(f(v), f(u)));
      if (m[x] == none) m[x] = y;
      else if (m[x] != y) split_relation(g, u, v, "leaves the image of its basic relation");
    }
  std::vector<char> hit(b.rank(), 0);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (hit[m[x]]) fail(ErrorKind::kNotAnIsomorphism, "two basic relations share an image");
    hit[m[x]] = 1;
  }
  auto check = verify_algiso(a, b, m);
  if (!check.ok) fail(ErrorKind::kInternal, "relation-preserving bijection broke " + check.reason);
  return AlgebraicIso{a, b, std::move(m)};
}

bool induces(const PointMap& f, const SRing& a, const SRing& b, std::span<const std::size_t> class_map) {
  const AbelianGroup& g = a.group();
  const AbelianGroup& g2 = b.group();
  if (!f.is_bijective() || f.source.order() != g.order() || f.target.order() != g2.order()) return false;
  for (Elem u = 0; u < g.order(); ++u)
    for (Elem v = 0; v < g.order(); ++v)
      if (b.class_of(g2.sub(f(v), f(u))) != class_map[a.class_of(g.sub(v, u))]) return false;
  return true;
}

std::string to_string(IsoMethod m) {
  switch (m) {
    case IsoMethod::kBrute: return "brute";
    case IsoMethod::kCayley: return "cayley";
    case IsoMethod::kGwrAssembly: return "gwr-assembly";
    case IsoMethod::kPipeline: return "pipeline";
  }
  return "unknown";
}

IsoCertificate IsoCertificate::make(PointMap f, const AlgebraicIso& phi, IsoMethod method) {
  AlgebraicIso got = induced_algiso(f, phi.source, phi.target);
  if (got.class_map != phi.class_map)
    fail(ErrorKind::kInternal, "certificate (" + to_string(method) + ") induces a different algebraic isomorphism");
  return IsoCertificate{std::move(f), phi, method};
}

namespace {

using Mask = std::uint64_t;
constexpr std::uint32_t kEngineMaxOrder = 64;

Mask bit(Elem x) { return Mask{1} << x; }

// Backtracking over point bijections f: G -> G' with class_b(f(v) - f(u)) =
// cmap[class_a(v - u)] for all u, v, restricted to the given initial domains.
class PointSearch {
 public:
  PointSearch(const SRing& a, const SRing& b, std::span<const std::size_t> cmap, std::vector<Mask> domains)
      : a_(a), b_(b), n_(a.group().order()), cmap_(cmap.begin(), cmap.end()), dom0_(std::move(domains)) {
    if (n_ > kEngineMaxOrder) fail(ErrorKind::kSize, "point search is limited to 64 points");
    const AbelianGroup& g2 = b.group();
    const std::size_t r = b.rank();
    fwd_.assign(std::size_t(n_) * r, 0);
    bwd_.assign(std::size_t(n_) * r, 0);
    for (Elem w = 0; w < n_; ++w)
      for (Elem y = 0; y < n_; ++y) {
        fwd_[w * r + b.class_of(g2.sub(y, w))] |= bit(y);
        bwd_[w * r + b.class_of(g2.sub(w, y))] |= bit(y);
      }
  }

  // visit(image) returns false to stop. Returns false if stopped.
  bool run(const std::function<bool(const std::vector<Elem>&)>& visit) {
    visit_ = &visit;
    image_.assign(n_, kNoElem);
    std::vector<Mask> dom = dom0_;
    return rec(dom, 0);
  }

 private:
  bool rec(std::vector<Mask>& dom, std::uint32_t depth) {
    if (depth == n_) return (*visit_)(image_);
    Elem x = kNoElem;
    int best = 65;
    for (Elem u = 0; u < n_; ++u) {
      if (image_[u] != kNoElem) continue;
      const int c = std::popcount(dom[u]);
      if (c < best) {
        best = c;
        x = u;
      }
    }
    if (best == 0) return true;
    const AbelianGroup& g = a_.group();
    const std::size_t r = b_.rank();
    Mask cand = dom[x];
    std::vector<Mask> next(n_);
    while (cand) {
      const Elem y = static_cast<Elem>(std::countr_zero(cand));
      cand &= cand - 1;
      bool dead = false;
      for (Elem u = 0; u < n_; ++u) {
        if (image_[u] != kNoElem || u == x) {
          next[u] = dom[u];
          continue;
        }
        next[u] = dom[u] & ~bit(y) & fwd_[y * r + cmap_[a_.class_of(g.sub(u, x))]] &
                  bwd_[y * r + cmap_[a_.class_of(g.sub(x, u))]];
        if (!next[u]) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      image_[x] = y;
      const bool go_on = rec(next, depth + 1);
      image_[x] = kNoElem;
      if (!go_on) return false;
    }
    return true;
  }

  const SRing& a_;
  const SRing& b_;
  std::uint32_t n_;
  std::vector<std::size_t> cmap_;
  std::vector<Mask> dom0_;
  std::vector<Mask> fwd_, bwd_;  // [w' * rank + c']: the y with class(y - w') = c' (resp. w' - y)
  std::vector<Elem> image_;
  const std::function<bool(const std::vector<Elem>&)>* visit_ = nullptr;
};

Mask all_points(std::uint32_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::optional<PointMap> first_solution(const SRing& a, const SRing& b, std::span<const std::size_t> cmap,
                                       std::vector<Mask> domains) {
  std::optional<PointMap> out;
  PointSearch(a, b, cmap, std::move(domains)).run([&](const std::vector<Elem>& img) {
    out = PointMap{a.group(), b.group(), img};
    return false;
  });
  return out;
}

std::vector<std::size_t> identity_cmap(const SRing& a) {
  std::vector<std::size_t> m(a.rank());
  std::iota(m.begin(), m.end(), std::size_t{0});
  return m;
}

void check_same_order(const SRing& a, const SRing& b, const AlgebraicIso& phi) {
  if (a.group().order() != b.group().order())
    fail(ErrorKind::kArgument, "groups of different orders");
  if (phi.class_map.size() != a.rank() || b.rank() != a.rank()) fail(ErrorKind::kArgument, "rank mismatch");
}

}  // namespace

void for_each_inducing_iso(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                           const std::function<bool(const PointMap&)>& visit, std::uint32_t max_order) {
  check_same_order(a, b, phi);
  const std::uint32_t n = a.group().order();
  if (n > max_order || n > kEngineMaxOrder)
    fail(ErrorKind::kSize, "brute-force search over " + a.group().to_string() + " exceeds the bound " +
                               std::to_string(std::min(max_order, kEngineMaxOrder)));
  std::vector<Mask> dom(n, all_points(n) & ~Mask{1});
  dom[0] = 1;
  PointSearch(a, b, phi.class_map, std::move(dom)).run([&](const std::vector<Elem>& img) {
    return visit(PointMap{a.group(), b.group(), img});
  });
}

std::optional<PointMap> find_inducing_iso_bruteforce(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                                                     std::uint32_t max_order) {
  std::optional<PointMap> out;
  for_each_inducing_iso(a, b, phi, [&](const PointMap& f) {
    out = f;
    return false;
  }, max_order);
  return out;
}

std::optional<PointMap> find_cayley_inducing(const SRing& a, const SRing& b, const AlgebraicIso& phi) {
  const AbelianGroup& g = a.group();
  if (g.order() > 1) {
    auto shape = p_shape(g);
    if (!shape || (shape->p != 2 && shape->p != 3))
      fail(ErrorKind::kShape, "Cayley search needs C_p x C_p^k or a cyclic p-group with p in {2,3}, got " +
                                  g.to_string());
  }
  check_same_order(a, b, phi);
  if (!g.isomorphic_to(b.group())) return std::nullopt;
  // Test the elements of the largest classes first: they reject most maps.
  std::vector<Elem> probe(g.order());
  std::iota(probe.begin(), probe.end(), Elem{0});
  std::stable_sort(probe.begin(), probe.end(), [&](Elem x, Elem y) {
    return g.element_order(x) > g.element_order(y);
  });
  std::optional<PointMap> out;
  for_each_hom(g, b.group(), true, [&](const GroupHom& h) {
    for (Elem x : probe)
      if (b.class_of(h.apply(x)) != phi.class_map[a.class_of(x)]) return true;
    out = from_hom(h);
    return false;
  });
  return out;
}

GwrFrame gwr_frame(const SRing& a, const SRing& b, const AlgebraicIso& phi, const GwrWitness& w) {
  const AbelianGroup& g = a.group();
  const Subgroup& up = w.section.upper;
  const Subgroup& lo = w.section.lower;
  if (!(phi.source == a) || !(phi.target == b)) fail(ErrorKind::kArgument, "phi does not go from A to A'");
  if (!is_gwr(a, up, lo)) fail(ErrorKind::kArgument, "witness is not a generalized wreath section");
  Section u = quotient(g, up, trivial_subgroup());
  Section gl = quotient(g, lo);
  Section ul = quotient(g, up, lo);
  SectionIso phi_u = induced_on_section(phi, u);
  SectionIso phi_gl = induced_on_section(phi, gl);
  SectionIso phi_ul = induced_on_section(phi, ul);
  return GwrFrame{u, gl, ul, phi_u.target_section, phi_gl.target_section, phi_ul.target_section,
                  std::move(phi_u), std::move(phi_gl), std::move(phi_ul)};
}

namespace {

// The permutation of U/L induced by a bijection s of the group of U (given on
// the quotient group of the section U/e). Returns nullopt if s does not map
// L-cosets onto L'-cosets.
std::optional<std::vector<Elem>> on_ul(const PointMap& s, const Section& u, const Section& ul,
                                       const Section& u2, const Section& ul2) {
  const std::size_t none = kNoElem;
  std::vector<Elem> out(ul.quotient.order(), none);
  for (Elem q = 0; q < u.quotient.order(); ++q) {
    const Elem from = ul.project(u.lift[q]);
    const Elem to = ul2.project(u2.lift[s(q)]);
    if (out[from] == none) out[from] = to;
    else if (out[from] != to) return std::nullopt;
  }
  return out;
}

// Some automorphism h of A_U (on the quotient group of U/e) whose action on
// U/L is f0.
std::optional<PointMap> lift_automorphism(const SRing& au, const Section& u, const Section& ul,
                                          const std::vector<Elem>& f0) {
  const std::uint32_t n = u.quotient.order();
  std::vector<Elem> coset_of(n);
  for (Elem s = 0; s < n; ++s) coset_of[s] = ul.project(u.lift[s]);
  std::vector<Mask> dom(n, 0);
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      if (coset_of[t] == f0[coset_of[s]]) dom[s] |= bit(t);
  auto cm = identity_cmap(au);
  return first_solution(au, au, cm, std::move(dom));
}

}  // namespace

PointMap assemble_gwr_iso(const SRing& a, const SRing& b, const AlgebraicIso& phi, const GwrWitness& w,
                          const PointMap& f1, const PointMap& f2) {
  const AbelianGroup& g = a.group();
  const AbelianGroup& g2 = b.group();
  GwrFrame fr = gwr_frame(a, b, phi, w);
  const SRing& au = fr.phi_u.iso.source;
  if (!induces(f1, au, fr.phi_u.iso.target, fr.phi_u.iso.class_map))
    fail(ErrorKind::kArgument, "f1 does not induce the restriction of phi to U");
  if (!induces(f2, fr.phi_gl.iso.source, fr.phi_gl.iso.target, fr.phi_gl.iso.class_map))
    fail(ErrorKind::kArgument, "f2 does not induce the map on G/L");
  auto f1_ul = on_ul(f1, fr.u, fr.ul, fr.u2, fr.ul2);
  if (!f1_ul) fail(ErrorKind::kArgument, "f1 does not preserve the L-cosets");
  std::vector<Elem> f1_ul_inv(f1_ul->size());
  for (Elem q = 0; q < f1_ul->size(); ++q) f1_ul_inv[(*f1_ul)[q]] = q;

  const Subgroup& up = w.section.upper;
  const Subgroup& lo2 = fr.gl2.lower;
  std::vector<Elem> f(g.order(), kNoElem);
  std::vector<char> seen(g.order(), 0);
  for (Elem x0 = 0; x0 < g.order(); ++x0) {
    if (seen[x0]) continue;
    // x0 is the least element of its U-coset X.
    ElemSet xs = translate(g, up.elements, x0);
    for (Elem x : xs) seen[x] = 1;
    ElemSet xs2;
    for (Elem x : xs) {
      const Elem y = fr.gl2.lift[f2(fr.gl.project(x))];
      for (Elem l : lo2.elements) xs2.push_back(g2.add(y, l));
    }
    std::sort(xs2.begin(), xs2.end());
    xs2.erase(std::unique(xs2.begin(), xs2.end()), xs2.end());
    const Elem x0b = xs2.front();
    if (xs2.size() != up.order() || xs2 != translate(g2, fr.u2.upper.elements, x0b))
      fail(ErrorKind::kArgument, "f2 does not map U-cosets onto U'-cosets");
    // f0 = g^{U/L} f2^{X/L} g'^{X'/L'} (f1^{U/L})^{-1} on U/L
    std::vector<Elem> f0(fr.ul.quotient.order());
    for (Elem q = 0; q < f0.size(); ++q) {
      const Elem x = g.add(fr.ul.lift[q], x0);
      const Elem y = fr.gl2.lift[f2(fr.gl.project(x))];
      f0[q] = f1_ul_inv[fr.ul2.project(g2.sub(y, x0b))];
    }
    auto h = lift_automorphism(au, fr.u, fr.ul, f0);
    if (!h)
      fail(ErrorKind::kAutLifting, "no automorphism of A_U lifts the correction on the coset of " +
                                       g.format(x0));
    for (Elem x : xs) {
      const Elem s = fr.u.project(g.sub(x, x0));
      f[x] = g2.add(fr.u2.lift[f1((*h)(s))], x0b);
    }
  }
  PointMap out{g, g2, std::move(f)};
  if (!induces(out, a, b, phi.class_map))
    fail(ErrorKind::kInternal, "assembled bijection does not induce phi");
  return out;
}

std::string check_gwr_properties(const SRing& a, const SRing& b, const AlgebraicIso& phi, const GwrWitness& w,
                                 const PointMap& f) {
  const AbelianGroup& g = a.group();
  const AbelianGroup& g2 = b.group();
  if (!f.is_bijective()) return "not a bijection";
  GwrFrame fr = gwr_frame(a, b, phi, w);
  auto maps_cosets = [&](const Subgroup& h, const Subgroup& h2) {
    std::vector<char> seen(g.order(), 0);
    for (Elem x0 = 0; x0 < g.order(); ++x0) {
      if (seen[x0]) continue;
      ElemSet img;
      for (Elem x : translate(g, h.elements, x0)) {
        seen[x] = 1;
        img.push_back(f(x));
      }
      std::sort(img.begin(), img.end());
      if (img != translate(g2, h2.elements, img.front())) return false;
    }
    return true;
  };
  if (!maps_cosets(fr.u.upper, fr.u2.upper) || !maps_cosets(fr.gl.lower, fr.gl2.lower))
    return "property 1: cosets of U or L are not mapped onto cosets of U' or L'";
  std::vector<Elem> fgl(fr.gl.quotient.order());
  for (Elem q = 0; q < fgl.size(); ++q) fgl[q] = fr.gl2.project(f(fr.gl.lift[q]));
  PointMap fq{fr.gl.quotient, fr.gl2.quotient, std::move(fgl)};
  if (!induces(fq, fr.phi_gl.iso.source, fr.phi_gl.iso.target, fr.phi_gl.iso.class_map))
    return "property 2: the map on G/L does not induce phi_{G/L}";
  std::vector<char> seen(g.order(), 0);
  for (Elem x0 = 0; x0 < g.order(); ++x0) {
    if (seen[x0]) continue;
    ElemSet img;
    for (Elem x : translate(g, fr.u.upper.elements, x0)) {
      seen[x] = 1;
      img.push_back(f(x));
    }
    const Elem x0b = *std::min_element(img.begin(), img.end());
    std::vector<Elem> r(fr.u.quotient.order());
    for (Elem s = 0; s < r.size(); ++s) r[s] = fr.u2.project(g2.sub(f(g.add(fr.u.lift[s], x0)), x0b));
    PointMap fu{fr.u.quotient, fr.u2.quotient, std::move(r)};
    if (!induces(fu, fr.phi_u.iso.source, fr.phi_u.iso.target, fr.phi_u.iso.class_map))
      return "property 3: the restriction to the coset of " + g.format(x0) + " does not induce phi_U";
  }
  return "";
}

unsigned __int128 AutGroup::order() const {
  unsigned __int128 o = group.order();
  for (const auto& t : transversal) o *= t.size();
  return o;
}

std::string AutGroup::order_string() const {
  unsigned __int128 o = order();
  if (o == 0) return "0";
  std::string s;
  while (o > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(o % 10)));
    o /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<PointMap> AutGroup::generators() const {
  std::vector<PointMap> out;
  for (std::size_t i = 0; i < group.num_factors(); ++i) out.push_back(translation(group, group.generator(i)));
  for (const auto& t : transversal)
    for (const auto& f : t) out.push_back(f);
  return out;
}

std::vector<PointMap> AutGroup::elements(std::uint64_t limit) const {
  if (order() > limit) fail(ErrorKind::kSize, "automorphism group of order " + order_string() + " is too large to list");
  std::vector<PointMap> cur{identity_map(group)};
  for (auto it = transversal.rbegin(); it != transversal.rend(); ++it) {
    std::vector<PointMap> next;
    for (const auto& t : *it)
      for (const auto& h : cur) next.push_back(h.then(t));
    cur = std::move(next);
  }
  std::vector<PointMap> out;
  for (Elem t = 0; t < group.order(); ++t) {
    PointMap tr = translation(group, t);
    for (const auto& h : cur) out.push_back(h.then(tr));
  }
  std::sort(out.begin(), out.end(), [](const PointMap& x, const PointMap& y) { return x.image < y.image; });
  return out;
}

bool AutGroup::contains(const PointMap& f) const {
  if (!(f.source == group) || !(f.target == group) || !f.is_bijective()) return false;
  PointMap cur = f.then(translation(group, group.neg(f(0))));
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Elem c = cur(base[i]);
    auto it = std::find_if(transversal[i].begin(), transversal[i].end(),
                           [&](const PointMap& t) { return t(base[i]) == c; });
    if (it == transversal[i].end()) return false;
    cur = cur.then(it->inverse());
  }
  return cur == identity_map(group);
}

AutGroup aut_group(const SRing& a, std::uint32_t max_order) {
  const AbelianGroup& g = a.group();
  const std::uint32_t n = g.order();
  if (n > max_order || n > kEngineMaxOrder)
    fail(ErrorKind::kSize, "automorphism search over " + g.to_string() + " exceeds the bound");
  AutGroup out{g, {}, {}};
  auto cm = identity_cmap(a);
  std::vector<Mask> fixed_dom(n, all_points(n));
  fixed_dom[0] = 1;
  for (Elem p = 1; p < n; ++p) {
    std::vector<PointMap> reps;
    Mask cand = fixed_dom[p];
    while (cand) {
      const Elem c = static_cast<Elem>(std::countr_zero(cand));
      cand &= cand - 1;
      std::vector<Mask> dom = fixed_dom;
      dom[p] = bit(c);
      if (auto f = first_solution(a, a, cm, std::move(dom))) reps.push_back(std::move(*f));
    }
    if (reps.size() > 1) {
      out.base.push_back(p);
      out.transversal.push_back(std::move(reps));
    }
    fixed_dom[p] = bit(p);
  }
  return out;
}

bool aut_projection_is_full(const SRing& a, const Section& ul, std::uint32_t max_order) {
  const AbelianGroup& g = a.group();
  Section u = quotient(g, ul.upper, trivial_subgroup());
  SRing au = quotient_sring(a, u);
  SRing aul = quotient_sring(a, ul);
  if (au.group().order() > max_order) fail(ErrorKind::kSize, "A_U is too large for the lifting search");
  for (const auto& gen : aut_group(aul, max_order).generators())
    if (!lift_automorphism(au, u, ul, gen.image)) return false;
  return true;
}

std::optional<IsoCertificate> find_inducing_iso(const SRing& a, const SRing& b, const AlgebraicIso& phi,
                                                const CascadeOptions& opts) {
  check_same_order(a, b, phi);
  const std::uint32_t n = a.group().order();
  if (n == 1) return IsoCertificate::make(PointMap{a.group(), b.group(), {0}}, phi, IsoMethod::kCayley);
  if (opts.use_cayley) {
    try {
      if (auto f = find_cayley_inducing(a, b, phi)) return IsoCertificate::make(std::move(*f), phi, IsoMethod::kCayley);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kShape) throw;
    }
  }
  if (opts.use_gwr) {
    for (const auto& w : gwr_sections(a)) {
      if (!w.proper) continue;
      GwrFrame fr = gwr_frame(a, b, phi, w);
      auto c1 = find_inducing_iso(fr.phi_u.iso.source, fr.phi_u.iso.target, fr.phi_u.iso, opts);
      if (!c1) continue;
      auto c2 = find_inducing_iso(fr.phi_gl.iso.source, fr.phi_gl.iso.target, fr.phi_gl.iso, opts);
      if (!c2) continue;
      try {
        PointMap f = assemble_gwr_iso(a, b, phi, w, c1->point_map, c2->point_map);
        return IsoCertificate::make(std::move(f), phi, IsoMethod::kGwrAssembly);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kAutLifting) throw;
      }
    }
  }
  if (!opts.use_brute) return std::nullopt;
  if (n > opts.brute_max_order)
    fail(ErrorKind::kSize, "no structural strategy applied and " + a.group().to_string() +
                               " is beyond the brute-force bound");
  if (auto f = find_inducing_iso_bruteforce(a, b, phi, opts.brute_max_order))
    return IsoCertificate::make(std::move(*f), phi, IsoMethod::kBrute);
  return std::nullopt;
}

PipelineResult graph_iso_pipeline(const AbelianGroup& g, std::span<const Elem> x, const AbelianGroup& g2,
                                  std::span<const Elem> x2, const CascadeOptions& opts) {
  auto shape = p_shape(g);
  if (!shape || shape->cyclic || (shape->p != 2 && shape->p != 3))
    fail(ErrorKind::kShape, "pipeline source must be C_p x C_p^k with p in {2,3}, got " + g.to_string());
  ElemSet s1(x.begin(), x.end()), s2(x2.begin(), x2.end());
  std::sort(s1.begin(), s1.end());
  s1.erase(std::unique(s1.begin(), s1.end()), s1.end());
  std::sort(s2.begin(), s2.end());
  s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
  CayleyScheme ca = cayley_scheme(g, std::span<const ElemSet>(&s1, 1));
  CayleyScheme cb = cayley_scheme(g2, std::span<const ElemSet>(&s2, 1));
  auto non_iso = [&](std::string why) {
    return PipelineResult{PipelineVerdict::kNonIsomorphic, std::move(why), std::nullopt, ca.ring, cb.ring};
  };
  if (g.order() != g2.order()) return non_iso("order");
  if (ca.trace != cb.trace) return non_iso("wl-trace");
  if (ca.ring.rank() != cb.ring.rank()) return non_iso("rank");

  const std::size_t r = ca.ring.rank();
  std::vector<std::size_t> by_color(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    if (cb.color_of_class[j] >= r) return non_iso("rank");
    by_color[cb.color_of_class[j]] = j;
  }
  std::vector<std::size_t> m(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (ca.color_of_class[i] >= r || by_color[ca.color_of_class[i]] == r) return non_iso("rank");
    m[i] = by_color[ca.color_of_class[i]];
  }
  // classes making up X and X'
  auto in_seed = [](const SRing& ring, const ElemSet& s) {
    std::vector<char> v(ring.rank(), 0);
    for (Elem e : s) v[ring.class_of(e)] = 1;
    return v;
  };
  const auto xa = in_seed(ca.ring, s1);
  const auto xb = in_seed(cb.ring, s2);
  auto respects_seed = [&](const std::vector<std::size_t>& cm) {
    for (std::size_t i = 0; i < r; ++i)
      if (xa[i] != xb[cm[i]]) return false;
    return true;
  };
  std::optional<AlgebraicIso> phi;
  if (verify_algiso(ca.ring, cb.ring, m).ok && respects_seed(m)) {
    phi = AlgebraicIso{ca.ring, cb.ring, m};
  } else {
    for_each_algiso(ca.ring, cb.ring, [&](const AlgebraicIso& psi) {
      if (!respects_seed(psi.class_map)) return true;
      phi = psi;
      return false;
    });
  }
  if (!phi) return non_iso("algebraic");

  auto cert = find_inducing_iso(ca.ring, cb.ring, *phi, opts);
  if (!cert) fail(ErrorKind::kInternal, "algebraic isomorphism of the Cayley schemes is not induced");
  const PointMap& f = cert->point_map;
  std::vector<char> in2(g2.order(), 0);
  for (Elem e : s2) in2[e] = 1;
  std::vector<char> in1(g.order(), 0);
  for (Elem e : s1) in1[e] = 1;
  for (Elem u = 0; u < g.order(); ++u)
    for (Elem v = 0; v < g.order(); ++v)
      if (in1[g.sub(v, u)] != in2[g2.sub(f(v), f(u))])
        fail(ErrorKind::kInternal, "certificate does not map the edge set onto the edge set");
  PipelineResult out{PipelineVerdict::kIsomorphic, "", IsoCertificate{f, *phi, IsoMethod::kPipeline},
                     ca.ring, cb.ring};
  return out;
}

std::string to_text(const PointMap& f) {
  std::ostringstream out;
  out << "pointmap " << f.source.to_string() << " " << f.target.to_string() << "\n";
  for (Elem x = 0; x < f.image.size(); ++x) out << f.source.format(x) << " -> " << f.target.format(f(x)) << "\n";
  return out.str();
}

}  // namespace srings
