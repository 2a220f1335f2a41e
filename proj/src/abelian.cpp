#include "srings/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "srings/error.hpp"

namespace srings {
namespace {

constexpr std::uint32_t kMaxGroupOrder = 1u << 20;
constexpr std::uint32_t kMaxTableOrder = 1024;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Prime factorisation as (prime, exponent) pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

// Invariant factors from per-prime exponent lists.
std::vector<std::uint32_t> combine_prime_parts(
    std::map<std::uint32_t, std::vector<std::uint32_t>> exps) {
  std::size_t len = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.rbegin(), es.rend());
    len = std::max(len, es.size());
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t d = 1;
    for (auto& [p, es] : exps)
      if (i < es.size()) d *= ipow(p, es[i]);
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void integer_partitions(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    integer_partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

// Invariant factors of an abstract finite abelian group from its order
// statistics: #{x : p^j x = 0} determines the p-primary part.
std::vector<std::uint32_t> invariant_factors_of(
    std::uint32_t order, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>&
                             count_killed_by) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> exps;
  for (auto [p, e] : factorize(order)) {
    std::vector<std::uint32_t> at_least;  // at_least[j-1] = #factors with exponent >= j
    std::uint32_t prev = 1;
    std::uint32_t pj = 1;
    for (std::uint32_t j = 1; j <= e; ++j) {
      pj *= p;
      std::uint32_t cnt = count_killed_by(p, pj);
      std::uint32_t ratio = cnt / prev;
      std::uint32_t k = 0;
      while (ratio > 1) {
        ratio /= p;
        ++k;
      }
      if (k == 0) break;
      at_least.push_back(k);
      prev = cnt;
    }
    std::vector<std::uint32_t> es;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      std::uint32_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (std::uint32_t c = 0; c < at_least[j] - next; ++c)
        es.push_back(static_cast<std::uint32_t>(j + 1));
    }
    exps[p] = es;
  }
  return combine_prime_parts(exps);
}

}  // namespace

AbelianGroup::AbelianGroup() {
  static const AbelianGroup trivial = make({});
  impl_ = trivial.impl_;
}

AbelianGroup AbelianGroup::make(std::vector<std::uint32_t> factors) {
  auto impl = std::make_shared<Impl>();
  std::uint64_t order = 1;
  std::uint32_t exponent = 1;
  for (auto d : factors) {
    if (d < 2) fail(ErrorKind::kInvalidFactor, "cyclic factor " + std::to_string(d) + " < 2");
    order *= d;
    if (order > kMaxGroupOrder) fail(ErrorKind::kSize, "group order exceeds supported bound");
    exponent = std::lcm(exponent, d);
  }
  impl->factors = std::move(factors);
  impl->order = static_cast<std::uint32_t>(order);
  impl->exponent = exponent;
  const std::size_t r = impl->factors.size();
  impl->strides.assign(r, 1);
  for (std::size_t i = r; i-- > 1;) impl->strides[i - 1] = impl->strides[i] * impl->factors[i];

  const std::uint32_t n = impl->order;
  impl->neg.resize(n);
  impl->elem_order.resize(n);
  std::vector<std::uint32_t> c(r);
  for (Elem x = 0; x < n; ++x) {
    Elem rem = x;
    Elem negx = 0;
    std::uint32_t ord = 1;
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = rem / impl->strides[i];
      rem %= impl->strides[i];
      const std::uint32_t d = impl->factors[i];
      negx += ((d - c[i]) % d) * impl->strides[i];
      ord = std::lcm(ord, d / std::gcd(d, c[i]));
    }
    impl->neg[x] = negx;
    impl->elem_order[x] = ord;
  }
  if (n <= kMaxTableOrder) {
    impl->has_table = true;
    impl->add_table.resize(std::size_t(n) * n);
    AbelianGroup tmp(impl);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) impl->add_table[std::size_t(x) * n + y] = tmp.add_slow(x, y);
  }
  AbelianGroup g(std::move(impl));
  return g;
}

Elem AbelianGroup::add_slow(Elem x, Elem y) const {
  Elem out = 0;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    const std::uint32_t s = impl_->strides[i];
    const std::uint32_t d = impl_->factors[i];
    const std::uint32_t a = (x / s) % d;
    const std::uint32_t b = (y / s) % d;
    out += ((a + b) % d) * s;
  }
  return out;
}

Elem AbelianGroup::mul(std::int64_t m, Elem x) const {
  Elem out = 0;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    const std::uint32_t s = impl_->strides[i];
    const std::int64_t d = impl_->factors[i];
    const std::int64_t a = (x / s) % d;
    out += static_cast<Elem>(mod(mod(m, d) * a, d)) * s;
  }
  return out;
}

std::vector<std::uint32_t> AbelianGroup::coords(Elem x) const {
  std::vector<std::uint32_t> c(impl_->factors.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (x / impl_->strides[i]) % impl_->factors[i];
  return c;
}

Elem AbelianGroup::from_coords(std::span<const std::int64_t> c) const {
  if (c.size() != impl_->factors.size())
    fail(ErrorKind::kArgument, "coordinate count does not match " + to_string());
  Elem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    out += static_cast<Elem>(mod(c[i], impl_->factors[i])) * impl_->strides[i];
  return out;
}

Elem AbelianGroup::generator(std::size_t i) const { return impl_->strides.at(i); }

std::vector<std::uint32_t> AbelianGroup::invariant_factors() const {
  std::map<std::uint32_t, std::vector<std::uint32_t>> exps;
  for (auto d : impl_->factors)
    for (auto [p, e] : factorize(d)) exps[p].push_back(e);
  return combine_prime_parts(exps);
}

bool AbelianGroup::isomorphic_to(const AbelianGroup& other) const {
  return invariant_factors() == other.invariant_factors();
}

AbelianGroup AbelianGroup::parse(std::string_view literal) {
  std::string s;
  for (char ch : literal)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(ch)));
  if (s.empty()) fail(ErrorKind::kParse, "empty group literal");
  std::vector<std::uint32_t> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'c') fail(ErrorKind::kParse, "expected 'C' in group literal '" + std::string(literal) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 9)
      fail(ErrorKind::kParse, "bad factor in group literal '" + std::string(literal) + "'");
    factors.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(start, pos - start))));
    if (pos < s.size()) {
      if (s[pos] != 'x') fail(ErrorKind::kParse, "expected 'x' in group literal '" + std::string(literal) + "'");
      ++pos;
      if (pos == s.size()) fail(ErrorKind::kParse, "dangling 'x' in group literal");
    }
  }
  if (factors.size() == 1 && factors[0] == 1) return AbelianGroup();
  return make(std::move(factors));
}

std::string AbelianGroup::to_string() const {
  if (impl_->factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(impl_->factors[i]);
  }
  return out;
}

std::string AbelianGroup::format(Elem x) const {
  std::string out = "(";
  auto c = coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string AbelianGroup::format(std::span<const Elem> xs) const {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += format(xs[i]);
  }
  return out;
}

Elem AbelianGroup::parse_element(std::string_view literal) const {
  std::string s;
  for (char ch : literal)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail(ErrorKind::kParse, "element literal must look like (x1,...,xr): '" + std::string(literal) + "'");
  std::vector<std::int64_t> c;
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.size() > 9 ||
          !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        fail(ErrorKind::kParse, "bad coordinate in '" + std::string(literal) + "'");
      c.push_back(std::stoll(tok));
    }
  }
  if (c.size() != impl_->factors.size())
    fail(ErrorKind::kParse, "element '" + std::string(literal) + "' has wrong arity for " + to_string());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] >= impl_->factors[i])
      fail(ErrorKind::kParse, "coordinate out of range in '" + std::string(literal) + "'");
  return from_coords(c);
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

namespace {

// Irredundant generating list: repeatedly take the first element of largest
// order outside the current span.
std::vector<Elem> pick_generators(const AbelianGroup& g, const ElemSet& elements) {
  std::vector<Elem> sorted = elements;
  std::stable_sort(sorted.begin(), sorted.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<char> in_span(g.order(), 0);
  in_span[0] = 1;
  std::vector<Elem> span{0};
  std::vector<Elem> gens;
  for (Elem x : sorted) {
    if (in_span[x]) continue;
    gens.push_back(x);
    std::vector<Elem> grown = span;
    Elem m = x;
    while (!in_span[m]) {
      for (Elem h : span) {
        Elem y = g.add(h, m);
        if (!in_span[y]) {
          in_span[y] = 1;
          grown.push_back(y);
        }
      }
      m = g.add(m, x);
    }
    span = std::move(grown);
  }
  return gens;
}

}  // namespace

Subgroup subgroup_generated(const AbelianGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<Elem> span{0};
  for (Elem x : gens) {
    if (x >= g.order()) fail(ErrorKind::kArgument, "element outside group");
    if (in[x]) continue;
    std::vector<Elem> grown = span;
    Elem m = x;
    while (!in[m]) {
      for (Elem h : span) {
        Elem y = g.add(h, m);
        if (!in[y]) {
          in[y] = 1;
          grown.push_back(y);
        }
      }
      m = g.add(m, x);
    }
    span = std::move(grown);
  }
  std::sort(span.begin(), span.end());
  Subgroup out;
  out.generators = pick_generators(g, span);
  out.elements = std::move(span);
  return out;
}

Subgroup whole_group(const AbelianGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), Elem{0});
  for (std::size_t i = 0; i < g.num_factors(); ++i) s.generators.push_back(g.generator(i));
  return s;
}

Subgroup trivial_subgroup() {
  Subgroup s;
  s.elements = {0};
  return s;
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g, std::uint32_t max_order) {
  if (g.order() > max_order)
    fail(ErrorKind::kSize, "subgroup enumeration of " + g.to_string() + " exceeds bound " +
                               std::to_string(max_order));
  // Every subgroup is a join of cyclic subgroups.
  std::set<ElemSet> cyclic_sets;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem one[1] = {x};
    cyclic_sets.insert(subgroup_generated(g, one).elements);
  }
  std::vector<ElemSet> cyclic(cyclic_sets.begin(), cyclic_sets.end());
  std::set<ElemSet> seen{ElemSet{0}};
  std::vector<ElemSet> work{ElemSet{0}};
  while (!work.empty()) {
    ElemSet h = std::move(work.back());
    work.pop_back();
    for (const auto& c : cyclic) {
      if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
      std::vector<Elem> gens = h;
      gens.insert(gens.end(), c.begin(), c.end());
      ElemSet joined = subgroup_generated(g, gens).elements;
      if (seen.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& s : seen) {
    Subgroup sg;
    sg.elements = s;
    sg.generators = pick_generators(g, s);
    out.push_back(std::move(sg));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

Section quotient(const AbelianGroup& g, const Subgroup& upper, const Subgroup& lower) {
  for (Elem x : lower.elements)
    if (!upper.contains(x)) fail(ErrorKind::kContainment, "L is not contained in U");
  const std::uint32_t n = g.order();
  // Coset representatives: least element of u + L.
  std::vector<Elem> rep(n, kNoElem);
  std::vector<Elem> reps;
  for (Elem u : upper.elements) {
    if (rep[u] != kNoElem) continue;
    for (Elem l : lower.elements) rep[g.add(u, l)] = u;  // u is minimal: elements are sorted
    reps.push_back(u);
  }
  const std::uint32_t qn = static_cast<std::uint32_t>(reps.size());
  std::vector<std::uint32_t> idx(n, kNoElem);
  for (std::uint32_t i = 0; i < qn; ++i) idx[reps[i]] = i;
  auto qadd = [&](std::uint32_t a, std::uint32_t b) { return idx[rep[g.add(reps[a], reps[b])]]; };
  auto qmul = [&](std::uint32_t m, std::uint32_t a) {
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < m; ++i) acc = qadd(acc, a);
    return acc;
  };
  std::vector<std::uint32_t> qorder(qn, 1);
  for (std::uint32_t a = 0; a < qn; ++a) {
    std::uint32_t acc = a;
    while (acc != 0) {
      acc = qadd(acc, a);
      ++qorder[a];
    }
  }
  auto factors = invariant_factors_of(qn, [&](std::uint32_t, std::uint32_t pj) {
    std::uint32_t c = 0;
    for (std::uint32_t a = 0; a < qn; ++a) c += (pj % qorder[a] == 0);
    return c;
  });

  // Basis with orders matching the invariant factors, chosen largest first.
  const std::size_t s = factors.size();
  std::vector<std::uint32_t> basis(s, 0);
  std::vector<std::vector<char>> span_at(s + 1);
  span_at[s].assign(qn, 0);
  span_at[s][0] = 1;
  std::function<bool(std::size_t)> pick = [&](std::size_t level) -> bool {
    if (level == 0) return true;
    const std::size_t i = level - 1;
    const auto& span = span_at[level];
    for (std::uint32_t a = 0; a < qn; ++a) {
      if (qorder[a] != factors[i]) continue;
      // <a> must meet the span trivially.
      bool ok = true;
      std::uint32_t m = a;
      for (std::uint32_t t = 1; t < factors[i]; ++t, m = qadd(m, a))
        if (span[m]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<char> next(qn, 0);
      for (std::uint32_t h = 0; h < qn; ++h) {
        if (!span[h]) continue;
        std::uint32_t y = h;
        for (std::uint32_t t = 0; t < factors[i]; ++t, y = qadd(y, a)) next[y] = 1;
      }
      span_at[i] = std::move(next);
      basis[i] = a;
      if (pick(level - 1)) return true;
    }
    return false;
  };
  if (!pick(s)) fail(ErrorKind::kInternal, "failed to find a basis of a quotient group");

  Section out;
  out.upper = upper;
  out.lower = lower;
  out.quotient = AbelianGroup::make(factors);
  // canonical element with coordinates c  <->  sum c_i basis_i
  std::vector<std::uint32_t> q_to_canon(qn, kNoElem);
  out.lift.assign(qn, kNoElem);
  for (Elem ce = 0; ce < qn; ++ce) {
    auto c = out.quotient.coords(ce);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < s; ++i) acc = qadd(acc, qmul(c[i], basis[i]));
    q_to_canon[acc] = ce;
    out.lift[ce] = reps[acc];
  }
  out.projection.assign(n, kNoElem);
  for (Elem u : upper.elements) out.projection[u] = q_to_canon[idx[rep[u]]];
  return out;
}

Section quotient(const AbelianGroup& g, const Subgroup& lower) {
  return quotient(g, whole_group(g), lower);
}

Elem GroupHom::apply(Elem x) const {
  Elem out = 0;
  auto c = source.coords(x);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) out = target.add(out, target.mul(c[i], images[i]));
  return out;
}

std::vector<Elem> GroupHom::table() const {
  std::vector<Elem> t(source.order());
  for (Elem x = 0; x < source.order(); ++x) t[x] = apply(x);
  return t;
}

bool GroupHom::is_bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (Elem x = 0; x < source.order(); ++x) {
    Elem y = apply(x);
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

GroupHom GroupHom::compose(const GroupHom& then) const {
  if (!(target == then.source)) fail(ErrorKind::kArgument, "cannot compose homomorphisms");
  GroupHom out{source, then.target, {}};
  for (Elem im : images) out.images.push_back(then.apply(im));
  return out;
}

GroupHom make_hom(const AbelianGroup& source, const AbelianGroup& target, std::vector<Elem> images) {
  if (images.size() != source.num_factors())
    fail(ErrorKind::kArgument, "need one image per cyclic factor of " + source.to_string());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= target.order()) fail(ErrorKind::kArgument, "image outside target group");
    if (target.mul(source.factors()[i], images[i]) != 0)
      fail(ErrorKind::kArgument, "image order does not divide the generator order");
  }
  return GroupHom{source, target, std::move(images)};
}

void for_each_hom(const AbelianGroup& source, const AbelianGroup& target, bool iso_only,
                  const std::function<bool(const GroupHom&)>& visit) {
  if (iso_only && source.order() != target.order()) return;
  const std::size_t r = source.num_factors();
  std::vector<std::vector<Elem>> cand(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t d = source.factors()[i];
    for (Elem y = 0; y < target.order(); ++y) {
      if (iso_only ? target.element_order(y) == d : d % target.element_order(y) == 0)
        cand[i].push_back(y);
    }
  }
  GroupHom h{source, target, std::vector<Elem>(r, 0)};
  const std::uint32_t tn = target.order();
  std::vector<std::vector<char>> span(r + 1);
  span[0].assign(tn, 0);
  span[0][0] = 1;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == r) {
      if (!visit(h)) stop = true;
      return;
    }
    for (Elem y : cand[i]) {
      if (iso_only) {
        // Injective so far iff <y> meets the previous image span trivially.
        const std::uint32_t d = source.factors()[i];
        bool ok = true;
        Elem m = y;
        for (std::uint32_t t = 1; t < d; ++t, m = target.add(m, y))
          if (span[i][m]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        span[i + 1].assign(tn, 0);
        for (Elem z = 0; z < tn; ++z) {
          if (!span[i][z]) continue;
          Elem w = z;
          for (std::uint32_t t = 0; t < d; ++t, w = target.add(w, y)) span[i + 1][w] = 1;
        }
      }
      h.images[i] = y;
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<GroupHom> enumerate_homs(const AbelianGroup& source, const AbelianGroup& target,
                                     bool iso_only) {
  std::vector<GroupHom> out;
  for_each_hom(source, target, iso_only, [&](const GroupHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::vector<GroupHom> automorphisms(const AbelianGroup& g) { return enumerate_homs(g, g, true); }

std::vector<AbelianGroup> abelian_groups_of_order(std::uint32_t n) {
  if (n == 0) fail(ErrorKind::kArgument, "group order must be positive");
  std::vector<std::vector<std::uint32_t>> lists{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    integer_partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& base : lists) {
      for (const auto& part : parts) {
        std::map<std::uint32_t, std::vector<std::uint32_t>> exps;
        // Recover per-prime exponents of the partial list, then add this prime.
        for (auto d : base)
          for (auto [q, f] : factorize(d)) exps[q].push_back(f);
        exps[p] = part;
        next.push_back(combine_prime_parts(exps));
      }
    }
    lists = std::move(next);
  }
  std::sort(lists.begin(), lists.end());
  std::vector<AbelianGroup> out;
  for (auto& l : lists) out.push_back(AbelianGroup::make(l));
  return out;
}

ElemSet translate(const AbelianGroup& g, std::span<const Elem> s, Elem t) {
  ElemSet out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(g.add(x, t));
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet power_image(const AbelianGroup& g, std::span<const Elem> s, std::int64_t m) {
  ElemSet out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(g.mul(m, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElemSet inverse_set(const AbelianGroup& g, std::span<const Elem> s) {
  ElemSet out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(g.neg(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace srings
