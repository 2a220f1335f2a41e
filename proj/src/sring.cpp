#include "srings/sring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "srings/error.hpp"

namespace srings {

void sort_classes(std::vector<ElemSet>& classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(), [](const ElemSet& a, const ElemSet& b) {
    const bool ea = a.size() == 1 && a[0] == 0;
    const bool eb = b.size() == 1 && b[0] == 0;
    if (ea != eb) return ea;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

SRing SRing::validate(const AbelianGroup& g, std::vector<ElemSet> partition) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> class_of(n, kNoElem);
  for (auto& c : partition) {
    if (c.empty()) fail(ErrorKind::kNotAPartition, "empty class");
    std::sort(c.begin(), c.end());
  }
  sort_classes(partition);
  for (std::uint32_t i = 0; i < partition.size(); ++i)
    for (Elem x : partition[i]) {
      if (x >= n) fail(ErrorKind::kNotAPartition, "element index outside " + g.to_string());
      if (class_of[x] != kNoElem)
        fail(ErrorKind::kNotAPartition, "element " + g.format(x) + " lies in two classes");
      class_of[x] = i;
    }
  for (Elem x = 0; x < n; ++x)
    if (class_of[x] == kNoElem)
      fail(ErrorKind::kNotAPartition, "element " + g.format(x) + " is not covered");
  if (partition[0].size() != 1 || partition[0][0] != 0)
    fail(ErrorKind::kIdentityNotSingleton, "the identity is not a singleton class");

  const std::size_t r = partition.size();
  std::vector<std::uint32_t> inverse(r);
  for (std::size_t i = 0; i < r; ++i) {
    ElemSet inv = inverse_set(g, partition[i]);
    const std::uint32_t j = class_of[inv[0]];
    if (partition[j] != inv)
      fail(ErrorKind::kNotInverseClosed,
           "inverse of class {" + g.format(partition[i]) + "} is not a class");
    inverse[i] = j;
  }

  // Module closure: the product counts of every pair of classes must be
  // constant on every class.
  std::vector<std::uint32_t> cnt(n);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x; y < r; ++y) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (Elem u : partition[x])
        for (Elem v : partition[y]) ++cnt[g.add(u, v)];
      for (const auto& z : partition) {
        const std::uint32_t c0 = cnt[z[0]];
        for (Elem w : z)
          if (cnt[w] != c0) {
            std::ostringstream msg;
            msg << "classes " << x << " and " << y << ": " << g.format(z[0]) << " has " << c0
                << " representations but " << g.format(w) << " has " << cnt[w];
            fail(ErrorKind::kNotModuleClosed, msg.str());
          }
      }
    }

  auto impl = std::make_shared<Impl>();
  impl->group = g;
  impl->classes = std::move(partition);
  impl->class_of = std::move(class_of);
  impl->inverse = std::move(inverse);
  return SRing(std::move(impl));
}

const std::vector<std::uint32_t>& SRing::tensor() const {
  std::call_once(impl_->tensor_once, [this] {
    const auto& g = impl_->group;
    const auto& cl = impl_->classes;
    const std::size_t r = cl.size();
    std::vector<std::uint32_t> t(r * r * r, 0);
    std::vector<std::uint32_t> cnt(g.order());
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = x; y < r; ++y) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (Elem u : cl[x])
          for (Elem v : cl[y]) ++cnt[g.add(u, v)];
        for (std::size_t z = 0; z < r; ++z) {
          t[(x * r + y) * r + z] = cnt[cl[z][0]];
          t[(y * r + x) * r + z] = cnt[cl[z][0]];
        }
      }
    impl_->tensor = std::move(t);
  });
  return impl_->tensor;
}

std::uint32_t structure_constant(const SRing& a, std::size_t x, std::size_t y, std::size_t z) {
  if (x >= a.rank() || y >= a.rank() || z >= a.rank())
    fail(ErrorKind::kArgument, "class index out of range");
  return a.constant(x, y, z);
}

std::optional<std::vector<std::size_t>> decompose_a_set(const SRing& a, std::span<const Elem> s) {
  std::vector<char> in(a.group().order(), 0);
  for (Elem x : s) {
    if (x >= a.group().order()) fail(ErrorKind::kArgument, "element outside group");
    in[x] = 1;
  }
  std::vector<std::size_t> idx;
  std::vector<char> used(a.rank(), 0);
  for (Elem x : s) {
    const std::size_t c = a.class_of(x);
    if (used[c]) continue;
    used[c] = 1;
    for (Elem y : a.cls(c))
      if (!in[y]) return std::nullopt;
    idx.push_back(c);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

bool is_a_set(const SRing& a, std::span<const Elem> s) { return decompose_a_set(a, s).has_value(); }

ElemSet union_of_classes(const SRing& a, std::span<const std::size_t> idx) {
  ElemSet out;
  for (auto i : idx) out.insert(out.end(), a.cls(i).begin(), a.cls(i).end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> a_subgroups(const SRing& a) {
  const auto& g = a.group();
  std::set<ElemSet> gen_sets;
  for (const auto& c : a.classes()) gen_sets.insert(subgroup_generated(g, c).elements);
  std::vector<ElemSet> basis(gen_sets.begin(), gen_sets.end());
  std::set<ElemSet> seen{ElemSet{0}};
  std::vector<ElemSet> work{ElemSet{0}};
  while (!work.empty()) {
    ElemSet h = std::move(work.back());
    work.pop_back();
    for (const auto& b : basis) {
      if (std::includes(h.begin(), h.end(), b.begin(), b.end())) continue;
      std::vector<Elem> gens = h;
      gens.insert(gens.end(), b.begin(), b.end());
      ElemSet joined = subgroup_generated(g, gens).elements;
      if (seen.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& s : seen) {
    if (!is_a_set(a, s)) fail(ErrorKind::kInternal, "join of A-subgroups is not an A-set");
    out.push_back(subgroup_generated(g, s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  return out;
}

bool is_a_subgroup(const SRing& a, const Subgroup& h) { return is_a_set(a, h.elements); }

Subgroup radical(const AbelianGroup& g, std::span<const Elem> s) {
  if (s.empty()) fail(ErrorKind::kArgument, "radical of the empty set");
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  // g stabilizes s iff s[0] + g lands in s and then every element does.
  std::vector<Elem> stab;
  for (Elem x : s) {
    const Elem h = g.sub(x, s[0]);
    bool ok = true;
    for (Elem y : s)
      if (!in[g.add(y, h)]) {
        ok = false;
        break;
      }
    if (ok) stab.push_back(h);
  }
  return subgroup_generated(g, stab);
}

namespace {

bool prime_power(std::uint32_t n, std::uint32_t& p, std::uint32_t& k) {
  if (n < 2) return false;
  p = 2;
  while (n % p) ++p;
  k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1;
}

}  // namespace

std::optional<PShape> p_shape(const AbelianGroup& g) {
  auto f = g.factors();
  PShape s;
  if (f.size() == 1 && prime_power(f[0], s.p, s.k)) {
    s.cyclic = true;
    return s;
  }
  if (f.size() == 2) {
    std::uint32_t p0, k0;
    if (prime_power(f[0], p0, k0) && k0 == 1 && prime_power(f[1], s.p, s.k) && s.p == p0) return s;
  }
  return std::nullopt;
}

std::vector<std::size_t> highest_basic_sets(const SRing& a) {
  const auto& g = a.group();
  if (!p_shape(g))
    fail(ErrorKind::kShape, "highest basic sets need C_{p^k} or C_p x C_{p^k}, got " + g.to_string());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (Elem x : a.cls(i))
      if (g.element_order(x) == g.exponent()) {
        out.push_back(i);
        break;
      }
  return out;
}

Subgroup sring_radical(const SRing& a) {
  const auto& g = a.group();
  if (g.order() == 1) return trivial_subgroup();
  if (g.num_factors() == 1) {
    // The class of the generator 1; any class of generators gives the same
    // subgroup since such classes are rationally conjugate.
    return radical(g, a.cls(a.class_of(g.generator(0))));
  }
  if (!p_shape(g))
    fail(ErrorKind::kShape, "rad(A) is defined for cyclic groups and C_p x C_{p^k}, got " + g.to_string());
  std::vector<Elem> gens;
  for (auto i : highest_basic_sets(a)) {
    auto r = radical(g, a.cls(i));
    gens.insert(gens.end(), r.elements.begin(), r.elements.end());
  }
  return subgroup_generated(g, gens);
}

SRing quotient_sring(const SRing& a, const Section& s) {
  if (!is_a_subgroup(a, s.upper)) fail(ErrorKind::kNotASection, "U is not an A-subgroup");
  if (!is_a_subgroup(a, s.lower)) fail(ErrorKind::kNotASection, "L is not an A-subgroup");
  std::set<ElemSet> images;
  for (const auto& c : a.classes()) {
    if (!s.upper.contains(c[0])) continue;
    ElemSet img;
    for (Elem x : c) img.push_back(s.project(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    images.insert(std::move(img));
  }
  return SRing::validate(s.quotient, std::vector<ElemSet>(images.begin(), images.end()));
}

std::vector<std::size_t> rational_conjugate(const SRing& a, std::int64_t m) {
  const auto& g = a.group();
  const std::int64_t n = g.order();
  if (std::gcd(((m % n) + n) % n, n) != 1 && n > 1)
    fail(ErrorKind::kArgument, "power " + std::to_string(m) + " is not coprime to the group order");
  std::vector<std::size_t> perm(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    ElemSet img = power_image(g, a.cls(i), m);
    const std::size_t j = a.class_of(img[0]);
    if (a.cls(j) != img) fail(ErrorKind::kInternal, "image of a class under a power map is not a class");
    perm[i] = j;
  }
  return perm;
}

ElemSet power_set_p(const SRing& a, std::size_t x, std::uint32_t p) {
  const auto& g = a.group();
  std::uint32_t q, k;
  if (!prime_power(p, q, k) || k != 1) fail(ErrorKind::kArgument, std::to_string(p) + " is not prime");
  if (g.order() % p) fail(ErrorKind::kArgument, std::to_string(p) + " does not divide |G|");
  const ElemSet& cls = a.cls(x);
  std::vector<char> in(g.order(), 0);
  for (Elem y : cls) in[y] = 1;
  std::vector<Elem> h;
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(p, y) == 0) h.push_back(y);
  ElemSet out;
  for (Elem y : cls) {
    std::uint32_t meet = 0;
    for (Elem t : h) meet += in[g.add(y, t)];
    if (meet % p) out.push_back(g.mul(p, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!is_a_set(a, out)) fail(ErrorKind::kInternal, "X^[p] is not an A-set");
  return out;
}

bool is_quasi_thin(const SRing& a) {
  for (const auto& c : a.classes())
    if (c.size() > 2) return false;
  return true;
}

std::optional<Subgroup> klein_obstruction(const SRing& a) {
  const auto& g = a.group();
  for (const auto& h : a_subgroups(a)) {
    if (h.order() != 4) continue;
    bool klein = true;
    for (Elem x : h.elements) klein &= g.element_order(x) <= 2;
    if (!klein) continue;
    bool thin_h = true;
    for (Elem x : h.elements) thin_h &= a.cls(a.class_of(x)).size() == 1;
    if (!thin_h) continue;
    auto s = quotient(g, h);
    if (quotient_sring(a, s).rank() == s.quotient.order()) return h;
  }
  return std::nullopt;
}

bool is_symmetric(const SRing& a) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.inverse_index(i) != i) return false;
  return true;
}

std::vector<std::uint32_t> valency_profile(const SRing& a) {
  std::set<std::uint32_t> s;
  for (const auto& c : a.classes()) s.insert(static_cast<std::uint32_t>(c.size()));
  return {s.begin(), s.end()};
}

std::string to_text(const SRing& a, bool with_tensor) {
  std::ostringstream out;
  const auto& g = a.group();
  out << "sring " << g.to_string() << " rank=" << a.rank() << "\n";
  for (const auto& c : a.classes()) out << g.format(c) << "\n";
  if (with_tensor) {
    const std::size_t r = a.rank();
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        for (std::size_t z = 0; z < r; ++z)
          if (auto c = a.constant(x, y, z))
            out << "c " << x << " " << y << " " << z << " = " << c << "\n";
  }
  return out.str();
}

SRing parse_sring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<AbelianGroup> g;
  std::size_t rank = 0;
  std::vector<ElemSet> classes;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!g) {
      std::istringstream hs(line);
      std::string kw, lit, rk;
      hs >> kw >> lit >> rk;
      if (kw != "sring" || rk.rfind("rank=", 0) != 0)
        fail(ErrorKind::kParse, "expected header 'sring <group> rank=<r>'");
      g = AbelianGroup::parse(lit);
      try {
        rank = std::stoul(rk.substr(5));
      } catch (const std::exception&) {
        fail(ErrorKind::kParse, "bad rank in header");
      }
      continue;
    }
    if (line.rfind("c ", 0) == 0) continue;
    ElemSet cls;
    std::size_t pos = 0;
    while (pos < line.size()) {
      auto open = line.find('(', pos);
      if (open == std::string::npos) {
        if (line.find_first_not_of(' ', pos) != std::string::npos)
          fail(ErrorKind::kParse, "stray text in class line '" + line + "'");
        break;
      }
      auto close = line.find(')', open);
      if (close == std::string::npos) fail(ErrorKind::kParse, "unterminated element literal");
      cls.push_back(g->parse_element(line.substr(open, close - open + 1)));
      pos = close + 1;
    }
    classes.push_back(std::move(cls));
  }
  if (!g) fail(ErrorKind::kParse, "missing header");
  if (classes.size() != rank)
    fail(ErrorKind::kParse, "header says rank " + std::to_string(rank) + " but found " +
                                std::to_string(classes.size()) + " classes");
  return SRing::validate(*g, std::move(classes));
}

}  // namespace srings
