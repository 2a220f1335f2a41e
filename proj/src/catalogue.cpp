#include "srings/catalogue.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "srings/construct.hpp"
#include "srings/error.hpp"
#include "srings/wl.hpp"

namespace srings {

// ---------------------------------------------------------------- tables

const std::vector<TableEntry>& table_rows(std::uint32_t p) {
  static const std::vector<TableEntry> two = {
      {2, 0, {"(a,b)->(a,b)"}, 1, 2},
      {2, 1, {"(a,b)->(a^{-1},b)"}, 2, 3},
      {2, 2, {"(a,b)->(a_1a^{-1},b)"}, 2, 3},
      {2, 3, {"(a,b)->(a^{-1},ba_1)"}, 2, 3},
      {2, 4, {"(a,b)->(a_1a^{-1},ba_1)"}, 2, 3},
      {2, 5, {"(a,b)->(ba_2a,ba_1)", "(a,b)->(a^{-1},b)"}, 4, 4},
      {2, 6, {"(a,b)->(ba_2a,ba_1)", "(a,b)->(a_1a^{-1},b)"}, 4, 4},
      {2, 7, {"(a,b)->(ba^{-1},b)"}, 2, 4},
      {2, 8, {"(a,b)->(ba_1a^{-1},b)"}, 2, 4},
      {2, 9, {"(a,b)->(ba_2a,ba_1)"}, 2, 3},
      {2, 10, {"(a,b)->(ba_2a^{-1},ba_1)"}, 2, 4},
  };
  static const std::vector<TableEntry> three = {
      {3, 0, {"(a,b)->(a,b)"}, 1, 2},
      {3, 1, {"(a,b)->(a,b^2)"}, 2, 2},
      {3, 2, {"(a,b)->(a^{-1},b)"}, 2, 2},
      {3, 3, {"(a,b)->(a^{-1},b)", "(a,b)->(a,b^2)"}, 4, 2},
      {3, 4, {"(a,b)->(a^{-1},b^2)"}, 2, 2},
      {3, 5, {"(a,b)->(ba^{-1},b)"}, 2, 2},
      {3, 6, {"(a,b)->(ba,ba_1)"}, 3, 3},
      {3, 7, {"(a,b)->(ba,ba_1)", "(a,b)->(a,b^2a_1)"}, 6, 3},
      {3, 8, {"(a,b)->(ba,ba_1^2)", "(a,b)->(a^{-1},ba_1)"}, 6, 3},
      {3, 9, {"(a,b)->(ba,ba_1^2)", "(a,b)->(a^{-1},b^2)"}, 6, 3},
  };
  if (p == 2) return two;
  if (p == 3) return three;
  fail(ErrorKind::kArgument, "tables exist for p = 2 and p = 3 only");
}

const TableEntry& table_row(std::uint32_t p, std::uint32_t i) {
  const auto& rows = table_rows(p);
  if (i >= rows.size()) fail(ErrorKind::kArgument, "no row K_" + std::to_string(i) + " for p = " + std::to_string(p));
  return rows[i];
}

AbelianGroup table_group(std::uint32_t p, std::uint32_t k) {
  if (p != 2 && p != 3) fail(ErrorKind::kArgument, "p must be 2 or 3");
  if (k < 1) fail(ErrorKind::kArgument, "k must be at least 1");
  std::uint32_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= p;
  return AbelianGroup::make({p, pk});
}

namespace {

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Symbols {
  Elem a, b, a1, a2;
  bool has_a2;
};

Symbols table_symbols(const AbelianGroup& d, std::uint32_t p, std::uint32_t k) {
  Symbols s;
  const std::int64_t ca[2] = {0, 1}, cb[2] = {1, 0};
  s.a = d.from_coords(ca);
  s.b = d.from_coords(cb);
  s.a1 = d.mul(ipow(p, k - 1), s.a);
  s.has_a2 = k >= 2;
  s.a2 = s.has_a2 ? d.mul(ipow(p, k - 2), s.a) : 0;
  return s;
}

class WordParser {
 public:
  WordParser(std::string_view text, const AbelianGroup& d, const Symbols& sym)
      : t_(text), d_(d), sym_(sym) {}

  // (a,b)->(w1,w2): returns the images of a and b.
  std::pair<Elem, Elem> map() {
    expect("(a,b)->(");
    const Elem wa = word(',');
    expect(",");
    const Elem wb = word(')');
    expect(")");
    skip_space();
    if (pos_ != t_.size()) bad("trailing text");
    return {wa, wb};
  }

 private:
  void skip_space() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  void expect(std::string_view lit) {
    for (char c : lit) {
      skip_space();
      if (pos_ >= t_.size() || t_[pos_] != c) bad(std::string("expected '") + c + "'");
      ++pos_;
    }
  }
  [[noreturn]] void bad(const std::string& why) const {
    fail(ErrorKind::kParse, "bad table map '" + std::string(t_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  std::int64_t exponent() {
    if (pos_ >= t_.size() || t_[pos_] != '^') return 1;
    ++pos_;
    const bool braced = pos_ < t_.size() && t_[pos_] == '{';
    if (braced) ++pos_;
    std::size_t start = pos_;
    if (pos_ < t_.size() && t_[pos_] == '-') ++pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && t_[start] == '-')) bad("missing exponent");
    const std::int64_t e = std::stoll(std::string(t_.substr(start, pos_ - start)));
    if (braced) {
      if (pos_ >= t_.size() || t_[pos_] != '}') bad("missing '}'");
      ++pos_;
    }
    return e;
  }
  Elem word(char stop) {
    skip_space();
    Elem acc = 0;
    bool any = false;
    while (pos_ < t_.size() && t_[pos_] != stop) {
      Elem base;
      if (t_[pos_] == 'b') {
        base = sym_.b;
        ++pos_;
      } else if (t_[pos_] == 'a') {
        ++pos_;
        base = sym_.a;
        if (pos_ < t_.size() && t_[pos_] == '_') {
          ++pos_;
          if (pos_ >= t_.size()) bad("missing subscript");
          if (t_[pos_] == '1') {
            base = sym_.a1;
          } else if (t_[pos_] == '2') {
            if (!sym_.has_a2) bad("a_2 needs k >= 2");
            base = sym_.a2;
          } else {
            bad("unknown subscript");
          }
          ++pos_;
        }
      } else {
        bad("unexpected character");
      }
      acc = d_.add(acc, d_.mul(exponent(), base));
      any = true;
      skip_space();
    }
    if (!any) bad("empty word");
    return acc;
  }

  std::string_view t_;
  const AbelianGroup& d_;
  const Symbols& sym_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupHom compile_table_map(std::uint32_t p, std::uint32_t k, std::string_view formal) {
  AbelianGroup d = table_group(p, k);
  Symbols sym = table_symbols(d, p, k);
  auto [wa, wb] = WordParser(formal, d, sym).map();
  // generators of D in factor order: b, then a
  GroupHom h = make_hom(d, d, {wb, wa});
  if (!h.is_bijective()) fail(ErrorKind::kArgument, "table map " + std::string(formal) + " is not an automorphism");
  return h;
}

std::vector<GroupHom> table_entry(std::uint32_t p, std::uint32_t i, std::uint32_t k) {
  const TableEntry& row = table_row(p, i);
  if (k < row.min_k)
    fail(ErrorKind::kAdmissibility, "K_" + std::to_string(i) + " for p = " + std::to_string(p) + " needs k >= " +
                                        std::to_string(row.min_k) + ", got " + std::to_string(k));
  std::vector<GroupHom> out;
  for (const auto& f : row.generators) out.push_back(compile_table_map(p, k, f));
  return out;
}

SRing table_sring(std::uint32_t p, std::uint32_t i, std::uint32_t k) {
  auto gens = table_entry(p, i, k);
  return cyclotomic(table_group(p, k), gens);
}

// ---------------------------------------------------------- enumeration

namespace {

using Mask = std::uint64_t;

Mask bit(Elem x) { return Mask{1} << x; }

ElemSet to_set(Mask m) {
  ElemSet s;
  while (m) {
    s.push_back(static_cast<Elem>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

Mask apply_table(Mask m, const std::vector<Elem>& t) {
  Mask r = 0;
  while (m) {
    r |= bit(t[std::countr_zero(m)]);
    m &= m - 1;
  }
  return r;
}

// Distinct maps x -> m x for m coprime to the exponent; identity first.
std::vector<std::vector<Elem>> power_tables(const AbelianGroup& g) {
  std::vector<std::vector<Elem>> out;
  const std::uint32_t e = g.exponent();
  for (std::uint32_t m = 1; m <= std::max<std::uint32_t>(e, 1); ++m) {
    if (std::gcd(m, e) != 1) continue;
    std::vector<Elem> t(g.order());
    for (Elem x = 0; x < g.order(); ++x) t[x] = g.mul(m, x);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

// For blocks that are to be basic sets, the number of ways to write z as
// x + y (x, y in two blocks) must be constant on every block. Only triples
// touching blocks[from..] are checked.
bool products_constant(const AbelianGroup& g, const std::vector<Mask>& blocks, std::size_t from) {
  const std::size_t b = blocks.size();
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> cnt(n);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i; j < b; ++j) {
      const bool new_pair = i >= from || j >= from;
      std::fill(cnt.begin(), cnt.end(), 0);
      for (Mask x = blocks[i]; x; x &= x - 1)
        for (Mask y = blocks[j]; y; y &= y - 1)
          ++cnt[g.add(static_cast<Elem>(std::countr_zero(x)), static_cast<Elem>(std::countr_zero(y)))];
      for (std::size_t k = new_pair ? 0 : from; k < b; ++k) {
        Mask z = blocks[k];
        const std::uint32_t v = cnt[std::countr_zero(z)];
        for (z &= z - 1; z; z &= z - 1)
          if (cnt[std::countr_zero(z)] != v) return false;
      }
    }
  return true;
}

// Raw search: the class of the least uncovered element ranges over all
// subsets of the uncovered elements; its power-map images join it, and the
// product counts of all blocks so far must be constant on every block.
class PartitionSearch {
 public:
  explicit PartitionSearch(const AbelianGroup& g) : g_(g), n_(g.order()), pw_(power_tables(g)) {}

  std::vector<std::vector<Mask>> run() {
    blocks_ = {bit(0)};
    const Mask all = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
    rec(all & ~bit(0));
    return std::move(found_);
  }

 private:
  void rec(Mask unc) {
    if (!unc) {
      found_.push_back(blocks_);
      return;
    }
    const Elem z = static_cast<Elem>(std::countr_zero(unc));
    const ElemSet rest = to_set(unc & ~bit(z));
    const std::uint64_t count = std::uint64_t{1} << rest.size();
    for (std::uint64_t sub = 0; sub < count; ++sub) {
      Mask x = bit(z);
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (sub >> i & 1) x |= bit(rest[i]);
      const std::size_t from = blocks_.size();
      Mask used = 0;
      bool ok = true;
      for (const auto& t : pw_) {
        const Mask img = apply_table(x, t);
        if ((img & unc) != img) {
          ok = false;
          break;
        }
        if (img & used) {
          if (std::find(blocks_.begin() + from, blocks_.end(), img) == blocks_.end()) {
            ok = false;
            break;
          }
          continue;
        }
        blocks_.push_back(img);
        used |= img;
      }
      if (ok && products_constant(g_, blocks_, from)) rec(unc & ~used);
      blocks_.resize(from);
    }
  }

  const AbelianGroup& g_;
  std::uint32_t n_;
  std::vector<std::vector<Elem>> pw_;
  std::vector<Mask> blocks_;
  std::vector<std::vector<Mask>> found_;
};

// Subgroups of the power-map group, each as a sorted list of table indices.
std::vector<std::vector<std::size_t>> power_subgroups(const std::vector<std::vector<Elem>>& pw) {
  const std::size_t m = pw.size();
  auto index_of = [&](const std::vector<Elem>& t) {
    return static_cast<std::size_t>(std::find(pw.begin(), pw.end(), t) - pw.begin());
  };
  std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Elem> t(pw[i].size());
      for (std::size_t x = 0; x < t.size(); ++x) t[x] = pw[j][pw[i][x]];
      mul[i][j] = index_of(t);
    }
  auto close = [&](std::vector<std::size_t> s) {
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
          const std::size_t c = mul[s[i]][s[j]];
          if (std::find(s.begin(), s.end(), c) == s.end()) {
            s.push_back(c);
            grew = true;
          }
        }
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<std::size_t>> subs = {{0}};
  for (std::size_t done = 0; done < subs.size(); ++done)
    for (std::size_t x = 0; x < m; ++x) {
      auto s = subs[done];
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      s.push_back(x);
      s = close(std::move(s));
      if (std::find(subs.begin(), subs.end(), s) == subs.end()) subs.push_back(std::move(s));
    }
  return subs;
}

inline constexpr std::uint64_t kMaxGoodSetCandidates = std::uint64_t{1} << 24;

// Sets X (e not in X) that are basic sets of the S-ring they generate.
//
// By the power-map property every m X is equal to X or disjoint from it, so
// with H the stabilizer of X in the power-map group, X meets each orbit of
// that group in at most one H-orbit, and only orbits whose point stabilizer
// lies in H. Candidates are listed per H, reduced to Aut(G)-orbits, and one
// closure per orbit decides.
std::vector<Mask> good_sets(const AbelianGroup& g) {
  const std::uint32_t n = g.order();
  const auto pw = power_tables(g);
  const auto subs = power_subgroups(pw);

  // orbits of the power-map group on G \ {e}
  std::vector<int> orbit_id(n, -1);
  std::vector<ElemSet> orbits;
  for (Elem x = 1; x < n; ++x) {
    if (orbit_id[x] >= 0) continue;
    ElemSet o;
    for (const auto& t : pw)
      if (std::find(o.begin(), o.end(), t[x]) == o.end()) o.push_back(t[x]);
    for (Elem y : o) orbit_id[y] = static_cast<int>(orbits.size());
    orbits.push_back(o);
  }

  struct Choice {
    std::vector<Mask> options;  // the H-orbits inside one power-map orbit
  };
  std::vector<std::vector<Choice>> per_h;
  std::uint64_t total = 0;
  for (const auto& h : subs) {
    std::vector<Choice> choices;
    for (const auto& o : orbits) {
      const Elem x = o[0];
      bool stab_inside = true;
      for (std::size_t m = 0; m < pw.size() && stab_inside; ++m)
        if (pw[m][x] == x && !std::binary_search(h.begin(), h.end(), m)) stab_inside = false;
      if (!stab_inside) continue;
      Choice c;
      Mask covered = 0;
      for (Elem y : o) {
        if (covered & bit(y)) continue;
        Mask hy = 0;
        for (std::size_t m : h) hy |= bit(pw[m][y]);
        covered |= hy;
        c.options.push_back(hy);
      }
      choices.push_back(std::move(c));
    }
    std::uint64_t prod = 1;
    for (const auto& c : choices) {
      prod *= c.options.size() + 1;
      if (prod > kMaxGoodSetCandidates) fail(ErrorKind::kSize, "too many candidate basic sets over " + g.to_string());
    }
    total += prod;
    if (total > kMaxGoodSetCandidates) fail(ErrorKind::kSize, "too many candidate basic sets over " + g.to_string());
    per_h.push_back(std::move(choices));
  }

  std::vector<std::vector<Elem>> auts;
  for_each_hom(g, g, true, [&](const GroupHom& f) {
    auts.push_back(f.table());
    return true;
  });

  std::unordered_set<Mask> seen;
  seen.reserve(static_cast<std::size_t>(total));
  std::vector<Mask> good;
  auto consider = [&](Mask x) {
    if (!x || seen.count(x)) return;
    std::vector<Mask> orbit;
    for (const auto& t : auts) {
      const Mask y = apply_table(x, t);
      if (seen.insert(y).second) orbit.push_back(y);
    }
    const ElemSet s = to_set(x);
    auto cs = cayley_scheme(g, std::span<const ElemSet>(&s, 1), 0);
    const auto& cls = cs.ring.classes();
    if (std::find(cls.begin(), cls.end(), s) != cls.end()) good.insert(good.end(), orbit.begin(), orbit.end());
  };
  for (const auto& choices : per_h) {
    // mixed-radix counter over (none | option i) for each orbit
    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
      Mask x = 0;
      for (std::size_t j = 0; j < choices.size(); ++j)
        if (digit[j]) x |= choices[j].options[digit[j] - 1];
      consider(x);
      std::size_t j = 0;
      while (j < choices.size() && ++digit[j] > choices[j].options.size()) digit[j++] = 0;
      if (j == choices.size()) break;
    }
  }
  std::sort(good.begin(), good.end());
  return good;
}

// Exact cover of G \ {e} by good sets; a partial cover survives only if every
// chosen set is still a basic set of the S-ring generated by all of them.
class GoodSetCover {
 public:
  explicit GoodSetCover(const AbelianGroup& g) : g_(g), n_(g.order()), pw_(power_tables(g)) {}

  std::vector<std::vector<Mask>> run() {
    good_ = good_sets(g_);
    by_low_.assign(n_, {});
    for (Mask x : good_) by_low_[std::countr_zero(x)].push_back(x);
    chosen_ = {bit(0)};
    const Mask all = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
    rec(all & ~bit(0));
    return std::move(found_);
  }

 private:
  bool consistent() const {
    std::vector<ElemSet> seeds;
    for (std::size_t i = 1; i < chosen_.size(); ++i) seeds.push_back(to_set(chosen_[i]));
    auto cs = cayley_scheme(g_, seeds, 0);
    for (const auto& s : seeds)
      if (cs.ring.cls(cs.ring.class_of(s[0])) != s) return false;
    return true;
  }

  void rec(Mask unc) {
    if (!unc) {
      found_.push_back(chosen_);
      return;
    }
    const Elem z = static_cast<Elem>(std::countr_zero(unc));
    for (Mask x : by_low_[z]) {
      if ((x & unc) != x) continue;
      const std::size_t from = chosen_.size();
      Mask used = 0;
      bool ok = true;
      for (const auto& t : pw_) {
        const Mask img = apply_table(x, t);
        if ((img & unc) != img) {
          ok = false;
          break;
        }
        if (img & used) continue;  // equal to an earlier image
        chosen_.push_back(img);
        used |= img;
      }
      if (ok && products_constant(g_, chosen_, from) && consistent()) rec(unc & ~used);
      chosen_.resize(from);
    }
  }

  const AbelianGroup& g_;
  std::uint32_t n_;
  std::vector<std::vector<Elem>> pw_;
  std::vector<Mask> good_;
  std::vector<std::vector<Mask>> by_low_;
  std::vector<Mask> chosen_;
  std::vector<std::vector<Mask>> found_;
};

}  // namespace

std::vector<SRing> enumerate_srings(const AbelianGroup& g, EnumMethod method) {
  const std::uint32_t n = g.order();
  if (method == EnumMethod::kAuto) method = n <= kPartitionSearchMaxOrder ? EnumMethod::kPartition : EnumMethod::kGoodSets;
  if (method == EnumMethod::kPartition && n > kPartitionSearchMaxOrder)
    fail(ErrorKind::kSize, "partition search is limited to order " + std::to_string(kPartitionSearchMaxOrder));
  if (n > kEnumerationMaxOrder)
    fail(ErrorKind::kSize, "S-ring enumeration is limited to order " + std::to_string(kEnumerationMaxOrder));
  if (n == 1) return {SRing::validate(g, {{0}})};
  std::vector<std::vector<Mask>> parts =
      method == EnumMethod::kPartition ? PartitionSearch(g).run() : GoodSetCover(g).run();
  std::vector<SRing> out;
  out.reserve(parts.size());
  for (const auto& p : parts) {
    std::vector<ElemSet> classes;
    for (Mask m : p) classes.push_back(to_set(m));
    out.push_back(SRing::validate(g, std::move(classes)));
  }
  std::sort(out.begin(), out.end(), [](const SRing& x, const SRing& y) { return x.classes() < y.classes(); });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) fail(ErrorKind::kInternal, "enumeration produced a duplicate S-ring");
  return out;
}

SRing transport(const SRing& a, const GroupHom& f) {
  if (!(f.source == a.group()) || !f.is_bijective()) fail(ErrorKind::kArgument, "transport needs a bijection of the group");
  const auto t = f.table();
  std::vector<ElemSet> classes;
  for (const auto& c : a.classes()) {
    ElemSet s;
    for (Elem x : c) s.push_back(t[x]);
    std::sort(s.begin(), s.end());
    classes.push_back(std::move(s));
  }
  return SRing::validate(f.target, std::move(classes));
}

namespace {

// Class labels renumbered by first appearance.
std::vector<std::uint32_t> partition_key(const std::vector<std::uint32_t>& label) {
  std::vector<std::uint32_t> remap(label.size() + 1, ~0u), out(label.size());
  std::uint32_t next = 0;
  for (std::size_t x = 0; x < label.size(); ++x) {
    auto& r = remap[label[x]];
    if (r == ~0u) r = next++;
    out[x] = r;
  }
  return out;
}

std::vector<std::uint32_t> class_labels(const SRing& a) {
  std::vector<std::uint32_t> l(a.group().order());
  for (Elem x = 0; x < l.size(); ++x) l[x] = static_cast<std::uint32_t>(a.class_of(x));
  return l;
}

std::vector<std::uint32_t> sorted_sizes(const SRing& a) {
  std::vector<std::uint32_t> s;
  for (const auto& c : a.classes()) s.push_back(static_cast<std::uint32_t>(c.size()));
  std::sort(s.begin(), s.end());
  return s;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

bool maps_onto(const SRing& a, const SRing& b, const std::vector<Elem>& t) {
  for (const auto& c : a.classes()) {
    const std::size_t target = b.class_of(t[c[0]]);
    if (b.cls(target).size() != c.size()) return false;
    for (Elem x : c)
      if (b.class_of(t[x]) != target) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> cayley_classes(const std::vector<SRing>& srings) {
  std::vector<std::vector<std::size_t>> out;
  if (srings.empty()) return out;
  const AbelianGroup& g = srings[0].group();
  for (const auto& a : srings)
    if (!(a.group() == g)) fail(ErrorKind::kArgument, "cayley_classes needs S-rings over one group");
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> index;
  for (std::size_t i = 0; i < srings.size(); ++i) index.emplace(partition_key(class_labels(srings[i])), i);
  std::vector<std::vector<Elem>> auts;
  for_each_hom(g, g, true, [&](const GroupHom& f) {
    auts.push_back(f.table());
    return true;
  });
  std::vector<char> done(srings.size(), 0);
  for (std::size_t i = 0; i < srings.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> members;
    const auto labels = class_labels(srings[i]);
    std::vector<std::uint32_t> img(labels.size());
    for (const auto& t : auts) {
      for (Elem x = 0; x < labels.size(); ++x) img[t[x]] = labels[x];
      auto it = index.find(partition_key(img));
      if (it == index.end()) fail(ErrorKind::kInternal, "image of an S-ring is missing from the list");
      if (!done[it->second]) {
        done[it->second] = 1;
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<GroupHom> find_cayley_iso(const SRing& a, const SRing& b) {
  if (!(a.group() == b.group()) || a.rank() != b.rank() || sorted_sizes(a) != sorted_sizes(b)) return std::nullopt;
  std::optional<GroupHom> out;
  for_each_hom(a.group(), b.group(), true, [&](const GroupHom& f) {
    if (!maps_onto(a, b, f.table())) return true;
    out = f;
    return false;
  });
  return out;
}

// -------------------------------------------------------- classification

std::string to_string(Statement s) {
  switch (s) {
    case Statement::kElementRank2: return "element-1";
    case Statement::kElementTensor: return "element-2";
    case Statement::kElementWreath: return "element-3";
    case Statement::kElementInversion: return "element-4";
    case Statement::kElementCyclotomic: return "element-5";
    case Statement::kTensorSplit: return "tensor-split";
    case Statement::kGeneralizedWreath: return "gwr";
    case Statement::kCyclotomic: return "cyclotomic";
  }
  return "?";
}

bool is_tensor_split(const SRing& a, const Subgroup& h, const Subgroup& l) {
  const auto& g = a.group();
  if (h.order() * l.order() != g.order() || !is_a_subgroup(a, h) || !is_a_subgroup(a, l)) return false;
  for (Elem x : h.elements)
    if (x != 0 && l.contains(x)) return false;
  std::vector<ElemSet> ch, cl;
  for (const auto& c : a.classes()) {
    if (h.contains(c[0])) ch.push_back(c);
    if (l.contains(c[0])) cl.push_back(c);
  }
  std::size_t products = 0;
  for (const auto& x : ch)
    for (const auto& y : cl) {
      ElemSet s;
      for (Elem u : x)
        for (Elem v : y) s.push_back(g.add(u, v));
      std::sort(s.begin(), s.end());
      const std::size_t c = a.class_of(s[0]);
      if (a.cls(c) != s) return false;
      ++products;
    }
  return products == a.rank();
}

namespace {

std::size_t classes_inside(const SRing& a, const Subgroup& h) {
  std::size_t r = 0;
  for (const auto& c : a.classes()) r += h.contains(c[0]);
  return r;
}

// p = 3, k = 1: sigma: (a_1, b) -> (b, a_1^2).
SRing element_cyclotomic(const AbelianGroup& d) {
  const std::int64_t ca[2] = {0, 1}, cb[2] = {1, 0};
  const Elem a = d.from_coords(ca), b = d.from_coords(cb);
  GroupHom sigma = make_hom(d, d, {d.mul(2, a), b});
  return cyclotomic(d, std::span<const GroupHom>(&sigma, 1));
}

SRing element_inversion(const AbelianGroup& d) {
  std::vector<Elem> img;
  for (std::size_t i = 0; i < d.num_factors(); ++i) img.push_back(d.neg(d.generator(i)));
  GroupHom delta = make_hom(d, d, img);
  return cyclotomic(d, std::span<const GroupHom>(&delta, 1));
}

bool gwr_extra_condition(const SRing& a, const Section& s, std::uint32_t p) {
  const std::size_t ul = s.upper.order() / s.lower.order();
  if (ul <= 4) return true;
  if (quotient_sring(a, s).rank() == ul) return true;
  if (s.lower.order() != p) return false;
  try {
    Section u = quotient(a.group(), s.upper, trivial_subgroup());
    return sring_radical(quotient_sring(a, u)).order() == 1;
  } catch (const Error&) {
    return false;
  }
}

PShape require_shape(const AbelianGroup& g) {
  auto shape = p_shape(g);
  if (!shape || shape->cyclic || (shape->p != 2 && shape->p != 3) || g.num_factors() != 2)
    fail(ErrorKind::kShape, "classification needs C_p x C_{p^k} with p in {2,3}, got " + g.to_string());
  return *shape;
}

}  // namespace

ClassificationVerdict classify(const SRing& a) {
  const auto& g = a.group();
  const PShape shape = require_shape(g);
  const std::uint32_t p = shape.p, k = shape.k;
  const auto subs = a_subgroups(a);
  ClassificationVerdict v;

  if (k == 1) {
    if (a.rank() == 2) {
      v.statement = Statement::kElementRank2;
      return v;
    }
    for (const auto& h : subs)
      for (const auto& l : subs)
        if (h.order() == p && l.order() == p && !(h == l) && is_tensor_split(a, h, l)) {
          v.statement = Statement::kElementTensor;
          v.h = h;
          v.l = l;
          return v;
        }
    for (const auto& l : subs)
      if (l.order() == p && is_gwr(a, l, l)) {
        v.statement = Statement::kElementWreath;
        v.l = l;
        return v;
      }
    if (p == 3) {
      if (a == element_inversion(g)) {
        v.statement = Statement::kElementInversion;
        return v;
      }
      if (auto f = find_cayley_iso(element_cyclotomic(g), a)) {
        v.statement = Statement::kElementCyclotomic;
        v.cayley_iso = *f;
        return v;
      }
    }
    fail(ErrorKind::kClassificationFailure, "no statement holds for\n" + to_text(a));
  }

  const bool trivial_radical = sring_radical(a).order() == 1;
  if (trivial_radical) {
    for (const auto& h : subs)
      for (const auto& l : subs)
        if (l.order() <= p && p <= h.order() && h.order() * l.order() == g.order() && classes_inside(a, h) == 2 &&
            is_tensor_split(a, h, l)) {
          v.statement = Statement::kTensorSplit;
          v.h = h;
          v.l = l;
          return v;
        }
  } else {
    for (const auto& w : gwr_sections(a))
      if (w.proper && gwr_extra_condition(a, w.section, p)) {
        v.statement = Statement::kGeneralizedWreath;
        v.section = w.section;
        return v;
      }
  }
  if (trivial_radical) {
    for (const auto& row : table_rows(p)) {
      if (k < row.min_k) continue;
      if (auto f = find_cayley_iso(table_sring(p, row.index, k), a)) {
        v.statement = Statement::kCyclotomic;
        v.table_index = row.index;
        v.cayley_iso = *f;
        return v;
      }
    }
  }
  fail(ErrorKind::kClassificationFailure, "no statement holds for\n" + to_text(a));
}

std::string check_verdict(const SRing& a, const ClassificationVerdict& v) {
  const auto& g = a.group();
  const PShape shape = require_shape(g);
  const std::uint32_t p = shape.p, k = shape.k;
  const bool element = v.statement == Statement::kElementRank2 || v.statement == Statement::kElementTensor ||
                       v.statement == Statement::kElementWreath || v.statement == Statement::kElementInversion ||
                       v.statement == Statement::kElementCyclotomic;
  if (element != (k == 1)) return "statement does not fit k";
  auto image_is = [&](const SRing& b) {
    return v.cayley_iso && v.cayley_iso->source == g && v.cayley_iso->is_bijective() &&
           maps_onto(b, a, v.cayley_iso->table());
  };
  switch (v.statement) {
    case Statement::kElementRank2:
      return a.rank() == 2 ? "" : "rank is not 2";
    case Statement::kElementTensor:
      if (!v.h || !v.l || v.h->order() != p || v.l->order() != p) return "factors are not of order p";
      return is_tensor_split(a, *v.h, *v.l) ? "" : "not a tensor product";
    case Statement::kElementWreath:
      if (!v.l || v.l->order() != p) return "L is not of order p";
      return is_a_subgroup(a, *v.l) && is_gwr(a, *v.l, *v.l) ? "" : "not a wreath product";
    case Statement::kElementInversion:
      return p == 3 && a == element_inversion(g) ? "" : "not the inversion S-ring";
    case Statement::kElementCyclotomic:
      return p == 3 && image_is(element_cyclotomic(g)) ? "" : "Cayley isomorphism check failed";
    case Statement::kTensorSplit:
      if (sring_radical(a).order() != 1) return "radical is not trivial";
      if (!v.h || !v.l) return "missing factors";
      if (!(v.l->order() <= p && p <= v.h->order())) return "factor orders out of range";
      if (classes_inside(a, *v.h) != 2) return "A_H is not of rank 2";
      return is_tensor_split(a, *v.h, *v.l) ? "" : "not a tensor product";
    case Statement::kGeneralizedWreath: {
      if (sring_radical(a).order() == 1) return "radical is trivial";
      if (!v.section) return "missing section";
      const auto& s = *v.section;
      if (s.lower.order() == 1 || s.upper.order() == g.order()) return "section is not proper";
      if (!is_a_subgroup(a, s.upper) || !is_a_subgroup(a, s.lower) || !is_gwr(a, s.upper, s.lower))
        return "not a generalized wreath product";
      return gwr_extra_condition(a, s, p) ? "" : "section condition fails";
    }
    case Statement::kCyclotomic:
      if (sring_radical(a).order() != 1) return "radical is not trivial";
      if (!v.table_index || *v.table_index >= table_rows(p).size() || k < table_row(p, *v.table_index).min_k)
        return "bad table index";
      return image_is(table_sring(p, *v.table_index, k)) ? "" : "Cayley isomorphism check failed";
  }
  return "unknown statement";
}

// ----------------------------------------------------------- separability

std::vector<SeparabilityTarget> separability_targets(std::uint32_t order) {
  std::vector<SeparabilityTarget> out;
  for (const auto& h : abelian_groups_of_order(order)) out.push_back({h, enumerate_srings(h)});
  return out;
}

std::string to_string(PhiVerdict v) {
  switch (v) {
    case PhiVerdict::kInduced: return "induced";
    case PhiVerdict::kEmpty: return "empty";
    case PhiVerdict::kError: return "error";
  }
  return "?";
}

SeparabilityReport check_separability(const SRing& a, const std::vector<SeparabilityTarget>& targets,
                                      const SeparabilityOptions& opts) {
  SeparabilityReport rep;
  const auto sizes = sorted_sizes(a);
  for (const auto& t : targets) {
    if (t.group.order() != a.group().order()) continue;
    for (std::size_t j = 0; j < t.srings.size(); ++j) {
      const SRing& b = t.srings[j];
      if (b.rank() != a.rank() || sorted_sizes(b) != sizes) continue;
      std::size_t phi_index = 0;
      for_each_algiso(a, b, [&](const AlgebraicIso& phi) {
        SeparabilityLine line{t.group.to_string(), j, phi_index++, PhiVerdict::kError, std::nullopt, ""};
        try {
          auto cert = find_inducing_iso(a, b, phi, opts.cascade);
          if (cert) {
            line.verdict = PhiVerdict::kInduced;
            line.method = cert->method;
          } else if (opts.cascade.use_brute) {
            line.verdict = PhiVerdict::kEmpty;
          } else {
            line.detail = "undecided without brute force";
          }
          if (opts.confirm_with_brute && line.verdict != PhiVerdict::kError) {
            auto f = find_inducing_iso_bruteforce(a, b, phi, opts.brute_max_order);
            if (f.has_value() != (line.verdict == PhiVerdict::kInduced)) {
              line.verdict = PhiVerdict::kError;
              line.detail = "cascade and brute force disagree";
            }
          }
        } catch (const Error& e) {
          line.verdict = PhiVerdict::kError;
          line.detail = e.what();
        }
        if (line.verdict != PhiVerdict::kInduced) rep.separable = false;
        rep.lines.push_back(std::move(line));
        return true;
      });
      if (phi_index) ++rep.targets_checked;
    }
  }
  return rep;
}

SeparabilityReport check_separability(const SRing& a, const SeparabilityOptions& opts) {
  return check_separability(a, separability_targets(a.group().order()), opts);
}

std::string to_text(const SeparabilityReport& r) {
  std::ostringstream out;
  for (const auto& l : r.lines) {
    out << "A=" << l.target_index << " G'=" << l.group << " phi=" << l.phi_index << " verdict=" << to_string(l.verdict)
        << " method=" << (l.method ? to_string(*l.method) : std::string("-"));
    if (!l.detail.empty()) out << " detail=\"" << l.detail << "\"";
    out << "\n";
  }
  out << "separable=" << (r.separable ? "yes" : "no") << " targets=" << r.targets_checked << " phis=" << r.lines.size()
      << "\n";
  return out.str();
}

// ------------------------------------------------------ target group shape

namespace {

bool is_cyclic(const AbelianGroup& g, const Subgroup& h) {
  for (Elem x : h.elements)
    if (g.element_order(x) == h.order()) return true;
  return false;
}

Subgroup elements_killed_by(const AbelianGroup& g, std::uint32_t m) {
  ElemSet s;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.mul(m, x) == 0) s.push_back(x);
  return subgroup_generated(g, s);
}

std::vector<std::uint32_t> factors_of(const AbelianGroup& g) { return g.invariant_factors(); }

}  // namespace

TargetShapeCheck verify_target_group_shape(const SRing& a, const AlgebraicIso& phi) {
  const auto& d = a.group();
  const PShape shape = require_shape(d);
  const std::uint32_t p = shape.p, k = shape.k;
  if (!(phi.source == a)) fail(ErrorKind::kArgument, "phi does not start at A");
  std::optional<std::uint32_t> row;
  for (std::uint32_t i : p == 2 ? std::vector<std::uint32_t>{5, 6} : std::vector<std::uint32_t>{6, 7, 8, 9})
    if (k >= table_row(p, i).min_k && table_sring(p, i, k) == a) row = i;
  if (!row) fail(ErrorKind::kArgument, "A is not cyc(K, D) for a residual table row");

  const auto& g2 = phi.target.group();
  TargetShapeCheck out;
  auto failed = [&](std::string why) {
    out.ok = false;
    out.failed = std::move(why);
    return out;
  };
  if (g2.order() != d.order()) return failed("|G'| != |D|");

  const Symbols sym = table_symbols(d, p, k);
  const std::uint32_t pk1 = ipow(p, k - 1);

  // a cyclic A-subgroup C of order p^{k-1} whose image must stay cyclic
  Subgroup c;
  if (p == 2) {
    std::optional<std::size_t> y;
    for (std::size_t i = 0; i < a.rank() && !y; ++i) {
      bool inside = true;
      for (Elem x : a.cls(i)) {
        const Elem u = d.sub(x, sym.b);
        if (d.coords(x)[0] != 1 || d.element_order(u) != pk1) inside = false;
      }
      if (inside) y = i;
    }
    if (!y) return failed("no basic set inside b(A_{k-1} \\ A_{k-2})");
    c = subgroup_generated(d, a.cls(*y));
  } else {
    const Elem gen = d.mul(p, sym.a);
    c = subgroup_generated(d, std::span<const Elem>(&gen, 1));
  }
  if (c.order() != pk1 || !is_cyclic(d, c) || !is_a_subgroup(a, c)) return failed("C is not a cyclic A-subgroup of order p^(k-1)");
  const Subgroup c2 = image_of_subgroup(phi, c);
  if (c2.order() != pk1 || !is_cyclic(g2, c2)) return failed("C^phi is not cyclic of order p^(k-1)");

  const Subgroup dk2 = elements_killed_by(d, ipow(p, k - 2));
  if (dk2.order() != pk1 || !is_a_subgroup(a, dk2)) return failed("D_{k-2} is not an A-subgroup of order p^(k-1)");
  const Subgroup dk2_img = image_of_subgroup(phi, dk2);
  if (dk2_img.order() != pk1 || dk2_img == c2) return failed("D_{k-2}^phi is not a second subgroup of order p^(k-1)");

  const Subgroup a1 = subgroup_generated(d, std::span<const Elem>(&sym.a1, 1));
  const Subgroup a1_img = image_of_subgroup(phi, a1);
  if (a1_img.order() != p) return failed("A_1^phi does not have order p");
  for (Elem x : a1_img.elements)
    if (!c2.contains(x)) return failed("A_1^phi is not inside C^phi");

  // the image of pi(X) for the highest basic set X through a
  const Section s = quotient(d, whole_group(d), a1);
  const SectionIso si = induced_on_section(phi, s);
  const AbelianGroup& q2 = si.target_section.quotient;
  const std::size_t px = si.iso.source.class_of(s.project(sym.a));
  const ElemSet pi = si.iso.target.cls(si.iso.class_map[px]);
  const Subgroup rad = radical(q2, pi);
  if (subgroup_generated(q2, pi).order() != q2.order()) return failed("pi(X)^phi does not generate D'/A_1^phi");
  const bool symmetric = inverse_set(q2, pi) == pi;
  if (p == 2) {
    if (pi.size() != 4 || !symmetric || rad.order() != 2) return failed("pi(X)^phi violates |.|=4, symmetric, |rad|=2");
    // pi = {x, b'x, y, b'y} with y = x^{-1}
    const Elem bq = rad.elements[1];
    const Elem x = pi[0];
    const Elem xi = q2.neg(x);
    if (xi == x || xi == q2.add(bq, x)) return failed("pi(X)^phi forces |D'/A_1^phi| = 8");
  } else {
    const bool wide = *row == 8 || *row == 9;
    if (!wide && (pi.size() != 3 || rad.order() != 3)) return failed("pi(X)^phi violates |.|=3, |rad|=3");
    if (wide && (pi.size() != 6 || !symmetric || rad.order() != 3))
      return failed("pi(X)^phi violates |.|=6, symmetric, |rad|=3");
    const Elem x = pi[0];
    ElemSet coset = translate(q2, rad.elements, x);
    if (wide) {
      ElemSet other = translate(q2, rad.elements, q2.neg(x));
      coset.insert(coset.end(), other.begin(), other.end());
      std::sort(coset.begin(), coset.end());
    }
    if (coset != pi) return failed("pi(X)^phi is not x'B' or x'B' u x'^{-1}B'");
  }
  if (factors_of(q2) != std::vector<std::uint32_t>{p, pk1}) return failed("D'/A_1^phi is not C_p x C_{p^(k-1)}");

  // first part of the subgroup lemma: C_p x C_{p^k} or C_{p^2} x C_{p^(k-1)}
  const auto f2 = factors_of(g2);
  const std::vector<std::uint32_t> target = {p, pk1 * p};
  const std::vector<std::uint32_t> other = {p * p, pk1};
  if (f2 != target && f2 != other) return failed("G' is neither C_p x C_{p^k} nor C_{p^2} x C_{p^(k-1)}");
  if (k < 4) {
    // second part via W' = D_1': needs D_1' to be an A'-subgroup equal to D_1^phi
    const Subgroup d1 = elements_killed_by(g2, p);
    if (!is_a_subgroup(phi.target, d1)) return failed("D_1' is not an A'-subgroup");
    const Subgroup d1_phi = image_of_subgroup(phi, elements_killed_by(d, p));
    if (!(d1 == d1_phi)) return failed("D_1' differs from D_1^phi");
    if (d1.order() != p * p || is_cyclic(g2, d1)) return failed("D_1' is not C_p x C_p");
    const Elem a2gen = d.mul(ipow(p, k - 2), sym.a);
    const Subgroup a2_img = image_of_subgroup(phi, subgroup_generated(d, std::span<const Elem>(&a2gen, 1)));
    std::size_t meet = 0;
    for (Elem x : d1.elements) meet += a2_img.contains(x);
    if (meet != p) return failed("|D_1' n A_2^phi| != p");
    const Section top = quotient(g2, whole_group(g2), d1);
    if (factors_of(top.quotient).size() > 1) return failed("G'/D_1' is not cyclic");
  }
  if (!g2.isomorphic_to(d)) return failed("hypotheses hold but G' is not isomorphic to D");
  out.ok = true;
  return out;
}

}  // namespace srings
