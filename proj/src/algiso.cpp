#include "srings/algiso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "srings/error.hpp"

namespace srings {

AlgisoCheck verify_algiso(const SRing& a, const SRing& b, std::span<const std::size_t> m) {
  const std::size_t r = a.rank();
  if (b.rank() != r || m.size() != r) fail(ErrorKind::kArgument, "rank mismatch");
  AlgisoCheck out;
  std::vector<char> hit(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (m[i] >= r || hit[m[i]]) {
      out.ok = false;
      out.reason = "class map is not a bijection";
      return out;
    }
    hit[m[i]] = 1;
  }
  for (std::size_t x = 0; x < r; ++x) {
    const std::size_t xi = a.inverse_index(x);
    if (a.constant(x, xi, 0) != b.constant(m[x], m[xi], m[0])) {
      out.ok = false;
      out.witness = std::array<std::size_t, 3>{x, xi, 0};
      out.reason = "class sizes differ";
      return out;
    }
  }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        if (a.constant(x, y, z) != b.constant(m[x], m[y], m[z])) {
          out.ok = false;
          out.witness = std::array<std::size_t, 3>{x, y, z};
          out.reason = "structure constants differ";
          return out;
        }
  return out;
}

AlgebraicIso identity_algiso(const SRing& a) {
  std::vector<std::size_t> m(a.rank());
  std::iota(m.begin(), m.end(), std::size_t{0});
  return AlgebraicIso{a, a, std::move(m)};
}

AlgebraicIso inverse(const AlgebraicIso& phi) {
  std::vector<std::size_t> m(phi.class_map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[phi.class_map[i]] = i;
  return AlgebraicIso{phi.target, phi.source, std::move(m)};
}

AlgebraicIso compose(const AlgebraicIso& phi, const AlgebraicIso& psi) {
  if (!(phi.target == psi.source)) fail(ErrorKind::kArgument, "cannot compose algebraic isomorphisms");
  std::vector<std::size_t> m(phi.class_map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = psi.class_map[phi.class_map[i]];
  return AlgebraicIso{phi.source, psi.target, std::move(m)};
}

namespace {

// Per-class data used for pruning: class-membership flags of <X> and rad(X).
struct ClassInfo {
  std::vector<std::vector<char>> in_gen;  // in_gen[x][w]: class w lies in <X>
  std::vector<std::vector<char>> in_rad;
  std::vector<std::size_t> gen_size, rad_size;
};

ClassInfo class_info(const SRing& a) {
  const std::size_t r = a.rank();
  ClassInfo ci;
  ci.in_gen.assign(r, std::vector<char>(r, 0));
  ci.in_rad.assign(r, std::vector<char>(r, 0));
  ci.gen_size.resize(r);
  ci.rad_size.resize(r);
  for (std::size_t x = 0; x < r; ++x) {
    auto gen = subgroup_generated(a.group(), a.cls(x));
    auto rad = radical(a.group(), a.cls(x));
    ci.gen_size[x] = gen.order();
    ci.rad_size[x] = rad.order();
    for (Elem e : gen.elements) ci.in_gen[x][a.class_of(e)] = 1;
    for (Elem e : rad.elements) ci.in_rad[x][a.class_of(e)] = 1;
  }
  return ci;
}

class AlgisoSearch {
 public:
  AlgisoSearch(const SRing& a, const SRing& b, const std::function<bool(const AlgebraicIso&)>& visit)
      : a_(a), b_(b), visit_(visit), r_(a.rank()) {}

  void run() {
    if (b_.rank() != r_ || a_.group().order() != b_.group().order()) return;
    ia_ = class_info(a_);
    ib_ = class_info(b_);
    order_.resize(r_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return a_.cls(x).size() < a_.cls(y).size(); });
    cand_.resize(r_);
    for (std::size_t x = 0; x < r_; ++x)
      for (std::size_t y = 0; y < r_; ++y)
        if (a_.cls(x).size() == b_.cls(y).size() &&
            (a_.inverse_index(x) == x) == (b_.inverse_index(y) == y) &&
            ia_.gen_size[x] == ib_.gen_size[y] && ia_.rad_size[x] == ib_.rad_size[y])
          cand_[x].push_back(y);
    map_.assign(r_, kUnset);
    used_.assign(r_, 0);
    if (!assign(0, 0)) return;
    rec(0);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Checks x -> y against everything assigned so far.
  bool consistent(std::size_t x, std::size_t y) const {
    for (std::size_t w : assigned_) {
      const std::size_t w2 = map_[w];
      if (ia_.in_gen[x][w] != ib_.in_gen[y][w2] || ia_.in_gen[w][x] != ib_.in_gen[w2][y]) return false;
      if (ia_.in_rad[x][w] != ib_.in_rad[y][w2] || ia_.in_rad[w][x] != ib_.in_rad[w2][y]) return false;
    }
    // every triple involving x with the other two among assigned or x itself
    auto img = [&](std::size_t v) { return v == x ? y : map_[v]; };
    std::vector<std::size_t> pool = assigned_;
    pool.push_back(x);
    for (std::size_t u : pool)
      for (std::size_t v : pool) {
        if (a_.constant(x, u, v) != b_.constant(y, img(u), img(v))) return false;
        if (a_.constant(u, v, x) != b_.constant(img(u), img(v), y)) return false;
      }
    return true;
  }

  // Assigns x -> y and x^{-1} -> y^{-1}; returns false (leaving state
  // untouched) on any conflict.
  bool assign(std::size_t x, std::size_t y) {
    if (used_[y] || !consistent(x, y)) return false;
    map_[x] = y;
    used_[y] = 1;
    assigned_.push_back(x);
    const std::size_t xi = a_.inverse_index(x);
    if (xi != x) {
      const std::size_t yi = b_.inverse_index(y);
      bool ok = false;
      if (map_[xi] == kUnset) {
        if (!used_[yi] && a_.cls(xi).size() == b_.cls(yi).size() && consistent(xi, yi)) {
          map_[xi] = yi;
          used_[yi] = 1;
          assigned_.push_back(xi);
          ok = true;
        }
      } else {
        ok = map_[xi] == yi;
      }
      if (!ok) {
        unassign_last(1);
        return false;
      }
    }
    return true;
  }

  void unassign_last(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t x = assigned_.back();
      assigned_.pop_back();
      used_[map_[x]] = 0;
      map_[x] = kUnset;
    }
  }

  // Returns false when the visitor asked to stop.
  bool rec(std::size_t pos) {
    while (pos < r_ && map_[order_[pos]] != kUnset) ++pos;
    if (pos == r_) {
      if (!verify_algiso(a_, b_, map_).ok) return true;
      return visit_(AlgebraicIso{a_, b_, map_});
    }
    const std::size_t x = order_[pos];
    for (std::size_t y : cand_[x]) {
      const std::size_t before = assigned_.size();
      if (!assign(x, y)) continue;
      const bool go_on = rec(pos + 1);
      unassign_last(assigned_.size() - before);
      if (!go_on) return false;
    }
    return true;
  }

  const SRing& a_;
  const SRing& b_;
  const std::function<bool(const AlgebraicIso&)>& visit_;
  std::size_t r_;
  ClassInfo ia_, ib_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> cand_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
  std::vector<std::size_t> assigned_;
};

}  // namespace

void for_each_algiso(const SRing& a, const SRing& b,
                     const std::function<bool(const AlgebraicIso&)>& visit) {
  AlgisoSearch(a, b, visit).run();
}

std::vector<AlgebraicIso> enumerate_algisos(const SRing& a, const SRing& b) {
  std::vector<AlgebraicIso> out;
  for_each_algiso(a, b, [&](const AlgebraicIso& phi) {
    out.push_back(phi);
    return true;
  });
  return out;
}

std::optional<AlgebraicIso> find_algiso(const SRing& a, const SRing& b) {
  std::optional<AlgebraicIso> out;
  for_each_algiso(a, b, [&](const AlgebraicIso& phi) {
    out = phi;
    return false;
  });
  return out;
}

ElemSet image_of_aset(const AlgebraicIso& phi, std::span<const Elem> s) {
  auto idx = decompose_a_set(phi.source, s);
  if (!idx) fail(ErrorKind::kArgument, "set is not an A-set");
  std::vector<std::size_t> img;
  for (auto i : *idx) img.push_back(phi.class_map[i]);
  return union_of_classes(phi.target, img);
}

Subgroup image_of_subgroup(const AlgebraicIso& phi, const Subgroup& h) {
  return subgroup_generated(phi.target.group(), image_of_aset(phi, h.elements));
}

SectionIso induced_on_section(const AlgebraicIso& phi, const Section& s) {
  if (!is_a_subgroup(phi.source, s.upper) || !is_a_subgroup(phi.source, s.lower))
    fail(ErrorKind::kNotASection, "U/L is not an A-section");
  const auto& g2 = phi.target.group();
  Subgroup u2 = image_of_subgroup(phi, s.upper);
  Subgroup l2 = image_of_subgroup(phi, s.lower);
  if (u2.order() != s.upper.order() || l2.order() != s.lower.order())
    fail(ErrorKind::kInternal, "image of an A-subgroup is not a subgroup of the same order");
  Section target_section = quotient(g2, u2, l2);
  SRing qa = quotient_sring(phi.source, s);
  SRing qb = quotient_sring(phi.target, target_section);
  std::vector<std::size_t> m(qa.rank(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < phi.source.rank(); ++x) {
    const ElemSet& cx = phi.source.cls(x);
    if (!s.upper.contains(cx[0])) continue;
    const std::size_t qx = qa.class_of(s.project(cx[0]));
    const std::size_t qy = qb.class_of(target_section.project(phi.target.cls(phi.class_map[x])[0]));
    if (m[qx] != static_cast<std::size_t>(-1) && m[qx] != qy)
      fail(ErrorKind::kInternal, "induced section map is not well defined");
    m[qx] = qy;
  }
  auto check = verify_algiso(qa, qb, m);
  if (!check.ok) fail(ErrorKind::kInternal, "induced section map is not an algebraic isomorphism: " + check.reason);
  return SectionIso{s, std::move(target_section), AlgebraicIso{qa, qb, std::move(m)}};
}

std::string to_text(const AlgebraicIso& phi) {
  std::ostringstream out;
  out << "algiso " << phi.class_map.size() << "\n";
  for (std::size_t i = 0; i < phi.class_map.size(); ++i) out << i << " -> " << phi.class_map[i] << "\n";
  return out.str();
}

}  // namespace srings
