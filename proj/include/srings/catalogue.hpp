#pragma once

// Classification data for S-rings over D = C_p x C_{p^k} (p = 2, 3),
// exhaustive S-ring enumeration over small abelian groups, and the
// separability checker built on the isomorphism cascade.
//
// D is the group with factor list [p, p^k]: b is the generator of the first
// factor, a the generator of the second, a_1 = a^{p^{k-1}}, a_2 = a^{p^{k-2}}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srings/abelian.hpp"
#include "srings/algiso.hpp"
#include "srings/comiso.hpp"
#include "srings/sring.hpp"

namespace srings {

// ---- automorphism tables ----

struct TableEntry {
  std::uint32_t p;
  std::uint32_t index;
  // Formal maps written as in the source tables, e.g. "(a,b)->(ba_2a,ba_1)".
  std::vector<std::string> generators;
  std::uint32_t order;  // |K_i|
  std::uint32_t min_k;
};

// All rows for p = 2 (K_0..K_10) or p = 3 (K_0..K_9). Throws kArgument for
// other primes.
const std::vector<TableEntry>& table_rows(std::uint32_t p);
const TableEntry& table_row(std::uint32_t p, std::uint32_t i);

AbelianGroup table_group(std::uint32_t p, std::uint32_t k);

// Compiles "(a,b)->(w_a,w_b)" on D = table_group(p, k). Words are products
// of a, b, a_1, a_2 with optional exponents (a^{-1}, b^2, a_1^2). Throws
// kParse on bad syntax and kArgument if the map is not an automorphism.
GroupHom compile_table_map(std::uint32_t p, std::uint32_t k, std::string_view formal);

// The generators of K_i at k. Throws kAdmissibility when k < min_k.
std::vector<GroupHom> table_entry(std::uint32_t p, std::uint32_t i, std::uint32_t k);
// cyc(K_i, D).
SRing table_sring(std::uint32_t p, std::uint32_t i, std::uint32_t k);

// ---- enumeration ----

enum class EnumMethod {
  kAuto,       // partition search up to order 16, good-set cover above
  kPartition,  // every class containing the least uncovered element
  kGoodSets,   // exact cover by basic sets of one-generated S-rings
};

inline constexpr std::uint32_t kPartitionSearchMaxOrder = 16;
inline constexpr std::uint32_t kEnumerationMaxOrder = 32;

// Every S-ring over g exactly once, sorted by class lists. Throws kSize above
// the method's bound, and for groups whose candidate set cannot be listed
// (elementary abelian of order 32).
std::vector<SRing> enumerate_srings(const AbelianGroup& g, EnumMethod method = EnumMethod::kAuto);

// The image of a under a bijection of its group onto g2 (classes mapped
// elementwise).
SRing transport(const SRing& a, const GroupHom& f);

// Splits srings (all over the same group) into Cayley isomorphism classes;
// returns, per class, the indices of its members (first member is the
// representative). Classes are ordered by representative index.
std::vector<std::vector<std::size_t>> cayley_classes(const std::vector<SRing>& srings);

// A group automorphism sigma of the common group with sigma(a) = b, if any.
std::optional<GroupHom> find_cayley_iso(const SRing& a, const SRing& b);

// ---- classification ----

enum class Statement {
  kElementRank2,       // k = 1, statement 1
  kElementTensor,      // k = 1, statement 2
  kElementWreath,      // k = 1, statement 3
  kElementInversion,   // k = 1, statement 4
  kElementCyclotomic,  // k = 1, statement 5
  kTensorSplit,        // k >= 2, statement 1
  kGeneralizedWreath,  // k >= 2, statement 2
  kCyclotomic,         // k >= 2, statement 3
};
std::string to_string(Statement s);

struct ClassificationVerdict {
  Statement statement;
  // Tensor split: A = A_H (x) A_L. Wreath at k = 1: L.
  std::optional<Subgroup> h, l;
  // Generalized wreath: the section U/L.
  std::optional<Section> section;
  // Cyclotomic cases: table index (kCyclotomic) and sigma with
  // sigma(cyc(K, D)) = A.
  std::optional<std::uint32_t> table_index;
  std::optional<GroupHom> cayley_iso;
};

// Tries the statements in order and returns the first that holds. Throws
// kShape unless g = C_p x C_{p^k}, p in {2,3}, and kClassificationFailure
// if none holds.
ClassificationVerdict classify(const SRing& a);
// Re-checks the witness of a verdict against a; "" when it holds.
std::string check_verdict(const SRing& a, const ClassificationVerdict& v);

// A = A_H (x) A_L as a partition identity (H, L A-subgroups, H + L = G,
// H n L = e).
bool is_tensor_split(const SRing& a, const Subgroup& h, const Subgroup& l);

// ---- separability ----

struct SeparabilityTarget {
  AbelianGroup group;
  std::vector<SRing> srings;
};

// Every abelian group of the given order with its S-rings.
std::vector<SeparabilityTarget> separability_targets(std::uint32_t order);

enum class PhiVerdict { kInduced, kEmpty, kError };
std::string to_string(PhiVerdict v);

struct SeparabilityLine {
  std::string group;        // G'
  std::size_t target_index;  // index of A' in its enumeration
  std::size_t phi_index;     // index in enumerate_algisos(A, A')
  PhiVerdict verdict;
  std::optional<IsoMethod> method;
  std::string detail;  // error text
};

struct SeparabilityReport {
  bool separable = true;
  std::size_t targets_checked = 0;  // S-rings A' with at least one phi
  std::vector<SeparabilityLine> lines;
};

struct SeparabilityOptions {
  CascadeOptions cascade;
  // Also run the brute-force finder on every phi and require agreement.
  bool confirm_with_brute = false;
  std::uint32_t brute_max_order = kBruteForceMaxOrder;
};

SeparabilityReport check_separability(const SRing& a, const std::vector<SeparabilityTarget>& targets,
                                      const SeparabilityOptions& opts = {});
SeparabilityReport check_separability(const SRing& a, const SeparabilityOptions& opts = {});

// "A=<index> G'=<group> phi=<index> verdict=<...> method=<...>" lines.
std::string to_text(const SeparabilityReport& r);

// ---- isomorphism type of the target group ----

struct TargetShapeCheck {
  bool ok = false;
  std::string failed;  // first hypothesis that failed
};

// For A = cyc(K_i, D) with i among the residual rows (p = 2: 5, 6; p = 3:
// 6..9) and phi: A -> A' over G', re-derives the subgroup and quotient facts
// that pin G' down and confirms G' ~ D. Throws kArgument when A is not one of
// these S-rings.
TargetShapeCheck verify_target_group_shape(const SRing& a, const AlgebraicIso& phi);

}  // namespace srings
