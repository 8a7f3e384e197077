#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "zerosum/atoms.hpp"

namespace zerosum {

struct SweepOptions {
  /// Default admits every group of order <= 16 (2^15 - 1 nonempty subsets).
  static constexpr std::uint64_t kDefaultMaxSubsets = (std::uint64_t{1} << 15) - 1;

  std::uint64_t max_subsets = kDefaultMaxSubsets;
  unsigned threads = 1;
  /// Reuse results across subsets related by a permutation of equal cyclic
  /// components. Off by default.
  bool symmetry = false;
  /// Deduce min Delta = 1 when the non-half-factorial maximal proper subsets
  /// have coprime min Delta. Turning it off enumerates every subset.
  bool gcd_prune = true;
  /// Keep one SubsetOutcome per visited subset in the report.
  bool keep_records = false;
  EnumerationBudget enumeration{};
};

enum class LcnStatus : std::uint8_t { no, yes, unknown };

/// Result for one nonempty subset of G \ {0}. Bit i of `mask` selects the
/// element with index i + 1.
struct SubsetOutcome {
  std::uint64_t mask = 0;
  bool half_factorial = true;
  bool minimal_non_hf = false;
  /// false when min Delta was deduced from subsets instead of enumerated.
  bool computed = false;
  LcnStatus lcn = LcnStatus::unknown;
  int min_delta = 0;
};

/// Structural annotations for a minimal non-half-factorial set attaining max Delta*(G).
struct ExtremalSet {
  SupportSet support;
  int min_delta = 0;
  std::size_t atom_count = 0;
  bool lcn = false;
  /// G0 = {g, -g} with ord(g) = exp(G).
  bool plus_minus_form = false;
  bool size_is_rank_plus_one = false;
  /// h not in <G0 \ {h, h'}> for all h != h'.
  bool no_two_removed_span = false;
  bool independent_complement = false;
  bool simple = false;
  bool decomposable = false;
  /// Atoms with k = 1 have |supp| <= exp/2; atoms with k > 1 have k < r and
  /// S A^-1 an atom, S = prod g^ord(g). Only evaluated for LCN sets.
  std::optional<bool> lcn_atom_conditions;
};

struct SweepCounters {
  std::uint64_t subsets = 0;         // nonempty subsets of G \ {0}
  std::uint64_t enumerated = 0;      // atoms enumerated
  std::uint64_t pruned_gcd = 0;      // min Delta = 1 forced by subsets
  std::uint64_t pruned_symmetry = 0; // copied from a symmetric representative
  std::uint64_t non_half_factorial = 0;
  std::uint64_t minimal_non_hf = 0;
};

struct SweepReport {
  FiniteAbelianGroup group;
  std::set<int> delta_star;
  int max_delta_star = 0;  // max of the empty set is 0
  int m_of_g = 0;
  std::vector<ExtremalSet> extremal;
  std::vector<SupportSet> minimal_non_hf;
  std::vector<SubsetOutcome> records;  // empty unless keep_records
  SweepCounters counters;
};

/// Computes Delta*(G) = {min Delta(G0) : G0 in G \ {0} not half-factorial}
/// together with m(G) and the extremal sets, in one pass over all subsets in
/// increasing size.
///
/// If G1 in G0 is not half-factorial then min Delta(G0) divides min Delta(G1);
/// hence G0 is non-half-factorial as soon as a maximal proper subset is, and
/// when the gcd over those subsets is 1 the value is known without
/// enumerating atoms. Every subset of one size depends only on smaller sizes,
/// so a size class is split across threads and the result does not depend on
/// the thread count.
///
/// Throws BudgetExceeded when 2^(|G|-1) - 1 > options.max_subsets.
SweepReport delta_star(const FiniteAbelianGroup& group, const SweepOptions& options = {});

/// m(G) = max min Delta(G0) over non-half-factorial LCN sets (0 if none).
int m_of_G(const FiniteAbelianGroup& group, const SweepOptions& options = {});

std::vector<ExtremalSet> extremal_sets(const FiniteAbelianGroup& group, const SweepOptions& options = {});

/// Structural annotations of one minimal non-half-factorial set.
ExtremalSet annotate_extremal(const AtomSet& atoms, int min_delta);

/// Support set for a subset mask of G \ {0}.
SupportSet support_from_mask(const FiniteAbelianGroup& group, std::uint64_t mask);

/// Element permutations of G induced by permuting equal cyclic components,
/// identity first.
std::vector<std::vector<ElementIndex>> component_symmetries(const FiniteAbelianGroup& group);

}  // namespace zerosum
