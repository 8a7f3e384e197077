#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerosum/atoms.hpp"

namespace zerosum {

struct ClassificationRecord {
  std::string subset;  // SupportSet::to_string()
  bool half_factorial = false;
  bool lcn = false;
  bool minimal_non_hf = false;
  bool decomposable = false;
  bool simple = false;
  /// Some g with G0 \ {g} independent.
  bool independent_complement = false;
  int min_delta = 0;
  int davenport = 0;
  Rational cross_number_K{0};
  std::size_t atom_count = 0;
};

/// Every atom has k >= 1.
bool is_lcn(const AtomSet& atoms);

/// G0 \ {h} is half-factorial for every h. The atoms of G0 \ {h} are exactly
/// the atoms of G0 avoiding h, so no re-enumeration is needed; half-factoriality
/// is inherited by subsets, so the maximal proper subsets suffice.
bool all_maximal_subsets_half_factorial(const AtomSet& atoms);

/// <G0> = <G1> (+) <G2> for some bipartition into nonempty parts, tested via
/// |<G1>| * |<G2>| = |<G0>|.
bool is_decomposable(const SupportSet& support);

/// Some g in G0 with G0 \ {g} independent.
bool has_independent_complement(const SupportSet& support);

/// Some g in G0 with G0 \ {g} independent, g in <G0 \ {g}>, and g outside
/// <E> for every proper subset E of G0 \ {g}.
bool is_simple(const SupportSet& support);

/// Every h in G0 satisfies h in <G0 \ {h}>.
bool has_self_span_property(const SupportSet& support);

/// For every h and every h' != h: h is not in <G0 \ {h, h'}>.
bool no_element_in_span_of_two_removed(const SupportSet& support);

ClassificationRecord classify(const SupportSet& support, EnumerationBudget budget = {});
ClassificationRecord classify(const AtomSet& atoms);

}  // namespace zerosum
