#pragma once

#include <vector>

#include "zerosum/atoms.hpp"

namespace zerosum {

/// One replacement g -> m g at position `position` of the support.
struct TransferStep {
  std::size_t position = 0;
  int multiplier = 1;
};

/// Result of the theta' reduction. Position i of `reduced` is the image of
/// position i of the input, scaled by `divisors[i]` in total.
struct TransferResult {
  SupportSet original;
  SupportSet reduced;
  std::vector<int> divisors;
  std::vector<TransferStep> steps;

  bool is_identity() const { return steps.empty(); }
};

/// Reduces a minimal non-half-factorial G0 until every g in G0* lies in
/// <G0* \ {g}>. Each round takes the reducible g of smallest index (the
/// lexicographically first) and replaces it by m g, m the least positive
/// multiple of g in <G0 \ {g}>.
///
/// Throws StructuralError unless G0 is minimal non-half-factorial, and
/// ConsistencyFault if a replacement would collide with another element.
TransferResult transfer_reduce(const SupportSet& support, EnumerationBudget budget = {});
TransferResult transfer_reduce(const AtomSet& atoms);

/// theta(B): v_{m g}(theta(B)) = v_g(B) / m. Throws StructuralError if B is
/// not a zero-sum sequence over the original support.
SequenceVec apply_transfer(const TransferResult& transfer, const SequenceVec& b);

}  // namespace zerosum
