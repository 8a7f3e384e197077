#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zerosum/sequence.hpp"

namespace zerosum {

/// Row-major |G0| x |atoms| natural matrix; column j is the exponent vector of atom j.
struct ExponentMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> entries;

  int at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Caps the number of search nodes the atom enumerator may visit.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultNodes = 50'000'000;
  std::uint64_t max_nodes = kDefaultNodes;
};

/// A(G0): the minimal zero-sum sequences over G0, sorted lexicographically by
/// exponent vector.
class AtomSet {
 public:
  /// Sorts `atoms`; does not verify minimality.
  AtomSet(SupportSet support, std::vector<SequenceVec> atoms);

  const SupportSet& support() const noexcept { return support_; }
  std::span<const SequenceVec> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  const SequenceVec& operator[](std::size_t i) const { return atoms_[i]; }

  bool contains(const SequenceVec& s) const;
  ExponentMatrix matrix() const;

 private:
  SupportSet support_;
  std::vector<SequenceVec> atoms_;
};

/// prod_g (ord(g) + 1), saturating at UINT64_MAX: the size of the naive
/// exponent grid {0..ord(g)}^G0.
std::uint64_t grid_bound(const SupportSet& support);

/// Enumerates A(G0). Every atom A is produced exactly once as T * g_j where
/// j is the last support position of A and T = A * g_j^-1 is zero-sum free;
/// the search walks zero-sum free sequences with nondecreasing positions and
/// carries the set of their nonempty subsums, so no branch ever holds a
/// zero-sum subsequence and v_g < ord(g) holds on every search node.
/// Throws BudgetExceeded when more than budget.max_nodes nodes are visited.
AtomSet enumerate_atoms(const SupportSet& support, EnumerationBudget budget = {});

/// D(G0) = max |A|. Requires a nonempty atom set.
int davenport(const AtomSet& atoms);

/// K(G0) = max k(A). Requires a nonempty atom set.
Rational cross_number_K(const AtomSet& atoms);

}  // namespace zerosum
