#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "zerosum/atoms.hpp"

namespace zerosum {

/// L(B): the sorted set of factorization lengths.
struct LengthSet {
  std::vector<int> lengths;

  bool empty() const noexcept { return lengths.empty(); }
  int min() const { return lengths.front(); }
  int max() const { return lengths.back(); }
  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

struct FactorizationBudget {
  static constexpr std::uint64_t kDefaultMemo = 20'000'000;
  std::uint64_t max_memo_entries = kDefaultMemo;
};

/// Memoised length-set solver over one atom set. Any factorization of a
/// nonempty residual R contains an atom through the first support position c
/// with v_c(R) > 0, so L(R) = union over atoms A | R with v_c(A) > 0 of
/// 1 + L(R A^-1). The memo is keyed by the residual alone and is shared by
/// every query made through the same solver.
class LengthSolver {
 public:
  explicit LengthSolver(const AtomSet& atoms, FactorizationBudget budget = {});

  /// L(B). B must be zero-sum; the empty sequence yields {0}.
  LengthSet lengths(const SequenceVec& b);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  using Bits = boost::dynamic_bitset<>;
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  const Bits& solve(std::vector<int>& residual, std::size_t bits);

  const AtomSet& atoms_;
  FactorizationBudget budget_;
  std::vector<std::vector<std::size_t>> through_;  // atoms with v_c > 0, per position c
  std::unordered_map<std::vector<int>, Bits, VecHash> memo_;
};

LengthSet length_set(const SequenceVec& b, const AtomSet& atoms, FactorizationBudget budget = {});

/// Delta(L): successive differences; empty iff |L| <= 1.
std::set<int> delta_of_lengths(const LengthSet& l);

/// Union of Delta(L(B)) over every zero-sum B with 1 <= |B| <= max_len.
/// A finite under-approximation of Delta(G0), monotone in max_len.
std::set<int> distances_oracle(const AtomSet& atoms, int max_len, FactorizationBudget budget = {});

/// Product of `factors` atoms drawn uniformly with replacement.
SequenceVec random_product(const AtomSet& atoms, int factors, std::mt19937_64& rng);

}  // namespace zerosum
