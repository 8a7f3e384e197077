#include "zerosum/factorization.hpp"

#include <boost/container_hash/hash.hpp>
#include <unordered_set>

#include "zerosum/errors.hpp"

namespace zerosum {

std::size_t LengthSolver::VecHash::operator()(const std::vector<int>& v) const noexcept {
  return boost::hash_range(v.begin(), v.end());
}

LengthSolver::LengthSolver(const AtomSet& atoms, FactorizationBudget budget)
    : atoms_(atoms), budget_(budget), through_(atoms.support().size()) {
  for (std::size_t j = 0; j < atoms.size(); ++j)
    for (std::size_t c = 0; c < atoms.support().size(); ++c)
      if (atoms[j][c] > 0) through_[c].push_back(j);
}

const LengthSolver::Bits& LengthSolver::solve(std::vector<int>& residual, std::size_t bits) {
  if (auto it = memo_.find(residual); it != memo_.end()) return it->second;
  if (memo_.size() >= budget_.max_memo_entries)
    throw BudgetExceeded("length-set memo table full", memo_.size() + 1, budget_.max_memo_entries);

  Bits result(bits);
  std::size_t c = 0;
  while (c < residual.size() && residual[c] == 0) ++c;
  if (c == residual.size()) {
    result.set(0);
  } else {
    for (std::size_t j : through_[c]) {
      const auto& a = atoms_[j].exponents;
      bool fits = true;
      for (std::size_t i = 0; i < a.size() && fits; ++i) fits = a[i] <= residual[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < a.size(); ++i) residual[i] -= a[i];
      const Bits& sub = solve(residual, bits);
      for (std::size_t i = 0; i < a.size(); ++i) residual[i] += a[i];
      if (sub.size() == bits) {
        result |= sub << 1;
      } else {  // memoised by a query of a different size; lengths of sub fit either way
        Bits shifted = sub;
        shifted.resize(bits);
        result |= shifted << 1;
      }
    }
  }
  return memo_.emplace(residual, std::move(result)).first->second;
}

LengthSet LengthSolver::lengths(const SequenceVec& b) {
  if (b.dim() != atoms_.support().size()) throw StructuralError("sequence dimension does not match support");
  if (!is_zero_sum(atoms_.support(), b))
    throw StructuralError("sets of lengths are defined for zero-sum sequences only");
  std::vector<int> residual = b.exponents;
  // Every atom has length >= 2, so no factorization is longer than |B| / 2.
  const auto bits = static_cast<std::size_t>(length(b)) / 2 + 2;
  Bits found = solve(residual, bits);
  LengthSet out;
  for (auto i = found.find_first(); i != Bits::npos; i = found.find_next(i)) out.lengths.push_back(static_cast<int>(i));
  return out;
}

LengthSet length_set(const SequenceVec& b, const AtomSet& atoms, FactorizationBudget budget) {
  LengthSolver solver(atoms, budget);
  return solver.lengths(b);
}

std::set<int> delta_of_lengths(const LengthSet& l) {
  std::set<int> d;
  for (std::size_t i = 1; i < l.lengths.size(); ++i) d.insert(l.lengths[i] - l.lengths[i - 1]);
  return d;
}

std::set<int> distances_oracle(const AtomSet& atoms, int max_len, FactorizationBudget budget) {
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const noexcept { return boost::hash_range(v.begin(), v.end()); }
  };
  // B(G0) restricted to |B| <= max_len, grown from the atoms.
  std::unordered_set<std::vector<int>, Hash> seen;
  std::vector<std::vector<int>> frontier;
  for (const auto& a : atoms.atoms())
    if (length(a) <= max_len && seen.insert(a.exponents).second) frontier.push_back(a.exponents);
  std::vector<SequenceVec> all;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      all.push_back(SequenceVec{b});
      const int len = length(SequenceVec{b});
      for (const auto& a : atoms.atoms()) {
        if (len + length(a) > max_len) continue;
        std::vector<int> c = b;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += a[i];
        if (seen.size() >= budget.max_memo_entries)
          throw BudgetExceeded("distance oracle sequence table full", seen.size() + 1, budget.max_memo_entries);
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  LengthSolver solver(atoms, budget);
  std::set<int> out;
  for (const auto& b : all) {
    const auto d = delta_of_lengths(solver.lengths(b));
    out.insert(d.begin(), d.end());
  }
  return out;
}

SequenceVec random_product(const AtomSet& atoms, int factors, std::mt19937_64& rng) {
  SequenceVec out = empty_sequence(atoms.support());
  if (atoms.size() == 0) return out;
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  for (int i = 0; i < factors; ++i) out = multiply(out, atoms[pick(rng)]);
  return out;
}

}  // namespace zerosum
