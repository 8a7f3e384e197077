#include "zerosum/atoms.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "zerosum/errors.hpp"

namespace zerosum {

AtomSet::AtomSet(SupportSet support, std::vector<SequenceVec> atoms)
    : support_(std::move(support)), atoms_(std::move(atoms)) {
  for (const auto& a : atoms_)
    if (a.dim() != support_.size()) throw StructuralError("atom dimension does not match support");
  std::sort(atoms_.begin(), atoms_.end());
}

bool AtomSet::contains(const SequenceVec& s) const { return std::binary_search(atoms_.begin(), atoms_.end(), s); }

ExponentMatrix AtomSet::matrix() const {
  ExponentMatrix m{support_.size(), atoms_.size(), std::vector<int>(support_.size() * atoms_.size())};
  for (std::size_t c = 0; c < atoms_.size(); ++c)
    for (std::size_t r = 0; r < m.rows; ++r) m.entries[r * m.cols + c] = atoms_[c][r];
  return m;
}

std::uint64_t grid_bound(const SupportSet& support) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t bound = 1;
  for (int ord : support.orders()) {
    const auto f = static_cast<std::uint64_t>(ord) + 1;
    if (bound > kMax / f) return kMax;
    bound *= f;
  }
  return bound;
}

namespace {

using Words = std::vector<std::uint64_t>;

class AtomSearch {
 public:
  AtomSearch(const SupportSet& support, EnumerationBudget budget)
      : support_(support), group_(support.group()), budget_(budget), k_(support.size()) {
    const auto n = static_cast<std::size_t>(group_.order());
    words_ = (n + 63) / 64;
    position_.assign(n, -1);
    for (std::size_t j = 0; j < k_; ++j) position_[support.indices()[j]] = static_cast<int>(j);
    translate_.resize(k_);
    neg_.resize(k_);
    for (std::size_t j = 0; j < k_; ++j) {
      const ElementIndex g = support.indices()[j];
      neg_[j] = group_.neg_index(g);
      translate_[j].resize(n);
      for (std::size_t x = 0; x < n; ++x) translate_[j][x] = group_.add_index(static_cast<ElementIndex>(x), g);
    }
    counts_.assign(k_, 0);
  }

  std::vector<SequenceVec> run() {
    sums_.emplace_back(words_, 0);
    descend(0, 0, 0);
    return std::move(found_);
  }

 private:
  bool test(const Words& w, ElementIndex x) const { return (w[x >> 6] >> (x & 63)) & 1U; }
  static void set(Words& w, ElementIndex x) { w[x >> 6] |= std::uint64_t{1} << (x & 63); }

  // Node: the current zero-sum free sequence T (counts_), its sum, the
  // subsum set at sums_[depth], and the last position used.
  void descend(std::size_t depth, std::size_t last, ElementIndex sum) {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("atom enumeration over " + std::to_string(k_) + " elements visited more than " +
                               std::to_string(budget_.max_nodes) + " search nodes; grid bound",
                           grid_bound(support_), budget_.max_nodes);
    if (depth > 0) {
      const int j = position_[group_.neg_index(sum)];
      if (j >= 0 && static_cast<std::size_t>(j) >= last) {
        SequenceVec atom{counts_};
        ++atom.exponents[static_cast<std::size_t>(j)];
        found_.push_back(std::move(atom));
      }
    }
    if (sums_.size() <= depth + 1) sums_.emplace_back(words_, 0);
    for (std::size_t j = last; j < k_; ++j) {
      const Words& cur = sums_[depth];
      if (test(cur, neg_[j])) continue;  // T * g_j would contain a zero-sum subsequence
      Words& next = sums_[depth + 1];
      next = cur;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = cur[w];
        while (bits) {
          const auto x = static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          set(next, translate_[j][x]);
          bits &= bits - 1;
        }
      }
      set(next, support_.indices()[j]);
      ++counts_[j];
      descend(depth + 1, j, translate_[j][sum]);
      --counts_[j];
    }
  }

  const SupportSet& support_;
  const FiniteAbelianGroup& group_;
  EnumerationBudget budget_;
  std::size_t k_;
  std::size_t words_ = 0;
  std::vector<int> position_;
  std::vector<std::vector<ElementIndex>> translate_;
  std::vector<ElementIndex> neg_;
  std::vector<int> counts_;
  std::vector<Words> sums_;
  std::vector<SequenceVec> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AtomSet enumerate_atoms(const SupportSet& support, EnumerationBudget budget) {
  AtomSearch search(support, budget);
  return AtomSet(support, search.run());
}

int davenport(const AtomSet& atoms) {
  if (atoms.size() == 0) throw StructuralError("davenport of an empty atom set");
  int d = 0;
  for (const auto& a : atoms.atoms()) d = std::max(d, length(a));
  return d;
}

Rational cross_number_K(const AtomSet& atoms) {
  if (atoms.size() == 0) throw StructuralError("cross number of an empty atom set");
  Rational best(0);
  for (const auto& a : atoms.atoms()) best = std::max(best, cross_number(atoms.support(), a));
  return best;
}

}  // namespace zerosum
