#include "zerosum/sweep.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "zerosum/classify.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/lattice.hpp"

namespace zerosum {

namespace {

enum : std::uint8_t {
  kNonHf = 1,
  kLcnKnown = 2,
  kLcnYes = 4,
  kMinimal = 8,
  kComputed = 16,
};

struct SubsetState {
  std::uint16_t min_delta = 0;
  std::uint8_t flags = 0;
};

class Sweeper {
 public:
  Sweeper(const FiniteAbelianGroup& group, const SweepOptions& options) : group_(group), options_(options) {
    const std::uint64_t order = group.order();
    bits_ = static_cast<unsigned>(order - 1);
    if (bits_ >= 63)
      throw BudgetExceeded("sweep over " + group.to_string() + " needs 2^" + std::to_string(bits_) + " subsets",
                           std::numeric_limits<std::uint64_t>::max(), options.max_subsets);
    total_ = (std::uint64_t{1} << bits_) - 1;
    if (total_ > options.max_subsets)
      throw BudgetExceeded("sweep over " + group.to_string() + " has " + std::to_string(total_) +
                               " nonempty subsets",
                           total_, options.max_subsets);
    state_.assign(std::size_t{1} << bits_, SubsetState{});
    if (options.symmetry) symmetries_ = component_symmetries(group);
  }

  SweepReport run() {
    std::vector<std::vector<std::uint64_t>> levels(bits_ + 1);
    for (std::uint64_t mask = 1; mask <= total_; ++mask)
      levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    std::uint64_t copied = 0;
    for (std::size_t size = 1; size <= bits_; ++size) {
      std::vector<std::uint64_t> reps;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> copies;
      for (std::uint64_t mask : levels[size]) {
        const std::uint64_t canon = symmetries_.size() > 1 ? canonical(mask) : mask;
        if (canon == mask)
          reps.push_back(mask);
        else
          copies.emplace_back(mask, canon);
      }
      run_level(reps);
      for (std::uint64_t mask : reps) {
        if (state_[mask].flags & kComputed)
          ++enumerated_;
        else
          ++pruned_gcd_;
      }
      for (const auto& [mask, canon] : copies) state_[mask] = state_[canon];
      copied += copies.size();
    }
    return aggregate(copied);
  }

 private:
  std::uint64_t map_mask(std::uint64_t mask, const std::vector<ElementIndex>& perm) const {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto b = static_cast<ElementIndex>(std::countr_zero(m));
      out |= std::uint64_t{1} << (perm[b + 1] - 1);
    }
    return out;
  }

  std::uint64_t canonical(std::uint64_t mask) const {
    std::uint64_t best = mask;
    for (const auto& perm : symmetries_) best = std::min(best, map_mask(mask, perm));
    return best;
  }

  void evaluate(std::uint64_t mask) {
    int g = 0;
    bool any_non_hf = false;
    bool lcn_excluded = false;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const std::uint64_t sub = mask & ~(m & -m);
      if (sub == 0) continue;
      const SubsetState& s = state_[sub];
      if (s.flags & kNonHf) {
        any_non_hf = true;
        g = std::gcd(g, static_cast<int>(s.min_delta));
      }
      if ((s.flags & kLcnKnown) && !(s.flags & kLcnYes)) lcn_excluded = true;
    }
    SubsetState& out = state_[mask];
    if (g == 1 && options_.gcd_prune) {
      out.min_delta = 1;
      out.flags = kNonHf | (lcn_excluded ? kLcnKnown : 0);
      return;
    }
    const AtomSet atoms = enumerate_atoms(support_from_mask(group_, mask), options_.enumeration);
    const auto hf = half_factoriality(atoms);
    if (any_non_hf && (hf.half_factorial || g % hf.min_delta != 0))
      throw ConsistencyFault("min Delta of " + atoms.support().to_string() +
                             " is inconsistent with its non-half-factorial subsets");
    out.min_delta = static_cast<std::uint16_t>(hf.min_delta);
    out.flags = kComputed | kLcnKnown;
    if (is_lcn(atoms)) out.flags |= kLcnYes;
    if (!hf.half_factorial) {
      out.flags |= kNonHf;
      if (!any_non_hf) out.flags |= kMinimal;
    }
  }

  void run_level(const std::vector<std::uint64_t>& masks) {
    const unsigned threads = std::max(1U, std::min<unsigned>(options_.threads, static_cast<unsigned>(masks.size())));
    if (threads <= 1) {
      for (std::uint64_t mask : masks) evaluate(mask);
      return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (masks.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          const std::size_t end = std::min(masks.size(), (t + 1) * chunk);
          for (std::size_t i = t * chunk; i < end; ++i) evaluate(masks[i]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SweepReport aggregate(std::uint64_t copied) {
    SweepReport report;
    report.group = group_;
    report.counters.subsets = total_;
    report.counters.pruned_symmetry = copied;
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t mask = 1; mask <= total_; ++mask) {
      const SubsetState& s = state_[mask];
      if (s.flags & kNonHf) {
        ++report.counters.non_half_factorial;
        report.delta_star.insert(s.min_delta);
        if (s.flags & kLcnYes) report.m_of_g = std::max(report.m_of_g, static_cast<int>(s.min_delta));
      }
      if (s.flags & kMinimal) minimal.push_back(mask);
      if (options_.keep_records) {
        SubsetOutcome rec;
        rec.mask = mask;
        rec.half_factorial = !(s.flags & kNonHf);
        rec.minimal_non_hf = s.flags & kMinimal;
        rec.computed = s.flags & kComputed;
        rec.lcn = !(s.flags & kLcnKnown) ? LcnStatus::unknown : (s.flags & kLcnYes) ? LcnStatus::yes : LcnStatus::no;
        rec.min_delta = s.min_delta;
        report.records.push_back(rec);
      }
    }
    report.counters.enumerated = enumerated_;
    report.counters.pruned_gcd = pruned_gcd_;
    report.counters.minimal_non_hf = minimal.size();
    report.max_delta_star = report.delta_star.empty() ? 0 : *report.delta_star.rbegin();
    for (std::uint64_t mask : minimal) {
      report.minimal_non_hf.push_back(support_from_mask(group_, mask));
      if (state_[mask].min_delta == report.max_delta_star) {
        const AtomSet atoms = enumerate_atoms(report.minimal_non_hf.back(), options_.enumeration);
        report.extremal.push_back(annotate_extremal(atoms, report.max_delta_star));
      }
    }
    return report;
  }

  const FiniteAbelianGroup& group_;
  const SweepOptions& options_;
  unsigned bits_ = 0;
  std::uint64_t total_ = 0;
  std::vector<SubsetState> state_;
  std::vector<std::vector<ElementIndex>> symmetries_;
  std::uint64_t enumerated_ = 0;
  std::uint64_t pruned_gcd_ = 0;
};

}  // namespace

SupportSet support_from_mask(const FiniteAbelianGroup& group, std::uint64_t mask) {
  std::vector<GroupElement> elements;
  for (std::uint64_t m = mask; m; m &= m - 1)
    elements.push_back(group.element_at(static_cast<ElementIndex>(std::countr_zero(m)) + 1));
  return SupportSet(group, std::move(elements));
}

std::vector<std::vector<ElementIndex>> component_symmetries(const FiniteAbelianGroup& group) {
  const auto orders = group.orders();
  std::vector<std::size_t> perm(orders.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<ElementIndex>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = orders[perm[i]] == orders[i];
    if (!ok) continue;
    std::vector<ElementIndex> map(group.order());
    for (ElementIndex x = 0; x < map.size(); ++x) {
      const GroupElement e = group.element_at(x);
      GroupElement img = e;
      for (std::size_t i = 0; i < perm.size(); ++i) img.coords[i] = e.coords[perm[i]];
      map[x] = group.index_of(img);
    }
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ExtremalSet annotate_extremal(const AtomSet& atoms, int min_delta) {
  const SupportSet& support = atoms.support();
  const auto& group = support.group();
  const auto inv = group_invariants(group);
  ExtremalSet ex{support, 0, 0, false, false, false, false, false, false, false, std::nullopt};
  ex.min_delta = min_delta;
  ex.atom_count = atoms.size();
  ex.lcn = is_lcn(atoms);
  if (support.size() == 2 && support.orders()[0] == inv.exponent &&
      group.neg_index(support.indices()[0]) == support.indices()[1])
    ex.plus_minus_form = true;
  ex.size_is_rank_plus_one = static_cast<int>(support.size()) == inv.rank + 1;
  ex.no_two_removed_span = no_element_in_span_of_two_removed(support);
  ex.independent_complement = has_independent_complement(support);
  ex.simple = is_simple(support);
  ex.decomposable = is_decomposable(support);
  if (ex.lcn) {
    SequenceVec full = empty_sequence(support);
    for (std::size_t i = 0; i < support.size(); ++i) full.exponents[i] = support.orders()[i];
    bool ok = true;
    for (const auto& a : atoms.atoms()) {
      const Rational k = cross_number(support, a);
      if (k == Rational(1)) {
        ok = ok && 2 * static_cast<int>(seq_stats(a).support.size()) <= inv.exponent;
      } else {
        ok = ok && k < Rational(inv.rank) && atoms.contains(divide(full, a));
      }
    }
    ex.lcn_atom_conditions = ok;
  }
  return ex;
}

SweepReport delta_star(const FiniteAbelianGroup& group, const SweepOptions& options) {
  return Sweeper(group, options).run();
}

int m_of_G(const FiniteAbelianGroup& group, const SweepOptions& options) { return delta_star(group, options).m_of_g; }

std::vector<ExtremalSet> extremal_sets(const FiniteAbelianGroup& group, const SweepOptions& options) {
  return delta_star(group, options).extremal;
}

}  // namespace zerosum
