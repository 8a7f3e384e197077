#include "zerosum/classify.hpp"

#include "zerosum/lattice.hpp"

namespace zerosum {

namespace {

std::vector<ElementIndex> indices_except(const SupportSet& support, std::size_t skip_a,
                                         std::size_t skip_b = static_cast<std::size_t>(-1)) {
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (i != skip_a && i != skip_b) out.push_back(support.indices()[i]);
  return out;
}

}  // namespace

bool is_lcn(const AtomSet& atoms) {
  for (const auto& a : atoms.atoms())
    if (cross_number(atoms.support(), a) < Rational(1)) return false;
  return true;
}

bool all_maximal_subsets_half_factorial(const AtomSet& atoms) {
  const auto& support = atoms.support();
  for (std::size_t h = 0; h < support.size(); ++h)
    for (const auto& a : atoms.atoms())
      if (a[h] == 0 && cross_number(support, a) != Rational(1)) return false;
  return true;
}

bool is_decomposable(const SupportSet& support) {
  const std::size_t k = support.size();
  if (k < 2) return false;
  const auto& group = support.group();
  const auto all = subgroup_size(group, support.indices());
  // Fix position k-1 in the second part so each bipartition is visited once.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    std::vector<ElementIndex> first, second;
    for (std::size_t i = 0; i < k; ++i)
      ((mask >> i) & 1U ? first : second).push_back(support.indices()[i]);
    if (subgroup_size(group, first) * subgroup_size(group, second) == all) return true;
  }
  return false;
}

bool has_independent_complement(const SupportSet& support) {
  for (std::size_t g = 0; g < support.size(); ++g)
    if (is_independent_indices(support.group(), indices_except(support, g))) return true;
  return false;
}

bool is_simple(const SupportSet& support) {
  const auto& group = support.group();
  for (std::size_t g = 0; g < support.size(); ++g) {
    const auto rest = indices_except(support, g);
    if (!is_independent_indices(group, rest)) continue;
    if (!subgroup_mask(group, rest)[support.indices()[g]]) continue;
    // <E> grows with E, so the maximal proper subsets of G0 \ {g} suffice.
    bool minimal = true;
    for (std::size_t h = 0; h < support.size() && minimal; ++h) {
      if (h == g) continue;
      if (subgroup_mask(group, indices_except(support, g, h))[support.indices()[g]]) minimal = false;
    }
    if (minimal) return true;
  }
  return false;
}

bool has_self_span_property(const SupportSet& support) {
  for (std::size_t g = 0; g < support.size(); ++g)
    if (!subgroup_mask(support.group(), indices_except(support, g))[support.indices()[g]]) return false;
  return true;
}

bool no_element_in_span_of_two_removed(const SupportSet& support) {
  for (std::size_t h = 0; h < support.size(); ++h)
    for (std::size_t h2 = 0; h2 < support.size(); ++h2) {
      if (h2 == h) continue;
      if (subgroup_mask(support.group(), indices_except(support, h, h2))[support.indices()[h]]) return false;
    }
  return true;
}

ClassificationRecord classify(const AtomSet& atoms) {
  const auto& support = atoms.support();
  ClassificationRecord rec;
  rec.subset = support.to_string();
  rec.atom_count = atoms.size();
  const auto hf = half_factoriality(atoms);
  rec.half_factorial = hf.half_factorial;
  rec.min_delta = hf.min_delta;
  rec.lcn = is_lcn(atoms);
  rec.minimal_non_hf = !rec.half_factorial && all_maximal_subsets_half_factorial(atoms);
  rec.decomposable = is_decomposable(support);
  rec.simple = is_simple(support);
  rec.independent_complement = has_independent_complement(support);
  if (atoms.size() > 0) {
    rec.davenport = davenport(atoms);
    rec.cross_number_K = cross_number_K(atoms);
  }
  return rec;
}

ClassificationRecord classify(const SupportSet& support, EnumerationBudget budget) {
  return classify(enumerate_atoms(support, budget));
}

}  // namespace zerosum
