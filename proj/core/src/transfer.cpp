#include "zerosum/transfer.hpp"

#include "zerosum/classify.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/lattice.hpp"

namespace zerosum {

namespace {

std::vector<GroupElement> others(const std::vector<GroupElement>& elements, std::size_t skip) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (i != skip) out.push_back(elements[i]);
  return out;
}

}  // namespace

TransferResult transfer_reduce(const AtomSet& atoms) {
  const SupportSet& support = atoms.support();
  if (half_factoriality(atoms).half_factorial || !all_maximal_subsets_half_factorial(atoms))
    throw StructuralError("transfer_reduce needs a minimal non-half-factorial set, got " + support.to_string());

  const auto& group = support.group();
  std::vector<GroupElement> elements(support.elements().begin(), support.elements().end());
  TransferResult result{support, support, std::vector<int>(support.size(), 1), {}};
  while (true) {
    std::size_t pick = elements.size();
    int multiplier = 1;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto rest = others(elements, i);
      const int m = min_multiple_in_span(group, elements[i], rest);
      if (m > 1 && (pick == elements.size() || elements[i] < elements[pick])) {
        pick = i;
        multiplier = m;
      }
    }
    if (pick == elements.size()) break;
    const GroupElement image = group.scale(elements[pick], multiplier);
    if (group.is_zero(image))
      throw ConsistencyFault("theta' would send " + group.format(elements[pick]) + " to 0");
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (i != pick && elements[i] == image)
        throw ConsistencyFault("theta' would merge two elements of " + support.to_string());
    elements[pick] = image;
    result.divisors[pick] *= multiplier;
    result.steps.push_back({pick, multiplier});
  }
  result.reduced = SupportSet(group, std::move(elements));
  return result;
}

TransferResult transfer_reduce(const SupportSet& support, EnumerationBudget budget) {
  return transfer_reduce(enumerate_atoms(support, budget));
}

SequenceVec apply_transfer(const TransferResult& transfer, const SequenceVec& b) {
  if (b.dim() != transfer.original.size() || !is_zero_sum(transfer.original, b))
    throw StructuralError("theta is defined on zero-sum sequences over " + transfer.original.to_string());
  SequenceVec out = b;
  for (std::size_t i = 0; i < out.dim(); ++i) {
    if (out.exponents[i] % transfer.divisors[i] != 0)
      throw ConsistencyFault("multiplicity not divisible by the transfer divisor");
    out.exponents[i] /= transfer.divisors[i];
  }
  return out;
}

}  // namespace zerosum
