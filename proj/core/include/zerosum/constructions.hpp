#pragma once

#include <optional>
#include <vector>

#include "zerosum/sequence.hpp"

namespace zerosum {

/// {g, -g}. Without an explicit g, takes the element of smallest index with
/// ord(g) = exp(G). Requires ord(g) > 2.
SupportSet plus_minus_set(const FiniteAbelianGroup& group, std::optional<GroupElement> g = std::nullopt);

/// [e0, e1, ..., es] with e0 = e1 + ... + es, where e_i = (n_i / p) u_i runs
/// over the first s components whose order n_i is divisible by p.
SupportSet basis_sum_set(const FiniteAbelianGroup& group, int p, int s);

/// C9^(r-1) + C27 with G0 = [3e1, ..., 3e_(r-1), e_r, g], g = e1 + ... + e_r.
/// Not simple, although G0 \ {g} and G0 \ {e_r} are independent. r >= 2.
FiniteAbelianGroup nonsimple_odd_group(int r);
SupportSet nonsimple_odd_set(int r);

/// C2^(r-2) + C4 + C4 with G0 = [e1, ..., e_(r-3), e_(r-2) + e_(r-1), e_(r-1),
/// e_r, g], g = e1 + ... + e_(r-2) + e_r. No G0 \ {h} is independent. r >= 3.
FiniteAbelianGroup nonsimple_even_group(int r);
SupportSet nonsimple_even_set(int r);

/// The atoms of the two sets above written out from their closed form, in
/// the position order of the corresponding set: first those with k = 1,
/// then those with k > 1.
struct ExpectedAtoms {
  std::vector<SequenceVec> unit_cross;
  std::vector<SequenceVec> large_cross;
};
ExpectedAtoms nonsimple_odd_atoms(int r);
ExpectedAtoms nonsimple_even_atoms(int r);

}  // namespace zerosum
