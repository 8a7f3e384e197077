#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "zerosum/atoms.hpp"

namespace zerosum {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

/// A lattice basis of ker_Z(M) = {z in Z^cols : M z = 0}.
struct KernelBasis {
  std::size_t dim = 0;  // number of columns of M
  std::vector<BigVector> vectors;
};

/// Kernel basis by column Hermite reduction of [M; I] in exact integers: the
/// identity block records the unimodular column transform, and the columns
/// whose M-part reduces to zero span the kernel. Every emitted vector is
/// checked against M before returning.
KernelBasis integer_kernel(const ExponentMatrix& m);

/// Rank of M over Q.
std::size_t matrix_rank(const ExponentMatrix& m);

/// min Delta(G0), or 0 when G0 is half-factorial.
///
/// Any z in ker_Z(M) splits as z+ - z-, and prod A_j^{z+_j} = prod A_j^{z-_j}
/// are two factorizations of one zero-sum sequence with lengths differing by
/// 1^T z. Conversely every pair of factorizations of one sequence gives such a
/// z. So {1^T z : M z = 0} is the subgroup of Z generated by all differences of
/// factorization lengths, whose nonnegative generator is gcd Delta(G0), and
/// gcd Delta(G0) = min Delta(G0).
///
/// Computed by the same reduction as integer_kernel with the single row 1^T in
/// place of the identity block.
int min_delta(const AtomSet& atoms);
int min_delta(const ExponentMatrix& m);

/// gcd of |1^T b| over a kernel basis; 0 for an empty basis.
BigInt length_gcd(const KernelBasis& basis);

struct HalfFactoriality {
  bool half_factorial = true;
  int min_delta = 0;
};

/// Both routes of is_half_factorial, returning min Delta as well.
HalfFactoriality half_factoriality(const AtomSet& atoms);

/// Decides half-factoriality twice: route A checks k(A) = 1 for every atom,
/// route B checks min_delta == 0. Throws ConsistencyFault if they disagree.
bool is_half_factorial(const AtomSet& atoms);

/// A kernel vector z with 1^T z = min Delta(G0), read as two factorizations
/// of the same sequence: `longer` uses the atoms with multiplicities z+ and
/// `shorter` those with multiplicities z-.
struct DistanceWitness {
  int delta = 0;
  BigVector kernel_vector;
  BigVector longer;
  BigVector shorter;
};

/// nullopt for half-factorial G0.
std::optional<DistanceWitness> explain_min_delta(const AtomSet& atoms);

}  // namespace zerosum
