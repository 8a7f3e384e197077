#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

/// Dense index of a group element, 0 <= index < |G|. The identity has index 0
/// and index order coincides with lexicographic order of coordinate tuples.
using ElementIndex = std::uint32_t;

/// An element of C_{n1} + ... + C_{nk}, stored as reduced residues.
struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupInvariants {
  int exponent = 1;
  int rank = 0;        // max_p r_p(G)
  int total_rank = 0;  // sum_p r_p(G)

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Direct sum of cyclic groups in the component order the user gave.
/// Components are never reordered: element coordinates stay stable.
class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup() = default;

  /// Every modulus must be >= 2 and the order must fit an ElementIndex.
  explicit FiniteAbelianGroup(std::vector<int> orders);

  std::span<const int> orders() const noexcept { return orders_; }
  std::size_t components() const noexcept { return orders_.size(); }
  std::uint64_t order() const noexcept { return size_; }

  GroupElement zero() const;
  /// Unit vector e_i (coordinate i equal to 1).
  GroupElement basis(std::size_t i) const;
  /// Reduces arbitrary integers into the group; count must match.
  GroupElement element(std::span<const long long> coords) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, long long k) const;
  bool is_zero(const GroupElement& a) const;

  /// Throws StructuralError unless `a` has the right length and reduced residues.
  void check(const GroupElement& a) const;

  ElementIndex index_of(const GroupElement& a) const;
  GroupElement element_at(ElementIndex idx) const;

  ElementIndex add_index(ElementIndex a, ElementIndex b) const;
  ElementIndex neg_index(ElementIndex a) const;
  ElementIndex scale_index(ElementIndex a, long long k) const;
  int order_of_index(ElementIndex a) const;

  /// Canonical text form, e.g. "C2^2xC4" (runs of equal adjacent moduli are merged).
  std::string to_string() const;
  std::string format(const GroupElement& a) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<int> orders_;
  std::vector<ElementIndex> strides_;
  std::uint64_t size_ = 1;
};

/// ord(g) = lcm_i n_i / gcd(n_i, g_i); the identity has order 1.
int order_of(const FiniteAbelianGroup& group, const GroupElement& g);

/// exp(G), r(G) and r*(G). r_p counts the components whose modulus p divides,
/// which is independent of the chosen cyclic decomposition.
GroupInvariants group_invariants(const FiniteAbelianGroup& group);

/// <E> as a sorted list of elements (sorted by index); <{}> = {0}.
std::vector<GroupElement> subgroup_closure(const FiniteAbelianGroup& group,
                                           std::span<const GroupElement> generators);

/// Membership bitmap of <E> over element indices.
std::vector<bool> subgroup_mask(const FiniteAbelianGroup& group,
                                std::span<const ElementIndex> generators);

/// |<E>| without materialising the elements.
std::uint64_t subgroup_size(const FiniteAbelianGroup& group,
                            std::span<const ElementIndex> generators);

/// True iff every member is nonzero and |<family>| equals the product of the
/// member orders, i.e. the sum of the cyclic subgroups is direct.
bool is_independent(const FiniteAbelianGroup& group, std::span<const GroupElement> family);
bool is_independent_indices(const FiniteAbelianGroup& group,
                            std::span<const ElementIndex> family);

/// Smallest d >= 1 with d*g in <E>. Always divides ord(g). Requires g != 0.
int min_multiple_in_span(const FiniteAbelianGroup& group, const GroupElement& g,
                         std::span<const GroupElement> span_of);

/// All abelian groups of order n up to isomorphism, in invariant factor form
/// n_1 | n_2 | ... | n_k, cyclic group first, then by number of components
/// and lexicographically.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(int n);

}  // namespace zerosum
