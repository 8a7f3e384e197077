#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zerosum/group.hpp"

namespace zerosum {

/// Exact cross numbers. Denominators divide exp(G), so 64-bit parts suffice.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

/// An ordered set G0 of distinct nonzero elements. The order fixed at
/// construction defines exponent-vector indexing for every sequence over G0.
class SupportSet {
 public:
  SupportSet(FiniteAbelianGroup group, std::vector<GroupElement> elements);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  std::span<const ElementIndex> indices() const noexcept { return indices_; }
  std::span<const int> orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  /// Position of the element with the given group index, or -1.
  int position_of(ElementIndex idx) const;

  /// The same group with position `pos` dropped.
  SupportSet without(std::size_t pos) const;
  SupportSet subset(std::span<const std::size_t> positions) const;

  /// "(a,b);(c,d)" in support order.
  std::string to_string() const;

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<GroupElement> elements_;
  std::vector<ElementIndex> indices_;
  std::vector<int> orders_;
};

/// A sequence over G0 as its multiplicity vector (v_g)_{g in G0}.
/// The all-zero vector is the empty sequence.
struct SequenceVec {
  std::vector<int> exponents;

  std::size_t dim() const noexcept { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }

  friend auto operator<=>(const SequenceVec&, const SequenceVec&) = default;
  friend bool operator==(const SequenceVec&, const SequenceVec&) = default;
};

SequenceVec empty_sequence(const SupportSet& support);
/// g^k for the element at `pos`.
SequenceVec power_of(const SupportSet& support, std::size_t pos, int k);

GroupElement sigma(const SupportSet& support, const SequenceVec& s);
ElementIndex sigma_index(const SupportSet& support, const SequenceVec& s);
bool is_zero_sum(const SupportSet& support, const SequenceVec& s);

/// k(S) = sum_g v_g / ord(g).
Rational cross_number(const SupportSet& support, const SequenceVec& s);

struct SeqStats {
  int length = 0;
  int max_multiplicity = 0;
  std::vector<std::size_t> support;  // positions with v_g > 0
};
SeqStats seq_stats(const SequenceVec& s);
int length(const SequenceVec& s);

/// S | T in F(G0): componentwise <=. Dimensions must agree.
bool divides(const SequenceVec& s, const SequenceVec& t);
SequenceVec multiply(const SequenceVec& s, const SequenceVec& t);
/// T * S^-1; throws StructuralError when S does not divide T.
SequenceVec divide(const SequenceVec& t, const SequenceVec& s);

/// Product notation, e.g. "(1)^3 * (4)"; exponent 1 is omitted and the
/// empty sequence prints as "1".
std::string format_sequence(const SupportSet& support, const SequenceVec& s);

}  // namespace zerosum
