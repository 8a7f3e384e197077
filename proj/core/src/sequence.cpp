#include "zerosum/sequence.hpp"

#include <algorithm>
#include <set>

#include "zerosum/errors.hpp"

namespace zerosum {

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

SupportSet::SupportSet(FiniteAbelianGroup group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::set<ElementIndex> seen;
  for (const auto& g : elements_) {
    const ElementIndex idx = group_.index_of(g);
    if (idx == 0) throw StructuralError("support set must not contain 0");
    if (!seen.insert(idx).second) throw StructuralError("duplicate element " + group_.format(g));
    indices_.push_back(idx);
    orders_.push_back(group_.order_of_index(idx));
  }
}

int SupportSet::position_of(ElementIndex idx) const {
  auto it = std::find(indices_.begin(), indices_.end(), idx);
  return it == indices_.end() ? -1 : static_cast<int>(it - indices_.begin());
}

SupportSet SupportSet::without(std::size_t pos) const {
  std::vector<GroupElement> rest;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (i != pos) rest.push_back(elements_[i]);
  return SupportSet(group_, std::move(rest));
}

SupportSet SupportSet::subset(std::span<const std::size_t> positions) const {
  std::vector<GroupElement> picked;
  for (std::size_t p : positions) picked.push_back(elements_.at(p));
  return SupportSet(group_, std::move(picked));
}

std::string SupportSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ';';
    out += group_.format(elements_[i]);
  }
  return out;
}

namespace {
void check_dim(const SupportSet& support, const SequenceVec& s) {
  if (s.dim() != support.size())
    throw StructuralError("sequence dimension " + std::to_string(s.dim()) + " does not match support size " +
                          std::to_string(support.size()));
}
void check_dim(const SequenceVec& s, const SequenceVec& t) {
  if (s.dim() != t.dim()) throw StructuralError("sequences live over different supports");
}
}  // namespace

SequenceVec empty_sequence(const SupportSet& support) { return SequenceVec{std::vector<int>(support.size(), 0)}; }

SequenceVec power_of(const SupportSet& support, std::size_t pos, int k) {
  SequenceVec s = empty_sequence(support);
  s.exponents.at(pos) = k;
  return s;
}

ElementIndex sigma_index(const SupportSet& support, const SequenceVec& s) {
  check_dim(support, s);
  const auto& group = support.group();
  ElementIndex acc = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s[i] != 0) acc = group.add_index(acc, group.scale_index(support.indices()[i], s[i]));
  return acc;
}

GroupElement sigma(const SupportSet& support, const SequenceVec& s) {
  return support.group().element_at(sigma_index(support, s));
}

bool is_zero_sum(const SupportSet& support, const SequenceVec& s) { return sigma_index(support, s) == 0; }

Rational cross_number(const SupportSet& support, const SequenceVec& s) {
  check_dim(support, s);
  Rational k(0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s[i] != 0) k += Rational(s[i], support.orders()[i]);
  return k;
}

SeqStats seq_stats(const SequenceVec& s) {
  SeqStats st;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    st.length += s[i];
    st.max_multiplicity = std::max(st.max_multiplicity, s[i]);
    if (s[i] > 0) st.support.push_back(i);
  }
  return st;
}

int length(const SequenceVec& s) {
  int n = 0;
  for (int v : s.exponents) n += v;
  return n;
}

bool divides(const SequenceVec& s, const SequenceVec& t) {
  check_dim(s, t);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s[i] > t[i]) return false;
  return true;
}

SequenceVec multiply(const SequenceVec& s, const SequenceVec& t) {
  check_dim(s, t);
  SequenceVec out = s;
  for (std::size_t i = 0; i < s.dim(); ++i) out.exponents[i] += t[i];
  return out;
}

SequenceVec divide(const SequenceVec& t, const SequenceVec& s) {
  if (!divides(s, t)) throw StructuralError("divisor does not divide the sequence");
  SequenceVec out = t;
  for (std::size_t i = 0; i < s.dim(); ++i) out.exponents[i] -= s[i];
  return out;
}

std::string format_sequence(const SupportSet& support, const SequenceVec& s) {
  check_dim(support, s);
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s[i] == 0) continue;
    if (!out.empty()) out += " * ";
    out += support.group().format(support[i]);
    if (s[i] != 1) out += '^' + std::to_string(s[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace zerosum
