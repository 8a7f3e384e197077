#include "zerosum/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

long long floor_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::map<int, int> factorize(int n) {
  std::map<int, int> f;
  for (int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  size_ = 1;
  for (int n : orders_) {
    if (n < 2) throw StructuralError("cyclic component order must be >= 2, got " + std::to_string(n));
    size_ *= static_cast<std::uint64_t>(n);
    if (size_ > std::numeric_limits<ElementIndex>::max())
      throw StructuralError("group order exceeds the supported maximum");
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * static_cast<ElementIndex>(orders_[i]);
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

GroupElement FiniteAbelianGroup::basis(std::size_t i) const {
  if (i >= orders_.size()) throw StructuralError("basis index out of range");
  GroupElement e = zero();
  e.coords[i] = 1;
  return e;
}

GroupElement FiniteAbelianGroup::element(std::span<const long long> coords) const {
  if (coords.size() != orders_.size())
    throw StructuralError("element has " + std::to_string(coords.size()) + " coordinates, group has " +
                          std::to_string(orders_.size()));
  GroupElement e = zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    e.coords[i] = static_cast<int>(floor_mod(coords[i], orders_[i]));
  return e;
}

void FiniteAbelianGroup::check(const GroupElement& a) const {
  if (a.coords.size() != orders_.size())
    throw StructuralError("element has " + std::to_string(a.coords.size()) + " coordinates, group has " +
                          std::to_string(orders_.size()));
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (a.coords[i] < 0 || a.coords[i] >= orders_[i])
      throw StructuralError("coordinate " + std::to_string(i) + " out of range [0," +
                            std::to_string(orders_[i]) + ")");
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement c = zero();
  for (std::size_t i = 0; i < orders_.size(); ++i) c.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
  return c;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  check(a);
  GroupElement c = zero();
  for (std::size_t i = 0; i < orders_.size(); ++i) c.coords[i] = (orders_[i] - a.coords[i]) % orders_[i];
  return c;
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& a, long long k) const {
  check(a);
  GroupElement c = zero();
  for (std::size_t i = 0; i < orders_.size(); ++i)
    c.coords[i] = static_cast<int>(floor_mod(floor_mod(k, orders_[i]) * a.coords[i], orders_[i]));
  return c;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  check(a);
  return std::all_of(a.coords.begin(), a.coords.end(), [](int c) { return c == 0; });
}

ElementIndex FiniteAbelianGroup::index_of(const GroupElement& a) const {
  check(a);
  ElementIndex idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += static_cast<ElementIndex>(a.coords[i]) * strides_[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(ElementIndex idx) const {
  if (idx >= size_) throw StructuralError("element index out of range");
  GroupElement e = zero();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e.coords[i] = static_cast<int>(idx / strides_[i]);
    idx %= strides_[i];
  }
  return e;
}

ElementIndex FiniteAbelianGroup::add_index(ElementIndex a, ElementIndex b) const {
  ElementIndex out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<ElementIndex>(orders_[i]);
    const ElementIndex da = (a / strides_[i]) % n;
    const ElementIndex db = (b / strides_[i]) % n;
    out += ((da + db) % n) * strides_[i];
  }
  return out;
}

ElementIndex FiniteAbelianGroup::neg_index(ElementIndex a) const {
  ElementIndex out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<ElementIndex>(orders_[i]);
    const ElementIndex da = (a / strides_[i]) % n;
    out += ((n - da) % n) * strides_[i];
  }
  return out;
}

ElementIndex FiniteAbelianGroup::scale_index(ElementIndex a, long long k) const {
  ElementIndex out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const long long n = orders_[i];
    const long long da = (a / strides_[i]) % n;
    out += static_cast<ElementIndex>(floor_mod(floor_mod(k, n) * da, n)) * strides_[i];
  }
  return out;
}

int FiniteAbelianGroup::order_of_index(ElementIndex a) const {
  int ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const int n = orders_[i];
    const int da = static_cast<int>((a / strides_[i]) % static_cast<ElementIndex>(n));
    ord = std::lcm(ord, n / std::gcd(n, da));
  }
  return ord;
}

std::string FiniteAbelianGroup::to_string() const {
  if (orders_.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < orders_.size();) {
    std::size_t j = i;
    while (j < orders_.size() && orders_[j] == orders_[i]) ++j;
    if (!out.empty()) out += 'x';
    out += 'C' + std::to_string(orders_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string FiniteAbelianGroup::format(const GroupElement& a) const {
  check(a);
  std::string out = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.coords[i]);
  }
  return out + ")";
}

int order_of(const FiniteAbelianGroup& group, const GroupElement& g) {
  return group.order_of_index(group.index_of(g));
}

GroupInvariants group_invariants(const FiniteAbelianGroup& group) {
  GroupInvariants inv;
  std::map<int, int> p_rank;
  for (int n : group.orders()) {
    inv.exponent = std::lcm(inv.exponent, n);
    for (const auto& [p, e] : factorize(n)) ++p_rank[p];
  }
  for (const auto& [p, r] : p_rank) {
    inv.rank = std::max(inv.rank, r);
    inv.total_rank += r;
  }
  return inv;
}

std::vector<bool> subgroup_mask(const FiniteAbelianGroup& group, std::span<const ElementIndex> generators) {
  std::vector<bool> seen(group.order(), false);
  std::deque<ElementIndex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const ElementIndex x = queue.front();
    queue.pop_front();
    for (ElementIndex e : generators) {
      const ElementIndex y = group.add_index(x, e);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::uint64_t subgroup_size(const FiniteAbelianGroup& group, std::span<const ElementIndex> generators) {
  const auto mask = subgroup_mask(group, generators);
  return static_cast<std::uint64_t>(std::count(mask.begin(), mask.end(), true));
}

std::vector<GroupElement> subgroup_closure(const FiniteAbelianGroup& group,
                                           std::span<const GroupElement> generators) {
  std::vector<ElementIndex> idx;
  idx.reserve(generators.size());
  for (const auto& g : generators) idx.push_back(group.index_of(g));
  const auto mask = subgroup_mask(group, idx);
  std::vector<GroupElement> out;
  for (ElementIndex i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(group.element_at(i));
  return out;
}

bool is_independent_indices(const FiniteAbelianGroup& group, std::span<const ElementIndex> family) {
  std::uint64_t product = 1;
  for (ElementIndex e : family) {
    if (e == 0) return false;
    product *= static_cast<std::uint64_t>(group.order_of_index(e));
    if (product > group.order()) return false;
  }
  return subgroup_size(group, family) == product;
}

bool is_independent(const FiniteAbelianGroup& group, std::span<const GroupElement> family) {
  std::vector<ElementIndex> idx;
  idx.reserve(family.size());
  for (const auto& g : family) idx.push_back(group.index_of(g));
  return is_independent_indices(group, idx);
}

int min_multiple_in_span(const FiniteAbelianGroup& group, const GroupElement& g,
                         std::span<const GroupElement> span_of) {
  if (group.is_zero(g)) throw StructuralError("min_multiple_in_span requires a nonzero element");
  std::vector<ElementIndex> idx;
  for (const auto& e : span_of) idx.push_back(group.index_of(e));
  const auto mask = subgroup_mask(group, idx);
  const ElementIndex gi = group.index_of(g);
  ElementIndex multiple = gi;
  for (int d = 1;; ++d) {
    if (mask[multiple]) return d;
    multiple = group.add_index(multiple, gi);
  }
}

std::vector<FiniteAbelianGroup> abelian_groups_of_order(int n) {
  if (n < 1) throw StructuralError("group order must be positive");
  // One partition of the exponent per prime; the i-th largest parts combine
  // into the i-th largest invariant factor.
  std::vector<std::vector<std::vector<int>>> per_prime;
  std::vector<int> primes;
  for (const auto& [p, e] : factorize(n)) {
    primes.push_back(p);
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<std::vector<int>> factor_lists;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i) len = std::max(len, per_prime[i][choice[i]].size());
    std::vector<int> factors(len, 1);  // factors[0] is the largest
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& part = per_prime[i][choice[i]];
      for (std::size_t j = 0; j < part.size(); ++j)
        for (int k = 0; k < part[j]; ++k) factors[j] *= primes[i];
    }
    std::reverse(factors.begin(), factors.end());
    factor_lists.push_back(std::move(factors));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(factor_lists.begin(), factor_lists.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<FiniteAbelianGroup> out;
  for (auto& f : factor_lists) out.emplace_back(std::move(f));
  return out;
}

}  // namespace zerosum
