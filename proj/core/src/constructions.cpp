#include "zerosum/constructions.hpp"

#include <string>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

GroupElement sum_of(const FiniteAbelianGroup& group, const std::vector<GroupElement>& xs) {
  GroupElement acc = group.zero();
  for (const auto& x : xs) acc = group.add(acc, x);
  return acc;
}

void require_rank(int r, int least, const char* what) {
  if (r < least)
    throw StructuralError(std::string(what) + " needs r >= " + std::to_string(least) + ", got " + std::to_string(r));
}

}  // namespace

SupportSet plus_minus_set(const FiniteAbelianGroup& group, std::optional<GroupElement> g) {
  if (!g) {
    const int exp = group_invariants(group).exponent;
    for (ElementIndex i = 1; i < group.order() && !g; ++i)
      if (group.order_of_index(i) == exp) g = group.element_at(i);
  }
  if (!g) throw StructuralError("the trivial group has no element for {g, -g}");
  group.check(*g);
  if (order_of(group, *g) <= 2)
    throw StructuralError("{g, -g} needs ord(g) > 2, got " + group.format(*g) + " in " + group.to_string());
  return SupportSet(group, {*g, group.neg(*g)});
}

SupportSet basis_sum_set(const FiniteAbelianGroup& group, int p, int s) {
  if (p < 2 || s < 1) throw StructuralError("basis_sum_set needs p >= 2 and s >= 1");
  std::vector<GroupElement> basis;
  const auto orders = group.orders();
  for (std::size_t i = 0; i < orders.size() && static_cast<int>(basis.size()) < s; ++i)
    if (orders[i] % p == 0) basis.push_back(group.scale(group.basis(i), orders[i] / p));
  if (static_cast<int>(basis.size()) < s)
    throw StructuralError(group.to_string() + " has fewer than " + std::to_string(s) +
                          " cyclic components of order divisible by " + std::to_string(p));
  std::vector<GroupElement> elements{sum_of(group, basis)};
  elements.insert(elements.end(), basis.begin(), basis.end());
  return SupportSet(group, std::move(elements));
}

FiniteAbelianGroup nonsimple_odd_group(int r) {
  require_rank(r, 2, "C9^(r-1)+C27");
  std::vector<int> orders(static_cast<std::size_t>(r - 1), 9);
  orders.push_back(27);
  return FiniteAbelianGroup(orders);
}

SupportSet nonsimple_odd_set(int r) {
  const auto group = nonsimple_odd_group(r);
  std::vector<GroupElement> elements;
  std::vector<GroupElement> basis;
  for (int i = 0; i < r; ++i) basis.push_back(group.basis(static_cast<std::size_t>(i)));
  for (int i = 0; i + 1 < r; ++i) elements.push_back(group.scale(basis[static_cast<std::size_t>(i)], 3));
  elements.push_back(basis.back());
  elements.push_back(sum_of(group, basis));
  return SupportSet(group, std::move(elements));
}

FiniteAbelianGroup nonsimple_even_group(int r) {
  require_rank(r, 3, "C2^(r-2)+C4+C4");
  std::vector<int> orders(static_cast<std::size_t>(r - 2), 2);
  orders.push_back(4);
  orders.push_back(4);
  return FiniteAbelianGroup(orders);
}

SupportSet nonsimple_even_set(int r) {
  const auto group = nonsimple_even_group(r);
  auto e = [&](int i) { return group.basis(static_cast<std::size_t>(i - 1)); };
  std::vector<GroupElement> elements;
  for (int i = 1; i <= r - 3; ++i) elements.push_back(e(i));
  elements.push_back(group.add(e(r - 2), e(r - 1)));
  elements.push_back(e(r - 1));
  elements.push_back(e(r));
  std::vector<GroupElement> g_terms;
  for (int i = 1; i <= r - 2; ++i) g_terms.push_back(e(i));
  g_terms.push_back(e(r));
  elements.push_back(sum_of(group, g_terms));
  return SupportSet(group, std::move(elements));
}

ExpectedAtoms nonsimple_odd_atoms(int r) {
  require_rank(r, 2, "C9^(r-1)+C27");
  // positions: 3e_i at i - 1 for i < r, e_r at r - 1, g at r
  const std::size_t dim = static_cast<std::size_t>(r) + 1;
  const std::size_t er = dim - 2, g = dim - 1;
  auto vec = [&](int vg, int ver, int each) {
    SequenceVec s{std::vector<int>(dim, 0)};
    for (std::size_t i = 0; i < er; ++i) s.exponents[i] = each;
    s.exponents[er] = ver;
    s.exponents[g] = vg;
    return s;
  };
  ExpectedAtoms out;
  for (std::size_t i = 0; i < er; ++i) {
    SequenceVec s{std::vector<int>(dim, 0)};
    s.exponents[i] = 3;
    out.unit_cross.push_back(s);
  }
  out.unit_cross.push_back(vec(0, 27, 0));
  out.unit_cross.push_back(vec(27, 0, 0));
  out.unit_cross.push_back(vec(9, 18, 0));
  out.unit_cross.push_back(vec(18, 9, 0));
  for (int j : {3, 6, 12, 15, 21, 24}) out.large_cross.push_back(vec(j, 27 - j, j % 9 == 3 ? 2 : 1));
  return out;
}

ExpectedAtoms nonsimple_even_atoms(int r) {
  require_rank(r, 3, "C2^(r-2)+C4+C4");
  // positions: e_i at i - 1 for i <= r - 3, then f = e_(r-2) + e_(r-1), e_(r-1), e_r, g
  const std::size_t dim = static_cast<std::size_t>(r) + 1;
  const std::size_t f = dim - 4, em = dim - 3, er = dim - 2, g = dim - 1;
  auto vec = [&](int vg, int ver, int vf, int vem, int each) {
    SequenceVec s{std::vector<int>(dim, 0)};
    for (std::size_t i = 0; i < f; ++i) s.exponents[i] = each;
    s.exponents[f] = vf;
    s.exponents[em] = vem;
    s.exponents[er] = ver;
    s.exponents[g] = vg;
    return s;
  };
  ExpectedAtoms out;
  for (std::size_t i = 0; i < f; ++i) {
    SequenceVec s{std::vector<int>(dim, 0)};
    s.exponents[i] = 2;
    out.unit_cross.push_back(s);
  }
  out.unit_cross.push_back(vec(0, 0, 4, 0, 0));
  out.unit_cross.push_back(vec(0, 0, 0, 4, 0));
  out.unit_cross.push_back(vec(0, 4, 0, 0, 0));
  out.unit_cross.push_back(vec(4, 0, 0, 0, 0));
  out.unit_cross.push_back(vec(0, 0, 2, 2, 0));
  out.unit_cross.push_back(vec(2, 2, 0, 0, 0));
  out.large_cross.push_back(vec(1, 3, 1, 3, 1));
  out.large_cross.push_back(vec(1, 3, 3, 1, 1));
  out.large_cross.push_back(vec(3, 1, 1, 3, 1));
  out.large_cross.push_back(vec(3, 1, 3, 1, 1));
  return out;
}

}  // namespace zerosum
