#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "support/oracles.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/sweep.hpp"

using namespace zerosum;

namespace {

GroupElement el(std::vector<int> c) { return GroupElement{std::move(c)}; }
SequenceVec seq(std::vector<int> v) { return SequenceVec{std::move(v)}; }

std::vector<SequenceVec> as_vector(const AtomSet& a) { return {a.atoms().begin(), a.atoms().end()}; }

}  // namespace

TEST_CASE("atoms of {g, -g}") {
  const SupportSet s(FiniteAbelianGroup({5}), {el({1}), el({4})});
  const auto a = enumerate_atoms(s);
  CHECK(as_vector(a) == std::vector{seq({0, 5}), seq({1, 1}), seq({5, 0})});
  CHECK(davenport(a) == 5);
  CHECK(cross_number_K(a) == Rational(1));
  CHECK(a.contains(seq({1, 1})));
  CHECK_FALSE(a.contains(seq({2, 2})));
}

TEST_CASE("atoms of {e1 + e2, e1, e2} in C3^2") {
  const auto s = basis_sum_set(FiniteAbelianGroup({3, 3}), 3, 2);
  const auto want = oracle::atoms(s);
  // e0^3, e1^3, e2^3, e0 e1^2 e2^2, e0^2 e1 e2
  CHECK(want == std::vector{seq({0, 0, 3}), seq({0, 3, 0}), seq({1, 2, 2}), seq({2, 1, 1}), seq({3, 0, 0})});
  CHECK(as_vector(enumerate_atoms(s)) == want);
}

TEST_CASE("atoms of the non-simple set in C2 + C4 + C4") {
  const auto s = nonsimple_even_set(3);
  const auto a = enumerate_atoms(s);
  const auto expected = nonsimple_even_atoms(3);
  auto all = expected.unit_cross;
  all.insert(all.end(), expected.large_cross.begin(), expected.large_cross.end());
  std::sort(all.begin(), all.end());
  CHECK(a.size() == 10);
  CHECK(as_vector(a) == all);
  CHECK(as_vector(a) == oracle::atoms(s));
  CHECK(davenport(a) == 8);
  CHECK(cross_number_K(a) == Rational(2));
}

TEST_CASE("K of the non-simple set in C9^2 + C27") {
  const auto a = enumerate_atoms(nonsimple_odd_set(3));
  CHECK(a.size() == 12);
  CHECK(cross_number_K(a) == Rational(7, 3));
}

TEST_CASE("Davenport constant of C2^2 \\ {0}") {
  const FiniteAbelianGroup g({2, 2});
  const SupportSet s(g, {el({0, 1}), el({1, 0}), el({1, 1})});
  const auto want = oracle::atoms(s);
  int d = 0;
  for (const auto& a : want) d = std::max(d, length(a));
  CHECK(d == 3);
  CHECK(davenport(enumerate_atoms(s)) == 3);
}

TEST_CASE("budget refusal reports the grid bound") {
  const auto s = nonsimple_odd_set(3);
  CHECK(grid_bound(s) == 4 * 4 * 28 * 28);
  try {
    enumerate_atoms(s, EnumerationBudget{10});
    FAIL("expected a refusal");
  } catch (const BudgetExceeded& e) {
    CHECK(e.bound() == grid_bound(s));
    CHECK(e.limit() == 10);
  }
}

TEST_CASE("matrix layout") {
  const SupportSet s(FiniteAbelianGroup({5}), {el({1}), el({4})});
  const auto m = enumerate_atoms(s).matrix();
  CHECK(m.rows == 2);
  CHECK(m.cols == 3);
  // columns are the sorted atoms (0,5), (1,1), (5,0)
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(1, 0) == 5);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(0, 2) == 5);
}

TEST_CASE("enumerator equals the grid oracle on every small subset") {
  std::size_t checked = 0;
  for (const auto& g : {FiniteAbelianGroup({6}), FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({3, 3}),
                        FiniteAbelianGroup({8}), FiniteAbelianGroup({2, 2, 2})}) {
    const std::uint64_t total = (std::uint64_t{1} << (g.order() - 1)) - 1;
    for (std::uint64_t mask = 1; mask <= total; ++mask) {
      if (std::popcount(mask) > 4) continue;
      const auto s = support_from_mask(g, mask);
      if (grid_bound(s) > 100000) continue;
      const auto a = enumerate_atoms(s);
      REQUIRE(as_vector(a) == oracle::atoms(s));
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("atom invariants") {
  const FiniteAbelianGroup g({2, 6});
  for (std::uint64_t mask : {0b10010110011ULL, 0b111000ULL, 0b10101010101ULL, 0b11111ULL}) {
    const auto s = support_from_mask(g, mask);
    const auto a = enumerate_atoms(s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(is_zero_sum(s, a[i]));
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(a[i][k] <= s.orders()[k]);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (i != j) CHECK_FALSE(divides(a[i], a[j]));
    }
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(a.contains(power_of(s, k, s.orders()[k])));
  }
}

TEST_CASE("atoms are invariant under reordering the support") {
  const FiniteAbelianGroup g({3, 3});
  const std::vector<GroupElement> base{el({1, 0}), el({0, 1}), el({1, 1}), el({2, 1})};
  const auto ref = enumerate_atoms(SupportSet(g, base));
  std::vector<std::size_t> perm{0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<GroupElement> els;
    for (auto p : perm) els.push_back(base[p]);
    const auto a = enumerate_atoms(SupportSet(g, els));
    REQUIRE(a.size() == ref.size());
    std::vector<SequenceVec> back;
    for (const auto& x : a.atoms()) {
      SequenceVec y{std::vector<int>(4)};
      for (std::size_t i = 0; i < 4; ++i) y.exponents[perm[i]] = x[i];
      back.push_back(y);
    }
    std::sort(back.begin(), back.end());
    CHECK(back == as_vector(ref));
  }
}
