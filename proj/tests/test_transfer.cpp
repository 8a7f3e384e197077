#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "zerosum/classify.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/factorization.hpp"
#include "zerosum/lattice.hpp"
#include "zerosum/sweep.hpp"
#include "zerosum/transfer.hpp"

using namespace zerosum;

namespace {

GroupElement el(std::vector<int> c) { return GroupElement{std::move(c)}; }

std::vector<SupportSet> violating_property_a(const FiniteAbelianGroup& g) {
  std::vector<SupportSet> out;
  for (const auto& s : delta_star(g).minimal_non_hf)
    if (!has_self_span_property(s)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("sets with the self-span property are left alone") {
  const auto t = transfer_reduce(plus_minus_set(FiniteAbelianGroup({4})));
  CHECK(t.is_identity());
  CHECK(t.reduced.to_string() == "(1);(3)");
  CHECK(t.divisors == std::vector<int>{1, 1});

  const SupportSet full(FiniteAbelianGroup({2, 2}), {el({1, 0}), el({0, 1}), el({1, 1})});
  CHECK(transfer_reduce(full).is_identity());
}

TEST_CASE("one reduction step in C2 + C8") {
  const FiniteAbelianGroup g({2, 8});
  const auto found = violating_property_a(g);
  REQUIRE_FALSE(found.empty());
  // first hit of the sweep, frozen
  CHECK(found.front().to_string() == "(0,2);(0,3)");
  const SupportSet s = found.front();
  const auto t = transfer_reduce(s);
  CHECK(t.steps.size() == 1);
  CHECK(t.reduced.size() == s.size());
  CHECK(has_self_span_property(t.reduced));

  const auto atoms = enumerate_atoms(s);
  const auto reduced_atoms = enumerate_atoms(t.reduced);
  CHECK(min_delta(atoms) == min_delta(reduced_atoms));
  // theta maps atoms onto atoms
  for (const auto& a : atoms.atoms()) CHECK(reduced_atoms.contains(apply_transfer(t, a)));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto b = random_product(atoms, 1 + i % 5, rng);
    const auto image = apply_transfer(t, b);
    CHECK(cross_number(s, b) == cross_number(t.reduced, image));
    CHECK(is_zero_sum(t.reduced, image));
    if (length(b) <= 24) CHECK(oracle::lengths({atoms.atoms().begin(), atoms.atoms().end()}, b) ==
                               oracle::lengths({reduced_atoms.atoms().begin(), reduced_atoms.atoms().end()}, image));
  }
}

TEST_CASE("every reducible minimal set up to order 12 reduces") {
  for (const auto& g : {FiniteAbelianGroup({8}), FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({9}),
                        FiniteAbelianGroup({12}), FiniteAbelianGroup({2, 6})}) {
    for (const auto& s : violating_property_a(g)) {
      INFO(g.to_string() << " " << s.to_string());
      const auto t = transfer_reduce(s);
      CHECK_FALSE(t.is_identity());
      CHECK(has_self_span_property(t.reduced));
      CHECK(t.reduced.size() == s.size());
      CHECK(min_delta(enumerate_atoms(s)) == min_delta(enumerate_atoms(t.reduced)));
      for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(g.scale(s[i], t.divisors[i]) == t.reduced[i]);
    }
  }
}

TEST_CASE("refusals") {
  const FiniteAbelianGroup g({2, 2});
  // half-factorial
  CHECK_THROWS_AS(transfer_reduce(SupportSet(g, {el({1, 0}), el({0, 1})})), StructuralError);
  // non-half-factorial but not minimal
  const FiniteAbelianGroup c6({6});
  CHECK_THROWS_AS(transfer_reduce(SupportSet(c6, {el({1}), el({2}), el({5})})), StructuralError);
  // B must be zero-sum over the original support
  const auto t = transfer_reduce(plus_minus_set(FiniteAbelianGroup({4})));
  CHECK_THROWS_AS(apply_transfer(t, SequenceVec{{1, 0}}), StructuralError);
}
