#include <doctest.h>

#include <bit>

#include "support/oracles.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/lattice.hpp"
#include "zerosum/sweep.hpp"
#include "zerosum/verify.hpp"

using namespace zerosum;

namespace {

bool same_outcome(const SubsetOutcome& a, const SubsetOutcome& b) {
  return a.mask == b.mask && a.half_factorial == b.half_factorial && a.minimal_non_hf == b.minimal_non_hf &&
         a.lcn == b.lcn && a.min_delta == b.min_delta;
}

std::vector<std::string> names(const std::vector<SupportSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

std::vector<std::string> extremal_names(const SweepReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.extremal) out.push_back(e.support.to_string());
  return out;
}

}  // namespace

TEST_CASE("small groups") {
  CHECK(delta_star(FiniteAbelianGroup()).delta_star.empty());
  CHECK(delta_star(FiniteAbelianGroup({2})).delta_star.empty());
  CHECK(delta_star(FiniteAbelianGroup({2})).max_delta_star == 0);
  CHECK(delta_star(FiniteAbelianGroup({3})).delta_star == std::set<int>{1});
  CHECK(delta_star(FiniteAbelianGroup({2, 2})).delta_star == std::set<int>{1});
  CHECK(delta_star(FiniteAbelianGroup({5})).delta_star == std::set<int>{1, 3});
  CHECK(delta_star(FiniteAbelianGroup({5})).max_delta_star == 3);
}

TEST_CASE("m(G) on small p-groups") {
  CHECK(m_of_G(FiniteAbelianGroup({3})) == 0);
  CHECK(m_of_G(FiniteAbelianGroup({2, 2})) == 1);
  CHECK(m_of_G(FiniteAbelianGroup({3, 3})) == 1);
  CHECK(m_of_G(FiniteAbelianGroup({2, 2, 2})) == 2);
}

TEST_CASE("extremal sets of C5 and C2^3") {
  const auto c5 = delta_star(FiniteAbelianGroup({5}));
  CHECK(extremal_names(c5) == std::vector<std::string>{"(2);(3)", "(1);(4)"});
  for (const auto& e : c5.extremal) {
    CHECK(e.plus_minus_form);
    CHECK(e.min_delta == 3);
    CHECK(e.atom_count == 3);
  }
  const auto c2 = delta_star(FiniteAbelianGroup({2, 2, 2}));
  CHECK(c2.max_delta_star == 2);
  for (const auto& e : c2.extremal) {
    INFO(e.support.to_string());
    CHECK(e.lcn);
    CHECK(e.size_is_rank_plus_one);
    CHECK(e.support.size() == 4);
    REQUIRE(e.lcn_atom_conditions.has_value());
    CHECK(*e.lcn_atom_conditions);
  }
}

TEST_CASE("annotations of the non-simple set in C2 + C4 + C4") {
  // the full sweep of this group has 2^31 subsets; annotate the set directly
  const auto atoms = enumerate_atoms(nonsimple_even_set(3));
  const auto e = annotate_extremal(atoms, min_delta(atoms));
  CHECK(e.min_delta == 2);
  CHECK(e.lcn);
  CHECK(e.size_is_rank_plus_one);
  CHECK_FALSE(e.simple);
  CHECK_FALSE(e.independent_complement);
  CHECK_FALSE(e.plus_minus_form);
}

TEST_CASE("sweep values match the brute-force lattice on every subset") {
  // min Delta from the kernel of the oracle atoms, for every subset of
  // groups of order <= 8
  for (const auto& g : groups_up_to(8)) {
    if (g.order() < 3) continue;
    SweepOptions opt;
    opt.gcd_prune = false;
    opt.keep_records = true;
    const auto r = delta_star(g, opt);
    CHECK(r.records.size() == (std::uint64_t{1} << (g.order() - 1)) - 1);
    for (const auto& rec : r.records) {
      const auto s = support_from_mask(g, rec.mask);
      const auto atoms = oracle::atoms(s);
      ExponentMatrix m{s.size(), atoms.size(), std::vector<int>(s.size() * atoms.size())};
      for (std::size_t c = 0; c < atoms.size(); ++c)
        for (std::size_t i = 0; i < s.size(); ++i) m.entries[i * atoms.size() + c] = atoms[c][i];
      INFO(g.to_string() << " " << s.to_string());
      CHECK(rec.min_delta == min_delta(m));
      CHECK(rec.half_factorial == (rec.min_delta == 0));
    }
  }
}

TEST_CASE("sweep does not depend on the thread count") {
  for (const auto& g : {FiniteAbelianGroup({12}), FiniteAbelianGroup({2, 6}), FiniteAbelianGroup({2, 2, 2, 2})}) {
    SweepOptions one;
    one.keep_records = true;
    SweepOptions many = one;
    many.threads = 4;
    const auto a = delta_star(g, one);
    const auto b = delta_star(g, many);
    INFO(g.to_string());
    CHECK(a.delta_star == b.delta_star);
    CHECK(a.m_of_g == b.m_of_g);
    CHECK(extremal_names(a) == extremal_names(b));
    CHECK(names(a.minimal_non_hf) == names(b.minimal_non_hf));
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(same_outcome(a.records[i], b.records[i]));
  }
}

TEST_CASE("symmetry pruning reproduces the unpruned sweep") {
  for (const auto& g : groups_up_to(9)) {
    SweepOptions plain;
    plain.keep_records = true;
    SweepOptions sym = plain;
    sym.symmetry = true;
    const auto a = delta_star(g, plain);
    const auto b = delta_star(g, sym);
    INFO(g.to_string());
    CHECK(a.delta_star == b.delta_star);
    CHECK(a.m_of_g == b.m_of_g);
    CHECK(extremal_names(a) == extremal_names(b));
    CHECK(names(a.minimal_non_hf) == names(b.minimal_non_hf));
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(same_outcome(a.records[i], b.records[i]));
  }
}

TEST_CASE("gcd pruning keeps Delta*, m(G) and the extremal sets") {
  for (const auto& g : groups_up_to(12)) {
    SweepOptions full;
    full.gcd_prune = false;
    const auto a = delta_star(g, full);
    const auto b = delta_star(g);
    INFO(g.to_string());
    CHECK(a.delta_star == b.delta_star);
    CHECK(a.m_of_g == b.m_of_g);
    CHECK(extremal_names(a) == extremal_names(b));
    CHECK(names(a.minimal_non_hf) == names(b.minimal_non_hf));
    CHECK(a.counters.pruned_gcd == 0);
  }
}

TEST_CASE("both half-factoriality routes agree on every subset up to order 16") {
  // half_factoriality throws ConsistencyFault on disagreement
  for (const auto& g : groups_up_to(16)) {
    if (g.order() < 3) continue;
    SweepOptions opt;
    opt.gcd_prune = false;
    opt.threads = 4;
    CHECK_NOTHROW(delta_star(g, opt));
  }
}

TEST_CASE("counters") {
  const auto r = delta_star(FiniteAbelianGroup({2, 2}));
  CHECK(r.counters.subsets == 7);
  CHECK(r.counters.non_half_factorial == 1);
  CHECK(r.counters.minimal_non_hf == 1);
  CHECK(r.counters.enumerated + r.counters.pruned_gcd == 7);
}

TEST_CASE("subset budget refusal") {
  SweepOptions opt;
  opt.max_subsets = 100;
  CHECK_THROWS_AS(delta_star(FiniteAbelianGroup({8}), opt), BudgetExceeded);
  CHECK_NOTHROW(delta_star(FiniteAbelianGroup({7}), opt));
  CHECK_THROWS_AS(delta_star(FiniteAbelianGroup({2, 4, 4})), BudgetExceeded);
}

TEST_CASE("component symmetries") {
  CHECK(component_symmetries(FiniteAbelianGroup({2, 4})).size() == 1);
  CHECK(component_symmetries(FiniteAbelianGroup({3, 3})).size() == 2);
  CHECK(component_symmetries(FiniteAbelianGroup({2, 2, 2})).size() == 6);
  const auto sym = component_symmetries(FiniteAbelianGroup({2, 2}));
  // swapping coordinates exchanges (0,1) and (1,0), index 1 and 2
  CHECK(sym[1] == std::vector<ElementIndex>{0, 2, 1, 3});
}
