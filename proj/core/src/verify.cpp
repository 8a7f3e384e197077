#include "zerosum/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zerosum/classify.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/lattice.hpp"

namespace zerosum {

namespace {

const char* verdict(bool ok) { return ok ? "OK" : "FAIL"; }

std::string join_ints(const std::set<int>& xs) {
  std::string out = "{";
  for (int x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

int prime_of(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return static_cast<int>(p);
  return static_cast<int>(n);
}

std::vector<SequenceVec> sorted(std::vector<SequenceVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

bool is_p_group(const FiniteAbelianGroup& group) {
  std::uint64_t n = group.order();
  if (n < 2) return false;
  const auto p = static_cast<std::uint64_t>(prime_of(n));
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<FiniteAbelianGroup> groups_up_to(int max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (int n = 1; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

std::vector<FiniteAbelianGroup> small_p_groups() {
  return {FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2, 2, 2}), FiniteAbelianGroup({2, 4}),
          FiniteAbelianGroup({4}),    FiniteAbelianGroup({8}),       FiniteAbelianGroup({9}),
          FiniteAbelianGroup({3, 3})};
}

CheckLine check_max_formula(const SweepReport& report) {
  const std::string name = report.group.to_string();
  if (report.group.order() <= 2) {
    const bool ok = report.delta_star.empty();
    return {name + ": Δ* = " + (ok ? std::string("∅") : join_ints(report.delta_star)) + " " + verdict(ok), ok};
  }
  const auto inv = group_invariants(report.group);
  const int expected = std::max(inv.exponent - 2, inv.rank - 1);
  const bool ok = report.max_delta_star == expected;
  return {name + ": max Δ* = " + std::to_string(report.max_delta_star) + (ok ? " = " : " != ") + "max{" +
              std::to_string(inv.exponent - 2) + "," + std::to_string(inv.rank - 1) + "} " + verdict(ok),
          ok};
}

CheckLine check_memberships(const SweepReport& report) {
  const auto& group = report.group;
  const std::string name = group.to_string();
  if (group.order() <= 2) return {name + ": no memberships to check OK", true};
  std::set<int> orders;
  for (ElementIndex i = 1; i < group.order(); ++i)
    if (group.order_of_index(i) > 2) orders.insert(group.order_of_index(i) - 2);
  const int r = group_invariants(group).rank;
  bool ok = true;
  for (int d : orders) ok = ok && report.delta_star.count(d) > 0;
  for (int d = 1; d <= r - 1; ++d) ok = ok && report.delta_star.count(d) > 0;
  return {name + ": Δ* = " + join_ints(report.delta_star) + " contains ord(g)-2 in " + join_ints(orders) +
              " and [1," + std::to_string(r - 1) + "] " + verdict(ok),
          ok};
}

CheckLine check_cyclic_second_max(const SweepReport& report) {
  const auto& group = report.group;
  const std::string name = group.to_string();
  if (group.components() != 1 || group.order() < 3)
    return {name + ": not a cyclic group of order >= 3 FAIL", false};
  const int n = static_cast<int>(group.order());
  std::set<int> rest = report.delta_star;
  rest.erase(n - 2);
  const int second = rest.empty() ? 0 : *rest.rbegin();
  const bool ok = second == n / 2 - 1;
  return {name + ": max(Δ* \\ {" + std::to_string(n - 2) + "}) = " + std::to_string(second) + (ok ? " = " : " != ") +
              "floor(" + std::to_string(n) + "/2)-1 " + verdict(ok),
          ok};
}

CheckLine check_m_rank(const SweepReport& report) {
  const int r = group_invariants(report.group).rank;
  const bool ok = report.m_of_g == r - 1;
  return {report.group.to_string() + ": m(G) = " + std::to_string(report.m_of_g) + (ok ? " = " : " != ") +
              "r-1 = " + std::to_string(r - 1) + " " + verdict(ok),
          ok};
}

CheckLine check_minimal_indecomposable(const SweepReport& report) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& s : report.minimal_non_hf)
    if (is_decomposable(s)) {
      if (bad++ == 0) first = s.to_string();
    }
  const bool ok = bad == 0;
  std::string text = report.group.to_string() + ": " + std::to_string(report.minimal_non_hf.size()) +
                     " minimal non-half-factorial sets, ";
  text += ok ? "all indecomposable OK" : std::to_string(bad) + " decomposable, e.g. " + first + " FAIL";
  return {text, ok};
}

ExtremalCheck check_extremal_structure(const SweepReport& report) {
  ExtremalCheck out;
  const std::string name = report.group.to_string();
  const auto inv = group_invariants(report.group);
  const int n = inv.exponent, r = inv.rank;
  std::size_t lcn = 0;
  for (const auto& ex : report.extremal) {
    std::vector<std::string> problems;
    if (r < n - 1 && !ex.plus_minus_form) problems.push_back("not of the form {g,-g} with ord(g) = exp");
    if (r == n - 1) {
      if (!ex.lcn && !ex.plus_minus_form) problems.push_back("non-LCN but not {g,-g}");
      if (ex.lcn && !(ex.size_is_rank_plus_one && ex.no_two_removed_span))
        problems.push_back("LCN but |G0| != r+1 or some h in <G0 \\ {h,h'}>");
    }
    if (r >= n && !(ex.lcn && ex.size_is_rank_plus_one && ex.no_two_removed_span))
      problems.push_back("not an LCN set with |G0| = r+1 and h not in <G0 \\ {h,h'}>");
    if (ex.lcn) {
      ++lcn;
      if (!(ex.size_is_rank_plus_one && r >= n - 1)) problems.push_back("LCN with |G0| != r+1 or r < n-1");
      if (!ex.lcn_atom_conditions.value_or(false)) problems.push_back("atom conditions for extremal LCN sets fail");
      if (r >= n - 1 && n % 2 == 1) {
        ++out.odd_exponent_cases;
        if (!ex.independent_complement) problems.push_back("odd exponent but no g with G0 \\ {g} independent");
      }
    }
    for (const auto& p : problems) out.lines.push_back({"  " + name + " " + ex.support.to_string() + ": " + p, false});
  }
  const bool ok = out.lines.empty();
  std::ostringstream head;
  head << name << ": " << report.extremal.size() << " extremal sets (" << lcn << " LCN), n = " << n
       << ", r = " << r;
  if (r < n - 1)
    head << ", all {g,-g}";
  else if (r >= n)
    head << ", all LCN with |G0| = r+1";
  else
    head << ", {g,-g} or LCN with |G0| = r+1";
  if (out.odd_exponent_cases > 0) head << ", " << out.odd_exponent_cases << " odd-exponent cases";
  head << " " << verdict(ok);
  out.lines.insert(out.lines.begin(), CheckLine{head.str(), ok});
  return out;
}

CheckLine check_plus_minus(int n, EnumerationBudget budget) {
  const FiniteAbelianGroup group({n});
  const auto atoms = enumerate_atoms(plus_minus_set(group), budget);
  const int md = min_delta(atoms);
  const bool ok = atoms.size() == 3 && md == n - 2;
  return {"C" + std::to_string(n) + " {g,-g}: " + std::to_string(atoms.size()) + " atoms, min Δ = " +
              std::to_string(md) + (ok ? " = " : " != ") + "n-2 " + verdict(ok),
          ok};
}

CheckLine check_basis_sum(int p, int s, EnumerationBudget budget) {
  const FiniteAbelianGroup group(std::vector<int>(static_cast<std::size_t>(s), p));
  const auto atoms = enumerate_atoms(basis_sum_set(group, p, s), budget);
  const int md = min_delta(atoms);
  const bool ok = md == s - 1;
  return {group.to_string() + " {e0,...,es}: min Δ = " + std::to_string(md) + (ok ? " = " : " != ") + "s-1 " +
              verdict(ok),
          ok};
}

VerifyReport verify_nonsimple_odd(int r, EnumerationBudget budget, FactorizationBudget fbudget) {
  const auto support = nonsimple_odd_set(r);
  const auto& group = support.group();
  VerifyReport rep{group.to_string() + " G0 = " + support.to_string(), {}};
  const auto atoms = enumerate_atoms(support, budget);
  const auto expected = nonsimple_odd_atoms(r);

  std::vector<SequenceVec> all = expected.unit_cross;
  all.insert(all.end(), expected.large_cross.begin(), expected.large_cross.end());
  const bool same = sorted(all) == std::vector<SequenceVec>(atoms.atoms().begin(), atoms.atoms().end());
  rep.add({std::to_string(atoms.size()) + " atoms, expected " + std::to_string(all.size()) + " " + verdict(same),
           same});

  bool unit_ok = true;
  for (const auto& a : expected.unit_cross) unit_ok = unit_ok && cross_number(support, a) == Rational(1);
  bool large_ok = true;
  std::set<Rational> ks;
  for (std::size_t j = 0; j < expected.large_cross.size(); ++j) {
    const Rational k = cross_number(support, expected.large_cross[j]);
    const Rational want = j % 2 == 0 ? Rational(2 * r + 1, 3) : Rational(r + 2, 3);
    large_ok = large_ok && k == want;
    ks.insert(k);
  }
  std::string kstr;
  for (const auto& k : ks) kstr += (kstr.empty() ? "" : ",") + to_string(k);
  rep.add({std::to_string(expected.unit_cross.size()) + " atoms with k = 1 " + verdict(unit_ok), unit_ok});
  rep.add({std::to_string(expected.large_cross.size()) + " atoms with k in {" + kstr + "} = {(2r+1)/3,(r+2)/3} " +
               verdict(large_ok),
           large_ok});

  const int md = min_delta(atoms);
  rep.add({"min Δ = " + std::to_string(md) + (md == r - 1 ? " = " : " != ") + "r-1 " + verdict(md == r - 1),
           md == r - 1});

  // A_3 * A_24 from the closed form: two atoms whose product also splits into
  // atoms with k = 1 and the two remaining large atoms.
  const SequenceVec product = multiply(expected.large_cross[0], expected.large_cross[5]);
  const auto lengths = length_set(product, atoms, fbudget);
  const auto gaps = delta_of_lengths(lengths);
  const bool realized = gaps.count(r - 1) > 0;
  std::string lstr;
  for (int l : lengths.lengths) lstr += (lstr.empty() ? "" : ",") + std::to_string(l);
  rep.add({"L(A_3 A_24) = {" + lstr + "} realizes distance " + std::to_string(r - 1) + " " + verdict(realized),
           realized});
  const auto observed = distances_oracle(atoms, length(product), fbudget);
  const int g = std::accumulate(observed.begin(), observed.end(), 0, [](int a, int b) { return std::gcd(a, b); });
  const bool oracle_ok = observed.count(r - 1) > 0 && g == md;
  rep.add({"distances observed up to length " + std::to_string(length(product)) + ": " + join_ints(observed) +
               ", gcd " + std::to_string(g) + " " + verdict(oracle_ok),
           oracle_ok});

  const bool simple = is_simple(support);
  rep.add({std::string("simple = ") + (simple ? "true " : "false ") + verdict(!simple), !simple});
  const std::size_t er = support.size() - 2, gpos = support.size() - 1;
  const auto mask_g = subgroup_mask(group, support.without(gpos).indices());
  const auto mask_er = subgroup_mask(group, support.without(er).indices());
  const bool indep = is_independent_indices(group, support.without(gpos).indices()) &&
                     is_independent_indices(group, support.without(er).indices()) &&
                     !mask_g[support.indices()[gpos]] && !mask_er[support.indices()[er]];
  rep.add({std::string("G0 \\ {g}, G0 \\ {e_r} independent, g and e_r outside the span of the rest ") +
               verdict(indep),
           indep});
  const bool minimal = all_maximal_subsets_half_factorial(atoms);
  rep.add({std::string("minimal non-half-factorial: ") + (minimal ? "yes" : "no") + " (not asserted)", true});
  return rep;
}

VerifyReport verify_nonsimple_even(int r, EnumerationBudget budget) {
  const auto support = nonsimple_even_set(r);
  const auto& group = support.group();
  VerifyReport rep{group.to_string() + " G0 = " + support.to_string(), {}};
  const auto atoms = enumerate_atoms(support, budget);
  const auto expected = nonsimple_even_atoms(r);

  std::vector<SequenceVec> all = expected.unit_cross;
  all.insert(all.end(), expected.large_cross.begin(), expected.large_cross.end());
  const bool same = sorted(all) == std::vector<SequenceVec>(atoms.atoms().begin(), atoms.atoms().end());
  rep.add({std::to_string(atoms.size()) + " atoms, expected " + std::to_string(all.size()) + " " + verdict(same),
           same});
  std::size_t unit = 0, large = 0;
  bool k_ok = true;
  for (const auto& a : atoms.atoms()) {
    const Rational k = cross_number(support, a);
    if (k == Rational(1))
      ++unit;
    else {
      ++large;
      k_ok = k_ok && k == Rational(r + 1, 2);
    }
  }
  k_ok = k_ok && unit == expected.unit_cross.size() && large == expected.large_cross.size();
  rep.add({std::to_string(unit) + " atoms with k = 1, " + std::to_string(large) + " with k = " +
               to_string(Rational(r + 1, 2)) + " = (r+1)/2 " + verdict(k_ok),
           k_ok});

  const auto hf = half_factoriality(atoms);
  const auto inv = group_invariants(group);
  const int bound = std::max(inv.exponent - 2, inv.rank - 1);
  const bool md_ok = hf.min_delta == r - 1 && hf.min_delta == bound;
  rep.add({"min Δ = " + std::to_string(hf.min_delta) + ", r-1 = " + std::to_string(r - 1) +
               ", max{exp-2,r-1} = " + std::to_string(bound) + " " + verdict(md_ok),
           md_ok});
  const bool minimal = !hf.half_factorial && all_maximal_subsets_half_factorial(atoms);
  const bool lcn = is_lcn(atoms);
  rep.add({std::string("minimal non-half-factorial LCN set ") + verdict(minimal && lcn), minimal && lcn});
  const bool simple = is_simple(support);
  rep.add({std::string("simple = ") + (simple ? "true " : "false ") + verdict(!simple), !simple});
  const bool comp = has_independent_complement(support);
  rep.add({std::string("no h with G0 \\ {h} independent ") + verdict(!comp), !comp});
  const bool ok = rep.ok();
  rep.add({std::to_string(atoms.size()) + " atoms, min Δ " + std::to_string(hf.min_delta) + ", simple=" +
               (simple ? "true" : "false") + " " + verdict(ok),
           ok});
  return rep;
}

VerifyReport verify_max_formula(int max_order, const SweepOptions& options) {
  VerifyReport rep{"max Δ*(G) = max{exp(G)-2, r(G)-1} for |G| <= " + std::to_string(max_order), {}};
  for (const auto& group : groups_up_to(max_order)) rep.add(check_max_formula(delta_star(group, options)));
  return rep;
}

VerifyReport verify_p_group_m(const SweepOptions& options) {
  VerifyReport rep{"m(G) = r(G)-1 for p-groups", {}};
  for (const auto& group : small_p_groups()) rep.add(check_m_rank(delta_star(group, options)));
  return rep;
}

VerifyReport verify_extremal(const FiniteAbelianGroup& group, const SweepOptions& options) {
  VerifyReport rep{"extremal sets of " + group.to_string(), {}};
  const auto report = delta_star(group, options);
  rep.append(check_extremal_structure(report).lines);
  rep.add(check_minimal_indecomposable(report));
  return rep;
}

VerifyReport verify_constructions(int max_order, const SweepOptions& options) {
  VerifyReport rep{"constructive memberships in Δ*(G)", {}};
  for (int n = 3; n <= std::max(3, max_order); ++n) rep.add(check_plus_minus(n, options.enumeration));
  for (auto [p, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 2}}) rep.add(check_basis_sum(p, s, options.enumeration));
  for (const auto& group : groups_up_to(max_order)) rep.add(check_memberships(delta_star(group, options)));
  return rep;
}

}  // namespace zerosum
