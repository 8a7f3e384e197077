#pragma once

#include <string>
#include <vector>

#include "zerosum/factorization.hpp"
#include "zerosum/sweep.hpp"

namespace zerosum {

struct CheckLine {
  std::string text;
  bool ok = true;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckLine> lines;

  bool ok() const;
  void add(CheckLine line) { lines.push_back(std::move(line)); }
  void append(const std::vector<CheckLine>& more) { lines.insert(lines.end(), more.begin(), more.end()); }
};

bool is_p_group(const FiniteAbelianGroup& group);

/// Every abelian group of order 1..max_order, by order, cyclic first.
std::vector<FiniteAbelianGroup> groups_up_to(int max_order);

/// C2^2, C2^3, C2xC4, C4, C8, C9, C3^2.
std::vector<FiniteAbelianGroup> small_p_groups();

// Checks on one finished sweep.

/// max Delta*(G) = max{exp(G) - 2, r(G) - 1} for |G| > 2, Delta*(G) empty otherwise.
CheckLine check_max_formula(const SweepReport& report);
/// ord(g) - 2 in Delta*(G) whenever ord(g) > 2, and [1, r - 1] in Delta*(G).
CheckLine check_memberships(const SweepReport& report);
/// For cyclic G of order n >= 3: max(Delta*(G) \ {n - 2}) = floor(n/2) - 1.
CheckLine check_cyclic_second_max(const SweepReport& report);
/// m(G) = r(G) - 1; meaningful for p-groups.
CheckLine check_m_rank(const SweepReport& report);
/// Every minimal non-half-factorial set of the sweep is indecomposable.
CheckLine check_minimal_indecomposable(const SweepReport& report);

struct ExtremalCheck {
  std::vector<CheckLine> lines;
  /// Extremal LCN sets in a group of odd exponent with r >= n - 1, the case
  /// where some G0 \ {g} must be independent.
  std::size_t odd_exponent_cases = 0;
};
/// Shape of the extremal sets by the relation between r and n = exp(G), and
/// the atom conditions on extremal LCN sets.
ExtremalCheck check_extremal_structure(const SweepReport& report);

// Standalone constructions.

/// {g, -g} in C_n has exactly 3 atoms and min Delta = n - 2.
CheckLine check_plus_minus(int n, EnumerationBudget budget = {});
/// {e0, ..., es} in C_p^s has min Delta = s - 1.
CheckLine check_basis_sum(int p, int s, EnumerationBudget budget = {});

/// The non-simple set in C9^(r-1) + C27: its atoms against the closed form,
/// min Delta = r - 1 from the lattice and from observed lengths.
VerifyReport verify_nonsimple_odd(int r, EnumerationBudget budget = {}, FactorizationBudget fbudget = {});
/// The non-simple LCN set in C2^(r-2) + C4 + C4.
VerifyReport verify_nonsimple_even(int r, EnumerationBudget budget = {});

// Drivers over many groups.

VerifyReport verify_max_formula(int max_order, const SweepOptions& options = {});
VerifyReport verify_p_group_m(const SweepOptions& options = {});
VerifyReport verify_extremal(const FiniteAbelianGroup& group, const SweepOptions& options = {});
/// Constructions {g, -g} for n in [3, max_order] and {e0, ..., es} for
/// small (p, s), then the memberships on every group of order <= max_order.
VerifyReport verify_constructions(int max_order, const SweepOptions& options = {});

}  // namespace zerosum
