#include "zsdelta/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <memory>
#include <random>

#include "zerosum/constructions.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/parse.hpp"
#include "zsdelta/report.hpp"

namespace zsdelta {

using namespace zerosum;

namespace {

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw StructuralError(std::string(name) + " must be a positive integer, got '" + v + "'");
  return x;
}

struct Settings {
  std::string group;
  std::string subset;
  std::string sequence;
  std::string format = "text";
  std::uint64_t node_budget = EnumerationBudget::kDefaultNodes;
  std::uint64_t memo_budget = FactorizationBudget::kDefaultMemo;
  std::uint64_t sweep_budget = SweepOptions::kDefaultMaxSubsets;
  unsigned threads = 1;
  bool symmetry = false;
  bool no_gcd_prune = false;
  bool explain = false;
  int max_len = 0;
  int max_order = 16;
  int which = 2;
  int r = 3;
  int samples = 20;
  int factors = 4;
  std::uint64_t seed = 1;

  EnumerationBudget enumeration() const { return {node_budget}; }
  FactorizationBudget factorization() const { return {memo_budget}; }
  SweepOptions sweep(bool records = false) const {
    SweepOptions o;
    o.max_subsets = sweep_budget;
    o.threads = threads;
    o.symmetry = symmetry;
    o.gcd_prune = !no_gcd_prune;
    o.keep_records = records;
    o.enumeration = enumeration();
    return o;
  }
};

void add_group(CLI::App* cmd, Settings& s) { cmd->add_option("--group", s.group, "group, e.g. C2^2xC4")->required(); }

void add_subset(CLI::App* cmd, Settings& s) {
  add_group(cmd, s);
  cmd->add_option("--subset", s.subset, "subset, e.g. \"(1);(4)\"")->required();
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--node-budget", s.node_budget, "atom search node budget")->check(CLI::PositiveNumber);
}

void add_sweep(CLI::App* cmd, Settings& s) {
  cmd->add_option("--budget", s.sweep_budget, "maximum number of subsets a sweep may visit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", s.threads, "worker threads for the sweep")->check(CLI::Range(1U, 256U));
  cmd->add_flag("--symmetry", s.symmetry, "reuse results across equal-component permutations");
  cmd->add_flag("--no-gcd-prune", s.no_gcd_prune, "enumerate atoms for every subset");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  try {
    s.node_budget = env_budget(kNodeBudgetEnv, s.node_budget);
    s.sweep_budget = env_budget(kSweepBudgetEnv, s.sweep_budget);
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOperational;
  }

  CLI::App app{"Minimal distances in monoids of zero-sum sequences", "zsdelta"};
  app.require_subcommand(1);
  app.allow_extras(false);

  auto* atoms = app.add_subcommand("atoms", "list the atoms of B(G0)");
  add_subset(atoms, s);
  add_common(atoms, s);

  auto* lengths = app.add_subcommand("lengths", "set of lengths of one zero-sum sequence");
  add_subset(lengths, s);
  add_common(lengths, s);
  lengths->add_option("--sequence", s.sequence, "sequence, e.g. \"(1)^5*(4)^5\"")->required();
  lengths->add_option("--memo-budget", s.memo_budget, "factorization memo budget")->check(CLI::PositiveNumber);

  auto* mind = app.add_subcommand("min-delta", "min Delta(G0) from the kernel lattice");
  add_subset(mind, s);
  add_common(mind, s);
  mind->add_flag("--explain", s.explain, "print two factorizations realizing min Delta");

  auto* observed = app.add_subcommand("delta-observed", "distances seen in sets of lengths up to a length bound");
  add_subset(observed, s);
  add_common(observed, s);
  observed->add_option("--max-len", s.max_len, "largest |B| to examine")->required()->check(CLI::Range(1, 1000));
  observed->add_option("--memo-budget", s.memo_budget, "factorization memo budget")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "classify one subset");
  add_subset(classify_cmd, s);
  add_common(classify_cmd, s);

  auto* dstar = app.add_subcommand("delta-star", "sweep all subsets for Delta*(G), m(G) and extremal sets");
  add_group(dstar, s);
  add_common(dstar, s);
  add_sweep(dstar, s);

  auto* mg = app.add_subcommand("m-of-g", "m(G) by a full sweep");
  add_group(mg, s);
  add_common(mg, s);
  add_sweep(mg, s);

  auto* transfer = app.add_subcommand("transfer-reduce", "reduce a minimal non-half-factorial set by theta'");
  add_subset(transfer, s);
  add_common(transfer, s);
  transfer->add_option("--samples", s.samples, "random B to push through theta")->check(CLI::Range(0, 100000));
  transfer->add_option("--factors", s.factors, "atoms per sampled B")->check(CLI::Range(1, 64));
  transfer->add_option("--seed", s.seed, "seed for sampling");
  transfer->add_option("--memo-budget", s.memo_budget, "factorization memo budget")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "consistency checks over groups and constructions");
  verify->require_subcommand(1);
  auto* v_max = verify->add_subcommand("thm-1.1", "max Delta*(G) = max{exp(G)-2, r(G)-1}");
  v_max->add_option("--group", s.group, "one group; all groups up to --max-order otherwise");
  v_max->add_option("--max-order", s.max_order, "largest group order")->check(CLI::Range(1, 16));
  auto* v_m = verify->add_subcommand("prop-3.2", "m(G) = r(G)-1 on small p-groups");
  auto* v_ext = verify->add_subcommand("thm-4.5", "structure of extremal minimal non-half-factorial sets");
  v_ext->add_option("--group", s.group, "one group; all groups up to --max-order otherwise");
  v_ext->add_option("--max-order", s.max_order, "largest group order")->check(CLI::Range(1, 16));
  auto* v_rem = verify->add_subcommand("remark-4.6", "the two non-simple example sets");
  v_rem->add_option("--which", s.which, "1: C9^(r-1)xC27, 2: C2^(r-2)xC4^2")->check(CLI::IsMember({1, 2}));
  v_rem->add_option("--r", s.r, "rank parameter")->check(CLI::Range(2, 6));
  auto* v_lem = verify->add_subcommand("lemma-3.1", "constructive members of Delta*(G)");
  v_lem->add_option("--max-order", s.max_order, "largest group order")->check(CLI::Range(1, 16));
  for (auto* v : {v_max, v_m, v_ext, v_rem, v_lem}) {
    add_common(v, s);
    add_sweep(v, s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitOperational;
  }

  try {
    const Format format = parse_format(s.format);
    auto support = [&] { return *parse_specs(s.group, s.subset).subset; };

    if (*atoms) {
      out << emit_atoms(enumerate_atoms(support(), s.enumeration()), format);
    } else if (*lengths) {
      const auto sup = support();
      const auto b = parse_sequence(sup, s.sequence);
      const auto a = enumerate_atoms(sup, s.enumeration());
      out << emit_lengths(sup, b, length_set(b, a, s.factorization()), format);
    } else if (*mind) {
      const auto a = enumerate_atoms(support(), s.enumeration());
      MinDeltaResult r;
      r.hf = half_factoriality(a);
      r.atom_count = a.size();
      r.kernel_rank = integer_kernel(a.matrix()).vectors.size();
      if (s.explain) r.witness = explain_min_delta(a);
      out << emit_min_delta(a, r, format);
    } else if (*observed) {
      const auto a = enumerate_atoms(support(), s.enumeration());
      out << emit_observed(a, s.max_len, distances_oracle(a, s.max_len, s.factorization()), min_delta(a), format);
    } else if (*classify_cmd) {
      const auto sup = support();
      out << emit_classification(classify(sup, s.enumeration()), sup, format);
    } else if (*dstar) {
      out << emit_sweep(delta_star(parse_group(s.group), s.sweep(format == Format::csv)), format);
    } else if (*mg) {
      out << emit_m_of_g(delta_star(parse_group(s.group), s.sweep()), format);
    } else if (*transfer) {
      const auto a = enumerate_atoms(support(), s.enumeration());
      const auto result = transfer_reduce(a);
      const auto reduced = enumerate_atoms(result.reduced, s.enumeration());
      LengthSolver before(a, s.factorization()), after(reduced, s.factorization());
      std::mt19937_64 rng(s.seed);
      std::vector<TransferSample> samples;
      for (int i = 0; i < s.samples; ++i) {
        TransferSample t;
        t.b = random_product(a, s.factors, rng);
        t.image = apply_transfer(result, t.b);
        t.k_before = cross_number(result.original, t.b);
        t.k_after = cross_number(result.reduced, t.image);
        t.l_before = before.lengths(t.b);
        t.l_after = after.lengths(t.image);
        samples.push_back(std::move(t));
      }
      out << emit_transfer(result, min_delta(a), min_delta(reduced), samples, format);
      for (const auto& t : samples)
        if (t.k_before != t.k_after || t.l_before != t.l_after) return kExitVerificationFailed;
      if (min_delta(a) != min_delta(reduced)) return kExitVerificationFailed;
    } else if (*verify) {
      VerifyReport rep;
      std::string name;
      if (*v_max) {
        name = "thm-1.1";
        if (!s.group.empty()) {
          const auto g = parse_group(s.group);
          rep.title = "max Δ*(G) = max{exp(G)-2, r(G)-1} for " + g.to_string();
          rep.add(check_max_formula(delta_star(g, s.sweep())));
        } else {
          rep = verify_max_formula(s.max_order, s.sweep());
        }
      } else if (*v_m) {
        name = "prop-3.2";
        rep = verify_p_group_m(s.sweep());
      } else if (*v_ext) {
        name = "thm-4.5";
        if (!s.group.empty()) {
          rep = verify_extremal(parse_group(s.group), s.sweep());
        } else {
          rep.title = "extremal sets of all groups of order <= " + std::to_string(s.max_order);
          for (const auto& g : groups_up_to(s.max_order)) {
            const auto one = verify_extremal(g, s.sweep());
            rep.append(one.lines);
          }
        }
      } else if (*v_rem) {
        name = "remark-4.6";
        rep = s.which == 1 ? verify_nonsimple_odd(s.r, s.enumeration(), s.factorization())
                           : verify_nonsimple_even(s.r, s.enumeration());
      } else {
        name = "lemma-3.1";
        rep = verify_constructions(s.max_order, s.sweep());
      }
      out << emit_verify(name, rep, format);
      return rep.ok() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitOperational;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOperational;
  } catch (const ConsistencyFault& e) {
    err << "consistency check failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace zsdelta
