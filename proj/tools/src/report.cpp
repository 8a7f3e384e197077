#include "zsdelta/report.hpp"

#include <sstream>

#include "zerosum/errors.hpp"

namespace zsdelta {

using namespace zerosum;

namespace {

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : sep) + std::to_string(x);
  return out;
}

std::string join(const std::set<int>& xs, const char* sep = ",") { return join(std::vector<int>(xs.begin(), xs.end()), sep); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const char* lcn_name(LcnStatus s) {
  switch (s) {
    case LcnStatus::no: return "no";
    case LcnStatus::yes: return "yes";
    case LcnStatus::unknown: return "unknown";
  }
  return "unknown";
}

Json extremal_flags(const ExtremalSet& ex) {
  Json f;
  f["min_delta"] = ex.min_delta;
  f["atom_count"] = ex.atom_count;
  f["lcn"] = ex.lcn;
  f["plus_minus_form"] = ex.plus_minus_form;
  f["size_is_rank_plus_one"] = ex.size_is_rank_plus_one;
  f["no_two_removed_span"] = ex.no_two_removed_span;
  f["independent_complement"] = ex.independent_complement;
  f["simple"] = ex.simple;
  f["decomposable"] = ex.decomposable;
  f["lcn_atom_conditions"] = ex.lcn_atom_conditions ? Json(*ex.lcn_atom_conditions) : Json(nullptr);
  return f;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw StructuralError("unknown format '" + name + "', expected text, json or csv");
}

Json element_json(const GroupElement& e) { return Json(e.coords); }

Json subset_json(const SupportSet& s) {
  Json out = Json::array();
  for (const auto& e : s.elements()) out.push_back(element_json(e));
  return out;
}

Json sequence_json(const SequenceVec& s) { return Json(s.exponents); }

Json big_vector_json(const BigVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_atoms(const AtomSet& atoms, Format format) {
  const auto& support = atoms.support();
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = support.group().to_string();
      j["subset"] = subset_json(support);
      j["count"] = atoms.size();
      j["davenport"] = atoms.size() ? davenport(atoms) : 0;
      j["cross_number_K"] = atoms.size() ? to_string(cross_number_K(atoms)) : "0/1";
      Json list = Json::array();
      for (const auto& a : atoms.atoms()) {
        Json item;
        item["atom"] = format_sequence(support, a);
        item["exponents"] = sequence_json(a);
        item["length"] = length(a);
        item["cross_number"] = to_string(cross_number(support, a));
        list.push_back(item);
      }
      j["atoms"] = list;
      return dump(j);
    }
    case Format::csv:
      os << "atom,exponents,length,cross_number\n";
      for (const auto& a : atoms.atoms())
        os << csv_field(format_sequence(support, a)) << ',' << csv_field(join(a.exponents, " ")) << ','
           << length(a) << ',' << to_string(cross_number(support, a)) << '\n';
      return os.str();
    case Format::text:
      os << support.group().to_string() << " G0 = " << support.to_string() << '\n';
      os << atoms.size() << " atoms";
      if (atoms.size()) os << ", D(G0) = " << davenport(atoms) << ", K(G0) = " << to_string(cross_number_K(atoms));
      os << '\n';
      for (const auto& a : atoms.atoms())
        os << "  " << format_sequence(support, a) << "  length " << length(a) << "  k " << to_string(cross_number(support, a))
           << '\n';
      return os.str();
  }
  return {};
}

std::string emit_lengths(const SupportSet& support, const SequenceVec& b, const LengthSet& lengths, Format format) {
  const auto gaps = delta_of_lengths(lengths);
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = support.group().to_string();
      j["subset"] = subset_json(support);
      j["sequence"] = format_sequence(support, b);
      j["cross_number"] = to_string(cross_number(support, b));
      j["lengths"] = lengths.lengths;
      j["distances"] = std::vector<int>(gaps.begin(), gaps.end());
      return dump(j);
    }
    case Format::csv:
      os << "sequence,lengths,distances\n"
         << csv_field(format_sequence(support, b)) << ',' << csv_field(join(lengths.lengths, " ")) << ','
         << csv_field(join(gaps, " ")) << '\n';
      return os.str();
    case Format::text:
      os << "B = " << format_sequence(support, b) << "  (k = " << to_string(cross_number(support, b)) << ")\n";
      os << "L(B) = {" << join(lengths.lengths) << "}\n";
      os << "Δ(L(B)) = {" << join(gaps) << "}\n";
      return os.str();
  }
  return {};
}

std::string emit_min_delta(const AtomSet& atoms, const MinDeltaResult& r, Format format) {
  const auto& support = atoms.support();
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = support.group().to_string();
      j["subset"] = subset_json(support);
      j["min_delta"] = r.hf.min_delta;
      j["half_factorial"] = r.hf.half_factorial;
      j["atom_count"] = r.atom_count;
      j["kernel_rank"] = r.kernel_rank;
      if (r.witness) {
        Json w;
        w["delta"] = r.witness->delta;
        w["kernel_vector"] = big_vector_json(r.witness->kernel_vector);
        w["longer"] = big_vector_json(r.witness->longer);
        w["shorter"] = big_vector_json(r.witness->shorter);
        j["witness"] = w;
      }
      return dump(j);
    }
    case Format::csv:
      os << "subset,min_delta,half_factorial,atom_count,kernel_rank\n"
         << csv_field(support.to_string()) << ',' << r.hf.min_delta << ',' << (r.hf.half_factorial ? 1 : 0) << ','
         << r.atom_count << ',' << r.kernel_rank << '\n';
      return os.str();
    case Format::text:
      os << support.group().to_string() << " G0 = " << support.to_string() << '\n';
      os << "min Δ = " << r.hf.min_delta << "  half-factorial: " << yes_no(r.hf.half_factorial) << '\n';
      os << "atoms " << r.atom_count << ", kernel rank " << r.kernel_rank << '\n';
      if (r.witness) {
        auto side = [&](const BigVector& v) {
          std::string out;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (!out.empty()) out += " * ";
            out += "[" + format_sequence(support, atoms[i]) + "]";
            if (v[i] != 1) out += "^" + v[i].str();
          }
          return out.empty() ? std::string("1") : out;
        };
        os << "witness: " << side(r.witness->longer) << "\n      = " << side(r.witness->shorter) << '\n';
        os << "length difference " << r.witness->delta << '\n';
      }
      return os.str();
  }
  return {};
}

std::string emit_observed(const AtomSet& atoms, int max_len, const std::set<int>& observed, int min_delta,
                          Format format) {
  int g = 0;
  for (int d : observed) g = std::gcd(g, d);
  const auto& support = atoms.support();
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = support.group().to_string();
      j["subset"] = subset_json(support);
      j["max_len"] = max_len;
      j["observed"] = std::vector<int>(observed.begin(), observed.end());
      j["observed_gcd"] = g;
      j["min_delta"] = min_delta;
      return dump(j);
    }
    case Format::csv:
      os << "subset,max_len,observed,observed_gcd,min_delta\n"
         << csv_field(support.to_string()) << ',' << max_len << ',' << csv_field(join(observed, " ")) << ',' << g
         << ',' << min_delta << '\n';
      return os.str();
    case Format::text:
      os << "distances observed with |B| <= " << max_len << ": {" << join(observed) << "}\n";
      os << "gcd " << g << ", min Δ " << min_delta << '\n';
      return os.str();
  }
  return {};
}

std::string emit_classification(const ClassificationRecord& rec, const SupportSet& support, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = support.group().to_string();
      j["subset"] = subset_json(support);
      j["half_factorial"] = rec.half_factorial;
      j["lcn"] = rec.lcn;
      j["minimal_non_hf"] = rec.minimal_non_hf;
      j["decomposable"] = rec.decomposable;
      j["simple"] = rec.simple;
      j["independent_complement"] = rec.independent_complement;
      j["min_delta"] = rec.min_delta;
      j["davenport"] = rec.davenport;
      j["cross_number_K"] = to_string(rec.cross_number_K);
      j["atom_count"] = rec.atom_count;
      return dump(j);
    }
    case Format::csv:
      os << "subset,half_factorial,lcn,minimal_non_hf,decomposable,simple,independent_complement,min_delta,davenport,"
            "cross_number_K,atom_count\n";
      os << csv_field(rec.subset) << ',' << rec.half_factorial << ',' << rec.lcn << ',' << rec.minimal_non_hf << ','
         << rec.decomposable << ',' << rec.simple << ',' << rec.independent_complement << ',' << rec.min_delta << ','
         << rec.davenport << ',' << to_string(rec.cross_number_K) << ',' << rec.atom_count << '\n';
      return os.str();
    case Format::text:
      os << support.group().to_string() << " G0 = " << rec.subset << '\n';
      os << "half-factorial: " << yes_no(rec.half_factorial) << ", min Δ = " << rec.min_delta << '\n';
      os << "LCN: " << yes_no(rec.lcn) << ", minimal non-half-factorial: " << yes_no(rec.minimal_non_hf) << '\n';
      os << "decomposable: " << yes_no(rec.decomposable) << ", simple: " << yes_no(rec.simple)
         << ", some G0 \\ {g} independent: " << yes_no(rec.independent_complement) << '\n';
      os << rec.atom_count << " atoms, D(G0) = " << rec.davenport << ", K(G0) = " << to_string(rec.cross_number_K)
         << '\n';
      return os.str();
  }
  return {};
}

Json sweep_json(const SweepReport& report) {
  Json j;
  j["group"] = report.group.to_string();
  j["delta_star"] = std::vector<int>(report.delta_star.begin(), report.delta_star.end());
  j["max_delta_star"] = report.max_delta_star;
  j["m_of_g"] = report.m_of_g;
  Json ex = Json::array();
  for (const auto& e : report.extremal) {
    Json item;
    item["subset"] = subset_json(e.support);
    item["flags"] = extremal_flags(e);
    ex.push_back(item);
  }
  j["extremal"] = ex;
  Json c;
  c["subsets"] = report.counters.subsets;
  c["enumerated"] = report.counters.enumerated;
  c["pruned_gcd"] = report.counters.pruned_gcd;
  c["pruned_symmetry"] = report.counters.pruned_symmetry;
  c["non_half_factorial"] = report.counters.non_half_factorial;
  c["minimal_non_hf"] = report.counters.minimal_non_hf;
  j["counters"] = c;
  return j;
}

std::string emit_sweep(const SweepReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      return dump(sweep_json(report));
    case Format::csv:
      os << "mask,subset,half_factorial,minimal_non_hf,computed,lcn,min_delta\n";
      for (const auto& r : report.records)
        os << r.mask << ',' << csv_field(support_from_mask(report.group, r.mask).to_string()) << ','
           << r.half_factorial << ',' << r.minimal_non_hf << ',' << r.computed << ',' << lcn_name(r.lcn) << ','
           << r.min_delta << '\n';
      return os.str();
    case Format::text: {
      const auto& c = report.counters;
      os << report.group.to_string() << '\n';
      os << "Δ* = {" << join(report.delta_star) << "}, max Δ* = " << report.max_delta_star
         << ", m(G) = " << report.m_of_g << '\n';
      os << c.subsets << " subsets: " << c.enumerated << " enumerated, " << c.pruned_gcd << " by gcd, "
         << c.pruned_symmetry << " by symmetry; " << c.non_half_factorial << " non-half-factorial, "
         << c.minimal_non_hf << " minimal\n";
      os << report.extremal.size() << " extremal sets:\n";
      for (const auto& e : report.extremal) {
        os << "  " << e.support.to_string() << "  atoms " << e.atom_count << (e.lcn ? "  LCN" : "")
           << (e.plus_minus_form ? "  {g,-g}" : "") << (e.simple ? "  simple" : "")
           << (e.independent_complement ? "  independent-complement" : "") << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string emit_m_of_g(const SweepReport& report, Format format) {
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = report.group.to_string();
      j["m_of_g"] = report.m_of_g;
      return dump(j);
    }
    case Format::csv:
      return "group,m_of_g\n" + csv_field(report.group.to_string()) + "," + std::to_string(report.m_of_g) + "\n";
    case Format::text:
      return report.group.to_string() + ": m(G) = " + std::to_string(report.m_of_g) + "\n";
  }
  return {};
}

std::string emit_transfer(const TransferResult& result, int md_before, int md_after,
                          const std::vector<TransferSample>& samples, Format format) {
  const auto& group = result.original.group();
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j;
      j["group"] = group.to_string();
      j["subset"] = subset_json(result.original);
      j["reduced"] = subset_json(result.reduced);
      j["divisors"] = result.divisors;
      Json steps = Json::array();
      for (const auto& s : result.steps) {
        Json st;
        st["position"] = s.position;
        st["multiplier"] = s.multiplier;
        steps.push_back(st);
      }
      j["steps"] = steps;
      j["min_delta_before"] = md_before;
      j["min_delta_after"] = md_after;
      Json list = Json::array();
      for (const auto& s : samples) {
        Json item;
        item["sequence"] = sequence_json(s.b);
        item["image"] = sequence_json(s.image);
        item["k"] = to_string(s.k_before);
        item["k_image"] = to_string(s.k_after);
        item["lengths"] = s.l_before.lengths;
        item["lengths_image"] = s.l_after.lengths;
        list.push_back(item);
      }
      j["samples"] = list;
      return dump(j);
    }
    case Format::csv:
      os << "sequence,image,k,k_image,lengths,lengths_image\n";
      for (const auto& s : samples)
        os << csv_field(format_sequence(result.original, s.b)) << ',' << csv_field(format_sequence(result.reduced, s.image))
           << ',' << to_string(s.k_before) << ',' << to_string(s.k_after) << ',' << csv_field(join(s.l_before.lengths, " "))
           << ',' << csv_field(join(s.l_after.lengths, " ")) << '\n';
      return os.str();
    case Format::text: {
      os << group.to_string() << " G0 = " << result.original.to_string() << '\n';
      if (result.is_identity()) os << "every g lies in <G0 \\ {g}>; theta is the identity\n";
      for (const auto& s : result.steps)
        os << "  replace position " << s.position << " by " << s.multiplier << " times itself\n";
      os << "G0* = " << result.reduced.to_string() << '\n';
      os << "min Δ " << md_before << " -> " << md_after << '\n';
      std::size_t same_k = 0, same_l = 0;
      for (const auto& s : samples) {
        same_k += s.k_before == s.k_after;
        same_l += s.l_before == s.l_after;
      }
      if (!samples.empty())
        os << samples.size() << " sampled B: k preserved on " << same_k << ", L preserved on " << same_l << '\n';
      return os.str();
    }
  }
  return {};
}

std::string emit_verify(const std::string& name, const VerifyReport& report, Format format) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& l : report.lines) failed += !l.ok;
  switch (format) {
    case Format::json: {
      Json j;
      j["check"] = name;
      j["title"] = report.title;
      j["ok"] = report.ok();
      Json lines = Json::array();
      for (const auto& l : report.lines) {
        Json item;
        item["text"] = l.text;
        item["ok"] = l.ok;
        lines.push_back(item);
      }
      j["lines"] = lines;
      return dump(j);
    }
    case Format::csv:
      os << "check,ok,text\n";
      for (const auto& l : report.lines) os << name << ',' << l.ok << ',' << csv_field(l.text) << '\n';
      return os.str();
    case Format::text:
      for (const auto& l : report.lines) os << l.text << '\n';
      os << name << ": " << report.lines.size() << " checks, "
         << (failed == 0 ? std::string("all OK") : std::to_string(failed) + " FAILED") << '\n';
      return os.str();
  }
  return {};
}

}  // namespace zsdelta
