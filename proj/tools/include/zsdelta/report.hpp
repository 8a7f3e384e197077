#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerosum/classify.hpp"
#include "zerosum/factorization.hpp"
#include "zerosum/lattice.hpp"
#include "zerosum/sweep.hpp"
#include "zerosum/transfer.hpp"
#include "zerosum/verify.hpp"

namespace zsdelta {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

Json element_json(const zerosum::GroupElement& e);
Json subset_json(const zerosum::SupportSet& s);
Json sequence_json(const zerosum::SequenceVec& s);
Json big_vector_json(const zerosum::BigVector& v);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

std::string emit_atoms(const zerosum::AtomSet& atoms, Format format);

std::string emit_lengths(const zerosum::SupportSet& support, const zerosum::SequenceVec& b,
                         const zerosum::LengthSet& lengths, Format format);

struct MinDeltaResult {
  zerosum::HalfFactoriality hf;
  std::size_t atom_count = 0;
  std::size_t kernel_rank = 0;
  std::optional<zerosum::DistanceWitness> witness;  // only with --explain
};
std::string emit_min_delta(const zerosum::AtomSet& atoms, const MinDeltaResult& result, Format format);

std::string emit_observed(const zerosum::AtomSet& atoms, int max_len, const std::set<int>& observed, int min_delta,
                          Format format);

std::string emit_classification(const zerosum::ClassificationRecord& rec, const zerosum::SupportSet& support,
                                Format format);

Json sweep_json(const zerosum::SweepReport& report);
std::string emit_sweep(const zerosum::SweepReport& report, Format format);

std::string emit_m_of_g(const zerosum::SweepReport& report, Format format);

struct TransferSample {
  zerosum::SequenceVec b;
  zerosum::SequenceVec image;
  zerosum::Rational k_before{0};
  zerosum::Rational k_after{0};
  zerosum::LengthSet l_before;
  zerosum::LengthSet l_after;
};
std::string emit_transfer(const zerosum::TransferResult& result, int min_delta_before, int min_delta_after,
                          const std::vector<TransferSample>& samples, Format format);

std::string emit_verify(const std::string& name, const zerosum::VerifyReport& report, Format format);

}  // namespace zsdelta
