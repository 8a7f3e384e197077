#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zerosum/errors.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

enum class ParseErrorKind {
  syntax,
  out_of_range,
  duplicate_element,
  zero_element,
  not_in_support,
};

const char* to_string(ParseErrorKind kind);

/// Position is a 0-based byte offset into the parsed text; `expected` names
/// the token the parser wanted there (empty for semantic errors).
class ParseError : public StructuralError {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, std::string expected, const std::string& message);
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
  std::string expected_;
};

/// Group := Cyc ('x' Cyc)* ; Cyc := 'C' INT ('^' INT)?
/// Blanks between tokens are ignored. C1 factors are dropped, so "C1" is the
/// trivial group and every FiniteAbelianGroup::to_string() parses back.
FiniteAbelianGroup parse_group(std::string_view text);

/// Element := '(' INT (',' INT)* ')' with one residue in [0, n_i) per component.
GroupElement parse_element(const FiniteAbelianGroup& group, std::string_view text);

/// Subset := Element (';' Element)*, nonzero and pairwise distinct.
SupportSet parse_subset(const FiniteAbelianGroup& group, std::string_view text);

/// Sequence := '1' | Term ('*' Term)* ; Term := Element ('^' INT)?
/// Every element must belong to the support; repeated terms accumulate.
SequenceVec parse_sequence(const SupportSet& support, std::string_view text);

struct ParsedSpecs {
  FiniteAbelianGroup group;
  std::optional<SupportSet> subset;
};
ParsedSpecs parse_specs(std::string_view group_text, std::optional<std::string_view> subset_text = std::nullopt);

}  // namespace zerosum
