#include "zerosum/parse.hpp"

#include <cctype>
#include <limits>

namespace zerosum {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::syntax: return "syntax error";
    case ParseErrorKind::out_of_range: return "residue out of range";
    case ParseErrorKind::duplicate_element: return "duplicate element";
    case ParseErrorKind::zero_element: return "zero element not allowed";
    case ParseErrorKind::not_in_support: return "element not in subset";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, std::string expected, const std::string& message)
    : StructuralError(std::string(zerosum::to_string(kind)) + " at position " + std::to_string(position) + ": " +
                      message),
      kind_(kind),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, const char* what) : text_(text), what_(what) {}

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  long long integer(bool allow_sign = false) {
    skip_blanks();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("integer");
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<int>::max() - 9) / 10)
        throw ParseError(ParseErrorKind::out_of_range, start, "", std::string(what_) + ": integer too large");
      value = value * 10 + (text_[pos_++] - '0');
    }
    return negative ? -value : value;
  }

  void finish() {
    if (!at_end()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(ParseErrorKind::syntax, pos_, expected,
                     std::string(what_) + ": expected " + expected + ", found " + found + " in \"" +
                         std::string(text_) + "\"");
  }

  std::size_t pos() {
    skip_blanks();
    return pos_;
  }
  std::string_view text() const { return text_; }
  const char* what() const { return what_; }

 private:
  std::string_view text_;
  const char* what_;
  std::size_t pos_ = 0;
};

GroupElement element_at_cursor(const FiniteAbelianGroup& group, Cursor& cur) {
  const auto orders = group.orders();
  cur.expect('(');
  std::vector<int> coords;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) cur.expect(',');
    const std::size_t at = cur.pos();
    const long long v = cur.integer(true);
    if (v < 0 || v >= orders[i])
      throw ParseError(ParseErrorKind::out_of_range, at, "",
                       std::string(cur.what()) + ": residue " + std::to_string(v) + " not in [0, " +
                           std::to_string(orders[i]) + ")");
    coords.push_back(static_cast<int>(v));
  }
  cur.expect(')');
  return GroupElement{std::move(coords)};
}

}  // namespace

FiniteAbelianGroup parse_group(std::string_view text) {
  Cursor cur(text, "group");
  std::vector<int> orders;
  do {
    cur.expect('C');
    const std::size_t at = cur.pos();
    const long long n = cur.integer();
    long long power = 1;
    if (cur.accept('^')) {
      const std::size_t pat = cur.pos();
      power = cur.integer();
      if (power < 1) throw ParseError(ParseErrorKind::out_of_range, pat, "", "group: exponent must be >= 1");
    }
    if (n < 1) throw ParseError(ParseErrorKind::out_of_range, at, "", "group: cyclic order must be >= 1");
    if (n == 1) continue;
    if (orders.size() + static_cast<std::size_t>(power) > 32)
      throw ParseError(ParseErrorKind::out_of_range, at, "", "group: order exceeds the supported maximum");
    for (long long i = 0; i < power; ++i) orders.push_back(static_cast<int>(n));
  } while (cur.accept('x'));
  cur.finish();
  try {
    return FiniteAbelianGroup(orders);
  } catch (const StructuralError& e) {
    throw ParseError(ParseErrorKind::out_of_range, 0, "", std::string("group: ") + e.what());
  }
}

GroupElement parse_element(const FiniteAbelianGroup& group, std::string_view text) {
  Cursor cur(text, "element");
  auto e = element_at_cursor(group, cur);
  cur.finish();
  return e;
}

SupportSet parse_subset(const FiniteAbelianGroup& group, std::string_view text) {
  Cursor cur(text, "subset");
  std::vector<GroupElement> elements;
  do {
    const std::size_t at = cur.pos();
    auto e = element_at_cursor(group, cur);
    if (group.is_zero(e))
      throw ParseError(ParseErrorKind::zero_element, at, "", "subset: zero element not allowed");
    for (const auto& prev : elements)
      if (prev == e)
        throw ParseError(ParseErrorKind::duplicate_element, at, "",
                         "subset: " + group.format(e) + " listed twice");
    elements.push_back(std::move(e));
  } while (cur.accept(';'));
  cur.finish();
  return SupportSet(group, std::move(elements));
}

SequenceVec parse_sequence(const SupportSet& support, std::string_view text) {
  Cursor cur(text, "sequence");
  SequenceVec s = empty_sequence(support);
  if (cur.accept('1')) {
    cur.finish();
    return s;
  }
  do {
    const std::size_t at = cur.pos();
    const auto e = element_at_cursor(support.group(), cur);
    long long k = 1;
    if (cur.accept('^')) k = cur.integer();
    const int pos = support.position_of(support.group().index_of(e));
    if (pos < 0)
      throw ParseError(ParseErrorKind::not_in_support, at, "",
                       "sequence: " + support.group().format(e) + " is not in " + support.to_string());
    if (s.exponents[static_cast<std::size_t>(pos)] + k > std::numeric_limits<int>::max() / 2)
      throw ParseError(ParseErrorKind::out_of_range, at, "", "sequence: multiplicity too large");
    s.exponents[static_cast<std::size_t>(pos)] += static_cast<int>(k);
  } while (cur.accept('*'));
  cur.finish();
  return s;
}

ParsedSpecs parse_specs(std::string_view group_text, std::optional<std::string_view> subset_text) {
  ParsedSpecs out{parse_group(group_text), std::nullopt};
  if (subset_text) out.subset = parse_subset(out.group, *subset_text);
  return out;
}

}  // namespace zerosum
