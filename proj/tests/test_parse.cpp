#include <doctest.h>

#include "zerosum/constructions.hpp"
#include "zerosum/parse.hpp"
#include "zerosum/verify.hpp"

using namespace zerosum;

namespace {

ParseError parse_failure(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError(ParseErrorKind::syntax, 0, "", "");
}

}  // namespace

TEST_CASE("groups") {
  CHECK(parse_group("C2^2xC4") == FiniteAbelianGroup({2, 2, 4}));
  CHECK(parse_group(" C5 ") == FiniteAbelianGroup({5}));
  CHECK(parse_group("C2 x C3") == FiniteAbelianGroup({2, 3}));
  CHECK(parse_group("C1") == FiniteAbelianGroup());
  CHECK(parse_group("C9^2xC27") == FiniteAbelianGroup({9, 9, 27}));
}

TEST_CASE("group syntax errors") {
  auto e = parse_failure([] { parse_group("C2x"); });
  CHECK(e.kind() == ParseErrorKind::syntax);
  CHECK(e.position() == 3);
  CHECK(e.expected() == "'C'");

  e = parse_failure([] { parse_group("D4"); });
  CHECK(e.position() == 0);

  e = parse_failure([] { parse_group("C2^"); });
  CHECK(e.position() == 3);

  e = parse_failure([] { parse_group("C2 C3"); });
  CHECK(e.kind() == ParseErrorKind::syntax);
  CHECK(e.position() == 3);

  e = parse_failure([] { parse_group("C0"); });
  CHECK(e.kind() == ParseErrorKind::out_of_range);
  CHECK(e.position() == 1);
}

TEST_CASE("subsets") {
  const auto g = parse_group("C9^2xC27");
  const auto s = parse_subset(g, "(3,0,0);(0,3,0);(0,0,1);(1,1,1)");
  CHECK(s.to_string() == nonsimple_odd_set(3).to_string());
  CHECK(s.group() == nonsimple_odd_group(3));

  const auto specs = parse_specs("C5", std::string_view("(1); (4)"));
  REQUIRE(specs.subset.has_value());
  CHECK(specs.subset->size() == 2);
  CHECK_FALSE(parse_specs("C5").subset.has_value());
}

TEST_CASE("each subset error has its own kind") {
  const FiniteAbelianGroup c5({5});
  auto e = parse_failure([&] { parse_subset(c5, "(0)"); });
  CHECK(e.kind() == ParseErrorKind::zero_element);
  CHECK(e.position() == 0);
  CHECK(std::string(e.what()).find("zero element not allowed") != std::string::npos);

  e = parse_failure([&] { parse_subset(c5, "(1);(1)"); });
  CHECK(e.kind() == ParseErrorKind::duplicate_element);
  CHECK(e.position() == 4);

  e = parse_failure([&] { parse_subset(c5, "(5)"); });
  CHECK(e.kind() == ParseErrorKind::out_of_range);
  CHECK(e.position() == 1);

  e = parse_failure([&] { parse_subset(c5, "(-1)"); });
  CHECK(e.kind() == ParseErrorKind::out_of_range);

  e = parse_failure([&] { parse_subset(c5, "(1,2)"); });
  CHECK(e.kind() == ParseErrorKind::syntax);
  CHECK(e.position() == 2);
  CHECK(e.expected() == "')'");

  e = parse_failure([&] { parse_subset(c5, "(1);"); });
  CHECK(e.kind() == ParseErrorKind::syntax);
}

TEST_CASE("sequences") {
  const auto s = parse_specs("C5", std::string_view("(1);(4)")).subset.value();
  CHECK(parse_sequence(s, "(1)^5*(4)^5").exponents == std::vector<int>{5, 5});
  CHECK(parse_sequence(s, "(1) * (4) * (1)").exponents == std::vector<int>{2, 1});
  CHECK(parse_sequence(s, "1").exponents == std::vector<int>{0, 0});
  auto e = parse_failure([&] { parse_sequence(s, "(2)^3"); });
  CHECK(e.kind() == ParseErrorKind::not_in_support);
  e = parse_failure([&] { parse_sequence(s, "(1)^"); });
  CHECK(e.kind() == ParseErrorKind::syntax);
}

TEST_CASE("round trips") {
  for (const auto& g : groups_up_to(16)) {
    INFO(g.to_string());
    CHECK(parse_group(g.to_string()) == g);
    if (g.order() < 2 || g.order() > 9) continue;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (g.order() - 1)); mask += 7) {
      const auto s = support_from_mask(g, mask);
      const auto back = parse_subset(g, s.to_string());
      CHECK(back.to_string() == s.to_string());
      CHECK(std::equal(back.indices().begin(), back.indices().end(), s.indices().begin(), s.indices().end()));
    }
  }
  const auto s = nonsimple_even_set(4);
  SequenceVec b{{1, 3, 0, 3, 2}};
  CHECK(parse_sequence(s, format_sequence(s, b)) == b);
}
