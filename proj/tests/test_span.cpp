#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdtb/span.hpp"

using namespace gdtb;

TEST_CASE("ranges merge and sort on add") {
  Span s;
  s.add(Range{10, 12});
  s.add(Range{0, 3});
  s.add(Range{2, 5});  // overlaps 0-3
  REQUIRE(s.ranges().size() == 2);
  CHECK(s.ranges()[0] == Range{0, 5});
  CHECK(s.ranges()[1] == Range{10, 12});
  CHECK(s.size() == 7);
  CHECK(s.first() == 0);
  CHECK(s.last() == 11);
}

TEST_CASE("adjacent ranges coalesce, empty ranges are ignored") {
  Span s;
  s.add(Range{0, 3});
  s.add(Range{3, 6});
  CHECK(s.ranges().size() == 1);
  CHECK(s.ranges()[0] == Range{0, 6});
  s.add(Range{9, 9});
  s.add(Range{9, 4});
  CHECK(s.ranges().size() == 1);

  Span empty;
  CHECK(empty.empty());
  CHECK(empty.size() == 0);
}

TEST_CASE("contains and overlaps") {
  Span s;
  s.add(Range{2, 5});
  s.add(Range{8, 10});
  CHECK(s.contains(2));
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(5));
  CHECK_FALSE(s.contains(7));
  CHECK(s.contains(9));

  CHECK(s.overlaps(Span(4, 9)));
  CHECK_FALSE(s.overlaps(Span(5, 8)));
  CHECK(s.contains(Span(8, 10)));
  CHECK_FALSE(s.contains(Span(4, 9)));
  CHECK(Span(0, 20).contains(s));
}

TEST_CASE("intersect") {
  Span a;
  a.add(Range{0, 5});
  a.add(Range{10, 15});
  Span b(3, 12);
  Span x = a.intersect(b);
  REQUIRE(x.ranges().size() == 2);
  CHECK(x.ranges()[0] == Range{3, 5});
  CHECK(x.ranges()[1] == Range{10, 12});
  CHECK(a.intersect(Span(5, 10)).empty());
}

TEST_CASE("subtract") {
  Span a(0, 10);
  Span hole(3, 6);
  Span x = a.subtract(hole);
  REQUIRE(x.ranges().size() == 2);
  CHECK(x.ranges()[0] == Range{0, 3});
  CHECK(x.ranges()[1] == Range{6, 10});

  CHECK(a.subtract(Span(0, 10)).empty());
  CHECK(a.subtract(Span(20, 30)) == a);

  Span multi;
  multi.add(Range{0, 4});
  multi.add(Range{8, 12});
  Span y = multi.subtract(Span(2, 10));
  REQUIRE(y.ranges().size() == 2);
  CHECK(y.ranges()[0] == Range{0, 2});
  CHECK(y.ranges()[1] == Range{10, 12});
}

TEST_CASE("tokens enumerates in order") {
  Span s;
  s.add(Range{5, 7});
  s.add(Range{1, 3});
  CHECK(s.tokens() == std::vector<int>{1, 2, 5, 6});
}

TEST_CASE("to_string uses inclusive endpoints") {
  CHECK(Span().to_string() == "_");
  CHECK(Span(4, 5).to_string() == "4-4");
  Span s;
  s.add(Range{0, 3});
  s.add(Range{7, 10});
  CHECK(s.to_string() == "0-2,7-9");
}

TEST_CASE("parse accepts pairs, single numbers and underscore") {
  CHECK(Span::parse("_").empty());
  CHECK(Span::parse("").empty());
  CHECK(Span::parse("4-4") == Span(4, 5));
  CHECK(Span::parse("7") == Span(7, 8));
  Span s = Span::parse("0-2,7-9");
  REQUIRE(s.ranges().size() == 2);
  CHECK(s.ranges()[0] == Range{0, 3});
  CHECK(s.ranges()[1] == Range{7, 10});
}

TEST_CASE("parse round-trips to_string") {
  Span s;
  s.add(Range{3, 4});
  s.add(Range{9, 14});
  s.add(Range{20, 21});
  CHECK(Span::parse(s.to_string()) == s);
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS_AS(Span::parse("abc"), std::runtime_error);
  CHECK_THROWS_AS(Span::parse("3-x"), std::runtime_error);
}
