#include "autosg/names.hpp"

#include "doctest.h"

using namespace autosg;

TEST_CASE("trim removes surrounding whitespace only") {
  CHECK(trim("  a b \t") == "a b");
  CHECK(trim("") == "");
  CHECK(trim(" \n ") == "");
}

TEST_CASE("split_top_level respects parentheses") {
  using v = std::vector<std::string>;
  CHECK(split_top_level("a, b ,c") == v{"a", "b", "c"});
  CHECK(split_top_level("(q,e)·pre,t:1") == v{"(q,e)·pre", "t:1"});
  CHECK(split_top_level("((a,b),c),d") == v{"((a,b),c)", "d"});
  CHECK(split_top_level("") == v{});
  CHECK(split_top_level("   ") == v{});
  CHECK(split_top_level("a,,b") == v{"a", "", "b"});
  CHECK(split_top_level("x y", ' ') == v{"x", "y"});
}

TEST_CASE("name_problem accepts ordinary names") {
  for (auto name : {"q", "σ", "$°", "(a,b)", "t:g", "x'", "(q1,q2)·post"}) {
    CHECK_MESSAGE(!name_problem(name), name);
  }
}

TEST_CASE("name_problem rejects unusable names") {
  for (auto name : {"", "a b", "a->b", "(a", "a)", "a,b", ")("}) {
    CHECK_MESSAGE(name_problem(name).has_value(), name);
  }
}

TEST_CASE("join and fresh_name") {
  CHECK(join({"a", "b", "c"}) == "a,b,c");
  CHECK(join({}) == "");
  CHECK(join({"x", "y"}, " ") == "x y");
  CHECK(fresh_name("1", {"a", "b"}) == "1");
  CHECK(fresh_name("1", {"1", "1'"}) == "1''");
}
