#include "autosg/monoid.hpp"

#include "autosg/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace autosg;

TEST_CASE("cyclic groups") {
  auto const c3 = FiniteMonoid::cyclic_group(3);
  CHECK(c3.element_names() == std::vector<std::string>{"1", "g", "g2"});
  CHECK(c3.identity() == 0);
  CHECK(c3.multiply(1, 2) == 0);
  CHECK(c3.multiply(2, 2) == 1);
  CHECK(*c3.find("g2") == 2);
  CHECK(!c3.find("g3"));
  CHECK(FiniteMonoid::cyclic_group(1).size() == 1);
  CHECK_THROWS_AS(FiniteMonoid::cyclic_group(0), UsageError);
  CHECK(support::load_monoid("c2.mon") == FiniteMonoid::cyclic_group(2));
}

TEST_CASE("cyclic group tables are modular addition") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto const g = FiniteMonoid::cyclic_group(n);
    for (monoid_index a = 0; a < n; ++a) {
      for (monoid_index b = 0; b < n; ++b) {
        CHECK(g.multiply(a, b) == (a + b) % n);
      }
    }
  }
}

TEST_CASE("monoid constructor rejects invalid tables") {
  // Left-zero semigroup {a, b} with no identity.
  CHECK_THROWS_AS(FiniteMonoid({"a", "b"}, {0, 0, 1, 1}, 0), UsageError);
  // Not associative: x*x = 1, 1 identity, x*y = x, y*x = y, y*y = x.
  CHECK_THROWS_AS(FiniteMonoid({"1", "x", "y"},
                               {0, 1, 2, 1, 0, 1, 2, 2, 1},
                               0),
                  UsageError);
  CHECK_THROWS_AS(FiniteMonoid({}, {}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid({"1"}, {}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid({"1"}, {1}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid({"1"}, {0}, 1), UsageError);
  CHECK_THROWS_AS(FiniteMonoid({"1", "1"}, {0, 1, 1, 1}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid({"a b"}, {0}, 0), UsageError);
  // The two-element semilattice {1, 0} is fine.
  CHECK_NOTHROW(FiniteMonoid({"1", "0"}, {0, 1, 1, 1}, 0));
}
