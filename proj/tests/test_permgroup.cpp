#include <set>

#include "colorful/error.hpp"
#include "colorful/permgroup.hpp"
#include "doctest.h"

using namespace colorful;

TEST_CASE("symmetric group order and membership") {
  PermGroup s4(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.order() == 24);
  CHECK(s4.contains({3, 2, 1, 0}));
  std::vector<Perm> elements = s4.elements();
  CHECK(elements.size() == 24);
  std::set<Perm> distinct(elements.begin(), elements.end());
  CHECK(distinct.size() == 24);
}

TEST_CASE("alternating group excludes odd permutations") {
  PermGroup a4(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains({1, 0, 2, 3}));
}

TEST_CASE("klein four group") {
  PermGroup v(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  CHECK(v.order() == 4);
}

TEST_CASE("dihedral group of the pentagon") {
  PermGroup d5(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
  CHECK(d5.order() == 10);
}

TEST_CASE("trivial and large groups") {
  PermGroup trivial(5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(identity_perm(5)));

  PermGroup s6(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}});
  CHECK(s6.order() == 720);
}

TEST_CASE("element listing respects the budget") {
  PermGroup s6(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}});
  CHECK_THROWS_AS(s6.elements(100), DomainError);
}

TEST_CASE("orbits of an intransitive group") {
  PermGroup g(5, {{1, 0, 2, 3, 4}, {0, 1, 3, 4, 2}});
  auto orbits = g.orbits();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<int>{0, 1});
  CHECK(orbits[1] == std::vector<int>{2, 3, 4});
}
