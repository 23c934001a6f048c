#include "doctest.h"

#include "gpi/error.hpp"
#include "gpi/group.hpp"

using namespace gpi;

TEST_CASE("cyclic groups") {
  const Group trivial = make_cyclic(1);
  CHECK(trivial.order() == 1);
  CHECK(trivial.name(trivial.identity()) == "e");

  const Group z4 = make_cyclic(4);
  CHECK(z4.mul(z4.at("a"), z4.at("a3")) == z4.identity());
  CHECK(z4.inv(z4.at("a2")) == z4.at("a2"));

  const Group z2 = make_cyclic(2);
  CHECK(z2.inv(z2.at("a")) == z2.at("a"));

  const Group z6 = make_cyclic(6);
  CHECK(z6.mul(z6.at("a2"), z6.at("a5")) == z6.at("a"));
  CHECK(z6.power(z6.at("a"), 4) == z6.at("a4"));
  CHECK(z6.power(z6.at("a"), -1) == z6.at("a5"));
  for (auto g : z6.elements()) CHECK(z6.mul(z6.identity(), g) == g);
}

TEST_CASE("Klein four and S_3") {
  const Group k = make_klein_four();
  CHECK(k.order() == 4);
  for (auto g : k.elements()) CHECK(k.inv(g) == g);
  CHECK(k.mul(k.at("a"), k.at("b")) == k.at("c"));

  const Group s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  for (const char* t : {"p102", "p021", "p210"}) CHECK(s3.inv(s3.at(t)) == s3.at(t));
  CHECK(s3.inv(s3.at("p120")) == s3.at("p201"));
  // Non-abelian.
  CHECK(s3.mul(s3.at("p102"), s3.at("p021")) != s3.mul(s3.at("p021"), s3.at("p102")));
  // Product applies the left factor first: (0 1) then (1 2) sends 0 -> 1 -> 2.
  CHECK(s3.name(s3.mul(s3.at("p102"), s3.at("p021"))) == "p201");
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(Group({"e", "a"}, {{0, 0}, {1, 0}}), GroupError);
  CHECK_THROWS_AS(Group({"e", "a"}, {{0, 1}}), GroupError);
  CHECK_THROWS_AS(Group({"e", "e"}, {{0, 1}, {1, 0}}), GroupError);
  CHECK_THROWS_AS(Group({"e", "bad name"}, {{0, 1}, {1, 0}}), GroupError);
  // Latin square without an identity row.
  CHECK_THROWS_AS(Group({"x", "y", "z"}, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), GroupError);
  // Latin square with identity that is not associative (a loop of order 5).
  const std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(Group({"e", "a", "b", "c", "d"}, loop), GroupError);
  CHECK_THROWS_AS(make_cyclic(0), InvalidArgument);
  CHECK_THROWS_AS(make_cyclic(65), InvalidArgument);
  CHECK_NOTHROW(make_cyclic(64));
}

TEST_CASE("name lookup") {
  const Group z3 = make_cyclic(3);
  CHECK(z3.find("a2").has_value());
  CHECK_FALSE(z3.find("a3").has_value());
  CHECK_THROWS_AS(z3.at("q"), InvalidArgument);
  CHECK(make_from_table(z3.names(), z3.table()) == z3);
}
