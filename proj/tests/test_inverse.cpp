#include "doctest.h"
#include "support.hpp"

using namespace semibrace;
using namespace testsupport;

TEST_CASE("five-element fixture: every element is self-inverse") {
  // independent check of a+x+a = a and x+a+x = x over the raw table first
  CayleyTable t = ex1_add();
  for (int a = 0; a < 5; ++a) {
    CHECK(t.at(t.at(a, a), a) == a);
  }
  auto s = von_neumann_inverses(t);
  REQUIRE(s.ok());
  for (int a = 0; a < 5; ++a) CHECK(s->neg(a) == a);
  CHECK(s->idempotents == 0b00111u);  // {0, e, f}
  CHECK(s->zero_part == std::vector<int>{0, 1, 2, 1, 2});
}

TEST_CASE("B2: a and b are mutually inverse") {
  auto s = von_neumann_inverses(b2_mul());
  REQUIRE(s.ok());
  CHECK(s->neg(3) == 4);
  CHECK(s->neg(4) == 3);
  CHECK(s->neg(0) == 0);
  CHECK(s->neg(1) == 1);
  CHECK(s->neg(2) == 2);
  CHECK(s->idempotents == 0b00111u);
}

TEST_CASE("left-zero band: inverses exist but are not unique") {
  auto s = von_neumann_inverses(left_zero_band2());
  REQUIRE(!s.ok());
  CHECK(s.error().code == Fail::inverse_not_unique);
}

TEST_CASE("idempotent_set recomputation agrees with the cache") {
  for (const CayleyTable& t : {ex1_add(), b2_mul(), c3(), sl2()}) {
    auto s = von_neumann_inverses(t);
    REQUIRE(s.ok());
    CHECK(idempotent_set(*s) == s->idempotents);
  }
}

TEST_CASE("Clifford detection") {
  CHECK(is_clifford(inverse_of(ex1_add())));
  CHECK(is_clifford(inverse_of(c3())));
  CHECK(is_clifford(inverse_of(sl2())));
  auto b2 = inverse_of(b2_mul());
  Diag d = check_clifford(b2);
  REQUIRE(!d.ok());
  CHECK(d.witness == std::vector<int>{3});  // first witness is a
}

TEST_CASE("definitional and centrality Clifford checks agree") {
  for (const CayleyTable& t :
       {ex1_add(), b2_mul(), c2(), c3(), sl2(), singleton(), klein(), s3()}) {
    auto s = von_neumann_inverses(t);
    REQUIRE(s.ok());
    CHECK(check_clifford(*s).ok() == check_clifford_by_centrality(*s).ok());
  }
}

TEST_CASE("H classes of the five-element fixture") {
  auto c = clifford_of(ex1_add());
  REQUIRE(c.h_classes.size() == 3);
  CHECK(c.h_classes[0] == std::vector<int>{0});
  CHECK(c.h_classes[1] == std::vector<int>{1, 3});  // {e, a}
  CHECK(c.h_classes[2] == std::vector<int>{2, 4});  // {f, b}
  CHECK(c.h_identity == std::vector<int>{0, 1, 2});
}

TEST_CASE("inverse and Clifford identities over the corpus") {
  for (const CayleyTable& t : {ex1_add(), b2_mul(), c2(), c3(), sl2()}) {
    auto s = von_neumann_inverses(t);
    REQUIRE(s.ok());
    CHECK(check_inverse_identities(*s).ok());
  }
  for (const CayleyTable& t : {ex1_add(), c2(), c3(), sl2(), klein(), s3()})
    CHECK(check_clifford_identities(clifford_of(t)).ok());
}

TEST_CASE("regular-but-not-inverse tables are rejected at construction") {
  // right-zero band
  auto r = von_neumann_inverses(make_table({"x", "y"}, {0, 1, 0, 1}));
  CHECK(!r.ok());
}

TEST_CASE("identities and check agreement over the full order-3 census") {
  int count = 0;
  for (const CayleyTable& t : all_inverse_tables(3)) {
    auto s = von_neumann_inverses(t);
    REQUIRE(s.ok());
    CHECK(check_inverse_identities(*s).ok());
    CHECK(idempotent_set(*s) == s->idempotents);
    CHECK(check_clifford(*s).ok() == check_clifford_by_centrality(*s).ok());
    if (is_clifford(*s)) {
      auto c = build_clifford(*s);
      REQUIRE(c.ok());
      CHECK(check_clifford_identities(*c).ok());
    }
    ++count;
  }
  CHECK(count == 24);
}
