#include "doctest.h"
#include "semibrace/brace.hpp"
#include "support.hpp"

using namespace semibrace;
using namespace testsupport;

TEST_CASE("the two five-element braces validate") {
  auto trivial = check_weak_brace(ex1_add(), ex1_add());
  REQUIRE(trivial.ok());
  CHECK(is_dual(*trivial).dual);

  auto b2 = check_weak_brace(ex1_add(), b2_mul());
  REQUIRE(b2.ok());
  CHECK(!is_dual(*b2).dual);
}

TEST_CASE("the third counterexample pair fails only the inverse axiom") {
  auto r = check_weak_brace(remark3_add(), remark3_mul());
  REQUIRE(!r.ok());
  CHECK(r.error().code == Fail::inverse_axiom_fails);
  CHECK(r.error().witness == std::vector<int>{0});
}

TEST_CASE("axiom patterns of the three counterexample pairs") {
  SUBCASE("pair 1: weak2 without weak1") {
    auto add = inverse_of(remark1_add());
    auto mul = inverse_of(remark1_mul());
    CHECK(check_axiom_weak2(add, mul).ok());
    CHECK(!check_axiom_weak1(add, mul).ok());
    CHECK(!check_axiom_weak3(add, mul).ok());  // forced by the equivalence
  }
  SUBCASE("pair 2: weak3 without weak1, witness (0,0,1)") {
    auto add = inverse_of(remark2_add());
    auto mul = inverse_of(remark2_mul());
    CHECK(check_axiom_weak3(add, mul).ok());
    Diag d = check_axiom_weak1(add, mul);
    REQUIRE(!d.ok());
    CHECK(d.witness == std::vector<int>{0, 0, 1});
    // 0(0+1) = 0 but 0.0 - 0 + 0.1 = 2
    CHECK(mul.at(0, add.at(0, 1)) == 0);
    CHECK(add.at(add.at(mul.at(0, 0), add.neg(0)), mul.at(0, 1)) == 2);
  }
  SUBCASE("pair 3: all three hold") {
    auto add = inverse_of(remark3_add());
    auto mul = inverse_of(remark3_mul());
    CHECK(check_axiom_weak1(add, mul).ok());
    CHECK(check_axiom_weak2(add, mul).ok());
    CHECK(check_axiom_weak3(add, mul).ok());
  }
}

TEST_CASE("weak1 holds iff weak2 and weak3 hold, over fixture pairs") {
  std::vector<InverseSemigroup> structures;
  for (const CayleyTable& t :
       {ex1_add(), b2_mul(), c2(), sl2(), remark1_add(), remark1_mul(),
        remark3_add(), remark3_mul()})
    structures.push_back(inverse_of(t));
  int checked = 0;
  for (const auto& add : structures)
    for (const auto& mul : structures) {
      if (add.n() != mul.n()) continue;
      const bool w1 = check_axiom_weak1(add, mul).ok();
      const bool w2 = check_axiom_weak2(add, mul).ok();
      const bool w3 = check_axiom_weak3(add, mul).ok();
      CHECK(w1 == (w2 && w3));
      ++checked;
    }
  CHECK(checked > 10);
}

TEST_CASE("any valid brace satisfies all three identities") {
  for (auto [add, mul] :
       {std::pair{ex1_add(), ex1_add()}, {ex1_add(), b2_mul()},
        {c4(), c4_neg_mul()}, {s3(), s3()}}) {
    auto a = inverse_of(add);
    auto m = inverse_of(mul);
    CHECK(check_axiom_weak1(a, m).ok());
    CHECK(check_axiom_weak2(a, m).ok());
    CHECK(check_axiom_weak3(a, m).ok());
  }
}

TEST_CASE("lambda maps of the nontrivial five-element brace") {
  WeakBrace b = brace_of(ex1_add(), b2_mul());
  CHECK(b.lambda_row(0) == phi_const0());
  CHECK(b.lambda_row(1) == phi7());
  CHECK(b.lambda_row(2) == phi9());
  CHECK(b.lambda_row(3) == phi5());
  CHECK(b.lambda_row(4) == phi11());
  for (int a = 0; a < 5; ++a) CHECK(lambda_of(b, a).ok());
}

TEST_CASE("trivial brace on a group has identity lambda maps") {
  WeakBrace b = brace_of(c3(), c3());
  for (int a = 0; a < 3; ++a)
    CHECK(b.lambda_row(a) == std::vector<int>{0, 1, 2});
}

TEST_CASE("lambda properties over the corpus braces") {
  for (auto [add, mul] :
       {std::pair{ex1_add(), ex1_add()}, {ex1_add(), b2_mul()},
        {c4(), c4_neg_mul()}, {c3(), c3()}, {s3(), s3()}}) {
    WeakBrace b = brace_of(add, mul);
    CHECK(lambda_is_mul_homomorphism(b));
    for (int a = 0; a < b.n(); ++a) {
      CHECK(b.lam(a, b.minv(a)) == b.neg(a));  // lambda_a(a^-1) = -a
      for (int y = 0; y < b.n(); ++y)
        CHECK(b.times(a, y) == b.plus(a, b.lam(a, y)));
    }
    CHECK(check_brace_identities(b).ok());
    CHECK(check_identity_correspondence(b).ok());
    if (is_dual(b).dual) CHECK(check_dual_brace_identities(b).ok());
  }
}

TEST_CASE("duality detection") {
  CHECK(is_dual(brace_of(ex1_add(), ex1_add())).dual);
  DualCheck d = is_dual(brace_of(ex1_add(), b2_mul()));
  CHECK(!d.dual);
  CHECK(d.detail.code == Fail::not_clifford);
  CHECK(is_dual(brace_of(s3(), s3())).dual);  // groups are Clifford
  CHECK(is_dual(brace_of(c4(), c4_neg_mul())).dual);
}

TEST_CASE("mismatched carriers are rejected") {
  auto r = check_weak_brace(ex1_add(), c2());
  REQUIRE(!r.ok());
  CHECK(r.error().code == Fail::dimension_mismatch);
}

TEST_CASE("non-inverse operations are rejected with the failing side") {
  CayleyTable band = make_table({"0", "1"}, {0, 0, 1, 1});
  CHECK(check_weak_brace(band, c2()).error().code == Fail::add_not_inverse);
  CHECK(check_weak_brace(c2(), band).error().code == Fail::mul_not_inverse);
}
