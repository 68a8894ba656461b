#include "doctest.h"
#include "semibrace/classes.hpp"
#include "support.hpp"

using namespace semibrace;
using namespace testsupport;

namespace {

std::vector<WeakBrace> classifier_corpus() {
  std::vector<WeakBrace> out;
  out.push_back(brace_of(ex1_add(), ex1_add()));
  out.push_back(brace_of(ex1_add(), b2_mul()));
  out.push_back(brace_of(c2(), c2()));
  out.push_back(brace_of(c3(), c3()));
  out.push_back(brace_of(sl2(), sl2()));
  out.push_back(brace_of(s3(), s3()));
  out.push_back(brace_of(c4(), c4()));
  out.push_back(brace_of(c4(), c4_neg_mul()));
  out.push_back(brace_of(klein(), klein()));
  out.push_back(brace_of(singleton(), singleton()));
  out.push_back(brace_of(s3(), s3_op()));
  return out;
}

}  // namespace

TEST_CASE("classifier values on the named braces") {
  CHECK(is_symmetric(brace_of(ex1_add(), ex1_add())).holds);
  CHECK(is_lambda_homomorphic(brace_of(ex1_add(), ex1_add())).holds);
  CHECK(is_lambda_anti_homomorphic(brace_of(ex1_add(), ex1_add())).holds);

  WeakBrace nontrivial = brace_of(ex1_add(), b2_mul());
  CHECK(!is_symmetric(nontrivial).holds);
  CHECK(!is_lambda_homomorphic(nontrivial).holds);
  CHECK(!is_lambda_anti_homomorphic(nontrivial).holds);

  // trivial brace on a noncommutative group: both identities reduce to
  // associativity
  CHECK(is_symmetric(brace_of(s3(), s3())).holds);

  // opposite-group brace: lambda is conjugation, so anti-homomorphic but
  // not homomorphic
  WeakBrace opposite = brace_of(s3(), s3_op());
  CHECK(is_symmetric(opposite).holds);
  CHECK(is_lambda_anti_homomorphic(opposite).holds);
  CHECK(!is_lambda_homomorphic(opposite).holds);

  CHECK(is_symmetric(brace_of(c4(), c4_neg_mul())).holds);
  CHECK(is_lambda_homomorphic(brace_of(c4(), c4_neg_mul())).holds);

  CHECK(is_symmetric(brace_of(singleton(), singleton())).holds);
  CHECK(is_lambda_homomorphic(brace_of(singleton(), singleton())).holds);
  CHECK(is_lambda_anti_homomorphic(brace_of(singleton(), singleton())).holds);
}

TEST_CASE("classifier implications over the corpus") {
  for (const WeakBrace& b : classifier_corpus()) {
    auto sym = is_symmetric(b);
    auto hom = is_lambda_homomorphic(b);
    auto anti = is_lambda_anti_homomorphic(b);
    CHECK(sym.implication.ok());
    CHECK(hom.implication.ok());
    CHECK(anti.implication.ok());
    CHECK(sym.holds == anti.holds);  // the two classes coincide
    const bool dual = is_dual(b).dual;
    if (sym.holds || hom.holds || anti.holds) CHECK(dual);
    if (!sym.holds) {
      // the witness is a genuine counterexample to one of the identities
      REQUIRE(sym.witness.witness.size() == 3);
    }
  }
}

TEST_CASE("decomposition of the trivial five-element brace") {
  auto spec = decompose_semilattice(brace_of(ex1_add(), ex1_add()));
  REQUIRE(spec.ok());
  CHECK(spec->meet.n == 3);
  REQUIRE(spec->components.size() == 3);
  CHECK(spec->components[0].n() == 1);
  CHECK(spec->components[1].n() == 2);
  CHECK(spec->components[2].n() == 2);
  // Y is the idempotent semilattice of the carrier
  CHECK(spec->meet.at(1, 2) == 0);  // e ^ f = 0
  CHECK(spec->meet.at(1, 1) == 1);
}

TEST_CASE("non-dual braces do not decompose") {
  auto r = decompose_semilattice(brace_of(ex1_add(), b2_mul()));
  REQUIRE(!r.ok());
  CHECK(r.error().code == Fail::not_dual);
}

TEST_CASE("skew braces decompose to a single component") {
  for (auto [add, mul] :
       {std::pair{c3(), c3()}, {c4(), c4_neg_mul()}, {s3(), s3()}}) {
    auto spec = decompose_semilattice(brace_of(add, mul));
    REQUIRE(spec.ok());
    CHECK(spec->meet.n == 1);
    CHECK(spec->components[0].n() == add.n);
  }
}

TEST_CASE("decompose then compose is the identity on dual corpus braces") {
  for (const WeakBrace& b : classifier_corpus()) {
    if (!is_dual(b).dual) continue;
    auto spec = decompose_semilattice(b);
    REQUIRE(spec.ok());
    auto back = compose_semilattice(*spec);
    REQUIRE(back.ok());
    CHECK(check_recomposition(b, *back).ok());
  }
}

TEST_CASE("components of special dual braces are special, and conversely") {
  for (const WeakBrace& b : classifier_corpus()) {
    if (!is_dual(b).dual) continue;
    auto spec = decompose_semilattice(b);
    REQUIRE(spec.ok());
    auto all_components = [&](auto classify) {
      for (const WeakBrace& c : spec->components)
        if (!classify(c).holds) return false;
      return true;
    };
    CHECK(is_symmetric(b).holds == all_components(is_symmetric));
    CHECK(is_lambda_homomorphic(b).holds ==
          all_components(is_lambda_homomorphic));
    CHECK(is_lambda_anti_homomorphic(b).holds ==
          all_components(is_lambda_anti_homomorphic));
  }
}

TEST_CASE("hand-built spec violations are named") {
  WeakBrace comp = brace_of(c2(), c2());
  SemilatticeSpec spec;
  spec.meet = make_table({"y"}, {0});
  spec.components.push_back(comp);
  spec.homs.assign(1, std::vector<std::vector<int>>(1));
  SUBCASE("non-identity self hom: condition (1)") {
    spec.homs[0][0] = {0, 0};
    Diag d = check_semilattice_spec(spec);
    REQUIRE(!d.ok());
    CHECK(d.code == Fail::spec_invalid);
    CHECK(d.detail.find("condition (1)") != std::string::npos);
  }
  SUBCASE("identity self hom is fine, composite = component") {
    spec.homs[0][0] = {0, 1};
    REQUIRE(check_semilattice_spec(spec).ok());
    auto composed = compose_semilattice(spec);
    REQUIRE(composed.ok());
    CHECK(composed->n() == 2);
    CHECK(composed->add.base.base.table == c2().table);
  }
}
