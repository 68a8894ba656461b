#include <set>

#include "doctest.h"
#include "semibrace/endo.hpp"
#include "support.hpp"

using namespace semibrace;
using namespace testsupport;

namespace {

// independent oracle: all 5^5 self-maps checked directly against the table
std::set<std::vector<int>> brute_force_endos(const CayleyTable& t) {
  const int n = t.n;
  std::set<std::vector<int>> out;
  std::vector<int> img(n);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      img[i] = static_cast<int>(c % n);
      c /= n;
    }
    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
      for (int y = 0; y < n && hom; ++y)
        hom = img[t.at(x, y)] == t.at(img[x], img[y]);
    if (hom) out.insert(img);
  }
  return out;
}

}  // namespace

TEST_CASE("endomorphisms of the five-element fixture") {
  auto s = inverse_of(ex1_add());
  auto endos = enumerate_endomorphisms(s);
  REQUIRE(endos.ok());

  auto oracle = brute_force_endos(ex1_add());
  REQUIRE(endos->size() == static_cast<int>(oracle.size()));
  for (const EndoMap& m : endos->maps()) CHECK(oracle.count(m.img) == 1);

  // the scan finds 19 maps: the 11 with at most one of e, f in the image
  // of the idempotents, plus 8 more fixing or swapping both subgroup parts
  CHECK(endos->size() == 19);
  for (const auto& img :
       {phi_const0(), std::vector<int>{1, 1, 1, 1, 1},
        std::vector<int>{2, 2, 2, 2, 2}, phi4(), phi5(), phi6(), phi7(),
        phi8(), phi9(), phi10(), phi11()})
    CHECK(endos->index_of(img) != -1);
  int both = 0;
  for (const EndoMap& m : endos->maps()) {
    std::set<int> idem_image{m(0), m(1), m(2)};
    if (idem_image.count(1) && idem_image.count(2)) ++both;
  }
  CHECK(both == 8);

  CHECK(endos->identity_index() != -1);
  // lexicographic interning
  for (int i = 1; i < endos->size(); ++i)
    CHECK(endos->at(i - 1).img < endos->at(i).img);
  // closure under composition
  for (int i = 0; i < endos->size(); ++i)
    for (int j = 0; j < endos->size(); ++j)
      CHECK(endos->compose(i, j) != -1);
}

TEST_CASE("endomorphism counts elsewhere") {
  auto singleton_endos = enumerate_endomorphisms(inverse_of(singleton()));
  REQUIRE(singleton_endos.ok());
  CHECK(singleton_endos->size() == 1);

  auto c3_endos = enumerate_endomorphisms(inverse_of(c3()));
  REQUIRE(c3_endos.ok());
  CHECK(c3_endos->size() == 3);

  auto sl2_endos = enumerate_endomorphisms(inverse_of(sl2()));
  REQUIRE(sl2_endos.ok());
  CHECK(sl2_endos->size() == 3);

  CHECK(!enumerate_endomorphisms(inverse_of(ex1_add()), 4).ok());
}

TEST_CASE("automorphism groups") {
  auto a1 = enumerate_automorphisms(inverse_of(ex1_add()));
  REQUIRE(a1.ok());
  REQUIRE(a1->size() == 2);
  CHECK((*a1)[0].img == std::vector<int>{0, 1, 2, 3, 4});
  CHECK((*a1)[1].img == std::vector<int>{0, 2, 1, 4, 3});  // e<->f, a<->b

  auto a2 = enumerate_automorphisms(inverse_of(c3()));
  REQUIRE(a2.ok());
  CHECK(a2->size() == 2);

  auto a3 = enumerate_automorphisms(inverse_of(singleton()));
  REQUIRE(a3.ok());
  CHECK(a3->size() == 1);
}

TEST_CASE("holomorph products over the five-element fixture") {
  auto cliff = clifford_of(ex1_add());
  auto endos = enumerate_endomorphisms(cliff.base);
  REQUIRE(endos.ok());
  Holomorph hol(cliff, *endos);
  auto idx = [&](const std::vector<int>& img) {
    int i = endos->index_of(img);
    REQUIRE(i != -1);
    return i;
  };

  SUBCASE("(phi4, a)(phi10, b) = (phi6, a)") {
    auto p = hol.product({idx(phi4()), 3}, {idx(phi10()), 4});
    REQUIRE(p.ok());
    CHECK(p->endo == idx(phi6()));
    CHECK(p->point == 3);
  }
  SUBCASE("identity pairs multiply additively") {
    const int id = endos->identity_index();
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        auto p = hol.product({id, x}, {id, y});
        REQUIRE(p.ok());
        CHECK(p->endo == id);
        CHECK(p->point == cliff.at(x, y));
      }
  }
  SUBCASE("(phi7, e) is idempotent") {
    HolomorphElement u{idx(phi7()), 1};
    auto p = hol.product(u, u);
    REQUIRE(p.ok());
    CHECK(*p == u);
  }
  SUBCASE("product is associative over the whole ambient set") {
    CHECK(hol.check_product_associative().ok());
  }
}

TEST_CASE("holomorph associativity on other carriers") {
  for (const CayleyTable& t : {c3(), sl2(), klein()}) {
    auto cliff = clifford_of(t);
    auto endos = enumerate_endomorphisms(cliff.base);
    REQUIRE(endos.ok());
    CHECK(Holomorph(cliff, *endos).check_product_associative().ok());
  }
}

TEST_CASE("closure") {
  auto cliff = clifford_of(ex1_add());
  auto endos = enumerate_endomorphisms(cliff.base);
  REQUIRE(endos.ok());
  Holomorph hol(cliff, *endos);
  auto idx = [&](const std::vector<int>& img) {
    return endos->index_of(img);
  };

  SUBCASE("closure of the empty set is empty") {
    auto c = hol.closure({});
    REQUIRE(c.ok());
    CHECK(c->empty());
  }
  SUBCASE("a closed set is its own closure") {
    HolomorphSet h2 = make_holomorph_set({{idx(phi_const0()), 0},
                                          {idx(phi7()), 1},
                                          {idx(phi9()), 2},
                                          {idx(phi5()), 3},
                                          {idx(phi11()), 4}});
    auto c = hol.closure(h2);
    REQUIRE(c.ok());
    CHECK(*c == h2);
  }
  SUBCASE("one product step forces a second element over a") {
    auto c = hol.closure({{idx(phi4()), 3}, {idx(phi10()), 4}});
    REQUIRE(c.ok());
    CHECK(holomorph_set_contains(*c, {idx(phi6()), 3}));
    CHECK(holomorph_set_contains(*c, {idx(phi4()), 3}));
  }
}

TEST_CASE("conjugacy needs an additive identity") {
  auto cliff = clifford_of(ex1_add());
  auto endos = enumerate_endomorphisms(cliff.base);
  REQUIRE(endos.ok());
  Holomorph hol(cliff, *endos);
  auto r = hol.conjugating_automorphism({}, {});
  REQUIRE(!r.ok());
  CHECK(r.error().code == Fail::no_identity);
}

TEST_CASE("a set is conjugate to itself by the identity automorphism") {
  auto cliff = clifford_of(c3());
  auto endos = enumerate_endomorphisms(cliff.base);
  REQUIRE(endos.ok());
  Holomorph hol(cliff, *endos);
  const int id = endos->identity_index();
  HolomorphSet h = make_holomorph_set({{id, 0}, {id, 1}, {id, 2}});
  auto r = hol.conjugating_automorphism(h, h);
  REQUIRE(r.ok());
  REQUIRE(r->has_value());
}
