#include <doctest.h>

#include "fincat/category.hpp"
#include "support/oracles.hpp"

using namespace fincat;

namespace {

ArrowId find(const Category& c, ObjectId d, ObjectId e, const oracle::Table& t) {
  const auto* u = c.finset_universe();
  REQUIRE(u);
  return u->lookup(d, e, t);
}

}  // namespace

TEST_CASE("linear poset on three objects is lawful") {
  auto c = oracle::preorder(3, {{0, 1}, {1, 2}});
  CHECK(c.object_count() == 3);
  CHECK(c.arrow_count() == 6);
  CHECK(validate_category(c).ok());
  auto ab = *c.find_arrow("a0_1");
  auto bc = *c.find_arrow("a1_2");
  CHECK(compose(c, bc, ab) == *c.find_arrow("a0_2"));
  CHECK_THROWS_AS(compose(c, ab, bc), ComposabilityError);
}

TEST_CASE("validation reports each broken law") {
  SUBCASE("missing composite") {
    CategoryBuilder b;
    auto x = b.add_object("A");
    auto y = b.add_object("B");
    b.add_identity(x);
    b.add_identity(y);
    b.add_arrow(x, y, "f");
    b.add_arrow(y, y, "e");
    b.fill_identity_composites();
    auto r = validate_category(b.build());
    CHECK_FALSE(r.ok());
    CHECK(r.find(law::table_incomplete));
  }
  SUBCASE("identity without identity behaviour") {
    CategoryBuilder b;
    auto x = b.add_object("A");
    auto id = b.add_identity(x);
    auto e = b.add_arrow(x, x, "e");
    b.set_composite(id, id, id);
    b.set_composite(e, e, e);
    b.set_composite(id, e, id);
    b.set_composite(e, id, e);
    auto r = validate_category(b.build());
    CHECK(r.find(law::left_identity));
  }
  SUBCASE("associativity") {
    // (k.e).e = id but k.(e.e) = k
    CategoryBuilder b;
    auto x = b.add_object("A");
    auto id = b.add_identity(x);
    auto e = b.add_arrow(x, x, "e");
    auto k = b.add_arrow(x, x, "k");
    b.fill_identity_composites();
    b.set_composite(e, e, id);
    b.set_composite(k, k, k);
    b.set_composite(e, k, k);
    b.set_composite(k, e, e);
    auto r = validate_category(b.build());
    CHECK(r.find(law::associativity));
  }
  SUBCASE("missing identity") {
    CategoryBuilder b;
    b.add_object("A");
    auto r = validate_category(b.build());
    CHECK(r.find(law::identity_missing));
  }
}

TEST_CASE("full finite-set subcategory arrow counts") {
  auto c = full_subcategory_of_finset({2, 3});
  CHECK(c.arrow_count() == 4 + 8 + 9 + 27);
  CHECK(validate_category(c).ok());

  auto z = full_subcategory_of_finset({0, 1});
  CHECK(z.hom(ObjectId{0}, ObjectId{0}).size() == 1);
  CHECK(z.hom(ObjectId{0}, ObjectId{1}).size() == 1);
  CHECK(z.hom(ObjectId{1}, ObjectId{0}).empty());
  CHECK(z.hom(ObjectId{1}, ObjectId{1}).size() == 1);

  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      CHECK(*count_functions(a, b, 1000) == oracle::all_tables(a, b).size());
  CHECK_FALSE(count_functions(10, 10, 1000));
  CHECK_THROWS_AS(full_subcategory_of_finset({6, 6}, Budget{100, 100, 100}), CapacityError);
}

TEST_CASE("finset composition follows the mapping tables") {
  auto c = full_subcategory_of_finset({1, 2, 3});
  const auto* u = c.finset_universe();
  for (auto f : c.arrows())
    for (auto g : c.arrows()) {
      if (c.cod(f) != c.dom(g)) continue;
      CHECK(u->table(compose(c, g, f)) == oracle::compose(u->table(g), u->table(f)));
    }
}

TEST_CASE("monic and epic agree with injective and surjective") {
  auto c = full_subcategory_of_finset({0, 1, 2, 3});
  const auto* u = c.finset_universe();
  for (auto f : c.arrows()) {
    const auto t = u->table(f);
    CHECK(bool(is_monic(c, f)) == oracle::injective(t));
    CHECK(bool(is_epic(c, f)) == oracle::surjective(t, u->size_of(c.cod(f))));
  }
}

TEST_CASE("non-monic witness is the pair of points") {
  auto c = full_subcategory_of_finset({1, 2});
  ObjectId one{0}, two{1};
  auto f = find(c, two, one, {0, 0});
  auto r = is_monic(c, f);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  const auto* u = c.finset_universe();
  CHECK(u->table(r.witness->first) == oracle::Table{0});
  CHECK(u->table(r.witness->second) == oracle::Table{1});
}

TEST_CASE("non-epic witness agrees on the image") {
  auto c = full_subcategory_of_finset({1, 2});
  ObjectId one{0}, two{1};
  auto f = find(c, one, two, {0});
  auto r = is_epic(c, f);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  auto [g, h] = *r.witness;
  CHECK(g != h);
  CHECK(compose(c, g, f) == compose(c, h, f));
}

TEST_CASE("arrows out of a terminal object are monic") {
  auto c = full_subcategory_of_finset({1, 2, 3});
  for (auto f : c.arrows())
    if (c.dom(f) == ObjectId{0}) CHECK(is_monic(c, f).holds);
}

TEST_CASE("isomorphisms") {
  auto c = full_subcategory_of_finset({2, 2, 3});
  auto swap = find(c, ObjectId{0}, ObjectId{0}, {1, 0});
  auto inv = is_iso(c, swap);
  REQUIRE(inv);
  CHECK(*inv == swap);
  CHECK(find_isomorphisms(c, ObjectId{0}, ObjectId{1}).size() == 2);
  CHECK(find_isomorphisms(c, ObjectId{0}, ObjectId{2}).empty());
  CHECK(isomorphic(c, ObjectId{0}, ObjectId{1}));

  auto p = oracle::chain2();
  CHECK_FALSE(is_iso(p, *p.find_arrow("a0_1")));
}

TEST_CASE("dual reverses arrows and stays lawful") {
  auto c = oracle::preorder(3, {{0, 1}, {1, 2}});
  auto d = c.dual();
  CHECK(validate_category(d).ok());
  auto f = *d.find_arrow("a0_1");
  CHECK(d.dom(f) == ObjectId{1});
  CHECK(d.cod(f) == ObjectId{0});
}

TEST_CASE("seeded random categories are lawful") {
  oracle::CategoryGenerator gen(fincat::kDefaultSeed);
  for (int i = 0; i < 100; ++i) {
    auto c = gen.next();
    CHECK(c.object_count() <= 4);
    CHECK(c.arrow_count() <= 12);
    CHECK(validate_category(c).ok());
  }
}
