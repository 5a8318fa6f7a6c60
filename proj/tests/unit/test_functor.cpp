#include <doctest.h>

#include "fincat/functor.hpp"
#include "fincat/limits.hpp"
#include "support/oracles.hpp"

using namespace fincat;

TEST_CASE("identity and constant functors are lawful") {
  oracle::CategoryGenerator gen(7);
  for (int i = 0; i < 30; ++i) {
    auto c = oracle::share(gen.next());
    CHECK(validate_functor(identity_functor(c)).ok());
    auto k = constant_functor(c, c, ObjectId{0});
    CHECK(validate_functor(k).ok());
    for (auto a : c->arrows()) CHECK(k(a) == c->identity(ObjectId{0}));
  }
}

TEST_CASE("parallel-pair diagram into finite sets") {
  auto c = oracle::share(full_subcategory_of_finset({2, 3}));
  const auto* u = c->finset_universe();
  auto f = u->lookup(ObjectId{0}, ObjectId{1}, std::vector<std::size_t>{0, 1});
  auto g = u->lookup(ObjectId{0}, ObjectId{1}, std::vector<std::size_t>{2, 1});
  auto d = shape_diagram(Shape::parallel_pair, c, {ObjectId{0}, ObjectId{1}}, {f, g});
  CHECK(validate_diagram(d).ok());
}

TEST_CASE("broken functors are reported") {
  auto chain = oracle::share(oracle::chain2());
  auto two = oracle::share(oracle::discrete(2));
  auto arrow = *chain->find_arrow("a0_1");

  SUBCASE("typing") {
    Functor f{chain, two, {ObjectId{0}, ObjectId{1}},
              {two->identity(ObjectId{0}), two->identity(ObjectId{1}), two->identity(ObjectId{0})}};
    REQUIRE(arrow.index == 2);
    auto r = validate_functor(f);
    CHECK(r.find(law::functor_typing));
  }
  SUBCASE("identities") {
    auto p3 = oracle::share(oracle::preorder(2, {{0, 1}, {1, 0}}));
    auto a01 = *p3->find_arrow("a0_1");
    auto a10 = *p3->find_arrow("a1_0");
    Functor f{p3, p3, {ObjectId{0}, ObjectId{0}}, {}};
    f.arrow_map.assign(p3->arrow_count(), p3->identity(ObjectId{0}));
    f.arrow_map[p3->identity(ObjectId{1}).index] = p3->identity(ObjectId{0});
    CHECK(validate_functor(f).ok());
    f.object_map = {ObjectId{0}, ObjectId{1}};
    f.arrow_map[a01.index] = a01;
    f.arrow_map[a10.index] = a10;
    f.arrow_map[p3->identity(ObjectId{1}).index] = p3->identity(ObjectId{1});
    CHECK(validate_functor(f).ok());
    f.arrow_map[p3->identity(ObjectId{1}).index] = a10;
    CHECK(validate_functor(f).find(law::functor_identity));
  }
  SUBCASE("unresolved ids") {
    Functor f{chain, two, {ObjectId{0}}, {}};
    CHECK_THROWS_AS(validate_functor(f), StructuralError);
  }
}

TEST_CASE("make_functor fills identities") {
  auto chain = oracle::share(oracle::chain2());
  auto f = make_functor(chain, chain, {ObjectId{0}, ObjectId{1}},
                        {{*chain->find_arrow("a0_1"), *chain->find_arrow("a0_1")}});
  CHECK(same_functor(f, identity_functor(chain)));
  CHECK_THROWS_AS(make_functor(chain, chain, {ObjectId{0}, ObjectId{1}}, {}), ContractError);
}

TEST_CASE("composition of functors") {
  auto chain = oracle::share(oracle::chain2());
  auto one = oracle::share(oracle::terminal_category());
  auto k = constant_functor(chain, one, ObjectId{0});
  auto back = constant_functor(one, chain, ObjectId{1});
  auto both = compose_functors(back, k);
  CHECK(validate_functor(both).ok());
  CHECK(same_functor(both, constant_functor(chain, chain, ObjectId{1})));
  CHECK_THROWS_AS(compose_functors(k, k), ContractError);
}
