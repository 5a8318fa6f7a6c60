#include <doctest.h>

#include "fincat/finset.hpp"
#include "fincat/limits.hpp"
#include "support/oracles.hpp"

using namespace fincat;

namespace {

ArrowId arrow(const CategoryPtr& c, std::size_t d, std::size_t e, std::vector<std::size_t> t) {
  return c->finset_universe()->lookup(ObjectId{std::uint32_t(d)}, ObjectId{std::uint32_t(e)}, t);
}

const Budget kLarge{100'000, 200'000, 4'096};

}  // namespace

TEST_CASE("shape index categories") {
  auto pp = build_shape(Shape::parallel_pair);
  CHECK(pp->object_count() == 2);
  CHECK(pp->arrow_count() == 4);
  CHECK(pp->hom(ObjectId{0}, ObjectId{1}).size() == 2);
  auto cs = build_shape(Shape::cospan);
  CHECK(cs->object_count() == 3);
  CHECK(cs->hom(ObjectId{0}, ObjectId{2}).size() == 1);
  CHECK(cs->hom(ObjectId{1}, ObjectId{2}).size() == 1);
  CHECK(build_shape(Shape::empty)->object_count() == 0);
  for (auto s : {Shape::empty, Shape::discrete_pair, Shape::parallel_pair, Shape::cospan, Shape::span}) {
    CHECK(validate_category(*build_shape(s)).ok());
    CHECK(parse_shape(to_string(s)) == s);
  }
  CHECK_FALSE(parse_shape("triangle"));
}

TEST_CASE("cones over the empty diagram are the objects") {
  auto c = oracle::share(oracle::preorder(3, {{0, 1}}));
  auto d = shape_diagram(Shape::empty, c, {});
  auto cones = enumerate_cones(d);
  CHECK(cones.cones.size() == 3);
  for (const auto& k : cones.cones) CHECK(k.legs.empty());
}

TEST_CASE("discrete-pair cones are all leg pairs") {
  auto c = oracle::share(full_subcategory_of_finset({2, 3, 6}, kLarge));
  auto d = shape_diagram(Shape::discrete_pair, c, {ObjectId{0}, ObjectId{1}});
  auto cones = enumerate_cones(d, kLarge);
  REQUIRE_FALSE(cones.truncated);
  std::size_t at6 = 0;
  for (const auto& k : cones.cones) at6 += k.apex == ObjectId{2};
  CHECK(at6 == oracle::ipow(2, 6) * oracle::ipow(3, 6));
  CHECK(enumerate_cones(d, Budget{10'000, 100, 4'096}).truncated);
}

TEST_CASE("equal parallel maps: cones correspond to arrows into the domain") {
  auto c = oracle::share(full_subcategory_of_finset({1, 2, 3}));
  auto f = arrow(c, 1, 2, {0, 2});
  auto d = shape_diagram(Shape::parallel_pair, c, {ObjectId{1}, ObjectId{2}}, {f, f});
  auto cones = enumerate_cones(d);
  for (std::uint32_t a = 0; a < 3; ++a) {
    std::size_t n = 0;
    for (const auto& k : cones.cones) n += k.apex == ObjectId{a};
    CHECK(n == c->hom(ObjectId{a}, ObjectId{1}).size());
  }
}

TEST_CASE("terminal and initial objects in posets") {
  auto p = oracle::share(oracle::preorder(3, {{0, 1}, {1, 2}}));
  auto e = shape_diagram(Shape::empty, p, {});
  auto t = find_limit(e);
  REQUIRE(t.found());
  CHECK(t.universal->apex == ObjectId{2});
  auto i = find_colimit(e);
  REQUIRE(i.found());
  CHECK(i.universal->nadir == ObjectId{0});

  auto two = oracle::share(oracle::discrete(2));
  CHECK(find_limit(shape_diagram(Shape::empty, two, {})).status == UniversalStatus::absent);
}

TEST_CASE("generic product and coproduct agree with the direct ones") {
  auto c = oracle::share(full_subcategory_of_finset({1, 2, 3, 6}, kLarge));
  auto prod = find_limit(shape_diagram(Shape::discrete_pair, c, {ObjectId{1}, ObjectId{2}}), kLarge);
  REQUIRE(prod.found());
  CHECK(c->finset_universe()->size_of(prod.universal->apex) ==
        fs_product(FinSetObject::of_size(2), FinSetObject::of_size(3)).object.size);

  auto d = oracle::share(full_subcategory_of_finset({2, 3, 5}));
  auto co = find_colimit(shape_diagram(Shape::discrete_pair, d, {ObjectId{0}, ObjectId{1}}), kLarge);
  REQUIRE(co.found());
  CHECK(d->finset_universe()->size_of(co.universal->nadir) == 5);
}

TEST_CASE("mediating morphisms") {
  auto c = oracle::share(full_subcategory_of_finset({1, 2, 4}));
  auto d = shape_diagram(Shape::discrete_pair, c, {ObjectId{1}, ObjectId{1}});
  auto prod = find_limit(d, kLarge);
  REQUIRE(prod.found());
  const auto& legs = prod.universal->legs;
  auto f = arrow(c, 1, 1, {1, 1});
  auto g = arrow(c, 1, 1, {1, 0});
  Cone other{ObjectId{1}, {f, g}};
  auto u = mediating_morphism(d, prod, other);
  CHECK(compose(*c, legs[0], u) == f);
  CHECK(compose(*c, legs[1], u) == g);
  // the certificate covers every cone
  CHECK(prod.cones.size() == prod.mediating.size());
  for (std::size_t k = 0; k < prod.cones.size(); ++k)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(compose(*c, legs[j], prod.mediating[k]) == prod.cones[k].legs[j]);

  Cone bad{ObjectId{1}, {f}};
  CHECK_THROWS_AS(mediating_morphism(d, prod, bad), ContractError);

  // pullback of 2 -> 1 <- 2 is 4
  auto t = arrow(c, 1, 0, {0, 0});
  auto cs = shape_diagram(Shape::cospan, c, {ObjectId{1}, ObjectId{1}, ObjectId{0}}, {t, t});
  auto pb = find_limit(cs, kLarge);
  REQUIRE(pb.found());
  CHECK(pb.universal->apex == ObjectId{2});
  Cone q{ObjectId{1}, {f, g, t}};
  REQUIRE(is_cone(cs, q));
  auto v = mediating_morphism(cs, pb, q);
  CHECK(compose(*c, pb.universal->legs[0], v) == f);
  CHECK(compose(*c, pb.universal->legs[1], v) == g);
}

TEST_CASE("pullback squares") {
  auto c = oracle::share(full_subcategory_of_finset({1, 2}));
  auto t = arrow(c, 1, 0, {0, 0});
  auto id = c->identity(ObjectId{1});
  auto sw = arrow(c, 1, 1, {1, 0});
  // 2 -> 1 <- 2 is not a pullback on a carrier of size 2
  CHECK(is_pullback_square(c, t, t, id, sw) == false);
  CHECK(is_pullback_square(c, id, id, id, id) == true);
}

TEST_CASE("universal objects are unique up to isomorphism") {
  oracle::CategoryGenerator gen(1234);
  for (int i = 0; i < 80; ++i) {
    auto c = oracle::share(gen.next());
    auto e = shape_diagram(Shape::empty, c, {});
    for (const auto& q : {find_limit(e).qualifying}) {
      for (auto x : q)
        for (auto y : q) CHECK(isomorphic(*c, x, y));
    }
    auto co = find_colimit(e);
    for (auto x : co.qualifying)
      for (auto y : co.qualifying) CHECK(isomorphic(*c, x, y));
    CHECK(find_limit(e).status != UniversalStatus::ambiguous);
  }
}

TEST_CASE("duality") {
  auto p = oracle::share(oracle::preorder(3, {{0, 1}, {0, 2}}));
  auto d = shape_diagram(Shape::discrete_pair, p, {ObjectId{1}, ObjectId{2}});
  auto lim = find_limit(d);
  auto dual = find_colimit(dual_diagram(d));
  REQUIRE(lim.found());
  REQUIRE(dual.found());
  CHECK(lim.universal->apex == dual.universal->nadir);
  CHECK(lim.universal->legs == dual.universal->legs);
}

TEST_CASE("limit verdicts on particular cones") {
  auto p = oracle::share(oracle::preorder(3, {{0, 1}, {0, 2}}));
  auto d = shape_diagram(Shape::discrete_pair, p, {ObjectId{1}, ObjectId{2}});
  Cone good{ObjectId{0}, {*p->find_arrow("a0_1"), *p->find_arrow("a0_2")}};
  CHECK(is_limit_cone(d, good) == true);
  Cone bad{ObjectId{1}, {p->identity(ObjectId{1}), p->identity(ObjectId{1})}};
  CHECK(is_limit_cone(d, bad) == false);
}
