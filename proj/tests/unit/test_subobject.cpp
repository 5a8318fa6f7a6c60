#include <doctest.h>

#include "fincat/subobject.hpp"
#include "support/oracles.hpp"

using namespace fincat;

namespace {

FinSetObject S(std::size_t n) { return FinSetObject::of_size(n); }

// Subset with bitmask m of an n-element set.
Subobject of_mask(std::size_t n, std::size_t m) {
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) xs.push_back(i);
  return Subobject::of(S(n), xs);
}

}  // namespace

TEST_CASE("normal form of subobjects") {
  auto s = Subobject::of(S(4), {3, 1, 1});
  CHECK(s.members == std::vector<std::size_t>{1, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK_THROWS_AS(Subobject::of(S(2), {2}), ContractError);
  CHECK(Subobject::from_mono(FinSetArrow::make(S(2), S(4), {3, 1})) == s);
  CHECK_THROWS_AS(Subobject::from_mono(FinSetArrow::make(S(2), S(4), {1, 1})), ContractError);
  CHECK(s.inclusion().table == std::vector<std::size_t>{1, 3});
}

TEST_CASE("classifier") {
  auto omega = fs_subobject_classifier();
  CHECK(omega.object.size == 2);
  CHECK(omega.true_arrow.table == std::vector<std::size_t>{kTrue});
  CHECK(fs_false_arrow().table == std::vector<std::size_t>{kFalse});
  CHECK(fs_characteristic(Subobject::of(S(1), {})) == fs_false_arrow());
  for (std::size_t a = 0; a <= 4; ++a) CHECK(fs_hom(S(a), omega.object).size() == oracle::ipow(2, a));
}

TEST_CASE("characteristic arrows are unique") {
  auto s = Subobject::of(S(2), {0});
  auto chi = fs_characteristic(s);
  CHECK(chi.table == std::vector<std::size_t>{kTrue, kFalse});
  std::size_t n = 0;
  for (const auto& c : fs_hom(S(2), S(2))) n += fs_classifies(s, c);
  CHECK(n == 1);
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t m = 0; m < (std::size_t{1} << a); ++m) {
      auto sub = of_mask(a, m);
      CHECK(fs_classified(fs_characteristic(sub)) == sub);
    }
}

TEST_CASE("inverse images") {
  auto f = FinSetArrow::make(S(3), S(2), {0, 1, 1});
  auto s = Subobject::of(S(2), {1});
  auto pre = fs_inverse_image(f, s);
  CHECK(pre.members == std::vector<std::size_t>{1, 2});
  auto pb = fs_pullback(f, s.inclusion());
  CHECK(Subobject::from_mono(pb.first) == pre);
  CHECK(fs_characteristic(pre) == fs_compose(fs_characteristic(s), f));
}

TEST_CASE("subobject algebra") {
  SubobjectAlgebra alg(S(2));
  CHECK(alg.all().size() == 4);
  auto s = Subobject::of(S(2), {0});
  auto t = Subobject::of(S(2), {1});
  CHECK(alg.implies(s, t) == t);
  CHECK(alg.top().members.size() == 2);
  CHECK(alg.bottom().members.empty());
  CHECK_THROWS_AS(alg.meet(s, Subobject::of(S(3), {0})), ContractError);

  for (std::size_t a = 0; a <= 4; ++a) {
    SubobjectAlgebra h(S(a));
    CHECK(h.all().size() == oracle::ipow(2, a));
    for (const auto& x : h.all()) {
      CHECK(h.join(x, h.complement(x)) == h.top());
      CHECK(h.meet(x, h.complement(x)) == h.bottom());
      for (const auto& y : h.all()) {
        CHECK(h.implies(x, y) == h.join(h.complement(x), y));
        CHECK(h.leq(h.meet(x, y), x));
        CHECK(h.leq(x, h.join(x, y)));
        for (const auto& z : h.all())
          CHECK(h.leq(h.meet(z, x), y) == h.leq(z, h.implies(x, y)));
      }
    }
  }
}

TEST_CASE("power objects") {
  auto p = fs_power_object(S(2));
  CHECK(p.object.size == 4);
  SubobjectAlgebra alg(S(2));
  std::set<std::vector<std::size_t>> points;
  for (const auto& s : alg.all()) points.insert(p.point_of(s).table);
  CHECK(points.size() == 4);
  for (std::size_t a = 0; a <= 3; ++a) {
    auto pa = fs_power_object(S(a));
    SubobjectAlgebra sa(S(a));
    for (const auto& s : sa.all()) {
      const auto pt = pa.point_of(s)(0);
      const auto chi = fs_characteristic(s);
      for (std::size_t x = 0; x < a; ++x) CHECK(pa.membership(x * pa.object.size + pt) == chi(x));
    }
  }
}
