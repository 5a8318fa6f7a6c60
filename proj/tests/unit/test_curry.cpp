#include <doctest.h>

#include "fincat/curry.hpp"
#include "support/oracles.hpp"

using namespace fincat;

namespace {

FinSetObject S(std::size_t n) { return FinSetObject::of_size(n); }

}  // namespace

TEST_CASE("curry adjunction laws for sizes up to 2") {
  for (std::size_t a = 0; a <= 2; ++a) {
    CurryAdjunction adj{S(a), {}};
    Transpose phi = [&](const FinSetObject& x, const FinSetArrow& f) { return adj.transpose(x, f); };
    for (std::size_t x = 0; x <= 2; ++x)
      for (std::size_t y = 0; y <= 2; ++y) {
        CAPTURE(a);
        CAPTURE(x);
        CAPTURE(y);
        auto b = check_curry_bijection(adj, S(x), S(y));
        CHECK(b.holds);
        // both directions are walked
        CHECK(b.checked == 2 * oracle::ipow(y, a * x));
        CHECK(check_curry_triangles(adj, S(x), S(y)).holds);
        CHECK(check_curry_universal(adj, S(x), S(y)).holds);
        CHECK(check_unit_transpose(adj, S(x), S(y)).holds);
      }
    for (std::size_t x2 = 0; x2 <= 2; ++x2)
      for (std::size_t x = 0; x <= 2; ++x)
        for (std::size_t y = 0; y <= 2; ++y)
          for (std::size_t y2 = 0; y2 <= 2; ++y2)
            CHECK(check_curry_naturality(adj, phi, S(x2), S(x), S(y), S(y2)).holds);
  }
}

TEST_CASE("curry spot checks at size 3") {
  CurryAdjunction adj{S(3), {}};
  Transpose phi = [&](const FinSetObject& x, const FinSetArrow& f) { return adj.transpose(x, f); };
  CHECK(check_curry_bijection(adj, S(1), S(2)).holds);
  CHECK(check_curry_triangles(adj, S(1), S(1)).holds);
  CHECK(check_curry_naturality(adj, phi, S(1), S(1), S(2), S(2)).holds);

  CurryAdjunction two{S(2), {}};
  Transpose psi = [&](const FinSetObject& x, const FinSetArrow& f) { return two.transpose(x, f); };
  CHECK(check_curry_bijection(two, S(3), S(3)).holds);
  CHECK(check_curry_triangles(two, S(3), S(3)).holds);
  CHECK(check_curry_universal(two, S(3), S(2)).holds);
  CHECK(check_curry_naturality(two, psi, S(2), S(3), S(2), S(3)).holds);
  CHECK_THROWS_AS(check_curry_triangles(adj, S(1), S(2)), CapacityError);
}

TEST_CASE("functor parts") {
  CurryAdjunction adj{S(2), {}};
  CHECK(adj.left(S(3)).size == 6);
  CHECK(adj.right(S(3)).size == 9);
  auto h = FinSetArrow::make(S(2), S(3), {2, 0});
  auto hA = adj.right(h);
  CHECK(hA.dom.size == 4);
  CHECK(hA.cod.size == 9);
  CHECK(adj.left(h).table.size() == 4);
  CHECK(adj.unit(S(1)).cod.size == 4);
  CHECK(adj.counit(S(2)).dom.size == 8);
}

TEST_CASE("a perturbed transpose breaks naturality") {
  CurryAdjunction adj{S(1), {}};
  // swap the images of the two constant maps 1 x 2 -> 2
  Transpose phi = [&](const FinSetObject& x, const FinSetArrow& f) {
    auto g = adj.transpose(x, f);
    if (x.size == 2 && f.table == std::vector<std::size_t>{0, 0})
      return adj.transpose(x, FinSetArrow::make(f.dom, f.cod, {1, 1}));
    if (x.size == 2 && f.table == std::vector<std::size_t>{1, 1})
      return adj.transpose(x, FinSetArrow::make(f.dom, f.cod, {0, 0}));
    return g;
  };
  auto r = check_curry_naturality(adj, phi, S(2), S(2), S(2), S(2));
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.detail.empty());
}
