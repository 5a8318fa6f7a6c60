#include "fincat/curry.hpp"

#include <algorithm>
#include <set>

namespace fincat {

FinSetObject CurryAdjunction::left(const FinSetObject& x) const {
  return fs_product(a, x, budget).object;
}

FinSetArrow CurryAdjunction::left(const FinSetArrow& f) const {
  return fs_product_map(fs_identity(a), f, budget);
}

FinSetObject CurryAdjunction::right(const FinSetObject& y) const {
  return fs_exponential(a, y, budget).exp_object;
}

FinSetArrow CurryAdjunction::right(const FinSetArrow& h) const { return fs_exp_map(a, h, budget); }

FinSetArrow CurryAdjunction::unit(const FinSetObject& x) const {
  return fs_curry(a, x, fs_identity(left(x)), budget);
}

FinSetArrow CurryAdjunction::counit(const FinSetObject& y) const {
  return fs_exponential(a, y, budget).ev;
}

FinSetArrow CurryAdjunction::transpose(const FinSetObject& x, const FinSetArrow& f) const {
  return fs_curry(a, x, f, budget);
}

FinSetArrow CurryAdjunction::untranspose(const FinSetObject& y, const FinSetArrow& g) const {
  return fs_uncurry(a, y, g, budget);
}

namespace {

std::string table_text(const FinSetArrow& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.table[i]);
  }
  return s + "]";
}

void fail(PointwiseReport& r, std::string detail) {
  if (!r.holds) return;
  r.holds = false;
  r.detail = std::move(detail);
}

}  // namespace

PointwiseReport check_curry_bijection(const CurryAdjunction& adj, const FinSetObject& x,
                                      const FinSetObject& y) {
  PointwiseReport r;
  const auto lhs = fs_hom(adj.left(x), y, adj.budget);
  const auto rhs = fs_hom(x, adj.right(y), adj.budget);
  if (lhs.size() != rhs.size()) {
    fail(r, "hom-sets differ in size: " + std::to_string(lhs.size()) + " vs " +
                std::to_string(rhs.size()));
    return r;
  }
  std::set<std::vector<std::size_t>> images;
  for (const auto& f : lhs) {
    ++r.checked;
    const auto g = adj.transpose(x, f);
    if (!images.insert(g.table).second) fail(r, "curry is not injective at f = " + table_text(f));
    if (!(adj.untranspose(y, g) == f)) fail(r, "uncurry . curry differs at f = " + table_text(f));
  }
  for (const auto& g : rhs) {
    ++r.checked;
    if (!(adj.transpose(x, adj.untranspose(y, g)) == g))
      fail(r, "curry . uncurry differs at g = " + table_text(g));
  }
  return r;
}

PointwiseReport check_curry_naturality(const CurryAdjunction& adj, const Transpose& phi,
                                       const FinSetObject& x2, const FinSetObject& x,
                                       const FinSetObject& y, const FinSetObject& y2) {
  PointwiseReport r;
  const auto fs = fs_hom(adj.left(x), y, adj.budget);
  const auto alphas = fs_hom(x2, x, adj.budget);
  const auto betas = fs_hom(y, y2, adj.budget);
  for (const auto& f : fs) {
    const auto pf = phi(x, f);
    for (const auto& alpha : alphas) {
      for (const auto& beta : betas) {
        ++r.checked;
        const auto lhs = phi(x2, fs_compose(beta, fs_compose(f, adj.left(alpha))));
        const auto rhs = fs_compose(adj.right(beta), fs_compose(pf, alpha));
        if (!(lhs == rhs)) {
          fail(r, "naturality square fails for f = " + table_text(f) + ", alpha = " +
                      table_text(alpha) + ", beta = " + table_text(beta));
          return r;
        }
      }
    }
  }
  return r;
}

PointwiseReport check_curry_triangles(const CurryAdjunction& adj, const FinSetObject& x,
                                      const FinSetObject& y) {
  PointwiseReport r;
  const auto fx = adj.left(x);
  const auto first = fs_compose(adj.counit(fx), adj.left(adj.unit(x)));
  ++r.checked;
  if (!(first == fs_identity(fx)))
    fail(r, "eps . F(eta) is not the identity at X of size " + std::to_string(x.size));
  const auto gy = adj.right(y);
  const auto second = fs_compose(adj.right(adj.counit(y)), adj.unit(gy));
  ++r.checked;
  if (!(second == fs_identity(gy)))
    fail(r, "G(eps) . eta is not the identity at Y of size " + std::to_string(y.size));
  return r;
}

PointwiseReport check_curry_universal(const CurryAdjunction& adj, const FinSetObject& x,
                                      const FinSetObject& y) {
  PointwiseReport r;
  const auto ev = adj.counit(y);
  const auto gs = fs_hom(x, adj.right(y), adj.budget);
  for (const auto& f : fs_hom(adj.left(x), y, adj.budget)) {
    ++r.checked;
    std::size_t solutions = 0;
    bool curry_solves = false;
    const auto curried = adj.transpose(x, f);
    for (const auto& g : gs) {
      if (fs_compose(ev, adj.left(g)) == f) {
        ++solutions;
        curry_solves = curry_solves || g == curried;
      }
    }
    if (solutions != 1 || !curry_solves) {
      fail(r, std::to_string(solutions) + " factorizations of f = " + table_text(f));
      return r;
    }
  }
  return r;
}

PointwiseReport check_unit_transpose(const CurryAdjunction& adj, const FinSetObject& x,
                                     const FinSetObject& y) {
  PointwiseReport r;
  const auto eta = adj.unit(x);
  for (const auto& f : fs_hom(adj.left(x), y, adj.budget)) {
    ++r.checked;
    if (!(fs_compose(adj.right(f), eta) == adj.transpose(x, f))) {
      fail(r, "unit-derived transpose differs from curry at f = " + table_text(f));
      return r;
    }
  }
  return r;
}

PresentedCurry presented_curry_adjunction(CategoryPtr cat, std::size_t a, const Budget& budget) {
  const auto* u = cat->finset_universe();
  if (!u) throw ContractError("curry adjunction needs a full subcategory of finite sets");
  CurryAdjunction adj{FinSetObject::of_size(a), budget};

  auto object_of_size = [&](std::size_t n) {
    for (auto x : cat->objects())
      if (u->size_of(x) == n) return x;
    throw ContractError("no object of size " + std::to_string(n) +
                        ": the subcategory is not closed under the curry functors");
  };
  auto carrier = [&](ObjectId x) { return FinSetObject::of_size(u->size_of(x)); };

  Functor f{cat, cat, {}, {}};
  Functor g{cat, cat, {}, {}};
  for (auto x : cat->objects()) {
    f.object_map.push_back(object_of_size(adj.left(carrier(x)).size));
    g.object_map.push_back(object_of_size(adj.right(carrier(x)).size));
  }
  for (auto arrow : cat->arrows()) {
    const auto t = fs_extract(*cat, arrow);
    f.arrow_map.push_back(fs_embed(*cat, f(cat->dom(arrow)), f(cat->cod(arrow)), adj.left(t)));
    g.arrow_map.push_back(fs_embed(*cat, g(cat->dom(arrow)), g(cat->cod(arrow)), adj.right(t)));
  }

  const auto gf = compose_functors(g, f);
  const auto fg = compose_functors(f, g);
  NatTrans unit{identity_functor(cat), gf, {}};
  NatTrans counit{fg, identity_functor(cat), {}};
  for (auto x : cat->objects()) {
    unit.components.push_back(fs_embed(*cat, x, gf(x), adj.unit(carrier(x))));
    counit.components.push_back(fs_embed(*cat, fg(x), x, adj.counit(carrier(x))));
  }

  HomSetFamily family;
  for (auto x : cat->objects()) {
    for (auto y : cat->objects()) {
      std::vector<ArrowId> m;
      for (auto arrow : cat->hom(f(x), y))
        m.push_back(fs_embed(*cat, x, g(y), adj.transpose(carrier(x), fs_extract(*cat, arrow))));
      family.maps.push_back(std::move(m));
    }
  }
  return PresentedCurry{AdjunctionCandidate{std::move(f), std::move(g), std::move(unit),
                                            std::move(counit)},
                        std::move(family)};
}

}  // namespace fincat
