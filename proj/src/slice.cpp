#include "fincat/slice.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fincat {

namespace {

using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;

void check_arrows(std::size_t count, const Budget& budget, const char* what) {
  if (count > budget.max_arrows)
    throw CapacityError(std::string(what) + " exceeds the arrow budget of " +
                        std::to_string(budget.max_arrows));
}

}  // namespace

std::optional<ObjectId> SliceCategory::object_of(ArrowId phi) const {
  auto it = std::lower_bound(object_arrow.begin(), object_arrow.end(), phi);
  if (it == object_arrow.end() || *it != phi) return std::nullopt;
  return ObjectId{static_cast<std::uint32_t>(it - object_arrow.begin())};
}

SliceCategory slice_category(CategoryPtr cat, ObjectId x, const Budget& budget) {
  const Category& c = *cat;
  if (x.index >= c.object_count()) throw StructuralError("slice base object does not exist");
  SliceCategory s{nullptr, cat, x, {}, {}};
  CategoryBuilder b;
  for (auto a : c.arrows()) {
    if (c.cod(a) != x) continue;
    s.object_arrow.push_back(a);
    b.add_object(c.arrow_name(a));
  }
  const auto n = s.object_arrow.size();

  std::map<Key, ArrowId> index;
  std::vector<std::vector<ArrowId>> out_of(n);
  std::vector<std::uint32_t> source, target;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto phi = s.object_arrow[i];
      const auto psi = s.object_arrow[j];
      for (auto f : c.hom(c.dom(phi), c.dom(psi))) {
        if (c.compose(psi, f) != phi) continue;
        ArrowId t;
        if (i == j && c.is_identity(f)) {
          t = b.add_identity(ObjectId{i});
        } else {
          t = b.add_arrow(ObjectId{i}, ObjectId{j}, "t" + std::to_string(b.arrow_count()));
        }
        check_arrows(b.arrow_count(), budget, "slice category");
        s.arrow_underlying.push_back(f);
        source.push_back(i);
        target.push_back(j);
        index[Key{i, j, f.index, 0}] = t;
        out_of[i].push_back(t);
      }
    }
  }
  for (std::size_t t = 0; t < s.arrow_underlying.size(); ++t) {
    const auto f = s.arrow_underlying[t];
    for (auto u : out_of[target[t]]) {
      const auto g = s.arrow_underlying[u.index];
      const auto gf = c.compose(g, f);
      b.set_composite(u, ArrowId{static_cast<std::uint32_t>(t)},
                      index.at(Key{source[t], target[u.index], gf.index, 0}));
    }
  }
  s.category = std::make_shared<const Category>(b.build());
  return s;
}

ArrowCategory arrow_category(CategoryPtr cat, const Budget& budget) {
  const Category& c = *cat;
  ArrowCategory r{nullptr, cat, c.arrows(), {}};
  check_arrows(r.object_arrow.size(), budget, "arrow category");
  CategoryBuilder b;
  for (auto a : c.arrows()) b.add_object(c.arrow_name(a));
  const auto n = r.object_arrow.size();

  std::map<Key, ArrowId> index;
  std::vector<std::vector<ArrowId>> out_of(n);
  std::vector<std::uint32_t> source, target;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const ArrowId phi{i};
      const ArrowId psi{j};
      for (auto u : c.hom(c.cod(phi), c.cod(psi))) {
        const auto u_phi = c.compose(u, phi);
        for (auto f : c.hom(c.dom(phi), c.dom(psi))) {
          if (c.compose(psi, f) != u_phi) continue;
          ArrowId q;
          if (i == j && c.is_identity(u) && c.is_identity(f)) {
            q = b.add_identity(ObjectId{i});
          } else {
            q = b.add_arrow(ObjectId{i}, ObjectId{j}, "q" + std::to_string(b.arrow_count()));
          }
          check_arrows(b.arrow_count(), budget, "arrow category");
          r.arrow_square.emplace_back(u, f);
          source.push_back(i);
          target.push_back(j);
          index[Key{i, j, u.index, f.index}] = q;
          out_of[i].push_back(q);
        }
      }
    }
  }
  for (std::size_t t = 0; t < r.arrow_square.size(); ++t) {
    const auto [u, f] = r.arrow_square[t];
    for (auto next : out_of[target[t]]) {
      const auto [u2, f2] = r.arrow_square[next.index];
      b.set_composite(next, ArrowId{static_cast<std::uint32_t>(t)},
                      index.at(Key{source[t], target[next.index], c.compose(u2, u).index,
                                   c.compose(f2, f).index}));
    }
  }
  r.category = std::make_shared<const Category>(b.build());
  return r;
}

Functor codomain_functor(const ArrowCategory& arrows) {
  const Category& c = *arrows.base;
  Functor f{arrows.category, arrows.base, {}, {}};
  for (auto phi : arrows.object_arrow) f.object_map.push_back(c.cod(phi));
  for (const auto& [u, g] : arrows.arrow_square) f.arrow_map.push_back(u);
  return f;
}

InclusionFunctor inclusion_functor(const SliceCategory& slice, const ArrowCategory& arrows) {
  if (!same_category(*slice.base, *arrows.base))
    throw ContractError("slice and arrow category must share their base");
  const Category& c = *slice.base;
  const Category& ac = *arrows.category;
  const Category& sc = *slice.category;
  const auto id_x = c.identity(slice.over);

  InclusionFunctor inc{Functor{slice.category, arrows.category, {}, {}}, std::nullopt};
  for (auto phi : slice.object_arrow) inc.functor.object_map.push_back(arrows.object_of(phi));
  for (auto t : sc.arrows()) {
    const auto from = inc.functor(sc.dom(t));
    const auto to = inc.functor(sc.cod(t));
    const auto f = slice.arrow_underlying[t.index];
    std::optional<ArrowId> image;
    for (auto q : ac.hom(from, to)) {
      if (arrows.arrow_square[q.index] == std::pair{id_x, f}) {
        image = q;
        break;
      }
    }
    if (!image) throw ContractError("triangle has no square in the arrow category");
    inc.functor.arrow_map.push_back(*image);
  }
  for (auto from : inc.functor.object_map) {
    for (auto to : inc.functor.object_map) {
      for (auto q : ac.hom(from, to)) {
        if (arrows.arrow_square[q.index].first == id_x) continue;
        if (!inc.non_full_witness || q < *inc.non_full_witness) inc.non_full_witness = q;
        break;
      }
    }
  }
  return inc;
}

// ---------------------------------------------------------------------------

std::vector<Fiber> fiber_decompose(const FinSetArrow& phi, const FinSetArrow& f,
                                   const FinSetArrow& psi, const FinSetArrow& u) {
  if (phi.dom.size != f.dom.size || f.cod.size != psi.dom.size || phi.cod.size != u.dom.size ||
      psi.cod.size != u.cod.size)
    throw ContractError("fiber decomposition needs phi : X -> I, f : X -> Y, psi : Y -> J, u : I -> J");
  for (std::size_t x = 0; x < f.dom.size; ++x) {
    if (psi(f(x)) != u(phi(x)))
      throw ContractError("square does not commute at element " + std::to_string(x));
  }
  std::vector<Fiber> out;
  for (std::size_t i = 0; i < phi.cod.size; ++i) {
    Fiber fib{i, {}, {}, {}};
    for (std::size_t x = 0; x < phi.dom.size; ++x)
      if (phi(x) == i) fib.domain.push_back(x);
    for (std::size_t y = 0; y < psi.dom.size; ++y)
      if (psi(y) == u(i)) fib.codomain.push_back(y);
    std::vector<std::size_t> table;
    for (auto x : fib.domain) {
      auto it = std::lower_bound(fib.codomain.begin(), fib.codomain.end(), f(x));
      table.push_back(static_cast<std::size_t>(it - fib.codomain.begin()));
    }
    fib.map = FinSetArrow{FinSetObject::of_size(fib.domain.size()),
                          FinSetObject::of_size(fib.codomain.size()), std::move(table)};
    out.push_back(std::move(fib));
  }
  return out;
}

FinSetArrow fiber_reassemble(const FinSetArrow& phi, const FinSetArrow& psi,
                             const FinSetArrow& u, const std::vector<Fiber>& fibers) {
  if (fibers.size() != phi.cod.size || u.dom.size != phi.cod.size)
    throw ContractError("one fiber per base element is required");
  std::vector<std::size_t> table(phi.dom.size, 0);
  for (const auto& fib : fibers) {
    if (fib.map.table.size() != fib.domain.size())
      throw ContractError("fiber map does not cover its domain");
    for (std::size_t k = 0; k < fib.domain.size(); ++k) {
      const auto y = fib.codomain.at(fib.map.table[k]);
      if (psi(y) != u(fib.index)) throw ContractError("fiber map leaves its target fiber");
      table.at(fib.domain[k]) = y;
    }
  }
  return FinSetArrow{phi.dom, psi.dom, std::move(table)};
}

FinSetArrow constant_family(const FinSetObject& i, const FinSetObject& x, const Budget& budget) {
  return fs_product(i, x, budget).first;
}

}  // namespace fincat
