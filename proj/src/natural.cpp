#include "fincat/natural.hpp"

#include <algorithm>
#include <set>

namespace fincat {

namespace {

bool parallel(const Functor& f, const Functor& g) {
  return same_category(*f.source, *g.source) && same_category(*f.target, *g.target);
}

void require_components(const NatTrans& eta) {
  if (!eta.from.source || !eta.from.target || !eta.to.source || !eta.to.target)
    throw StructuralError("transformation between incomplete functors");
  if (!parallel(eta.from, eta.to))
    throw ContractError("transformation needs parallel functors");
  if (eta.components.size() != eta.from.source->object_count())
    throw StructuralError("transformation must have one component per source object");
  for (auto c : eta.components)
    if (c.index >= eta.from.target->arrow_count())
      throw StructuralError("component refers to a missing arrow");
}

std::size_t position(const std::vector<ArrowId>& hom, ArrowId a) {
  auto it = std::lower_bound(hom.begin(), hom.end(), a);
  return static_cast<std::size_t>(it - hom.begin());
}

}  // namespace

ValidationReport validate_nat_trans(const NatTrans& eta) {
  require_components(eta);
  const auto& src = *eta.from.source;
  const auto& tgt = *eta.from.target;
  const auto& f = eta.from;
  const auto& g = eta.to;

  ValidationReport report;
  std::vector<bool> typed(src.object_count(), true);
  for (auto x : src.objects()) {
    const auto c = eta(x);
    if (tgt.dom(c) != f(x) || tgt.cod(c) != g(x)) {
      typed[x.index] = false;
      if (report.violations.empty())
        report.violations.push_back(Violation{
            std::string(law::component_typing), {c}, {x},
            "component at " + src.object_name(x) + " is " + tgt.arrow_name(c) + " : " +
                tgt.object_name(tgt.dom(c)) + " -> " + tgt.object_name(tgt.cod(c)) +
                ", expected " + tgt.object_name(f(x)) + " -> " + tgt.object_name(g(x))});
    }
  }
  for (auto a : src.arrows()) {
    const auto x = src.dom(a);
    const auto y = src.cod(a);
    if (!typed[x.index] || !typed[y.index]) continue;
    const auto lhs = tgt.compose(eta(y), f(a));
    const auto rhs = tgt.compose(g(a), eta(x));
    if (lhs != rhs) {
      report.violations.push_back(Violation{
          std::string(law::naturality), {a}, {x, y},
          "at " + src.arrow_name(a) + ": eta_" + src.object_name(y) + " . F(" + src.arrow_name(a) +
              ") = " + tgt.arrow_name(lhs) + " but G(" + src.arrow_name(a) + ") . eta_" +
              src.object_name(x) + " = " + tgt.arrow_name(rhs)});
      break;
    }
  }
  return report;
}

NatTrans identity_nat_trans(const Functor& f) {
  NatTrans eta{f, f, {}};
  for (auto x : f.source->objects()) eta.components.push_back(f.target->identity(f(x)));
  return eta;
}

NatTrans vertical_compose(const NatTrans& mu, const NatTrans& eta) {
  require_components(mu);
  require_components(eta);
  if (!same_functor(eta.to, mu.from))
    throw ContractError("vertical composition: middle functors differ");
  NatTrans out{eta.from, mu.to, {}};
  const auto& tgt = *eta.from.target;
  for (auto x : eta.from.source->objects()) out.components.push_back(tgt.compose(mu(x), eta(x)));
  return out;
}

HorizontalComposite horizontal_compose(const NatTrans& beta, const NatTrans& alpha) {
  require_components(beta);
  require_components(alpha);
  if (!same_category(*alpha.from.target, *beta.from.source))
    throw ContractError("horizontal composition: categories do not chain");
  const auto& e = *beta.from.target;
  const auto& h = beta.from;
  const auto& k = beta.to;
  HorizontalComposite out{NatTrans{compose_functors(h, alpha.from), compose_functors(k, alpha.to), {}},
                          true, std::nullopt};
  for (auto x : alpha.from.source->objects()) {
    const auto first = e.compose(beta(alpha.to(x)), h(alpha(x)));
    const auto second = e.compose(k(alpha(x)), beta(alpha.from(x)));
    out.result.components.push_back(first);
    if (first != second && out.formulas_agree) {
      out.formulas_agree = false;
      out.disagreement = x;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unverified: return "unverified";
  }
  return "?";
}

namespace {

void require_adjoint_pair(const Functor& f, const Functor& g) {
  if (!f.source || !f.target || !g.source || !g.target)
    throw StructuralError("adjunction between incomplete functors");
  if (!same_category(*f.target, *g.source) || !same_category(*g.target, *f.source))
    throw ContractError("adjunction needs F : D -> C and G : C -> D");
}

}  // namespace

TriangleReport check_unit_counit(const AdjunctionCandidate& c) {
  const auto& f = c.left;
  const auto& g = c.right;
  require_adjoint_pair(f, g);
  const auto d = f.source;
  const auto cc = f.target;
  if (!same_functor(c.unit.from, identity_functor(d)) ||
      !same_functor(c.unit.to, compose_functors(g, f)))
    throw ContractError("unit must be a transformation 1_D => G F");
  if (!same_functor(c.counit.from, compose_functors(f, g)) ||
      !same_functor(c.counit.to, identity_functor(cc)))
    throw ContractError("counit must be a transformation F G => 1_C");
  if (auto r = validate_nat_trans(c.unit); !r.ok())
    throw ContractError("unit is not natural: " + r.violations.front().detail);
  if (auto r = validate_nat_trans(c.counit); !r.ok())
    throw ContractError("counit is not natural: " + r.violations.front().detail);

  TriangleReport out;
  for (auto y : d->objects()) {
    const auto lhs = cc->compose(c.counit(f(y)), f(c.unit(y)));
    if (lhs != cc->identity(f(y))) {
      out.verdict = Verdict::fail;
      out.left_failure = y;
      out.detail = "eps_F(" + d->object_name(y) + ") . F(eta_" + d->object_name(y) + ") = " +
                   cc->arrow_name(lhs) + ", not the identity of " + cc->object_name(f(y));
      break;
    }
  }
  for (auto x : cc->objects()) {
    const auto lhs = d->compose(g(c.counit(x)), c.unit(g(x)));
    if (lhs != d->identity(g(x))) {
      out.verdict = Verdict::fail;
      out.right_failure = x;
      if (out.detail.empty())
        out.detail = "G(eps_" + cc->object_name(x) + ") . eta_G(" + cc->object_name(x) + ") = " +
                     d->arrow_name(lhs) + ", not the identity of " + d->object_name(g(x));
      break;
    }
  }
  if (out.verdict == Verdict::pass) out.detail = "both triangle identities hold at every object";
  return out;
}

namespace {

// One variable per arrow of each Hom_C(F A, B); each naturality square is a
// binary constraint value(y) == value(x) . alpha or Gbeta . value(x).
struct HomSetProblem {
  const Category& c;
  const Category& d;
  const Functor& f;
  const Functor& g;
  std::size_t nd, nc;
  std::vector<std::size_t> offset;  // per pair, plus sentinel
  std::vector<std::vector<ArrowId>> domains;

  struct Constraint {
    std::size_t x, y;
    bool in_a;    // naturality in A (precompose alpha) or in B (postcompose G beta)
    ArrowId by;   // alpha in D, or beta in C
    ArrowId f;    // the arrow of variable x
  };
  std::vector<Constraint> constraints;
  std::vector<std::vector<std::size_t>> touching;

  HomSetProblem(const Functor& f_, const Functor& g_)
      : c(*f_.target), d(*f_.source), f(f_), g(g_), nd(d.object_count()), nc(c.object_count()) {
    offset.push_back(0);
    for (std::size_t a = 0; a < nd; ++a) {
      for (std::size_t b = 0; b < nc; ++b) {
        const auto fa = f(ObjectId{static_cast<std::uint32_t>(a)});
        offset.push_back(offset.back() + c.hom(fa, ObjectId{static_cast<std::uint32_t>(b)}).size());
        domains.push_back(d.hom(ObjectId{static_cast<std::uint32_t>(a)},
                                g(ObjectId{static_cast<std::uint32_t>(b)})));
      }
    }
    touching.assign(offset.back(), {});
    for (auto alpha : d.arrows()) {
      const auto a2 = d.dom(alpha);
      const auto a = d.cod(alpha);
      for (auto b : c.objects()) {
        const auto& src = c.hom(f(a), b);
        for (std::size_t i = 0; i < src.size(); ++i) {
          const auto moved = c.compose(src[i], f(alpha));
          add(var(a, b, i), var(a2, b, position(c.hom(f(a2), b), moved)), true, alpha, src[i]);
        }
      }
    }
    for (auto beta : c.arrows()) {
      const auto b = c.dom(beta);
      const auto b2 = c.cod(beta);
      for (auto a : d.objects()) {
        const auto& src = c.hom(f(a), b);
        for (std::size_t i = 0; i < src.size(); ++i) {
          const auto moved = c.compose(beta, src[i]);
          add(var(a, b, i), var(a, b2, position(c.hom(f(a), b2), moved)), false, beta, src[i]);
        }
      }
    }
  }

  std::size_t pair(ObjectId a, ObjectId b) const { return a.index * nc + b.index; }
  std::size_t var(ObjectId a, ObjectId b, std::size_t i) const { return offset[pair(a, b)] + i; }

  void add(std::size_t x, std::size_t y, bool in_a, ArrowId by, ArrowId arrow) {
    touching[x].push_back(constraints.size());
    if (y != x) touching[y].push_back(constraints.size());
    constraints.push_back(Constraint{x, y, in_a, by, arrow});
  }

  ArrowId expected(const Constraint& k, ArrowId vx) const {
    return k.in_a ? d.compose(vx, k.by) : d.compose(g(k.by), vx);
  }

  std::string describe(const Constraint& k) const {
    if (k.in_a)
      return "naturality in A fails for f = " + c.arrow_name(k.f) + " and alpha = " +
             d.arrow_name(k.by);
    return "naturality in B fails for f = " + c.arrow_name(k.f) + " and beta = " +
           c.arrow_name(k.by);
  }
};

}  // namespace

HomSetReport check_homset_adjunction(const Functor& f, const Functor& g,
                                     const std::optional<HomSetFamily>& family,
                                     const Budget& budget) {
  require_adjoint_pair(f, g);
  HomSetProblem p(f, g);
  const auto& c = p.c;
  const auto& d = p.d;
  HomSetReport out;

  for (auto a : d.objects()) {
    for (auto b : c.objects()) {
      const auto k = p.pair(a, b);
      const auto n = p.offset[k + 1] - p.offset[k];
      if (n != p.domains[k].size()) {
        out.verdict = Verdict::fail;
        out.detail = "Hom(F(" + d.object_name(a) + "), " + c.object_name(b) + ") has " +
                     std::to_string(n) + " arrows but Hom(" + d.object_name(a) + ", G(" +
                     c.object_name(b) + ")) has " + std::to_string(p.domains[k].size());
        return out;
      }
    }
  }

  if (family) {
    out.family = family;
    const auto& maps = family->maps;
    if (maps.size() != p.nd * p.nc)
      throw ContractError("family must supply one map per object pair");
    std::vector<ArrowId> value(p.offset.back());
    for (auto a : d.objects()) {
      for (auto b : c.objects()) {
        const auto k = p.pair(a, b);
        const auto& m = maps[k];
        const auto& dom = p.domains[k];
        if (m.size() != dom.size()) throw ContractError("family map has the wrong length");
        std::set<ArrowId> seen;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (!std::binary_search(dom.begin(), dom.end(), m[i]))
            throw ContractError("family map leaves Hom(A, G B)");
          if (!seen.insert(m[i]).second) {
            out.verdict = Verdict::fail;
            out.detail = "map at (" + d.object_name(a) + ", " + c.object_name(b) +
                         ") is not a bijection";
            out.witness = {c.hom(f(a), b)[i]};
            return out;
          }
          value[p.offset[k] + i] = m[i];
        }
      }
    }
    for (const auto& k : p.constraints) {
      if (value[k.y] != p.expected(k, value[k.x])) {
        out.verdict = Verdict::fail;
        out.detail = p.describe(k);
        out.witness = {k.f, k.by};
        return out;
      }
    }
    out.detail = "family is a natural bijection";
    return out;
  }

  for (const auto& dom : p.domains) {
    if (dom.size() > 8) {
      out.verdict = Verdict::unverified;
      out.detail = "no family supplied and a hom-set exceeds 8 arrows; search skipped";
      return out;
    }
  }

  const std::size_t vars = p.offset.back();
  const std::size_t node_cap = budget.max_cones * 100;
  std::size_t nodes = 0;
  std::vector<std::optional<ArrowId>> value(vars);
  std::vector<std::size_t> pair_of(vars);
  for (std::size_t k = 0; k + 1 < p.offset.size(); ++k)
    for (auto v = p.offset[k]; v < p.offset[k + 1]; ++v) pair_of[v] = k;

  auto consistent = [&](std::size_t v) {
    const auto k = pair_of[v];
    for (auto w = p.offset[k]; w < v; ++w)
      if (value[w] == value[v]) return false;
    for (auto idx : p.touching[v]) {
      const auto& con = p.constraints[idx];
      if (!value[con.x] || !value[con.y]) continue;
      if (*value[con.y] != p.expected(con, *value[con.x])) return false;
    }
    return true;
  };

  bool exceeded = false;
  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == vars) return true;
    for (auto candidate : p.domains[pair_of[v]]) {
      if (++nodes > node_cap) {
        exceeded = true;
        return false;
      }
      value[v] = candidate;
      if (consistent(v) && self(self, v + 1)) return true;
      if (exceeded) return false;
    }
    value[v].reset();
    return false;
  };

  if (search(search, 0)) {
    HomSetFamily found;
    for (std::size_t k = 0; k + 1 < p.offset.size(); ++k) {
      std::vector<ArrowId> m;
      for (auto v = p.offset[k]; v < p.offset[k + 1]; ++v) m.push_back(*value[v]);
      found.maps.push_back(std::move(m));
    }
    out.family = std::move(found);
    out.detail = "natural bijection family found by search";
  } else if (exceeded) {
    out.verdict = Verdict::unverified;
    out.detail = "search node budget of " + std::to_string(node_cap) + " exceeded";
  } else {
    out.verdict = Verdict::fail;
    out.detail = "no natural bijection family exists";
  }
  return out;
}

UniversalArrowReport universal_morphism_check(const Functor& f, ObjectId x, ObjectId gx,
                                              ArrowId eps) {
  const auto& d = *f.source;
  const auto& c = *f.target;
  if (x.index >= c.object_count() || gx.index >= d.object_count() || eps.index >= c.arrow_count())
    throw StructuralError("universal arrow data refers to missing ids");
  if (c.dom(eps) != f(gx) || c.cod(eps) != x)
    throw ContractError("eps must go from F(GX) to X");
  UniversalArrowReport out;
  for (auto y : d.objects()) {
    for (auto arrow : c.hom(f(y), x)) {
      std::size_t solutions = 0;
      for (auto g : d.hom(y, gx))
        if (c.compose(eps, f(g)) == arrow) ++solutions;
      if (solutions != 1) {
        out.verdict = Verdict::fail;
        out.object = y;
        out.arrow = arrow;
        out.solutions = solutions;
        out.detail = std::string(solutions == 0 ? "no" : "several") + " g : " + d.object_name(y) +
                     " -> " + d.object_name(gx) + " with eps . F(g) = " + c.arrow_name(arrow);
        return out;
      }
    }
  }
  out.detail = "every f : F Y -> X factors uniquely through eps";
  return out;
}

bool check_preserves_limit(const Functor& f, const Diagram& d, const Cone& lim,
                           const Budget& budget) {
  if (!same_category(*d.target, *f.source))
    throw ContractError("diagram does not live in the functor's source");
  auto source_ok = is_limit_cone(d, lim, budget);
  if (!source_ok) throw CapacityError("cone budget exceeded while verifying the source limit");
  if (!*source_ok) throw ContractError("the given cone is not a limit of the diagram");
  Cone image{f(lim.apex), {}};
  for (auto leg : lim.legs) image.legs.push_back(f(leg));
  auto verdict = is_limit_cone(compose_functors(f, d), image, budget);
  if (!verdict) throw CapacityError("cone budget exceeded while verifying the image cone");
  return *verdict;
}

std::vector<HomFunctor> hom_functors(CategoryPtr cat, const std::vector<ObjectId>& bases,
                                     const Budget& budget) {
  const auto n = cat->object_count();
  std::vector<std::size_t> sizes;
  for (auto a : bases)
    for (auto b : cat->objects()) sizes.push_back(cat->hom(a, b).size());
  auto target = std::make_shared<const Category>(full_subcategory_of_finset(sizes, budget));

  std::vector<HomFunctor> out;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const auto a = bases[k];
    auto obj = [&](ObjectId b) { return ObjectId{static_cast<std::uint32_t>(k * n + b.index)}; };
    HomFunctor h{a, Functor{cat, target, {}, {}}, {}};
    for (auto b : cat->objects()) {
      h.functor.object_map.push_back(obj(b));
      std::vector<std::string> labels;
      for (auto arrow : cat->hom(a, b)) labels.push_back(cat->arrow_name(arrow));
      h.carriers.push_back(FinSetObject::labelled(std::move(labels)));
    }
    for (auto arrow : cat->arrows()) {
      const auto b = cat->dom(arrow);
      const auto c = cat->cod(arrow);
      std::vector<std::size_t> table;
      const auto& to = cat->hom(a, c);
      for (auto g : cat->hom(a, b)) table.push_back(position(to, cat->compose(arrow, g)));
      h.functor.arrow_map.push_back(fs_embed(
          *target, obj(b), obj(c),
          FinSetArrow{FinSetObject::of_size(h.carriers[b.index].size),
                      FinSetObject::of_size(h.carriers[c.index].size), std::move(table)}));
    }
    out.push_back(std::move(h));
  }
  return out;
}

HomFunctor hom_functor(CategoryPtr cat, ObjectId a, const Budget& budget) {
  return std::move(hom_functors(std::move(cat), {a}, budget).front());
}

NatTrans hom_precomposition(const HomFunctor& from, const HomFunctor& to, ArrowId h) {
  const auto& cat = *from.functor.source;
  if (from.functor.target != to.functor.target || from.functor.source != to.functor.source)
    throw ContractError("hom functors must share their source and target");
  if (cat.cod(h) != from.base || cat.dom(h) != to.base)
    throw ContractError("precomposition needs h : B -> A for Hom(A, -) => Hom(B, -)");
  const auto& target = *from.functor.target;
  NatTrans eta{from.functor, to.functor, {}};
  for (auto x : cat.objects()) {
    const auto& dst = cat.hom(to.base, x);
    std::vector<std::size_t> table;
    for (auto g : cat.hom(from.base, x)) table.push_back(position(dst, cat.compose(g, h)));
    eta.components.push_back(
        fs_embed(target, from.functor(x), to.functor(x),
                 FinSetArrow{FinSetObject::of_size(from.carriers[x.index].size),
                             FinSetObject::of_size(to.carriers[x.index].size), std::move(table)}));
  }
  return eta;
}

}  // namespace fincat
