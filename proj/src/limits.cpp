#include "fincat/limits.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace fincat {

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::empty: return "empty";
    case Shape::discrete_pair: return "discrete-pair";
    case Shape::parallel_pair: return "parallel-pair";
    case Shape::cospan: return "cospan";
    case Shape::span: return "span";
  }
  return "?";
}

std::optional<Shape> parse_shape(std::string_view name) {
  for (auto s : {Shape::empty, Shape::discrete_pair, Shape::parallel_pair, Shape::cospan,
                 Shape::span}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(UniversalStatus s) {
  switch (s) {
    case UniversalStatus::found: return "found";
    case UniversalStatus::absent: return "absent";
    case UniversalStatus::ambiguous: return "ambiguous";
    case UniversalStatus::budget_exceeded: return "budget exceeded, universality unverified";
  }
  return "?";
}

CategoryPtr build_shape(Shape s) {
  CategoryBuilder b;
  switch (s) {
    case Shape::empty:
      break;
    case Shape::discrete_pair: {
      auto x = b.add_object("X");
      auto y = b.add_object("Y");
      b.add_identity(x);
      b.add_identity(y);
      break;
    }
    case Shape::parallel_pair: {
      auto x = b.add_object("X");
      auto y = b.add_object("Y");
      b.add_identity(x);
      b.add_identity(y);
      b.add_arrow(x, y, "f");
      b.add_arrow(x, y, "g");
      break;
    }
    case Shape::cospan: {
      auto x = b.add_object("X");
      auto y = b.add_object("Y");
      auto z = b.add_object("Z");
      b.add_identity(x);
      b.add_identity(y);
      b.add_identity(z);
      b.add_arrow(x, z, "f");
      b.add_arrow(y, z, "g");
      break;
    }
    case Shape::span: {
      auto x = b.add_object("X");
      auto y = b.add_object("Y");
      auto z = b.add_object("Z");
      b.add_identity(x);
      b.add_identity(y);
      b.add_identity(z);
      b.add_arrow(z, x, "f");
      b.add_arrow(z, y, "g");
      break;
    }
  }
  b.fill_identity_composites();
  return std::make_shared<const Category>(b.build());
}

Diagram shape_diagram(Shape s, CategoryPtr target, std::vector<ObjectId> objects,
                      std::vector<ArrowId> arrows) {
  auto shape = build_shape(s);
  std::vector<std::pair<ArrowId, ArrowId>> bindings;
  std::size_t next = 0;
  for (auto a : shape->arrows()) {
    if (shape->is_identity(a)) continue;
    if (next >= arrows.size())
      throw ContractError("shape " + std::string(to_string(s)) + " needs more arrow images");
    bindings.emplace_back(a, arrows[next++]);
  }
  if (next != arrows.size())
    throw ContractError("too many arrow images for shape " + std::string(to_string(s)));
  return make_functor(shape, std::move(target), std::move(objects), bindings);
}

Diagram dual_diagram(const Diagram& d) {
  return Diagram{std::make_shared<const Category>(d.source->dual()),
                 std::make_shared<const Category>(d.target->dual()), d.object_map,
                 d.arrow_map};
}

namespace {

struct LegsHash {
  std::size_t operator()(const std::vector<ArrowId>& legs) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto a : legs) h = (h ^ a.index) * 1099511628211ull;
    return h;
  }
};

// The category seen directly (limits) or through its opposite (colimits).
// Every formula below is the limit formula; `co` flips hom-sets and
// composition order, and index arrows are read backwards.
struct Engine {
  const Diagram& d;
  const Category& c;
  const Category& j;
  bool co;
  Budget budget;

  Engine(const Diagram& diagram, bool colimit, const Budget& b)
      : d(diagram), c(*diagram.target), j(*diagram.source), co(colimit), budget(b) {}

  const std::vector<ArrowId>& hom(ObjectId a, ObjectId b) const {
    return co ? c.hom(b, a) : c.hom(a, b);
  }
  ArrowId comp(ArrowId g, ArrowId f) const { return co ? c.compose(f, g) : c.compose(g, f); }
  ObjectId jsrc(ArrowId f) const { return co ? j.cod(f) : j.dom(f); }
  ObjectId jtgt(ArrowId f) const { return co ? j.dom(f) : j.cod(f); }

  bool commutes(const std::vector<ArrowId>& legs, ArrowId f) const {
    return comp(d(f), legs[jsrc(f).index]) == legs[jtgt(f).index];
  }

  bool is_cone(ObjectId apex, const std::vector<ArrowId>& legs) const {
    if (apex.index >= c.object_count() || legs.size() != j.object_count()) return false;
    for (auto x : j.objects()) {
      const auto leg = legs[x.index];
      if (leg.index >= c.arrow_count()) return false;
      const auto& h = hom(apex, d(x));
      if (!std::binary_search(h.begin(), h.end(), leg)) return false;
    }
    for (auto f : j.arrows())
      if (!commutes(legs, f)) return false;
    return true;
  }

  // Cones grouped by apex: cones_[begin_[n] .. begin_[n+1]).
  std::vector<ObjectId> apex_;
  std::vector<std::vector<ArrowId>> legs_;
  std::vector<std::size_t> begin_;
  bool truncated_ = false;
  std::vector<std::unordered_map<std::vector<ArrowId>, std::size_t, LegsHash>> index_;

  void enumerate() {
    const std::size_t k = j.object_count();
    // Arrows checked once both endpoints are assigned, keyed by the later one.
    std::vector<std::vector<ArrowId>> checks(k);
    for (auto f : j.arrows())
      checks[std::max(j.dom(f).index, j.cod(f).index)].push_back(f);

    begin_.assign(c.object_count() + 1, 0);
    for (auto n : c.objects()) {
      begin_[n.index] = legs_.size();
      if (truncated_) continue;
      std::vector<ArrowId> legs(k);
      std::vector<std::size_t> pos(k, 0);
      if (k == 0) {
        push(n, legs);
        continue;
      }
      std::size_t depth = 0;
      while (true) {
        const auto& h = hom(n, d(ObjectId{static_cast<std::uint32_t>(depth)}));
        if (pos[depth] >= h.size()) {
          if (depth == 0) break;
          pos[depth] = 0;
          --depth;
          ++pos[depth];
          continue;
        }
        legs[depth] = h[pos[depth]];
        bool ok = true;
        for (auto f : checks[depth]) {
          if (!commutes(legs, f)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          ++pos[depth];
          continue;
        }
        if (depth + 1 == k) {
          if (!push(n, legs)) break;
          ++pos[depth];
        } else {
          ++depth;
        }
      }
    }
    begin_[c.object_count()] = legs_.size();
    index_.assign(c.object_count(), {});
  }

  bool push(ObjectId n, const std::vector<ArrowId>& legs) {
    if (legs_.size() >= budget.max_cones) {
      truncated_ = true;
      return false;
    }
    apex_.push_back(n);
    legs_.push_back(legs);
    return true;
  }

  std::size_t count(ObjectId n) const { return begin_[n.index + 1] - begin_[n.index]; }

  const std::unordered_map<std::vector<ArrowId>, std::size_t, LegsHash>& index_for(ObjectId n) {
    auto& idx = index_[n.index];
    if (idx.empty() && count(n) > 0) {
      idx.reserve(count(n));
      for (std::size_t i = begin_[n.index]; i < begin_[n.index + 1]; ++i) idx.emplace(legs_[i], i);
    }
    return idx;
  }

  // Apexes in ascending cone count, so that failing candidates fail early.
  std::vector<ObjectId> probe_order() const {
    auto order = c.objects();
    std::stable_sort(order.begin(), order.end(),
                     [&](ObjectId a, ObjectId b) { return count(a) < count(b); });
    return order;
  }

  bool counts_match(ObjectId apex) const {
    for (auto n : c.objects())
      if (hom(n, apex).size() != count(n)) return false;
    return true;
  }

  // Tests u |-> (phi . u) : Hom(N, L) -> Cones(N) for bijectivity at every N.
  // When `mediating` is given it receives, per cone index, the unique u.
  bool universal(ObjectId apex, const std::vector<ArrowId>& phi,
                 const std::vector<ObjectId>& order, std::vector<ArrowId>* mediating) {
    if (!counts_match(apex)) return false;
    if (mediating) mediating->assign(legs_.size(), ArrowId{UINT32_MAX});
    std::vector<ArrowId> image(phi.size());
    for (auto n : order) {
      const auto& idx = index_for(n);
      std::vector<bool> hit(count(n), false);
      for (auto u : hom(n, apex)) {
        for (std::size_t x = 0; x < phi.size(); ++x) image[x] = comp(phi[x], u);
        auto it = idx.find(image);
        if (it == idx.end()) return false;
        const std::size_t local = it->second - begin_[n.index];
        if (hit[local]) return false;
        hit[local] = true;
        if (mediating) (*mediating)[it->second] = u;
      }
    }
    return true;
  }

  struct Outcome {
    UniversalStatus status = UniversalStatus::absent;
    std::optional<std::size_t> chosen;
    std::vector<ObjectId> qualifying;
    std::vector<ArrowId> mediating;
  };

  Outcome solve() {
    enumerate();
    Outcome out;
    if (truncated_) {
      out.status = UniversalStatus::budget_exceeded;
      return out;
    }
    const auto order = probe_order();
    for (auto l : c.objects()) {
      if (!counts_match(l)) continue;
      for (std::size_t i = begin_[l.index]; i < begin_[l.index + 1]; ++i) {
        if (universal(l, legs_[i], order, nullptr)) {
          out.qualifying.push_back(l);
          if (!out.chosen) out.chosen = i;
          break;
        }
      }
    }
    if (!out.chosen) return out;
    for (auto q : out.qualifying) {
      if (!isomorphic(c, out.qualifying.front(), q)) {
        out.status = UniversalStatus::ambiguous;
        out.chosen.reset();
        return out;
      }
    }
    out.status = UniversalStatus::found;
    universal(apex_[*out.chosen], legs_[*out.chosen], order, &out.mediating);
    return out;
  }

  std::optional<bool> verify(ObjectId apex, const std::vector<ArrowId>& legs) {
    if (!is_cone(apex, legs)) return false;
    enumerate();
    if (truncated_) return std::nullopt;
    return universal(apex, legs, probe_order(), nullptr);
  }

  std::optional<ArrowId> mediator(ObjectId from, const std::vector<ArrowId>& psi, ObjectId apex,
                                  const std::vector<ArrowId>& phi) const {
    std::optional<ArrowId> found;
    for (auto u : hom(from, apex)) {
      bool ok = true;
      for (std::size_t x = 0; x < phi.size() && ok; ++x) ok = comp(phi[x], u) == psi[x];
      if (!ok) continue;
      if (found) throw ContractError("mediating arrow is not unique: the cone is not a limit");
      found = u;
    }
    return found;
  }
};

template <typename C>
C make(ObjectId apex, std::vector<ArrowId> legs) {
  if constexpr (std::is_same_v<C, Cone>)
    return Cone{apex, std::move(legs)};
  else
    return Cocone{apex, std::move(legs)};
}

template <typename C>
ObjectId apex_of(const C& c) {
  if constexpr (std::is_same_v<C, Cone>)
    return c.apex;
  else
    return c.nadir;
}

template <typename C>
UniversalResult<C> solve(const Diagram& d, bool co, const Budget& budget) {
  Engine e(d, co, budget);
  auto out = e.solve();
  UniversalResult<C> r;
  r.status = out.status;
  r.qualifying = std::move(out.qualifying);
  if (out.status == UniversalStatus::found) {
    r.universal = make<C>(e.apex_[*out.chosen], e.legs_[*out.chosen]);
    r.cones.reserve(e.legs_.size());
    for (std::size_t i = 0; i < e.legs_.size(); ++i) r.cones.push_back(make<C>(e.apex_[i], e.legs_[i]));
    r.mediating = std::move(out.mediating);
  }
  return r;
}

template <typename C>
ConeEnumeration<C> enumerate(const Diagram& d, bool co, const Budget& budget) {
  Engine e(d, co, budget);
  e.enumerate();
  ConeEnumeration<C> out;
  out.truncated = e.truncated_;
  out.cones.reserve(e.legs_.size());
  for (std::size_t i = 0; i < e.legs_.size(); ++i) out.cones.push_back(make<C>(e.apex_[i], e.legs_[i]));
  return out;
}

template <typename C>
ArrowId mediate(const Diagram& d, bool co, const UniversalResult<C>& u, const C& other) {
  if (!u.found() || !u.universal)
    throw ContractError("mediating morphism requested from an unverified universal cone");
  Engine e(d, co, Budget{});
  if (!e.is_cone(apex_of(other), other.legs))
    throw ContractError(co ? "argument is not a cocone over the diagram"
                           : "argument is not a cone over the diagram");
  auto m = e.mediator(apex_of(other), other.legs, apex_of(*u.universal), u.universal->legs);
  if (!m) throw ContractError("no mediating arrow exists: the cone is not a limit");
  return *m;
}

}  // namespace

bool is_cone(const Diagram& d, const Cone& c) {
  return Engine(d, false, Budget{}).is_cone(c.apex, c.legs);
}

bool is_cocone(const Diagram& d, const Cocone& c) {
  return Engine(d, true, Budget{}).is_cone(c.nadir, c.legs);
}

ConeEnumeration<Cone> enumerate_cones(const Diagram& d, const Budget& budget) {
  return enumerate<Cone>(d, false, budget);
}

ConeEnumeration<Cocone> enumerate_cocones(const Diagram& d, const Budget& budget) {
  return enumerate<Cocone>(d, true, budget);
}

LimitResult find_limit(const Diagram& d, const Budget& budget) {
  return solve<Cone>(d, false, budget);
}

ColimitResult find_colimit(const Diagram& d, const Budget& budget) {
  return solve<Cocone>(d, true, budget);
}

std::optional<bool> is_limit_cone(const Diagram& d, const Cone& c, const Budget& budget) {
  return Engine(d, false, budget).verify(c.apex, c.legs);
}

std::optional<bool> is_colimit_cocone(const Diagram& d, const Cocone& c, const Budget& budget) {
  return Engine(d, true, budget).verify(c.nadir, c.legs);
}

ArrowId mediating_morphism(const Diagram& d, const LimitResult& limit, const Cone& other) {
  return mediate(d, false, limit, other);
}

ArrowId mediating_morphism(const Diagram& d, const ColimitResult& colimit, const Cocone& other) {
  return mediate(d, true, colimit, other);
}

std::optional<bool> is_pullback_square(CategoryPtr cat, ArrowId f, ArrowId g, ArrowId p1,
                                       ArrowId p2, const Budget& budget) {
  if (cat->cod(f) != cat->cod(g))
    throw ContractError("pullback square needs a cospan with a common codomain");
  if (cat->dom(p1) != cat->dom(p2) || cat->cod(p1) != cat->dom(f) || cat->cod(p2) != cat->dom(g))
    return false;
  const auto corner = cat->compose(f, p1);
  if (corner != cat->compose(g, p2)) return false;
  auto d = shape_diagram(Shape::cospan, cat, {cat->dom(f), cat->dom(g), cat->cod(f)}, {f, g});
  return is_limit_cone(d, Cone{cat->dom(p1), {p1, p2, corner}}, budget);
}

}  // namespace fincat
