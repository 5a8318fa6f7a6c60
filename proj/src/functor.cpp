#include "fincat/functor.hpp"

namespace fincat {

Functor make_functor(CategoryPtr source, CategoryPtr target,
                     std::vector<ObjectId> objects,
                     const std::vector<std::pair<ArrowId, ArrowId>>& arrows) {
  if (!source || !target) throw ContractError("functor needs a source and a target");
  if (objects.size() != source->object_count())
    throw ContractError("functor object map must cover every source object");
  for (auto y : objects) {
    if (y.index >= target->object_count())
      throw StructuralError("functor maps to a missing target object");
  }
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<ArrowId> arrow_map(source->arrow_count(), ArrowId{unset});
  for (const auto& [a, b] : arrows) {
    if (a.index >= source->arrow_count() || b.index >= target->arrow_count())
      throw StructuralError("functor arrow binding refers to a missing arrow");
    arrow_map[a.index] = b;
  }
  for (auto a : source->arrows()) {
    if (arrow_map[a.index].index != unset) continue;
    if (source->is_identity(a)) {
      arrow_map[a.index] = target->identity(objects[source->dom(a).index]);
    } else {
      throw ContractError("arrow " + source->arrow_name(a) + " is not mapped");
    }
  }
  return Functor{std::move(source), std::move(target), std::move(objects), std::move(arrow_map)};
}

Functor identity_functor(CategoryPtr cat) {
  Functor f{cat, cat, cat->objects(), cat->arrows()};
  return f;
}

Functor constant_functor(CategoryPtr source, CategoryPtr target, ObjectId value) {
  const auto id = target->identity(value);
  Functor f{source, target, std::vector<ObjectId>(source->object_count(), value),
            std::vector<ArrowId>(source->arrow_count(), id)};
  return f;
}

Functor compose_functors(const Functor& outer, const Functor& inner) {
  if (!same_category(*inner.target, *outer.source))
    throw ContractError("cannot compose functors: categories do not chain");
  Functor f{inner.source, outer.target, {}, {}};
  f.object_map.reserve(inner.object_map.size());
  for (auto x : inner.object_map) f.object_map.push_back(outer(x));
  f.arrow_map.reserve(inner.arrow_map.size());
  for (auto a : inner.arrow_map) f.arrow_map.push_back(outer(a));
  return f;
}

ValidationReport validate_functor(const Functor& f) {
  if (!f.source || !f.target) throw StructuralError("functor without source or target");
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (f.object_map.size() != src.object_count() || f.arrow_map.size() != src.arrow_count())
    throw StructuralError("functor maps do not cover the source category");
  for (auto y : f.object_map)
    if (y.index >= tgt.object_count()) throw StructuralError("functor maps to a missing object");
  for (auto b : f.arrow_map)
    if (b.index >= tgt.arrow_count()) throw StructuralError("functor maps to a missing arrow");

  ValidationReport report;
  for (auto x : src.objects()) {
    auto id = src.identity_of(x);
    auto tid = tgt.identity_of(f(x));
    if (id && tid && f(*id) != *tid) {
      report.violations.push_back(
          Violation{std::string(law::functor_identity), {*id}, {x},
                    "F(" + src.arrow_name(*id) + ") = " + tgt.arrow_name(f(*id)) +
                        " is not " + tgt.arrow_name(*tid)});
      break;
    }
  }
  for (auto a : src.arrows()) {
    const auto b = f(a);
    if (tgt.dom(b) != f(src.dom(a)) || tgt.cod(b) != f(src.cod(a))) {
      report.violations.push_back(
          Violation{std::string(law::functor_typing), {a}, {},
                    "F(" + src.arrow_name(a) + ") = " + tgt.arrow_name(b) + " runs " +
                        tgt.object_name(tgt.dom(b)) + " -> " + tgt.object_name(tgt.cod(b)) +
                        ", expected " + tgt.object_name(f(src.dom(a))) + " -> " +
                        tgt.object_name(f(src.cod(a)))});
      break;
    }
  }
  std::vector<std::vector<ArrowId>> out(src.object_count());
  for (auto a : src.arrows()) out[src.dom(a).index].push_back(a);
  for (auto a : src.arrows()) {
    for (auto g : out[src.cod(a).index]) {
      auto gf = src.entry(g, a);
      if (!gf) continue;
      const auto fa = f(a);
      const auto fg = f(g);
      if (tgt.cod(fa) != tgt.dom(fg)) continue;  // reported as a typing violation
      auto rhs = tgt.entry(fg, fa);
      if (!rhs || *rhs != f(*gf)) {
        report.violations.push_back(
            Violation{std::string(law::functor_composition), {a, g}, {},
                      "F(" + src.arrow_name(g) + " . " + src.arrow_name(a) + ") = " +
                          tgt.arrow_name(f(*gf)) + " but F(" + src.arrow_name(g) +
                          ") . F(" + src.arrow_name(a) + ") = " +
                          (rhs ? tgt.arrow_name(*rhs) : std::string("<undefined>"))});
        return report;
      }
    }
  }
  return report;
}

ValidationReport validate_diagram(const Diagram& d) { return validate_functor(d); }

bool same_category(const Category& a, const Category& b) {
  if (&a == &b) return true;
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count())
    return false;
  for (auto x : a.objects()) {
    if (a.object_label(x) != b.object_label(x)) return false;
    if (a.identity_of(x) != b.identity_of(x)) return false;
  }
  for (auto f : a.arrows()) {
    const auto& ia = a.info(f);
    const auto& ib = b.info(f);
    if (ia.dom != ib.dom || ia.cod != ib.cod || ia.label != ib.label) return false;
  }
  return true;
}

bool same_functor(const Functor& a, const Functor& b) {
  return same_category(*a.source, *b.source) && same_category(*a.target, *b.target) &&
         a.object_map == b.object_map && a.arrow_map == b.arrow_map;
}

}  // namespace fincat
