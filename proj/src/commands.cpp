#include "commands.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/functor.hpp"
#include "fincat/limits.hpp"
#include "fincat/natural.hpp"
#include "fincat/slice.hpp"
#include "fincat/subobject.hpp"
#include "fincat/topos.hpp"

namespace fincat::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxListed = 50;
constexpr std::size_t kMaxExportedArrows = 64;

struct Outcome {
  json result;
  int exit_code = 0;
  std::optional<std::string> capacity;  // unverified verdicts
};

struct Context {
  const dsl::SpecDocument& doc;
  dsl::Workspace ws;
  Options options;
  std::vector<std::string> args;  // after the verb

  const Budget& budget() const { return options.budget; }
};

[[noreturn]] void usage(const std::string& message) { throw UsageError(message); }

void need(const Context& c, std::size_t n, const char* synopsis) {
  if (c.args.size() != n) usage(std::string("usage: ") + synopsis);
}

void need_at_least(const Context& c, std::size_t n, const char* synopsis) {
  if (c.args.size() < n) usage(std::string("usage: ") + synopsis);
}

std::optional<std::size_t> parse_size(const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// --- argument lookups --------------------------------------------------------

CategoryPtr category_arg(const Context& c, const std::string& name) {
  constexpr std::string_view prefix = "fullsubcat:";
  if (name.rfind(prefix, 0) == 0) {
    std::vector<std::size_t> sizes;
    std::stringstream in(name.substr(prefix.size()));
    std::string item;
    while (std::getline(in, item, ',')) {
      auto n = parse_size(item);
      if (!n) usage("bad size '" + item + "' in " + name);
      sizes.push_back(*n);
    }
    return std::make_shared<const Category>(full_subcategory_of_finset(sizes, c.budget()));
  }
  auto it = c.ws.categories.find(name);
  if (it == c.ws.categories.end()) usage("unknown category '" + name + "'");
  return it->second;
}

ObjectId object_arg(const Category& cat, const std::string& name) {
  auto x = cat.find_object(name);
  if (!x) usage("unknown object '" + name + "'");
  return *x;
}

ArrowId arrow_arg(const Category& cat, const std::string& name) {
  auto a = cat.find_arrow(name);
  if (!a) usage("unknown arrow '" + name + "'");
  return *a;
}

template <typename M>
const auto& named(const M& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) usage(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

FinSetObject finset_arg(const Context& c, const std::string& name) {
  if (auto it = c.ws.finsets.find(name); it != c.ws.finsets.end()) return it->second;
  if (auto n = parse_size(name)) {
    if (*n > c.budget().max_carrier) throw CapacityError("finite set size exceeds the carrier budget");
    return FinSetObject::of_size(*n);
  }
  usage("unknown finset '" + name + "' (give a declared finset or a size)");
}

const FinSetArrow& map_arg(const Context& c, const std::string& name) {
  return named(c.ws.maps, name, "map");
}

std::size_t element_arg(const FinSetObject& x, const std::string& name) {
  for (std::size_t i = 0; i < x.labels.size(); ++i)
    if (x.labels[i] == name) return i;
  if (auto n = parse_size(name); n && *n < x.size) return *n;
  usage("'" + name + "' is not an element");
}

// --- JSON helpers ----------------------------------------------------------

json arrow_names(const Category& cat, const std::vector<ArrowId>& arrows) {
  json out = json::array();
  for (auto a : arrows) out.push_back(cat.arrow_name(a));
  return out;
}

json object_names(const Category& cat, const std::vector<ObjectId>& objects) {
  json out = json::array();
  for (auto x : objects) out.push_back(cat.object_name(x));
  return out;
}

json violations_json(const ValidationReport& r,
                     const std::function<json(const Violation&)>& arrows) {
  json out = json::array();
  for (const auto& v : r.violations)
    out.push_back({{"law", v.law}, {"detail", v.detail}, {"arrows", arrows(v)}});
  return out;
}

json finset_json(const FinSetObject& x) {
  json elems = json::array();
  for (std::size_t i = 0; i < x.size; ++i) elems.push_back(x.element_name(i));
  return {{"size", x.size}, {"elements", elems}};
}

json arrow_json(const FinSetArrow& f) {
  json mapping = json::array();
  for (std::size_t i = 0; i < f.table.size(); ++i)
    mapping.push_back(f.dom.element_name(i) + " -> " + f.cod.element_name(f.table[i]));
  return {{"table", f.table}, {"mapping", mapping}};
}

FinSetObject relabel(FinSetObject x, const std::function<std::string(std::size_t)>& name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.size; ++i) labels.push_back(name(i));
  return FinSetObject::labelled(std::move(labels));
}

std::optional<std::string> export_or_skip(const std::string& name, const Category& cat,
                                          const std::vector<std::string>& comments) {
  if (cat.arrow_count() > kMaxExportedArrows) return std::nullopt;
  try {
    return dsl::export_category(name, cat, comments);
  } catch (const ContractError&) {
    return std::nullopt;
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::unverified: return 2;
  }
  return 2;
}

// --- validate ----------------------------------------------------------------

Outcome cmd_validate(Context& c) {
  need(c, 1, "validate NAME");
  const auto& name = c.args[0];
  Outcome o;
  ValidationReport r;
  std::function<json(const Violation&)> arrows;
  if (auto it = c.ws.categories.find(name); it != c.ws.categories.end()) {
    const auto& cat = *it->second;
    r = validate_category(cat);
    arrows = [&](const Violation& v) { return arrow_names(cat, v.arrows); };
    o.result = {{"kind", "category"}, {"name", name}, {"objects", cat.object_count()},
                {"arrows", cat.arrow_count()}};
  } else if (auto d = c.ws.diagrams.find(name); d != c.ws.diagrams.end()) {
    const auto& src = *d->second.source;
    r = validate_diagram(d->second);
    arrows = [&](const Violation& v) { return arrow_names(src, v.arrows); };
    o.result = {{"kind", "diagram"}, {"name", name}};
  } else if (auto f = c.ws.functors.find(name); f != c.ws.functors.end()) {
    const auto& src = *f->second.source;
    r = validate_functor(f->second);
    arrows = [&](const Violation& v) { return arrow_names(src, v.arrows); };
    o.result = {{"kind", "functor"}, {"name", name}};
  } else if (auto n = c.ws.nattrans.find(name); n != c.ws.nattrans.end()) {
    const auto& eta = n->second;
    r = validate_nat_trans(eta);
    arrows = [&](const Violation& v) {
      return v.law == law::component_typing ? arrow_names(*eta.from.target, v.arrows)
                                            : arrow_names(*eta.from.source, v.arrows);
    };
    o.result = {{"kind", "nattrans"}, {"name", name}};
  } else if (c.ws.finsets.contains(name) || c.ws.maps.contains(name)) {
    o.result = {{"kind", c.ws.finsets.contains(name) ? "finset" : "map"}, {"name", name}};
    arrows = [](const Violation&) { return json::array(); };
  } else {
    usage("unknown name '" + name + "'");
  }
  o.result["ok"] = r.ok();
  o.result["violations"] = violations_json(r, arrows);
  o.exit_code = r.ok() ? 0 : 1;
  return o;
}

// --- check -------------------------------------------------------------------

Outcome cmd_check(Context& c) {
  need_at_least(c, 1, "check (monic|epic|iso|functor|nattrans|adjunction|preserves-limit) ...");
  const std::string sub = c.args[0];
  Outcome o;
  if (sub == "monic" || sub == "epic") {
    need(c, 3, "check monic|epic CATEGORY ARROW");
    auto cat = category_arg(c, c.args[1]);
    auto f = arrow_arg(*cat, c.args[2]);
    auto r = sub == "monic" ? is_monic(*cat, f) : is_epic(*cat, f);
    o.result = {{"property", sub}, {"category", c.args[1]}, {"arrow", c.args[2]},
                {"holds", r.holds}, {"witness", nullptr}};
    if (r.witness)
      o.result["witness"] = arrow_names(*cat, {r.witness->first, r.witness->second});
    o.exit_code = r.holds ? 0 : 1;
  } else if (sub == "iso") {
    need(c, 3, "check iso CATEGORY ARROW");
    auto cat = category_arg(c, c.args[1]);
    auto f = arrow_arg(*cat, c.args[2]);
    auto inv = is_iso(*cat, f);
    o.result = {{"property", "iso"}, {"category", c.args[1]}, {"arrow", c.args[2]},
                {"holds", inv.has_value()},
                {"inverse", inv ? json(cat->arrow_name(*inv)) : json(nullptr)}};
    o.exit_code = inv ? 0 : 1;
  } else if (sub == "functor" || sub == "nattrans") {
    need(c, 2, "check functor|nattrans NAME");
    if (sub == "functor") named(c.ws.functors, c.args[1], "functor");
    else named(c.ws.nattrans, c.args[1], "nattrans");
    Context inner{c.doc, c.ws, c.options, {c.args[1]}};
    return cmd_validate(inner);
  } else if (sub == "adjunction") {
    if (c.args.size() != 3 && c.args.size() != 5) usage("usage: check adjunction F G [UNIT COUNIT]");
    const auto& f = named(c.ws.functors, c.args[1], "functor");
    const auto& g = named(c.ws.functors, c.args[2], "functor");
    auto hs = check_homset_adjunction(f, g, std::nullopt, c.budget());
    o.result = {{"left", c.args[1]},
                {"right", c.args[2]},
                {"homset", {{"verdict", to_string(hs.verdict)}, {"detail", hs.detail}}}};
    Verdict primary = hs.verdict;
    if (c.args.size() == 5) {
      AdjunctionCandidate cand{f, g, named(c.ws.nattrans, c.args[3], "nattrans"),
                               named(c.ws.nattrans, c.args[4], "nattrans")};
      auto tr = check_unit_counit(cand);
      json uc = {{"verdict", to_string(tr.verdict)}, {"detail", tr.detail}};
      if (tr.left_failure) uc["left_failure"] = f.source->object_name(*tr.left_failure);
      if (tr.right_failure) uc["right_failure"] = f.target->object_name(*tr.right_failure);
      o.result["unit_counit"] = uc;
      primary = tr.verdict;
    }
    o.result["holds"] = primary == Verdict::pass;
    o.exit_code = verdict_exit(primary);
    if (primary == Verdict::unverified) o.capacity = hs.detail;
  } else if (sub == "preserves-limit") {
    need(c, 3, "check preserves-limit FUNCTOR DIAGRAM");
    const auto& f = named(c.ws.functors, c.args[1], "functor");
    const auto& d = named(c.ws.diagrams, c.args[2], "diagram");
    auto lim = find_limit(d, c.budget());
    if (lim.status == UniversalStatus::budget_exceeded)
      throw CapacityError("cone budget exceeded while computing the limit of " + c.args[2]);
    if (!lim.found()) throw ContractError("diagram " + c.args[2] + " has no limit");
    bool holds = check_preserves_limit(f, d, *lim.universal, c.budget());
    o.result = {{"functor", c.args[1]}, {"diagram", c.args[2]},
                {"limit_apex", d.target->object_name(lim.universal->apex)}, {"holds", holds}};
    o.exit_code = holds ? 0 : 1;
  } else {
    usage("unknown check '" + sub + "'");
  }
  return o;
}

// --- limits ------------------------------------------------------------------

template <typename R>
Outcome universal_outcome(const Context& c, const Diagram& d, const R& r, bool co) {
  const auto& cat = *d.target;
  Outcome o;
  o.result = {{"diagram", c.args[0]}, {"kind", co ? "colimit" : "limit"},
              {"status", to_string(r.status)}};
  o.result["qualifying"] = object_names(cat, r.qualifying);
  if (r.universal) {
    ObjectId apex;
    if constexpr (std::is_same_v<R, LimitResult>) apex = r.universal->apex;
    else apex = r.universal->nadir;
    o.result[co ? "nadir" : "apex"] = cat.object_name(apex);
    o.result["legs"] = arrow_names(cat, r.universal->legs);
  }
  if (r.found()) {
    json cert = json::array();
    for (std::size_t i = 0; i < r.cones.size() && i < kMaxListed; ++i) {
      ObjectId at;
      if constexpr (std::is_same_v<R, LimitResult>) at = r.cones[i].apex;
      else at = r.cones[i].nadir;
      cert.push_back({{co ? "nadir" : "apex", cat.object_name(at)},
                      {"legs", arrow_names(cat, r.cones[i].legs)},
                      {"mediating", cat.arrow_name(r.mediating[i])}});
    }
    o.result["certificate"] = {{"cones", r.cones.size()}, {"listed", cert}};
  }
  switch (r.status) {
    case UniversalStatus::found: o.exit_code = 0; break;
    case UniversalStatus::absent:
    case UniversalStatus::ambiguous: o.exit_code = 1; break;
    case UniversalStatus::budget_exceeded:
      o.exit_code = 2;
      o.capacity = std::string(to_string(r.status));
      break;
  }
  return o;
}

Outcome cmd_limit(Context& c, bool co) {
  need(c, 1, co ? "colimit DIAGRAM" : "limit DIAGRAM");
  const auto& d = named(c.ws.diagrams, c.args[0], "diagram");
  if (co) return universal_outcome(c, d, find_colimit(d, c.budget()), true);
  return universal_outcome(c, d, find_limit(d, c.budget()), false);
}

// --- finset ------------------------------------------------------------------

std::string pair_name(const FinSetObject& a, std::size_t i, const FinSetObject& b, std::size_t j) {
  return "(" + a.element_name(i) + "," + b.element_name(j) + ")";
}

Outcome cmd_finset(Context& c) {
  need_at_least(c, 1, "finset SUBCOMMAND ...");
  const std::string sub = c.args[0];
  const auto& b = c.budget();
  Outcome o;
  json& r = o.result;
  r["construction"] = sub;
  if (sub == "product") {
    need(c, 3, "finset product A B");
    auto x = finset_arg(c, c.args[1]);
    auto y = finset_arg(c, c.args[2]);
    auto p = fs_product(x, y, b);
    auto obj = relabel(p.object, [&](std::size_t k) {
      return pair_name(x, k / std::max<std::size_t>(y.size, 1), y, k % std::max<std::size_t>(y.size, 1));
    });
    p.first.dom = p.second.dom = obj;
    p.first.cod = x;
    p.second.cod = y;
    r["object"] = finset_json(obj);
    r["first"] = arrow_json(p.first);
    r["second"] = arrow_json(p.second);
  } else if (sub == "coproduct") {
    need(c, 3, "finset coproduct A B");
    auto x = finset_arg(c, c.args[1]);
    auto y = finset_arg(c, c.args[2]);
    auto p = fs_coproduct(x, y, b);
    auto obj = relabel(p.object, [&](std::size_t k) {
      return k < x.size ? "1:" + x.element_name(k) : "2:" + y.element_name(k - x.size);
    });
    p.first.cod = p.second.cod = obj;
    p.first.dom = x;
    p.second.dom = y;
    r["object"] = finset_json(obj);
    r["first"] = arrow_json(p.first);
    r["second"] = arrow_json(p.second);
  } else if (sub == "equalizer" || sub == "coequalizer") {
    need(c, 3, "finset equalizer|coequalizer F G");
    const auto& f = map_arg(c, c.args[1]);
    const auto& g = map_arg(c, c.args[2]);
    if (sub == "equalizer") {
      auto e = fs_equalizer(f, g);
      auto obj = relabel(e.object, [&](std::size_t k) { return f.dom.element_name(e.inclusion(k)); });
      e.inclusion.dom = obj;
      r["object"] = finset_json(obj);
      r["inclusion"] = arrow_json(e.inclusion);
    } else {
      auto q = fs_coequalizer(f, g);
      std::vector<std::vector<std::string>> classes(q.object.size);
      for (std::size_t y = 0; y < f.cod.size; ++y) classes[q.quotient(y)].push_back(f.cod.element_name(y));
      auto obj = relabel(q.object, [&](std::size_t k) {
        std::string s = "{";
        for (std::size_t i = 0; i < classes[k].size(); ++i) s += (i ? "," : "") + classes[k][i];
        return s + "}";
      });
      q.quotient.cod = obj;
      r["object"] = finset_json(obj);
      r["quotient"] = arrow_json(q.quotient);
    }
  } else if (sub == "pullback" || sub == "pushout") {
    need(c, 3, "finset pullback|pushout F G");
    const auto& f = map_arg(c, c.args[1]);
    const auto& g = map_arg(c, c.args[2]);
    if (sub == "pullback") {
      auto p = fs_pullback(f, g, b);
      auto obj = relabel(p.object, [&](std::size_t k) {
        return pair_name(f.dom, p.first(k), g.dom, p.second(k));
      });
      p.first.dom = p.second.dom = obj;
      p.first.cod = f.dom;
      p.second.cod = g.dom;
      r["object"] = finset_json(obj);
      r["first"] = arrow_json(p.first);
      r["second"] = arrow_json(p.second);
    } else {
      auto p = fs_pushout(f, g, b);
      r["object"] = finset_json(p.object);
      p.first.dom = f.cod;
      p.second.dom = g.cod;
      r["first"] = arrow_json(p.first);
      r["second"] = arrow_json(p.second);
    }
  } else if (sub == "exp") {
    need(c, 3, "finset exp A B");
    auto x = finset_arg(c, c.args[1]);
    auto y = finset_arg(c, c.args[2]);
    auto e = fs_exponential(x, y, b);
    auto obj = relabel(e.exp_object, [&](std::size_t k) {
      auto t = e.decode(k);
      std::string s = "[";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + y.element_name(t[i]);
      return s + "]";
    });
    r["base"] = finset_json(x);
    r["target"] = finset_json(y);
    r["object"] = finset_json(obj);
    e.ev.cod = y;
    e.ev.dom = relabel(e.domain.object, [&](std::size_t k) {
      const auto n = std::max<std::size_t>(obj.size, 1);
      return pair_name(x, k / n, obj, k % n);
    });
    r["ev"] = arrow_json(e.ev);
  } else if (sub == "curry") {
    need(c, 4, "finset curry A C MAP");
    auto a = finset_arg(c, c.args[1]);
    auto x = finset_arg(c, c.args[2]);
    const auto& f = map_arg(c, c.args[3]);
    auto g = fs_curry(a, x, f, b);
    g.dom = x;
    r["curried"] = arrow_json(g);
    r["exp_size"] = g.cod.size;
  } else if (sub == "name") {
    need(c, 2, "finset name MAP");
    const auto& f = map_arg(c, c.args[1]);
    auto n = fs_name(f, b);
    r["point"] = n.table.at(0);
    r["exp_size"] = n.cod.size;
  } else if (sub == "members") {
    need(c, 2, "finset members A");
    auto x = finset_arg(c, c.args[1]);
    json members = json::array();
    for (const auto& m : fs_members(x)) members.push_back(x.element_name(m(0)));
    r["object"] = finset_json(x);
    r["members"] = members;
    r["count"] = x.size;
  } else if (sub == "classifier") {
    need(c, 1, "finset classifier");
    auto omega = fs_subobject_classifier();
    r["object"] = finset_json(omega.object);
    r["true"] = arrow_json(omega.true_arrow);
  } else if (sub == "char" || sub == "invimage") {
    need_at_least(c, 2, sub == "char" ? "finset char A ELEMENT..." : "finset invimage MAP ELEMENT...");
    std::vector<std::size_t> members;
    if (sub == "char") {
      auto x = finset_arg(c, c.args[1]);
      for (std::size_t i = 2; i < c.args.size(); ++i) members.push_back(element_arg(x, c.args[i]));
      auto s = Subobject::of(x, members);
      auto chi = fs_characteristic(s);
      r["subobject"] = s.members;
      r["characteristic"] = arrow_json(chi);
      r["classifies"] = fs_classifies(s, chi);
    } else {
      const auto& f = map_arg(c, c.args[1]);
      for (std::size_t i = 2; i < c.args.size(); ++i) members.push_back(element_arg(f.cod, c.args[i]));
      auto s = fs_inverse_image(f, Subobject::of(f.cod, members));
      json names = json::array();
      for (auto m : s.members) names.push_back(f.dom.element_name(m));
      r["members"] = s.members;
      r["elements"] = names;
    }
  } else if (sub == "subalg") {
    need(c, 2, "finset subalg A");
    auto x = finset_arg(c, c.args[1]);
    SubobjectAlgebra alg(x, b);
    json subs = json::array();
    json complements = json::array();
    bool boolean = true;
    for (const auto& s : alg.all()) {
      subs.push_back(s.members);
      auto neg = alg.complement(s);
      complements.push_back(neg.members);
      boolean = boolean && alg.join(s, neg) == alg.top();
    }
    r["object"] = finset_json(x);
    r["subobjects"] = subs;
    r["complements"] = complements;
    r["excluded_middle"] = boolean;
  } else if (sub == "power") {
    need(c, 2, "finset power A");
    auto x = finset_arg(c, c.args[1]);
    auto p = fs_power_object(x, b);
    r["size"] = p.object.size;
    r["membership"] = arrow_json(p.membership);
  } else {
    usage("unknown finset construction '" + sub + "'");
  }
  return o;
}

// --- categories --------------------------------------------------------------

Outcome cmd_slice(Context& c) {
  need(c, 2, "slice CATEGORY OBJECT");
  auto cat = category_arg(c, c.args[0]);
  auto x = object_arg(*cat, c.args[1]);
  auto s = slice_category(cat, x, c.budget());
  const auto& sc = *s.category;
  Outcome o;
  auto v = validate_category(sc);
  json objects = json::array();
  for (auto y : sc.objects()) {
    const auto phi = s.object_arrow[y.index];
    objects.push_back({{"object", sc.object_name(y)},
                       {"arrow", cat->arrow_name(phi)},
                       {"domain", cat->object_name(cat->dom(phi))}});
  }
  auto terminal = find_limit(shape_diagram(Shape::empty, s.category, {}), c.budget());
  o.result = {{"base", c.args[0]}, {"over", c.args[1]}, {"objects", objects},
              {"arrow_count", sc.arrow_count()}, {"valid", v.ok()},
              {"terminal", terminal.universal ? json(sc.object_name(terminal.universal->apex))
                                              : json(nullptr)}};
  std::vector<std::string> comments{"slice of " + c.args[0] + " over " + c.args[1]};
  for (auto a : sc.arrows())
    if (!sc.is_identity(a))
      comments.push_back(sc.arrow_name(a) + " has underlying arrow " +
                         cat->arrow_name(s.arrow_underlying[a.index]));
  if (auto text = export_or_skip("Slice", sc, comments)) o.result["dsl"] = *text;
  o.exit_code = v.ok() ? 0 : 1;
  return o;
}

Outcome cmd_arrowcat(Context& c) {
  need(c, 1, "arrowcat CATEGORY");
  auto cat = category_arg(c, c.args[0]);
  auto ac = arrow_category(cat, c.budget());
  const auto& a = *ac.category;
  auto v = validate_category(a);
  auto cod = codomain_functor(ac);
  auto cv = validate_functor(cod);
  Outcome o;
  json squares = json::array();
  for (auto q : a.arrows()) {
    if (squares.size() >= kMaxListed) break;
    const auto [u, f] = ac.arrow_square[q.index];
    squares.push_back({{"arrow", a.arrow_name(q)},
                       {"from", a.object_name(a.dom(q))},
                       {"to", a.object_name(a.cod(q))},
                       {"u", cat->arrow_name(u)},
                       {"f", cat->arrow_name(f)}});
  }
  o.result = {{"base", c.args[0]}, {"objects", object_names(a, a.objects())},
              {"arrow_count", a.arrow_count()}, {"squares", squares}, {"valid", v.ok()},
              {"codomain_functor_valid", cv.ok()}};
  std::vector<std::string> comments{"arrow category of " + c.args[0]};
  for (auto q : a.arrows())
    if (!a.is_identity(q))
      comments.push_back(a.arrow_name(q) + " is the square (" +
                         cat->arrow_name(ac.arrow_square[q.index].first) + ", " +
                         cat->arrow_name(ac.arrow_square[q.index].second) + ")");
  if (auto text = export_or_skip("Arrows", a, comments)) o.result["dsl"] = *text;
  o.exit_code = v.ok() && cv.ok() ? 0 : 1;
  return o;
}

json clause_json(const ToposClause& cl) {
  return {{"name", cl.name}, {"status", to_string(cl.status)}, {"detail", cl.detail}};
}

Outcome cmd_topos(Context& c) {
  need(c, 2, "topos check|kinds CATEGORY");
  auto cat = category_arg(c, c.args[1]);
  Outcome o;
  auto report = topos_check(cat, c.budget());
  if (c.args[0] == "check") {
    json parts = json::array();
    for (const auto& p : report.parts) parts.push_back(clause_json(p));
    o.result = {{"category", c.args[1]},
                {"is_topos", report.is_topos()},
                {"finite_limits", clause_json(report.finite_limits)},
                {"finite_colimits", clause_json(report.finite_colimits)},
                {"exponentials", clause_json(report.exponentials)},
                {"classifier", clause_json(report.classifier)},
                {"parts", parts},
                {"reduction", report.reduction}};
    if (auto f = report.first_failure()) o.result["first_failure"] = *f;
    bool unverified = false;
    bool failed = false;
    for (const auto* cl : {&report.finite_limits, &report.finite_colimits, &report.exponentials,
                           &report.classifier}) {
      failed = failed || cl->status == ClauseStatus::fail;
      unverified = unverified || cl->status == ClauseStatus::unverified;
    }
    if (failed) {
      o.exit_code = 1;
    } else if (unverified || !report.is_topos()) {
      o.exit_code = 2;
      o.capacity = "topos check unverified within budget";
    }
  } else if (c.args[0] == "kinds") {
    auto k = topos_kinds(cat, report, c.budget());
    auto opt_bool = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    o.result = {{"category", c.args[1]},
                {"is_topos", report.is_topos()},
                {"nondegenerate_paper", k.nondegenerate_paper},
                {"well_pointed_paper", opt_bool(k.well_pointed_paper)},
                {"bivalent_paper", k.bivalent_paper},
                {"boolean", opt_bool(k.boolean)},
                {"truth_value_count",
                 k.truth_value_count ? json(*k.truth_value_count) : json(nullptr)},
                {"notes", k.notes}};
    if (k.nno_witness) {
      o.result["nno_witness"] = {{"object", cat->object_name(k.nno_witness->object)},
                                 {"zero", cat->arrow_name(k.nno_witness->zero)},
                                 {"successor", cat->arrow_name(k.nno_witness->successor)}};
    } else {
      o.result["nno_witness"] = nullptr;
    }
  } else {
    usage("usage: topos check|kinds CATEGORY");
  }
  return o;
}

Outcome cmd_fullsubcat(Context& c) {
  need_at_least(c, 1, "fullsubcat SIZE...");
  std::vector<std::size_t> sizes;
  for (const auto& s : c.args) {
    auto n = parse_size(s);
    if (!n) usage("'" + s + "' is not a size");
    sizes.push_back(*n);
  }
  auto cat = full_subcategory_of_finset(sizes, c.budget());
  Outcome o;
  json homs = json::array();
  for (auto x : cat.objects())
    for (auto y : cat.objects())
      homs.push_back({{"from", cat.object_name(x)}, {"to", cat.object_name(y)},
                      {"count", cat.hom(x, y).size()}});
  o.result = {{"sizes", sizes}, {"objects", object_names(cat, cat.objects())},
              {"arrow_count", cat.arrow_count()}, {"hom_sizes", homs}};
  if (auto text = export_or_skip("FinSub", cat, {"full subcategory of finite sets"}))
    o.result["dsl"] = *text;
  return o;
}

// ---------------------------------------------------------------------------

json error_json(std::string_view kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += " ";
    s += a;
  }
  return s;
}

json base_body(const std::vector<std::string>& args, const Options& options) {
  return {{"schema_version", kSchemaVersion},
          {"command", join_args(args)},
          {"options",
           {{"budget", {{"max_arrows", options.budget.max_arrows},
                        {"max_cones", options.budget.max_cones},
                        {"max_carrier", options.budget.max_carrier}}},
            {"seed", options.seed}}}};
}

Report error_report(json body, std::string_view kind, const std::string& message) {
  body["status"] = "error";
  body["exit_code"] = 2;
  body["error"] = error_json(kind, message);
  return Report{std::move(body), 2};
}

}  // namespace

Report run_command(const dsl::SpecDocument& doc, const std::vector<std::string>& args,
                   const Options& options) {
  json body = base_body(args, options);
  try {
    if (args.empty()) usage("no command given");
    Context c{doc, dsl::build_workspace(doc), options, {args.begin() + 1, args.end()}};
    const auto& verb = args[0];
    Outcome o;
    if (verb == "validate") o = cmd_validate(c);
    else if (verb == "check") o = cmd_check(c);
    else if (verb == "limit") o = cmd_limit(c, false);
    else if (verb == "colimit") o = cmd_limit(c, true);
    else if (verb == "finset") o = cmd_finset(c);
    else if (verb == "slice") o = cmd_slice(c);
    else if (verb == "arrowcat") o = cmd_arrowcat(c);
    else if (verb == "topos") o = cmd_topos(c);
    else if (verb == "fullsubcat") o = cmd_fullsubcat(c);
    else usage("unknown command '" + verb + "'");

    body["status"] = o.capacity ? "error" : o.exit_code == 0 ? "ok" : "failed";
    body["exit_code"] = o.exit_code;
    if (o.capacity) body["error"] = error_json("capacity", *o.capacity);
    body["result"] = std::move(o.result);
    return Report{std::move(body), o.exit_code};
  } catch (const Error& e) {
    return error_report(std::move(body), to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_report(std::move(body), "internal", e.what());
  }
}

Report run_text(std::string_view text, const std::vector<std::string>& args,
                const Options& options) {
  dsl::SpecDocument doc;
  try {
    doc = dsl::parse_spec(text);
  } catch (const dsl::ParseFailure& e) {
    const auto& pe = e.error();
    auto r = error_report(base_body(args, options), "parse", pe.to_string());
    r.body["error"]["parse"] = {{"code", pe.code},
                                {"category", dsl::to_string(pe.kind)},
                                {"line", pe.line},
                                {"column", pe.column},
                                {"message", pe.message},
                                {"expected", pe.expected}};
    return r;
  }
  return run_command(doc, args, options);
}

// ---------------------------------------------------------------------------
// Human rendering

namespace {

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!scalar(e) && !(e.is_array() && std::all_of(e.begin(), e.end(), scalar))) return false;
  return true;
}

std::string inline_text(const json& j) {
  if (scalar(j)) return scalar_text(j);
  std::string s = "[";
  bool first = true;
  for (const auto& e : j) {
    if (!first) s += ", ";
    first = false;
    s += inline_text(e);
  }
  return s + "]";
}

void render_value(std::ostringstream& out, const json& j, int indent);

void render_object(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
      out << pad << key << ":\n";
      std::istringstream lines(value.get<std::string>());
      std::string line;
      while (std::getline(lines, line)) out << pad << "  | " << line << "\n";
    } else if (scalar(value) || flat_array(value)) {
      out << pad << key << ": " << inline_text(value) << "\n";
    } else {
      out << pad << key << ":\n";
      render_value(out, value, indent + 2);
    }
  }
}

void render_value(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    render_object(out, j, indent);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        std::ostringstream item;
        render_object(item, e, indent + 2);
        auto text = item.str();
        if (text.size() >= static_cast<std::size_t>(indent + 2))
          text.replace(static_cast<std::size_t>(indent), 2, "- ");
        out << text;
      } else {
        out << pad << "- " << inline_text(e) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_human(const json& body) {
  std::ostringstream out;
  out << "status: " << body.value("status", std::string("?"));
  if (body.contains("command")) out << " (" << body["command"].get<std::string>() << ")";
  out << "\n";
  if (body.contains("error")) {
    out << "error: " << body["error"].value("kind", std::string()) << ": "
        << body["error"].value("message", std::string()) << "\n";
  }
  if (body.contains("result")) render_object(out, body["result"], 0);
  return out.str();
}

std::string render(const Report& report, bool as_json) {
  if (as_json) return report.body.dump(2) + "\n";
  return render_human(report.body);
}

}  // namespace fincat::cli
