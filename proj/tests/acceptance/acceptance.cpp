// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance SAMPLES_DIR

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fincat/curry.hpp"
#include "fincat/dsl.hpp"
#include "fincat/finset.hpp"
#include "fincat/limits.hpp"
#include "fincat/slice.hpp"
#include "fincat/subobject.hpp"
#include "fincat/topos.hpp"
#include "fincat/union_find.hpp"
#include "support/oracles.hpp"

using namespace fincat;
namespace fs = std::filesystem;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0: no individual limit
  std::function<void(Tally&)> run;
};

const Budget kWide{200'000, 200'000, 4'096};

FinSetObject S(std::size_t n) { return FinSetObject::of_size(n); }

std::string sizes_str(std::initializer_list<std::size_t> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string table_str(const std::vector<std::size_t>& t) {
  std::string s = "[";
  for (auto x : t) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + "]";
}

// --- 1 ---------------------------------------------------------------------

void arrow_classification(Tally& t) {
  auto c = full_subcategory_of_finset({0, 1, 2, 3});
  const auto* u = c.finset_universe();
  for (auto f : c.arrows()) {
    const auto tab = u->table(f);
    const auto n = u->size_of(c.cod(f));
    t.expect(bool(is_monic(c, f)) == oracle::injective(tab), "monic mismatch at " + c.arrow_name(f));
    t.expect(bool(is_epic(c, f)) == oracle::surjective(tab, n), "epic mismatch at " + c.arrow_name(f));
  }
}

// --- 2 ---------------------------------------------------------------------

// The generic solver inside a full subcategory holding the diagram's carriers
// and the direct apex; compares apex sizes, checks the generic certificate,
// checks the direct (co)cone is universal and that the comparison arrow is an
// isomorphism.
struct GenericCase {
  Shape shape;
  bool co;
  std::vector<std::size_t> object_sizes;                          // diagram objects
  std::vector<std::tuple<std::size_t, std::size_t, oracle::Table>> arrows;  // (dom, cod, table) by index
  std::size_t apex_size;
  std::vector<oracle::Table> legs;  // direct legs, one per diagram object
  std::string name;
};

void run_generic(Tally& t, const GenericCase& g) {
  std::vector<std::size_t> sizes = g.object_sizes;
  sizes.push_back(g.apex_size);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  auto cat = oracle::share(full_subcategory_of_finset(sizes, kWide));
  const auto* u = cat->finset_universe();
  auto obj = [&](std::size_t n) {
    return ObjectId{std::uint32_t(std::find(sizes.begin(), sizes.end(), n) - sizes.begin())};
  };
  std::vector<ObjectId> objects;
  for (auto n : g.object_sizes) objects.push_back(obj(n));
  std::vector<ArrowId> arrows;
  for (const auto& [d, e, tab] : g.arrows) arrows.push_back(u->lookup(obj(d), obj(e), tab));
  auto d = shape_diagram(g.shape, cat, objects, arrows);
  const ObjectId apex = obj(g.apex_size);
  std::vector<ArrowId> legs;
  for (std::size_t x = 0; x < g.legs.size(); ++x)
    legs.push_back(g.co ? u->lookup(objects[x], apex, g.legs[x]) : u->lookup(apex, objects[x], g.legs[x]));

  if (!g.co) {
    auto r = find_limit(d, kWide);
    t.expect(r.found(), g.name + ": no generic limit");
    if (!r.found()) return;
    t.expect(u->size_of(r.universal->apex) == g.apex_size, g.name + ": apex size differs");
    bool cert = r.cones.size() == r.mediating.size();
    for (std::size_t k = 0; cert && k < r.cones.size(); ++k)
      for (std::size_t x = 0; x < legs.size(); ++x)
        cert = cert && compose(*cat, r.universal->legs[x], r.mediating[k]) == r.cones[k].legs[x];
    t.expect(cert, g.name + ": generic certificate");
    Cone direct{apex, legs};
    t.expect(is_limit_cone(d, direct, kWide) == true, g.name + ": direct cone not universal");
    auto m = mediating_morphism(d, r, direct);
    t.expect(is_iso(*cat, m).has_value(), g.name + ": comparison is not an isomorphism");
  } else {
    auto r = find_colimit(d, kWide);
    t.expect(r.found(), g.name + ": no generic colimit");
    if (!r.found()) return;
    t.expect(u->size_of(r.universal->nadir) == g.apex_size, g.name + ": nadir size differs");
    bool cert = r.cones.size() == r.mediating.size();
    for (std::size_t k = 0; cert && k < r.cones.size(); ++k)
      for (std::size_t x = 0; x < legs.size(); ++x)
        cert = cert && compose(*cat, r.mediating[k], r.universal->legs[x]) == r.cones[k].legs[x];
    t.expect(cert, g.name + ": generic certificate");
    Cocone direct{apex, legs};
    t.expect(is_colimit_cocone(d, direct, kWide) == true, g.name + ": direct cocone not universal");
    auto m = mediating_morphism(d, r, direct);
    t.expect(is_iso(*cat, m).has_value(), g.name + ": comparison is not an isomorphism");
  }
}

std::vector<FinSetArrow> hom(std::size_t a, std::size_t b) {
  std::vector<FinSetArrow> out;
  for (auto& tab : oracle::all_tables(a, b)) out.push_back(FinSetArrow::make(S(a), S(b), tab));
  return out;
}

void generic_vs_direct(Tally& t) {
  const std::vector<std::size_t> small{0, 1, 2};
  // products and coproducts
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto a : small)
    for (auto b : small) pairs.push_back({a, b});
  pairs.push_back({3, 2});
  for (auto [a, b] : pairs) {
    auto p = fs_product(S(a), S(b));
    run_generic(t, {Shape::discrete_pair, false, {a, b}, {}, p.object.size, {p.first.table, p.second.table},
                    "product " + sizes_str({a, b})});
    auto c = fs_coproduct(S(a), S(b));
    run_generic(t, {Shape::discrete_pair, true, {a, b}, {}, c.object.size, {c.first.table, c.second.table},
                    "coproduct " + sizes_str({a, b})});
  }
  // equalizers and coequalizers of every parallel pair
  auto parallel = [&](std::size_t a, std::size_t b) {
    for (const auto& f : hom(a, b))
      for (const auto& g : hom(a, b)) {
        const auto tag = table_str(f.table) + table_str(g.table);
        auto e = fs_equalizer(f, g);
        run_generic(t, {Shape::parallel_pair, false, {a, b}, {{a, b, f.table}, {a, b, g.table}},
                        e.object.size, {e.inclusion.table, fs_compose(f, e.inclusion).table},
                        "equalizer " + tag});
        auto q = fs_coequalizer(f, g);
        run_generic(t, {Shape::parallel_pair, true, {a, b}, {{a, b, f.table}, {a, b, g.table}},
                        q.object.size, {fs_compose(q.quotient, f).table, q.quotient.table},
                        "coequalizer " + tag});
      }
  };
  for (auto a : small)
    for (auto b : small) parallel(a, b);
  {
    // one size-3 pair
    auto f = FinSetArrow::make(S(3), S(2), {0, 1, 1});
    auto g = FinSetArrow::make(S(3), S(2), {1, 1, 0});
    auto e = fs_equalizer(f, g);
    run_generic(t, {Shape::parallel_pair, false, {3, 2}, {{3, 2, f.table}, {3, 2, g.table}}, e.object.size,
                    {e.inclusion.table, fs_compose(f, e.inclusion).table}, "equalizer 3->2"});
    auto h = FinSetArrow::make(S(2), S(3), {0, 1});
    auto k = FinSetArrow::make(S(2), S(3), {1, 2});
    auto q = fs_coequalizer(h, k);
    run_generic(t, {Shape::parallel_pair, true, {2, 3}, {{2, 3, h.table}, {2, 3, k.table}}, q.object.size,
                    {fs_compose(q.quotient, h).table, q.quotient.table}, "coequalizer 2->3"});
  }
  // pullbacks of cospans and pushouts of spans
  auto corners = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& f : hom(x, z))
      for (const auto& g : hom(y, z)) {
        auto p = fs_pullback(f, g, kWide);
        run_generic(t, {Shape::cospan, false, {x, y, z}, {{x, z, f.table}, {y, z, g.table}}, p.object.size,
                        {p.first.table, p.second.table, fs_compose(f, p.first).table},
                        "pullback " + table_str(f.table) + table_str(g.table)});
      }
    for (const auto& f : hom(z, x))
      for (const auto& g : hom(z, y)) {
        auto p = fs_pushout(f, g, kWide);
        run_generic(t, {Shape::span, true, {x, y, z}, {{z, x, f.table}, {z, y, g.table}}, p.object.size,
                        {p.first.table, p.second.table, fs_compose(p.first, f).table},
                        "pushout " + table_str(f.table) + table_str(g.table)});
      }
  };
  for (auto x : small)
    for (auto y : small)
      for (auto z : small) corners(x, y, z);
  {
    auto f = FinSetArrow::make(S(3), S(2), {0, 1, 1});
    auto g = FinSetArrow::make(S(2), S(2), {1, 0});
    auto p = fs_pullback(f, g, kWide);
    run_generic(t, {Shape::cospan, false, {3, 2, 2}, {{3, 2, f.table}, {2, 2, g.table}}, p.object.size,
                    {p.first.table, p.second.table, fs_compose(f, p.first).table}, "pullback 3->2<-2"});
    auto h = FinSetArrow::make(S(2), S(3), {0, 2});
    auto k = FinSetArrow::make(S(2), S(2), {0, 0});
    auto q = fs_pushout(h, k, kWide);
    run_generic(t, {Shape::span, true, {3, 2, 2}, {{2, 3, h.table}, {2, 2, k.table}}, q.object.size,
                    {q.first.table, q.second.table, fs_compose(q.first, h).table}, "pushout 3<-2->2"});
  }
}

// --- 3 ---------------------------------------------------------------------

void counting_laws(Tally& t) {
  const auto omega = fs_subobject_classifier().object;
  for (std::size_t a = 0; a <= 4; ++a) {
    const auto tag = " at " + std::to_string(a);
    for (std::size_t b = 0; b <= 4; ++b) {
      const auto tb = tag + "," + std::to_string(b);
      t.expect(fs_product(S(a), S(b)).object.size == a * b, "|AxB|" + tb);
      t.expect(fs_coproduct(S(a), S(b)).object.size == a + b, "|A+B|" + tb);
      t.expect(fs_exponential(S(a), S(b)).exp_object.size == oracle::ipow(b, a), "|B^A|" + tb);
    }
    t.expect(SubobjectAlgebra(S(a)).all().size() == oracle::ipow(2, a), "|Sub(A)|" + tag);
    t.expect(fs_hom(S(1), S(a)).size() == a, "|Hom(1,A)|" + tag);
    t.expect(fs_members(S(a)).size() == a, "members" + tag);
    t.expect(fs_hom(S(a), omega).size() == oracle::ipow(2, a), "|Hom(A,Omega)|" + tag);
  }
  t.expect(fs_exponential(S(0), S(0)).exp_object.size == 1, "0^0 = 1");
}

// --- 4 ---------------------------------------------------------------------

// The square S -> 1, S >-> A, true, chi is a pullback iff chi^-1(true) is
// exactly the image of the inclusion.
bool oracle_classifies(const Subobject& s, const FinSetArrow& chi) {
  for (std::size_t x = 0; x < s.ambient.size; ++x)
    if ((chi(x) == kTrue) != s.contains(x)) return false;
  return true;
}

void classifier(Tally& t) {
  for (std::size_t a = 0; a <= 4; ++a) {
    SubobjectAlgebra alg(S(a));
    const auto arrows = fs_hom(S(a), fs_subobject_classifier().object);
    std::set<std::vector<std::size_t>> images;
    for (const auto& s : alg.all()) {
      const auto chi = fs_characteristic(s);
      images.insert(chi.table);
      std::size_t classifying = 0;
      for (const auto& c : arrows) {
        const bool lib = fs_classifies(s, c);
        t.expect(lib == oracle_classifies(s, c), "pullback test disagrees at size " + std::to_string(a));
        classifying += lib;
        if (lib) t.expect(c == chi, "classifying arrow is not chi_S");
      }
      t.expect(classifying == 1, "classifying arrows != 1 at size " + std::to_string(a));
      t.expect(fs_classified(chi) == s, "chi does not recover S");
    }
    t.expect(images.size() == alg.all().size() && images.size() == arrows.size(),
             "S -> chi_S not a bijection at size " + std::to_string(a));
  }
}

// --- 5 ---------------------------------------------------------------------

void names(Tally& t) {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      const auto tag = " at " + sizes_str({a, b});
      auto e = fs_exponential(S(a), S(b));
      std::set<std::size_t> points;
      for (const auto& f : hom(a, b)) {
        auto name = fs_name(f);
        t.expect(name.dom.size == 1 && name.cod.size == e.exp_object.size, "name typing" + tag);
        points.insert(name(0));
        auto lifted = fs_product_map(fs_identity(S(a)), name);
        auto back = fs_compose(e.ev, lifted);
        bool ok = back.dom.size == a;
        for (std::size_t x = 0; ok && x < a; ++x) ok = back(x) == f(x);
        t.expect(ok, "ev . (id x name f) != f" + tag);
      }
      t.expect(points.size() == oracle::ipow(b, a) && points.size() == e.exp_object.size,
               "names are not a bijection onto points" + tag);
    }
}

// --- 6 ---------------------------------------------------------------------

void heyting(Tally& t) {
  for (std::size_t a = 0; a <= 4; ++a) {
    SubobjectAlgebra alg(S(a));
    const std::size_t full = (std::size_t{1} << a) - 1;
    auto mask = [](const Subobject& s) {
      std::size_t m = 0;
      for (auto x : s.members) m |= std::size_t{1} << x;
      return m;
    };
    std::size_t pairs = 0;
    for (const auto& s : alg.all()) {
      t.expect(mask(alg.join(s, alg.complement(s))) == full, "S v -S != A");
      for (const auto& u : alg.all()) {
        ++pairs;
        t.expect(mask(alg.implies(s, u)) == ((~mask(s) | mask(u)) & full),
                 "implication differs from -S v T at size " + std::to_string(a));
      }
    }
    t.expect(pairs <= 256, "more than 256 pairs");
  }
}

// --- 7 ---------------------------------------------------------------------

void adjunction(Tally& t) {
  auto laws = [&](std::size_t a, std::size_t x, std::size_t y) {
    CurryAdjunction adj{S(a), {}};
    const auto tag = " at A,X,Y = " + sizes_str({a, x, y});
    auto b = check_curry_bijection(adj, S(x), S(y));
    t.expect(b.holds, "bijection" + tag + ": " + b.detail);
    auto tr = check_curry_triangles(adj, S(x), S(y));
    t.expect(tr.holds, "triangles" + tag + ": " + tr.detail);
    auto un = check_curry_universal(adj, S(x), S(y));
    t.expect(un.holds, "universal" + tag + ": " + un.detail);
  };
  auto natural = [&](std::size_t a, std::size_t x2, std::size_t x, std::size_t y, std::size_t y2) {
    CurryAdjunction adj{S(a), {}};
    Transpose phi = [&](const FinSetObject& xx, const FinSetArrow& f) { return adj.transpose(xx, f); };
    auto r = check_curry_naturality(adj, phi, S(x2), S(x), S(y), S(y2));
    t.expect(r.holds, "naturality at " + sizes_str({a, x2, x, y, y2}) + ": " + r.detail);
  };
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t x = 0; x <= 2; ++x)
      for (std::size_t y = 0; y <= 2; ++y) {
        laws(a, x, y);
        for (std::size_t x2 = 0; x2 <= 2; ++x2)
          for (std::size_t y2 = 0; y2 <= 2; ++y2) natural(a, x2, x, y, y2);
      }
  laws(2, 3, 3);
  natural(2, 2, 3, 3, 2);
  laws(3, 1, 1);
}

// --- 8 ---------------------------------------------------------------------

void uniqueness(Tally& t) {
  oracle::CategoryGenerator gen(kDefaultSeed);
  for (int i = 0; i < 200; ++i) {
    auto c = oracle::share(gen.next());
    const auto tag = " in random category #" + std::to_string(i);
    t.expect(validate_category(*c).ok(), "unlawful" + tag);
    auto e = shape_diagram(Shape::empty, c, {});
    auto lim = find_limit(e);
    auto col = find_colimit(e);
    t.expect(lim.status != UniversalStatus::budget_exceeded && col.status != UniversalStatus::budget_exceeded,
             "budget" + tag);
    for (auto x : lim.qualifying)
      for (auto y : lim.qualifying) t.expect(isomorphic(*c, x, y), "terminals not isomorphic" + tag);
    for (auto x : col.qualifying)
      for (auto y : col.qualifying) t.expect(isomorphic(*c, x, y), "initials not isomorphic" + tag);
    for (auto x : c->objects()) {
      auto s = slice_category(c, x);
      auto st = find_limit(shape_diagram(Shape::empty, s.category, {}));
      auto idx = s.object_of(c->identity(x));
      bool ok = st.found() && idx &&
                std::find(st.qualifying.begin(), st.qualifying.end(), *idx) != st.qualifying.end();
      t.expect(ok, "Id_X not terminal in slice" + tag);
    }
  }
}

// --- 9 ---------------------------------------------------------------------

void coequalizer_oracle(Tally& t) {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      const auto tables = oracle::all_tables(a, b);
      for (const auto& f : tables)
        for (const auto& g : tables) {
          auto naive = oracle::naive_closure(f, g, b);
          auto q = fs_coequalizer(FinSetArrow::make(S(a), S(b), f), FinSetArrow::make(S(a), S(b), g));
          t.expect(q.quotient.table == naive, "coequalizer " + table_str(f) + table_str(g));
          UnionFind uf(b);
          for (std::size_t x = 0; x < a; ++x) uf.unite(f[x], g[x]);
          bool same = true;
          for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) same = same && ((uf.find(i) == uf.find(j)) == (naive[i] == naive[j]));
          t.expect(same, "union-find classes " + table_str(f) + table_str(g));
        }
    }
}

// --- 10 --------------------------------------------------------------------

void topos(Tally& t) {
  auto one = oracle::share(oracle::terminal_category());
  auto r1 = topos_check(one);
  t.expect(r1.is_topos(), "terminal category is not a topos");
  t.expect(topos_check(slice_category(one, ObjectId{0}).category).is_topos(),
           "slice of the terminal category is not a topos");
  auto r2 = topos_check(oracle::share(full_subcategory_of_finset({2, 3})));
  t.expect(!r2.is_topos() && r2.first_failure() == std::optional<std::string>("no terminal object"),
           "sizes [2,3]: " + r2.first_failure().value_or("passes"));
  auto r3 = topos_check(oracle::share(oracle::chain2()));
  t.expect(r3.classifier.status == ClauseStatus::fail, "2-chain classifier clause does not fail");
  t.expect(r3.finite_limits.status == ClauseStatus::pass && r3.finite_colimits.status == ClauseStatus::pass &&
               r3.exponentials.status == ClauseStatus::pass,
           "2-chain fails before the classifier");
}

// --- 11 --------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> read_corpus(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".cat") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    out.emplace_back(p.filename().string(), buf.str());
  }
  return out;
}

void parser(Tally& t, const fs::path& samples) {
  const auto corpus = read_corpus(samples);
  t.expect(!corpus.empty(), "empty corpus at " + samples.string());
  for (const auto& [name, text] : corpus) {
    try {
      auto doc = dsl::parse_spec(text);
      auto canon = dsl::format_spec(doc);
      auto again = dsl::parse_spec(canon);
      t.expect(again == doc, name + ": parse . format is not the identity");
      t.expect(dsl::format_spec(again) == canon, name + ": format is not canonical");
      dsl::build_workspace(doc);
    } catch (const std::exception& e) {
      t.expect(false, name + ": " + e.what());
    }
  }

  std::mt19937_64 rng(kDefaultSeed);
  static const char* kTokens[] = {"category", "finset", "map", "diagram", "functor", "nattrans",
                                  "object", "arrow", "compose", "{", "}", ";", ",", ":", "->",
                                  "=>", ".", "=", "A", "B", "f", "id_A", "//", "\n", " "};
  std::size_t coded = 0, accepted = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::string s;
    switch (i % 3) {
      case 0: {
        // mutated corpus file
        s = corpus.empty() ? std::string() : corpus[rng() % corpus.size()].second;
        const int edits = 1 + int(rng() % 8);
        for (int k = 0; k < edits; ++k) {
          const std::size_t pos = rng() % (s.size() + 1);
          switch (rng() % 4) {
            case 0: s.insert(pos, 1, char(rng() % 256)); break;
            case 1: if (pos < s.size()) s.erase(pos, 1 + rng() % 4); break;
            case 2: if (pos < s.size()) s[pos] = char(rng() % 256); break;
            default: s.insert(pos, kTokens[rng() % std::size(kTokens)]); break;
          }
        }
        break;
      }
      case 1: {
        // token soup
        const int n = int(rng() % 40);
        for (int k = 0; k < n; ++k) s += std::string(kTokens[rng() % std::size(kTokens)]) + " ";
        break;
      }
      default: {
        // raw bytes
        const int n = int(rng() % 200);
        for (int k = 0; k < n; ++k) s.push_back(char(rng() % 256));
      }
    }
    try {
      auto doc = dsl::parse_spec(s);
      ++accepted;
      t.expect(dsl::parse_spec(dsl::format_spec(doc)) == doc, "accepted fuzz input does not round-trip");
    } catch (const dsl::ParseFailure& e) {
      const int c = e.error().code;
      const bool known = c == 101 || c == 102 || c == 201 || c == 202 || (c >= 301 && c <= 304);
      t.expect(known && e.error().line >= 1 && e.error().column >= 1, "uncoded parse error: " + e.error().to_string());
      ++coded;
    } catch (const std::exception& e) {
      t.expect(false, std::string("fuzz input raised a non-parse exception: ") + e.what());
    }
  }
  t.expect(coded + accepted == 10'000, "fuzz inputs lost");
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path samples = argc > 1 ? fs::path(argv[1]) : fs::path("samples");
  const std::vector<Criterion> criteria = {
      {1, "arrow classification: monic <=> injective, epic <=> surjective on sizes {0,1,2,3}", 10, arrow_classification},
      {2, "generic limits and colimits agree with direct finite-set constructions", 60, generic_vs_direct},
      {3, "counting laws for sizes <= 4", 0, counting_laws},
      {4, "classifier bijection and uniqueness for |A| <= 4", 0, classifier},
      {5, "names: Hom(A,B) <-> points of B^A and ev . (id x name f) = f for sizes <= 3", 0, names},
      {6, "Heyting implication equals -S v T and S v -S = A for |A| <= 4", 0, heyting},
      {7, "curry adjunction: bijective, natural, triangle identities", 0, adjunction},
      {8, "uniqueness up to isomorphism in 200 seeded random categories", 0, uniqueness},
      {9, "coequalizer union-find equals naive relational closure for sizes <= 3", 0, coequalizer_oracle},
      {10, "topos verdicts: terminal category, its slice, sizes [2,3], 2-chain", 0, topos},
      {11, "parser: 10000 seeded fuzz inputs give coded errors; corpus round-trips", 30,
       [&](Tally& t) { parser(t, samples); }},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0) t.expect(secs < c.limit_seconds, "time limit exceeded");
    const bool ok = t.failures == 0;
    failed += !ok;
    std::printf("%s  #%-2d %s  [%zu checks, %.2f s%s]\n", ok ? "PASS" : "FAIL", c.number, c.title, t.checks, secs,
                c.limit_seconds > 0 ? (" < " + std::to_string(int(c.limit_seconds)) + " s").c_str() : "");
    if (!ok) std::printf("      %zu failing, first: %s\n", t.failures, t.first.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = total < 300;
  std::printf("%s  suite  total %.2f s < 300 s\n", in_time ? "PASS" : "FAIL", total);
  return failed == 0 && in_time ? 0 : 1;
}
