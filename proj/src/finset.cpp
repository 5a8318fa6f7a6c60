#include "fincat/finset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fincat/union_find.hpp"

namespace fincat {

namespace {

void check_carrier(std::optional<std::size_t> n, const Budget& budget, const char* what) {
  if (!n || *n > budget.max_carrier) {
    throw CapacityError(std::string(what) + " exceeds the carrier budget of " +
                        std::to_string(budget.max_carrier));
  }
}

std::size_t checked_product(std::size_t a, std::size_t b, const Budget& budget) {
  if (a != 0 && b > budget.max_carrier / a) check_carrier(std::nullopt, budget, "product");
  check_carrier(a * b, budget, "product");
  return a * b;
}

void require_parallel(const FinSetArrow& f, const FinSetArrow& g, const char* what) {
  if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
    throw ContractError(std::string(what) + " needs parallel arrows");
}

}  // namespace

FinSetObject FinSetObject::labelled(std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw ContractError("finite set labels must be distinct");
  FinSetObject x;
  x.size = labels.size();
  x.labels = std::move(labels);
  return x;
}

std::string FinSetObject::element_name(std::size_t i) const {
  if (i < labels.size()) return labels[i];
  return std::to_string(i);
}

FinSetArrow FinSetArrow::make(FinSetObject dom, FinSetObject cod, std::vector<std::size_t> table) {
  if (table.size() != dom.size)
    throw ContractError("mapping table has " + std::to_string(table.size()) +
                        " entries for a domain of size " + std::to_string(dom.size));
  for (auto v : table) {
    if (v >= cod.size)
      throw ContractError("mapping table entry " + std::to_string(v) +
                          " outside codomain of size " + std::to_string(cod.size));
  }
  return FinSetArrow{std::move(dom), std::move(cod), std::move(table)};
}

FinSetArrow fs_identity(const FinSetObject& a) {
  std::vector<std::size_t> t(a.size);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinSetArrow{a, a, std::move(t)};
}

FinSetArrow fs_compose(const FinSetArrow& g, const FinSetArrow& f) {
  if (f.cod.size != g.dom.size) throw ContractError("finite-set arrows are not composable");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinSetArrow{f.dom, g.cod, std::move(t)};
}

bool fs_has_injective_table(const FinSetArrow& f) {
  std::vector<bool> seen(f.cod.size, false);
  for (auto v : f.table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<FinSetArrow> fs_hom(const FinSetObject& a, const FinSetObject& b, const Budget& budget) {
  auto n = count_functions(a.size, b.size, budget.max_carrier);
  check_carrier(n, budget, "hom-set");
  std::vector<FinSetArrow> out;
  out.reserve(*n);
  std::vector<std::size_t> t(a.size, 0);
  for (std::size_t k = 0; k < *n; ++k) {
    out.push_back(FinSetArrow{a, b, t});
    for (std::size_t i = a.size; i-- > 0;) {
      if (++t[i] < b.size) break;
      t[i] = 0;
    }
  }
  return out;
}

// --- products and coproducts -----------------------------------------------

ProductBundle fs_product(const FinSetObject& a, const FinSetObject& b, const Budget& budget) {
  const std::size_t n = checked_product(a.size, b.size, budget);
  ProductBundle p;
  p.object = FinSetObject::of_size(n);
  p.first = FinSetArrow{p.object, a, std::vector<std::size_t>(n)};
  p.second = FinSetArrow{p.object, b, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    p.first.table[i] = i / b.size;
    p.second.table[i] = i % b.size;
  }
  return p;
}

FinSetArrow fs_pair(const ProductBundle& p, const FinSetArrow& f, const FinSetArrow& g) {
  if (f.dom.size != g.dom.size || f.cod.size != p.first.cod.size ||
      g.cod.size != p.second.cod.size)
    throw ContractError("pairing needs arrows X -> A and X -> B");
  const std::size_t nb = p.second.cod.size;
  std::vector<std::size_t> t(f.dom.size);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f.table[x] * nb + g.table[x];
  return FinSetArrow{f.dom, p.object, std::move(t)};
}

FinSetArrow fs_product_map(const FinSetArrow& f, const FinSetArrow& g, const Budget& budget) {
  auto src = fs_product(f.dom, g.dom, budget);
  auto dst = fs_product(f.cod, g.cod, budget);
  return fs_pair(dst, fs_compose(f, src.first), fs_compose(g, src.second));
}

CoproductBundle fs_coproduct(const FinSetObject& a, const FinSetObject& b, const Budget& budget) {
  check_carrier(a.size + b.size, budget, "coproduct");
  CoproductBundle c;
  c.object = FinSetObject::of_size(a.size + b.size);
  c.first = FinSetArrow{a, c.object, std::vector<std::size_t>(a.size)};
  c.second = FinSetArrow{b, c.object, std::vector<std::size_t>(b.size)};
  std::iota(c.first.table.begin(), c.first.table.end(), std::size_t{0});
  std::iota(c.second.table.begin(), c.second.table.end(), a.size);
  return c;
}

FinSetArrow fs_copair(const CoproductBundle& c, const FinSetArrow& f, const FinSetArrow& g) {
  if (f.cod.size != g.cod.size || f.dom.size != c.first.dom.size ||
      g.dom.size != c.second.dom.size)
    throw ContractError("copairing needs arrows A -> X and B -> X");
  std::vector<std::size_t> t(f.table);
  t.insert(t.end(), g.table.begin(), g.table.end());
  return FinSetArrow{c.object, f.cod, std::move(t)};
}

// --- equalizers and coequalizers -------------------------------------------

EqualizerBundle fs_equalizer(const FinSetArrow& f, const FinSetArrow& g) {
  require_parallel(f, g, "equalizer");
  std::vector<std::size_t> agree;
  for (std::size_t a = 0; a < f.dom.size; ++a)
    if (f.table[a] == g.table[a]) agree.push_back(a);
  EqualizerBundle e;
  e.object = FinSetObject::of_size(agree.size());
  if (!f.dom.labels.empty()) {
    for (auto a : agree) e.object.labels.push_back(f.dom.labels[a]);
  }
  e.inclusion = FinSetArrow{e.object, f.dom, std::move(agree)};
  return e;
}

FinSetArrow fs_equalizer_factor(const EqualizerBundle& e, const FinSetArrow& f,
                                const FinSetArrow& g, const FinSetArrow& z) {
  if (z.cod.size != f.dom.size || fs_compose(f, z) != fs_compose(g, z))
    throw ContractError("arrow does not equalize the pair");
  const auto& inc = e.inclusion.table;
  std::vector<std::size_t> t(z.dom.size);
  for (std::size_t w = 0; w < t.size(); ++w)
    t[w] = static_cast<std::size_t>(std::lower_bound(inc.begin(), inc.end(), z.table[w]) - inc.begin());
  return FinSetArrow{z.dom, e.object, std::move(t)};
}

CoequalizerBundle fs_coequalizer(const FinSetArrow& f, const FinSetArrow& g) {
  require_parallel(f, g, "coequalizer");
  UnionFind uf(f.cod.size);
  for (std::size_t a = 0; a < f.dom.size; ++a) uf.unite(f.table[a], g.table[a]);
  std::vector<std::size_t> class_of_root(f.cod.size, 0);
  std::size_t classes = 0;
  for (std::size_t b = 0; b < f.cod.size; ++b)
    if (uf.find(b) == b) class_of_root[b] = classes++;
  CoequalizerBundle q;
  q.object = FinSetObject::of_size(classes);
  std::vector<std::size_t> t(f.cod.size);
  for (std::size_t b = 0; b < t.size(); ++b) t[b] = class_of_root[uf.find(b)];
  q.quotient = FinSetArrow{f.cod, q.object, std::move(t)};
  return q;
}

FinSetArrow fs_coequalizer_factor(const CoequalizerBundle& q, const FinSetArrow& f,
                                  const FinSetArrow& g, const FinSetArrow& z) {
  if (z.dom.size != f.cod.size || fs_compose(z, f) != fs_compose(z, g))
    throw ContractError("arrow does not coequalize the pair");
  std::vector<std::size_t> t(q.object.size, 0);
  std::vector<bool> set(q.object.size, false);
  for (std::size_t b = 0; b < f.cod.size; ++b) {
    const auto c = q.quotient.table[b];
    if (!set[c]) {
      t[c] = z.table[b];
      set[c] = true;
    }
  }
  return FinSetArrow{q.object, z.cod, std::move(t)};
}

// --- pullbacks and pushouts ------------------------------------------------

PullbackBundle fs_pullback(const FinSetArrow& f, const FinSetArrow& g, const Budget& budget) {
  if (f.cod.size != g.cod.size) throw ContractError("pullback needs arrows with a common codomain");
  checked_product(f.dom.size, g.dom.size, budget);
  std::vector<std::size_t> xs, ys;
  for (std::size_t x = 0; x < f.dom.size; ++x)
    for (std::size_t y = 0; y < g.dom.size; ++y)
      if (f.table[x] == g.table[y]) {
        xs.push_back(x);
        ys.push_back(y);
      }
  PullbackBundle p;
  p.object = FinSetObject::of_size(xs.size());
  p.first = FinSetArrow{p.object, f.dom, std::move(xs)};
  p.second = FinSetArrow{p.object, g.dom, std::move(ys)};
  return p;
}

FinSetArrow fs_pullback_factor(const PullbackBundle& p, const FinSetArrow& f,
                               const FinSetArrow& g, const FinSetArrow& q1,
                               const FinSetArrow& q2) {
  if (q1.dom.size != q2.dom.size || q1.cod.size != f.dom.size || q2.cod.size != g.dom.size ||
      fs_compose(f, q1) != fs_compose(g, q2))
    throw ContractError("arrows do not form a commuting square over the cospan");
  std::vector<std::size_t> t(q1.dom.size);
  for (std::size_t w = 0; w < t.size(); ++w) {
    for (std::size_t i = 0; i < p.object.size; ++i) {
      if (p.first.table[i] == q1.table[w] && p.second.table[i] == q2.table[w]) {
        t[w] = i;
        break;
      }
    }
  }
  return FinSetArrow{q1.dom, p.object, std::move(t)};
}

bool fs_is_pullback(const FinSetArrow& f, const FinSetArrow& g, const FinSetArrow& p1,
                    const FinSetArrow& p2) {
  if (f.cod.size != g.cod.size || p1.dom.size != p2.dom.size || p1.cod.size != f.dom.size ||
      p2.cod.size != g.dom.size)
    return false;
  if (fs_compose(f, p1) != fs_compose(g, p2)) return false;
  std::set<std::pair<std::size_t, std::size_t>> image;
  for (std::size_t i = 0; i < p1.dom.size; ++i) {
    if (!image.emplace(p1.table[i], p2.table[i]).second) return false;  // not injective
  }
  std::size_t matching = 0;
  for (std::size_t x = 0; x < f.dom.size; ++x)
    for (std::size_t y = 0; y < g.dom.size; ++y)
      if (f.table[x] == g.table[y]) ++matching;
  return matching == image.size();
}

PushoutBundle fs_pushout(const FinSetArrow& f, const FinSetArrow& g, const Budget& budget) {
  if (f.dom.size != g.dom.size) throw ContractError("pushout needs arrows with a common domain");
  auto sum = fs_coproduct(f.cod, g.cod, budget);
  auto q = fs_coequalizer(fs_compose(sum.first, f), fs_compose(sum.second, g));
  PushoutBundle p;
  p.object = q.object;
  p.first = fs_compose(q.quotient, sum.first);
  p.second = fs_compose(q.quotient, sum.second);
  return p;
}

FinSetArrow fs_pushout_factor(const PushoutBundle& p, const FinSetArrow& f,
                              const FinSetArrow& g, const FinSetArrow& q1,
                              const FinSetArrow& q2) {
  if (q1.cod.size != q2.cod.size || q1.dom.size != f.cod.size || q2.dom.size != g.cod.size ||
      fs_compose(q1, f) != fs_compose(q2, g))
    throw ContractError("arrows do not form a commuting square under the span");
  std::vector<std::size_t> t(p.object.size, 0);
  for (std::size_t x = 0; x < p.first.table.size(); ++x) t[p.first.table[x]] = q1.table[x];
  for (std::size_t y = 0; y < p.second.table.size(); ++y) t[p.second.table[y]] = q2.table[y];
  return FinSetArrow{p.object, q1.cod, std::move(t)};
}

FinSetObject fs_extremal(Extremal kind) {
  return FinSetObject::of_size(kind == Extremal::terminal ? 1 : 0);
}

FinSetArrow fs_to_terminal(const FinSetObject& x) {
  return FinSetArrow{x, fs_extremal(Extremal::terminal), std::vector<std::size_t>(x.size, 0)};
}

FinSetArrow fs_from_initial(const FinSetObject& x) {
  return FinSetArrow{fs_extremal(Extremal::initial), x, {}};
}

// --- exponentials ----------------------------------------------------------

std::vector<std::size_t> ExponentialBundle::decode(std::size_t code) const {
  if (code >= exp_object.size) throw ContractError("exponential element out of range");
  std::vector<std::size_t> t(base.size);
  for (std::size_t i = base.size; i-- > 0;) {
    t[i] = code % target.size;
    code /= target.size;
  }
  return t;
}

std::size_t ExponentialBundle::encode(const std::vector<std::size_t>& table) const {
  if (table.size() != base.size) throw ContractError("mapping has the wrong domain size");
  std::size_t code = 0;
  for (auto v : table) {
    if (v >= target.size) throw ContractError("mapping leaves the codomain");
    code = code * target.size + v;
  }
  return code;
}

ExponentialBundle fs_exponential(const FinSetObject& a, const FinSetObject& b, const Budget& budget) {
  auto n = count_functions(a.size, b.size, budget.max_carrier);
  check_carrier(n, budget, "exponential");
  ExponentialBundle e;
  e.base = a;
  e.target = b;
  e.exp_object = FinSetObject::of_size(*n);
  e.domain = fs_product(a, e.exp_object, budget);
  std::vector<std::size_t> t(e.domain.object.size);
  for (std::size_t p = 0; p < t.size(); ++p) {
    const std::size_t x = p / *n;
    const std::size_t k = p % *n;
    // digit x of k in base |B|, most significant first
    std::size_t shift = 1;
    for (std::size_t i = x + 1; i < a.size; ++i) shift *= b.size;
    t[p] = (k / shift) % b.size;
  }
  e.ev = FinSetArrow{e.domain.object, b, std::move(t)};
  return e;
}

FinSetArrow fs_curry(const FinSetObject& a, const FinSetObject& c, const FinSetArrow& f,
                     const Budget& budget) {
  if (f.dom.size != a.size * c.size)
    throw ContractError("curry needs an arrow out of the canonical product A x C");
  auto e = fs_exponential(a, f.cod, budget);
  std::vector<std::size_t> t(c.size);
  std::vector<std::size_t> m(a.size);
  for (std::size_t z = 0; z < c.size; ++z) {
    for (std::size_t x = 0; x < a.size; ++x) m[x] = f.table[x * c.size + z];
    t[z] = e.encode(m);
  }
  return FinSetArrow{c, e.exp_object, std::move(t)};
}

FinSetArrow fs_uncurry(const FinSetObject& a, const FinSetObject& b, const FinSetArrow& g,
                       const Budget& budget) {
  auto e = fs_exponential(a, b, budget);
  if (g.cod.size != e.exp_object.size) throw ContractError("uncurry needs an arrow into B^A");
  auto p = fs_product(a, g.dom, budget);
  std::vector<std::size_t> t(p.object.size);
  for (std::size_t x = 0; x < a.size; ++x)
    for (std::size_t z = 0; z < g.dom.size; ++z)
      t[x * g.dom.size + z] = e.decode(g.table[z])[x];
  return FinSetArrow{p.object, b, std::move(t)};
}

FinSetArrow fs_name(const FinSetArrow& f, const Budget& budget) {
  auto e = fs_exponential(f.dom, f.cod, budget);
  return FinSetArrow{fs_extremal(Extremal::terminal), e.exp_object, {e.encode(f.table)}};
}

FinSetArrow fs_exp_map(const FinSetObject& a, const FinSetArrow& h, const Budget& budget) {
  auto from = fs_exponential(a, h.dom, budget);
  auto to = fs_exponential(a, h.cod, budget);
  std::vector<std::size_t> t(from.exp_object.size);
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto m = from.decode(k);
    for (auto& v : m) v = h.table[v];
    t[k] = to.encode(m);
  }
  return FinSetArrow{from.exp_object, to.exp_object, std::move(t)};
}

// --- members ---------------------------------------------------------------

std::vector<FinSetArrow> fs_members(const FinSetObject& a) {
  std::vector<FinSetArrow> out;
  out.reserve(a.size);
  const auto one = fs_extremal(Extremal::terminal);
  for (std::size_t i = 0; i < a.size; ++i) out.push_back(FinSetArrow{one, a, {i}});
  return out;
}

PointClassification fs_point_classify(const FinSetArrow& f) {
  const auto xs = fs_members(f.dom);
  const auto ys = fs_members(f.cod);
  PointClassification pc{true, true};
  for (std::size_t i = 0; i < xs.size() && pc.injective; ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (fs_compose(f, xs[i]) == fs_compose(f, xs[j])) {
        pc.injective = false;
        break;
      }
  for (const auto& y : ys) {
    bool hit = false;
    for (const auto& x : xs) {
      if (fs_compose(f, x) == y) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      pc.surjective = false;
      break;
    }
  }
  return pc;
}

ArrowId fs_embed(const Category& cat, ObjectId dom, ObjectId cod, const FinSetArrow& f) {
  const auto* u = cat.finset_universe();
  if (!u) throw ContractError("category is not a full subcategory of finite sets");
  if (u->size_of(dom) != f.dom.size || u->size_of(cod) != f.cod.size)
    throw ContractError("arrow carriers do not match the chosen objects");
  return u->lookup(dom, cod, f.table);
}

FinSetArrow fs_extract(const Category& cat, ArrowId a) {
  const auto* u = cat.finset_universe();
  if (!u) throw ContractError("category is not a full subcategory of finite sets");
  return FinSetArrow{FinSetObject::of_size(u->size_of(u->dom(a))),
                     FinSetObject::of_size(u->size_of(u->cod(a))), u->table(a)};
}

}  // namespace fincat
