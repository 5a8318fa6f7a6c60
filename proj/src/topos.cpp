#include "fincat/topos.hpp"

#include <algorithm>
#include <set>

#include "fincat/limits.hpp"

namespace fincat {

std::string_view to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::unverified: return "unverified";
    case ClauseStatus::skipped: return "skipped";
  }
  return "?";
}

bool ToposReport::is_topos() const {
  return finite_limits.status == ClauseStatus::pass &&
         finite_colimits.status == ClauseStatus::pass &&
         exponentials.status == ClauseStatus::pass && classifier.status == ClauseStatus::pass;
}

std::optional<std::string> ToposReport::first_failure() const {
  for (const auto* c : {&finite_limits, &finite_colimits, &exponentials, &classifier})
    if (c->status == ClauseStatus::fail) return c->detail;
  return std::nullopt;
}

namespace {

using Pair = std::pair<ObjectId, ObjectId>;

struct Checker {
  CategoryPtr cat;
  Budget budget;
  const Category& c;
  std::size_t n;

  Checker(CategoryPtr p, const Budget& b) : cat(std::move(p)), budget(b), c(*cat), n(c.object_count()) {}

  std::string obj(ObjectId x) const { return c.object_name(x); }
  std::string arr(ArrowId a) const { return c.arrow_name(a); }

  // Combines sub-clauses into one group clause.
  static ToposClause group(std::string name, const std::vector<ToposClause>& parts) {
    ToposClause out{std::move(name), ClauseStatus::pass, {}};
    for (const auto& p : parts) {
      if (p.status == ClauseStatus::fail) return ToposClause{out.name, ClauseStatus::fail, p.detail};
    }
    for (const auto& p : parts) {
      if (p.status == ClauseStatus::unverified)
        return ToposClause{out.name, ClauseStatus::unverified, p.detail};
    }
    for (const auto& p : parts) {
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += p.detail;
    }
    return out;
  }

  ToposClause extremal(bool co, std::optional<ObjectId>& found) const {
    auto d = shape_diagram(Shape::empty, cat, {}, {});
    const char* what = co ? "initial object" : "terminal object";
    UniversalStatus status;
    std::optional<ObjectId> apex;
    if (co) {
      auto r = find_colimit(d, budget);
      status = r.status;
      if (r.universal) apex = r.universal->nadir;
    } else {
      auto r = find_limit(d, budget);
      status = r.status;
      if (r.universal) apex = r.universal->apex;
    }
    ToposClause clause{co ? "initial object" : "terminal object", ClauseStatus::pass, {}};
    if (status == UniversalStatus::budget_exceeded) {
      clause.status = ClauseStatus::unverified;
      clause.detail = std::string(what) + ": " + std::string(to_string(status));
    } else if (!apex) {
      clause.status = ClauseStatus::fail;
      clause.detail = std::string("no ") + what;
    } else {
      found = apex;
      clause.detail = std::string(what) + " " + obj(*apex);
    }
    return clause;
  }

  // Binary (co)products for every ordered pair of objects.
  ToposClause binary(bool co, std::vector<std::optional<Cone>>& products) const {
    ToposClause clause{co ? "binary coproducts" : "binary products", ClauseStatus::pass, {}};
    const char* what = co ? "coproduct" : "product";
    products.assign(n * n, std::nullopt);
    std::optional<std::string> unverified;
    for (auto a : c.objects()) {
      for (auto b : c.objects()) {
        auto d = shape_diagram(Shape::discrete_pair, cat, {a, b}, {});
        UniversalStatus status;
        if (co) {
          auto r = find_colimit(d, budget);
          status = r.status;
          if (r.universal) products[a.index * n + b.index] = Cone{r.universal->nadir, r.universal->legs};
        } else {
          auto r = find_limit(d, budget);
          status = r.status;
          if (r.universal) products[a.index * n + b.index] = *r.universal;
        }
        if (status == UniversalStatus::budget_exceeded) {
          if (!unverified)
            unverified = std::string(what) + " of " + obj(a) + " and " + obj(b) + ": " +
                         std::string(to_string(status));
          continue;
        }
        if (!products[a.index * n + b.index]) {
          clause.status = ClauseStatus::fail;
          clause.detail = std::string("no ") + what + " of " + obj(a) + " and " + obj(b);
          return clause;
        }
      }
    }
    if (unverified) {
      clause.status = ClauseStatus::unverified;
      clause.detail = *unverified;
    } else {
      clause.detail = std::string(what) + "s of all " + std::to_string(n * n) + " ordered pairs";
    }
    return clause;
  }

  ToposClause equalizers(bool co) const {
    ToposClause clause{co ? "coequalizers" : "equalizers", ClauseStatus::pass, {}};
    const char* what = co ? "coequalizer" : "equalizer";
    std::size_t pairs = 0;
    std::optional<std::string> unverified;
    for (auto a : c.objects()) {
      for (auto b : c.objects()) {
        const auto& h = c.hom(a, b);
        for (std::size_t i = 0; i < h.size(); ++i) {
          for (std::size_t k = i; k < h.size(); ++k) {
            ++pairs;
            auto d = shape_diagram(Shape::parallel_pair, cat, {a, b}, {h[i], h[k]});
            UniversalStatus status = co ? find_colimit(d, budget).status : find_limit(d, budget).status;
            if (status == UniversalStatus::budget_exceeded) {
              if (!unverified)
                unverified = std::string(what) + " of " + arr(h[i]) + " and " + arr(h[k]) + ": " +
                             std::string(to_string(status));
              continue;
            }
            if (status != UniversalStatus::found) {
              clause.status = ClauseStatus::fail;
              clause.detail = std::string("no ") + what + " of " + arr(h[i]) + " and " + arr(h[k]);
              return clause;
            }
          }
        }
      }
    }
    if (unverified) {
      clause.status = ClauseStatus::unverified;
      clause.detail = *unverified;
    } else {
      clause.detail = std::string(what) + "s of all " + std::to_string(pairs) + " parallel pairs";
    }
    return clause;
  }

  // The unique u : A x C -> A x E with p1 . u = q1 and p2 . u = h . q2.
  ArrowId product_map(const Cone& ac, const Cone& ae, ArrowId h) const {
    const auto second = c.compose(h, ac.legs[1]);
    for (auto u : c.hom(ac.apex, ae.apex)) {
      if (c.compose(ae.legs[0], u) == ac.legs[0] && c.compose(ae.legs[1], u) == second) return u;
    }
    throw ContractError("product cone does not mediate: products are not universal");
  }

  ToposClause exponentials(const std::vector<std::optional<Cone>>& products) const {
    ToposClause clause{"exponentials", ClauseStatus::pass, {}};
    for (auto a : c.objects()) {
      for (auto b : c.objects()) {
        bool found = false;
        for (auto e : c.objects()) {
          const Cone& ae = *products[a.index * n + e.index];
          // id_A x h for every C and every h : C -> E
          std::vector<std::vector<ArrowId>> lifted(n);
          bool sizes_ok = true;
          for (auto x : c.objects()) {
            const Cone& ax = *products[a.index * n + x.index];
            if (c.hom(x, e).size() != c.hom(ax.apex, b).size()) {
              sizes_ok = false;
              break;
            }
          }
          if (!sizes_ok) continue;
          for (auto x : c.objects()) {
            const Cone& ax = *products[a.index * n + x.index];
            for (auto h : c.hom(x, e)) lifted[x.index].push_back(product_map(ax, ae, h));
          }
          for (auto ev : c.hom(ae.apex, b)) {
            bool ok = true;
            for (auto x : c.objects()) {
              std::set<ArrowId> seen;
              for (auto u : lifted[x.index]) {
                if (!seen.insert(c.compose(ev, u)).second) {
                  ok = false;
                  break;
                }
              }
              if (!ok) break;
            }
            if (ok) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) {
          clause.status = ClauseStatus::fail;
          clause.detail = "no exponential " + obj(b) + "^" + obj(a);
          return clause;
        }
      }
    }
    clause.detail = "exponentials for all " + std::to_string(n * n) + " ordered pairs";
    return clause;
  }

  ToposClause classifier(ObjectId one, std::optional<ObjectId>& omega,
                         std::optional<ArrowId>& truth) const {
    ToposClause clause{"subobject classifier", ClauseStatus::pass, {}};
    std::vector<ArrowId> monics;
    for (auto m : c.arrows())
      if (is_monic(c, m)) monics.push_back(m);
    std::vector<ArrowId> bang(n);
    for (auto x : c.objects()) bang[x.index] = c.hom(x, one).front();

    std::optional<std::string> first_reason;
    bool unverified = false;
    for (auto w : c.objects()) {
      for (auto t : c.hom(one, w)) {
        std::optional<std::string> reason;
        for (auto m : monics) {
          const auto s = c.dom(m);
          const auto a = c.cod(m);
          std::size_t classifying = 0;
          for (auto chi : c.hom(a, w)) {
            if (c.compose(chi, m) != c.compose(t, bang[s.index])) continue;
            auto pb = is_pullback_square(cat, chi, t, m, bang[s.index], budget);
            if (!pb) {
              unverified = true;
              continue;
            }
            if (*pb) ++classifying;
          }
          if (classifying != 1) {
            reason = "candidate (" + obj(w) + ", " + arr(t) + ") " +
                     (classifying == 0 ? "classifies no" : "has several characteristic arrows for") +
                     " monic " + arr(m) + " : " + obj(s) + " -> " + obj(a);
            break;
          }
        }
        if (!reason) {
          omega = w;
          truth = t;
          clause.detail = "Omega = " + obj(w) + ", true = " + arr(t);
          return clause;
        }
        if (!first_reason) first_reason = reason;
      }
    }
    clause.status = unverified ? ClauseStatus::unverified : ClauseStatus::fail;
    clause.detail = "no subobject classifier";
    if (first_reason) clause.detail += ": " + *first_reason;
    return clause;
  }
};

}  // namespace

ToposReport topos_check(CategoryPtr cat, const Budget& budget) {
  Checker k(std::move(cat), budget);
  ToposReport r;

  std::vector<std::optional<Cone>> products, coproducts;
  auto terminal = k.extremal(false, r.terminal);
  auto prods = k.binary(false, products);
  auto eqs = k.equalizers(false);
  auto initial = k.extremal(true, r.initial);
  auto coprods = k.binary(true, coproducts);
  auto coeqs = k.equalizers(true);
  r.parts = {terminal, prods, eqs, initial, coprods, coeqs};
  r.finite_limits = Checker::group("finite limits", {terminal, prods, eqs});
  r.finite_colimits = Checker::group("finite colimits", {initial, coprods, coeqs});

  if (prods.status == ClauseStatus::pass) {
    r.exponentials = k.exponentials(products);
  } else {
    r.exponentials = ToposClause{"exponentials", ClauseStatus::skipped,
                                 "prerequisite missing: binary products"};
  }
  if (r.terminal) {
    r.classifier = k.classifier(*r.terminal, r.omega, r.true_arrow);
  } else {
    r.classifier = ToposClause{"subobject classifier", ClauseStatus::skipped,
                               "prerequisite missing: terminal object"};
  }
  return r;
}

// ---------------------------------------------------------------------------
// SubobjectPoset

SubobjectPoset::SubobjectPoset(const Category& cat, ObjectId a) {
  std::vector<ArrowId> monics;
  for (auto s : cat.objects())
    for (auto m : cat.hom(s, a))
      if (is_monic(cat, m)) monics.push_back(m);
  std::sort(monics.begin(), monics.end());

  auto below = [&](ArrowId m, ArrowId m2) {
    for (auto k : cat.hom(cat.dom(m), cat.dom(m2)))
      if (cat.compose(m2, k) == m) return true;
    return false;
  };
  for (auto m : monics) {
    bool fresh = true;
    for (auto r : reps_) {
      if (below(m, r) && below(r, m)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps_.push_back(m);
  }
  le_.assign(reps_.size(), std::vector<bool>(reps_.size(), false));
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (std::size_t j = 0; j < reps_.size(); ++j) le_[i][j] = below(reps_[i], reps_[j]);
}

std::optional<std::size_t> SubobjectPoset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool least = true;
    for (std::size_t j = 0; j < size() && least; ++j) least = le_[i][j];
    if (least) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> SubobjectPoset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool greatest = true;
    for (std::size_t j = 0; j < size() && greatest; ++j) greatest = le_[j][i];
    if (greatest) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> SubobjectPoset::meet(std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < size(); ++k) {
    if (!le_[k][i] || !le_[k][j]) continue;
    bool greatest = true;
    for (std::size_t l = 0; l < size() && greatest; ++l)
      if (le_[l][i] && le_[l][j]) greatest = le_[l][k];
    if (greatest) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> SubobjectPoset::join(std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < size(); ++k) {
    if (!le_[i][k] || !le_[j][k]) continue;
    bool least = true;
    for (std::size_t l = 0; l < size() && least; ++l)
      if (le_[i][l] && le_[j][l]) least = le_[k][l];
    if (least) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> SubobjectPoset::complement(std::size_t i) const {
  const auto lo = bottom();
  const auto hi = top();
  if (!lo || !hi) return std::nullopt;
  for (std::size_t c = 0; c < size(); ++c)
    if (meet(i, c) == lo && join(i, c) == hi) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Kinds

ToposKinds topos_kinds(CategoryPtr cat, const Budget& budget) {
  auto report = topos_check(cat, budget);
  return topos_kinds(std::move(cat), report, budget);
}

ToposKinds topos_kinds(CategoryPtr cat, const ToposReport& report, const Budget&) {
  const Category& c = *cat;
  ToposKinds k;
  k.nondegenerate_paper = c.object_count() > 1 && c.arrow_count() > 1;
  k.bivalent_paper = c.object_count() == 2 && c.arrow_count() == 2;

  if (!report.terminal) {
    k.notes.push_back("well_pointed_paper, nno_witness: prerequisite missing (terminal object)");
  } else {
    const auto one = *report.terminal;
    const auto& ends = c.hom(one, one);
    k.well_pointed_paper = ends.size() == 1 && c.is_identity(ends.front());

    k.nno_searched = true;
    k.notes.push_back("nno_witness searched only within the presented objects and arrows");
    for (auto nat : c.objects()) {
      for (auto zero : c.hom(one, nat)) {
        for (auto succ : c.hom(nat, nat)) {
          bool ok = true;
          for (auto a : c.objects()) {
            for (auto f : c.hom(one, a)) {
              for (auto g : c.hom(a, a)) {
                std::size_t solutions = 0;
                for (auto h : c.hom(nat, a)) {
                  if (c.compose(h, zero) == f && c.compose(h, succ) == c.compose(g, h)) ++solutions;
                }
                if (solutions != 1) {
                  ok = false;
                  break;
                }
              }
              if (!ok) break;
            }
            if (!ok) break;
          }
          if (ok) {
            k.nno_witness = NnoWitness{nat, zero, succ};
            goto nno_done;
          }
        }
      }
    }
  nno_done:;
  }

  if (!report.omega || !report.true_arrow) {
    k.notes.push_back("boolean, truth_value_count: prerequisite missing (subobject classifier)");
  } else {
    k.truth_value_count = c.hom(*report.terminal, *report.omega).size();
    bool boolean = true;
    for (auto a : c.objects()) {
      SubobjectPoset sub(c, a);
      for (std::size_t i = 0; i < sub.size() && boolean; ++i) boolean = sub.complement(i).has_value();
      if (!boolean) break;
    }
    k.boolean = boolean;
  }
  return k;
}

}  // namespace fincat
