#include "fincat/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fincat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::structural: return "structural";
    case ErrorCode::composability: return "composability";
    case ErrorCode::contract: return "contract";
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::parse: return "parse";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

std::optional<std::size_t> count_functions(std::size_t a, std::size_t b,
                                           std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < a; ++i) {
    if (b != 0 && n > cap / b) return std::nullopt;
    n *= b;
  }
  if (n > cap) return std::nullopt;
  return n;
}

// ---------------------------------------------------------------------------
// FinSetUniverse

FinSetUniverse::FinSetUniverse(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)) {
  const std::size_t n = sizes_.size();
  offsets_.reserve(n * n + 1);
  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      offsets_.push_back(total);
      auto count = count_functions(sizes_[a], sizes_[b], SIZE_MAX / 2);
      if (!count) throw CapacityError("finite-set hom-set too large to index");
      total += *count;
    }
  }
  offsets_.push_back(total);
  total_ = total;
}

std::size_t FinSetUniverse::pair_slot(ArrowId a) const {
  if (a.index >= total_) throw StructuralError("arrow index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(),
                             static_cast<std::size_t>(a.index));
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

ObjectId FinSetUniverse::dom(ArrowId a) const {
  return ObjectId{static_cast<std::uint32_t>(pair_slot(a) / sizes_.size())};
}

ObjectId FinSetUniverse::cod(ArrowId a) const {
  return ObjectId{static_cast<std::uint32_t>(pair_slot(a) % sizes_.size())};
}

std::vector<std::size_t> FinSetUniverse::table(ArrowId a) const {
  const std::size_t slot = pair_slot(a);
  const std::size_t n = sizes_.size();
  const std::size_t from = sizes_[slot / n];
  const std::size_t to = sizes_[slot % n];
  std::size_t code = a.index - offsets_[slot];
  std::vector<std::size_t> t(from);
  for (std::size_t i = from; i-- > 0;) {
    t[i] = code % to;
    code /= to;
  }
  return t;
}

ArrowId FinSetUniverse::lookup(ObjectId dom, ObjectId cod,
                               std::span<const std::size_t> table) const {
  const std::size_t n = sizes_.size();
  if (dom.index >= n || cod.index >= n)
    throw StructuralError("object index out of range");
  const std::size_t from = sizes_[dom.index];
  const std::size_t to = sizes_[cod.index];
  if (table.size() != from)
    throw ContractError("mapping table length does not match domain size");
  std::size_t code = 0;
  for (std::size_t v : table) {
    if (v >= to) throw ContractError("mapping table entry outside codomain");
    code = code * to + v;
  }
  return ArrowId{static_cast<std::uint32_t>(offsets_[dom.index * n + cod.index] + code)};
}

std::size_t FinSetUniverse::hom_size(ObjectId dom, ObjectId cod) const {
  const std::size_t slot = dom.index * sizes_.size() + cod.index;
  return offsets_.at(slot + 1) - offsets_.at(slot);
}

ArrowId FinSetUniverse::first_arrow(ObjectId dom, ObjectId cod) const {
  return ArrowId{static_cast<std::uint32_t>(offsets_.at(dom.index * sizes_.size() + cod.index))};
}

namespace {

class FinSetRule final : public CompositionRule {
 public:
  explicit FinSetRule(std::shared_ptr<const FinSetUniverse> u) : u_(std::move(u)) {}

  std::optional<ArrowId> compose(ArrowId g, ArrowId f) const override {
    if (u_->cod(f) != u_->dom(g)) return std::nullopt;
    const auto tf = u_->table(f);
    const auto tg = u_->table(g);
    std::vector<std::size_t> out(tf.size());
    for (std::size_t i = 0; i < tf.size(); ++i) out[i] = tg[tf[i]];
    return u_->lookup(u_->dom(f), u_->cod(g), out);
  }

 private:
  std::shared_ptr<const FinSetUniverse> u_;
};

class OppositeRule final : public CompositionRule {
 public:
  explicit OppositeRule(std::shared_ptr<const CompositionRule> base)
      : base_(std::move(base)) {}

  std::optional<ArrowId> compose(ArrowId g, ArrowId f) const override {
    return base_->compose(f, g);
  }

 private:
  std::shared_ptr<const CompositionRule> base_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Category

const ArrowInfo& Category::info(ArrowId a) const {
  if (a.index >= arrows_.size())
    throw StructuralError("arrow #" + std::to_string(a.index) + " does not exist");
  return arrows_[a.index];
}

const std::string& Category::object_label(ObjectId x) const {
  if (x.index >= object_labels_.size())
    throw StructuralError("object #" + std::to_string(x.index) + " does not exist");
  return object_labels_[x.index];
}

std::string Category::object_name(ObjectId x) const {
  const auto& label = object_label(x);
  return label.empty() ? "#" + std::to_string(x.index) : label;
}

std::string Category::arrow_name(ArrowId a) const {
  const auto& label = arrow_label(a);
  return label.empty() ? "#" + std::to_string(a.index) : label;
}

std::optional<ObjectId> Category::find_object(std::string_view label) const {
  auto it = object_index_.find(std::string(label));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Category::find_arrow(std::string_view label) const {
  auto it = arrow_index_.find(std::string(label));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Category::identity_of(ObjectId x) const {
  if (x.index >= identities_.size())
    throw StructuralError("object #" + std::to_string(x.index) + " does not exist");
  return identities_[x.index];
}

ArrowId Category::identity(ObjectId x) const {
  auto id = identity_of(x);
  if (!id) throw StructuralError("no identity designated for object " + object_name(x));
  return *id;
}

bool Category::is_identity(ArrowId a) const {
  const auto& i = info(a);
  auto id = identities_[i.dom.index];
  return id && *id == a;
}

const std::vector<ArrowId>& Category::hom(ObjectId x, ObjectId y) const {
  const std::size_t n = object_count();
  if (x.index >= n || y.index >= n) throw StructuralError("object index out of range");
  return homs_[x.index * n + y.index];
}

std::optional<ArrowId> Category::entry(ArrowId g, ArrowId f) const {
  if (rule_) return rule_->compose(g, f);
  auto it = table_.find(key(g, f));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

ArrowId Category::compose(ArrowId g, ArrowId f) const {
  if (cod(f) != dom(g)) {
    throw ComposabilityError("cannot compose " + arrow_name(g) + " . " + arrow_name(f) +
                             ": codomain of " + arrow_name(f) + " is " +
                             object_name(cod(f)) + " but domain of " + arrow_name(g) +
                             " is " + object_name(dom(g)));
  }
  auto h = entry(g, f);
  if (!h) {
    throw StructuralError("composition table has no entry for " + arrow_name(g) +
                          " . " + arrow_name(f));
  }
  return *h;
}

std::vector<std::tuple<ArrowId, ArrowId, ArrowId>> Category::table_entries() const {
  std::vector<std::tuple<ArrowId, ArrowId, ArrowId>> out;
  if (rule_) return out;
  out.reserve(table_.size());
  for (const auto& [k, h] : table_) {
    out.emplace_back(ArrowId{static_cast<std::uint32_t>(k >> 32)},
                     ArrowId{static_cast<std::uint32_t>(k & 0xffffffffu)}, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ObjectId> Category::objects() const {
  std::vector<ObjectId> out(object_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ObjectId{static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<ArrowId> Category::arrows() const {
  std::vector<ArrowId> out(arrow_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ArrowId{static_cast<std::uint32_t>(i)};
  return out;
}

void Category::index_homs() {
  const std::size_t n = object_count();
  homs_.assign(n * n, {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    homs_[a.dom.index * n + a.cod.index].push_back(ArrowId{static_cast<std::uint32_t>(i)});
  }
  object_index_.clear();
  arrow_index_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (!object_labels_[i].empty())
      object_index_.emplace(object_labels_[i], ObjectId{static_cast<std::uint32_t>(i)});
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (!arrows_[i].label.empty())
      arrow_index_.emplace(arrows_[i].label, ArrowId{static_cast<std::uint32_t>(i)});
  }
}

Category Category::dual() const {
  Category op;
  op.object_labels_ = object_labels_;
  op.arrows_ = arrows_;
  for (auto& a : op.arrows_) std::swap(a.dom, a.cod);
  op.identities_ = identities_;
  if (rule_) {
    op.rule_ = std::make_shared<OppositeRule>(rule_);
  } else {
    op.table_.reserve(table_.size());
    for (const auto& [k, h] : table_) {
      ArrowId g{static_cast<std::uint32_t>(k >> 32)};
      ArrowId f{static_cast<std::uint32_t>(k & 0xffffffffu)};
      op.table_.emplace(key(f, g), h);
    }
  }
  op.index_homs();
  return op;
}

// ---------------------------------------------------------------------------
// CategoryBuilder

ObjectId CategoryBuilder::add_object(std::string label) {
  objects_.push_back(std::move(label));
  return ObjectId{static_cast<std::uint32_t>(objects_.size() - 1)};
}

ArrowId CategoryBuilder::add_arrow(ObjectId dom, ObjectId cod, std::string label) {
  arrows_.push_back(ArrowInfo{dom, cod, std::move(label)});
  return ArrowId{static_cast<std::uint32_t>(arrows_.size() - 1)};
}

ArrowId CategoryBuilder::add_identity(ObjectId x) {
  std::string label;
  if (x.index < objects_.size() && !objects_[x.index].empty())
    label = "id_" + objects_[x.index];
  auto a = add_arrow(x, x, std::move(label));
  set_identity(x, a);
  return a;
}

void CategoryBuilder::set_identity(ObjectId x, ArrowId a) {
  for (auto& [obj, arrow] : identities_) {
    if (obj == x) {
      arrow = a;
      return;
    }
  }
  identities_.emplace_back(x, a);
}

void CategoryBuilder::set_composite(ArrowId g, ArrowId f, ArrowId gf) {
  table_[(std::uint64_t{g.index} << 32) | f.index] = gf;
}

bool CategoryBuilder::has_composite(ArrowId g, ArrowId f) const {
  return table_.contains((std::uint64_t{g.index} << 32) | f.index);
}

void CategoryBuilder::fill_identity_composites() {
  for (const auto& [x, id] : identities_) {
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      ArrowId f{static_cast<std::uint32_t>(i)};
      if (arrows_[i].cod == x && !has_composite(id, f)) set_composite(id, f, f);
      if (arrows_[i].dom == x && !has_composite(f, id)) set_composite(f, id, f);
    }
  }
}

Category CategoryBuilder::build() const {
  const std::size_t n = objects_.size();
  const std::size_t m = arrows_.size();
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& label : objects_) {
      if (!label.empty() && ++seen[label] > 1)
        throw StructuralError("duplicate object label '" + label + "'");
    }
    seen.clear();
    for (const auto& a : arrows_) {
      if (!a.label.empty() && ++seen[a.label] > 1)
        throw StructuralError("duplicate arrow label '" + a.label + "'");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (arrows_[i].dom.index >= n || arrows_[i].cod.index >= n)
      throw StructuralError("arrow #" + std::to_string(i) + " refers to a missing object");
  }
  Category cat;
  cat.object_labels_ = objects_;
  cat.arrows_ = arrows_;
  cat.identities_.assign(n, std::nullopt);
  for (const auto& [x, a] : identities_) {
    if (x.index >= n) throw StructuralError("identity designated for a missing object");
    if (a.index >= m) throw StructuralError("identity designation refers to a missing arrow");
    cat.identities_[x.index] = a;
  }
  for (const auto& [k, h] : table_) {
    const auto g = k >> 32;
    const auto f = k & 0xffffffffu;
    if (g >= m || f >= m || h.index >= m)
      throw StructuralError("composition table refers to a missing arrow");
  }
  cat.table_ = table_;
  cat.index_homs();
  return cat;
}

// ---------------------------------------------------------------------------
// Validation

const Violation* ValidationReport::find(std::string_view law) const {
  for (const auto& v : violations)
    if (v.law == law) return &v;
  return nullptr;
}

ValidationReport validate_category(const Category& cat) {
  ValidationReport report;
  const std::size_t n = cat.object_count();
  const std::size_t m = cat.arrow_count();

  std::vector<std::vector<ArrowId>> out(n);
  for (auto a : cat.arrows()) out[cat.dom(a).index].push_back(a);

  auto add = [&](std::string_view law, std::vector<ArrowId> arrows,
                 std::vector<ObjectId> objects, std::string detail) {
    report.violations.push_back(
        Violation{std::string(law), std::move(arrows), std::move(objects), std::move(detail)});
  };

  for (auto x : cat.objects()) {
    if (!cat.identity_of(x)) {
      add(law::identity_missing, {}, {x}, "object " + cat.object_name(x) + " has no identity");
      break;
    }
  }
  for (auto x : cat.objects()) {
    auto id = cat.identity_of(x);
    if (id && (cat.dom(*id) != x || cat.cod(*id) != x)) {
      add(law::identity_not_endo, {*id}, {x},
          cat.arrow_name(*id) + " is designated identity of " + cat.object_name(x) +
              " but is not an endomorphism of it");
      break;
    }
  }

  for (const auto& [g, f, h] : cat.table_entries()) {
    if (cat.cod(f) != cat.dom(g)) {
      add(law::non_composable_entry, {f, g}, {},
          "table defines " + cat.arrow_name(g) + " . " + cat.arrow_name(f));
      break;
    }
  }

  bool typing_reported = false;
  bool incomplete_reported = false;
  for (std::size_t i = 0; i < m; ++i) {
    ArrowId f{static_cast<std::uint32_t>(i)};
    for (auto g : out[cat.cod(f).index]) {
      auto h = cat.entry(g, f);
      if (!h) {
        if (!incomplete_reported) {
          add(law::table_incomplete, {f, g}, {},
              "no entry for " + cat.arrow_name(g) + " . " + cat.arrow_name(f));
          incomplete_reported = true;
        }
        continue;
      }
      if (!typing_reported && (cat.dom(*h) != cat.dom(f) || cat.cod(*h) != cat.cod(g))) {
        add(law::composite_typing, {f, g, *h}, {},
            cat.arrow_name(g) + " . " + cat.arrow_name(f) + " = " + cat.arrow_name(*h) +
                " does not run " + cat.object_name(cat.dom(f)) + " -> " +
                cat.object_name(cat.cod(g)));
        typing_reported = true;
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    ArrowId f{static_cast<std::uint32_t>(i)};
    auto id = cat.identity_of(cat.cod(f));
    if (!id) continue;
    auto h = cat.entry(*id, f);
    if (h && *h != f) {
      add(law::left_identity, {f}, {cat.cod(f)},
          "id . " + cat.arrow_name(f) + " = " + cat.arrow_name(*h));
      break;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    ArrowId f{static_cast<std::uint32_t>(i)};
    auto id = cat.identity_of(cat.dom(f));
    if (!id) continue;
    auto h = cat.entry(f, *id);
    if (h && *h != f) {
      add(law::right_identity, {f}, {cat.dom(f)},
          cat.arrow_name(f) + " . id = " + cat.arrow_name(*h));
      break;
    }
  }

  auto well_typed = [&](ArrowId g, ArrowId f, std::optional<ArrowId> h) {
    return h && cat.dom(*h) == cat.dom(f) && cat.cod(*h) == cat.cod(g);
  };
  for (std::size_t i = 0; i < m; ++i) {
    ArrowId f{static_cast<std::uint32_t>(i)};
    for (auto g : out[cat.cod(f).index]) {
      auto gf = cat.entry(g, f);
      if (!well_typed(g, f, gf)) continue;
      for (auto h : out[cat.cod(g).index]) {
        auto hg = cat.entry(h, g);
        if (!well_typed(h, g, hg)) continue;
        auto left = cat.entry(*hg, f);
        auto right = cat.entry(h, *gf);
        if (!left || !right) continue;
        if (*left != *right) {
          add(law::associativity, {f, g, h}, {},
              "(" + cat.arrow_name(h) + " . " + cat.arrow_name(g) + ") . " +
                  cat.arrow_name(f) + " = " + cat.arrow_name(*left) + " but " +
                  cat.arrow_name(h) + " . (" + cat.arrow_name(g) + " . " +
                  cat.arrow_name(f) + ") = " + cat.arrow_name(*right));
          return report;
        }
      }
    }
  }
  return report;
}

ArrowId compose(const Category& cat, ArrowId g, ArrowId f) { return cat.compose(g, f); }

// ---------------------------------------------------------------------------
// Arrow classification

namespace {

// Groups `candidates` (ascending) by (object, image) and returns the
// lexicographically least colliding pair.
template <typename Image>
std::optional<std::pair<ArrowId, ArrowId>> least_collision(
    const std::vector<ArrowId>& candidates, Image image) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, ArrowId> first;
  std::optional<std::pair<ArrowId, ArrowId>> best;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> paired;
  for (auto g : candidates) {
    auto [obj, img] = image(g);
    auto k = std::make_pair(obj.index, img.index);
    auto it = first.find(k);
    if (it == first.end()) {
      first.emplace(k, g);
      continue;
    }
    if (paired[k]) continue;
    paired[k] = true;
    auto pair = std::make_pair(it->second, g);
    if (!best || pair < *best) best = pair;
  }
  return best;
}

}  // namespace

Cancellation is_monic(const Category& cat, ArrowId f) {
  const auto a = cat.dom(f);
  std::vector<ArrowId> into;
  for (auto c : cat.objects())
    for (auto g : cat.hom(c, a)) into.push_back(g);
  std::sort(into.begin(), into.end());
  auto w = least_collision(into, [&](ArrowId g) {
    return std::make_pair(cat.dom(g), cat.compose(f, g));
  });
  return Cancellation{!w.has_value(), w};
}

Cancellation is_epic(const Category& cat, ArrowId f) {
  const auto b = cat.cod(f);
  std::vector<ArrowId> from;
  for (auto c : cat.objects())
    for (auto g : cat.hom(b, c)) from.push_back(g);
  std::sort(from.begin(), from.end());
  auto w = least_collision(from, [&](ArrowId g) {
    return std::make_pair(cat.cod(g), cat.compose(g, f));
  });
  return Cancellation{!w.has_value(), w};
}

std::optional<ArrowId> is_iso(const Category& cat, ArrowId f) {
  const auto a = cat.dom(f);
  const auto b = cat.cod(f);
  const auto id_a = cat.identity_of(a);
  const auto id_b = cat.identity_of(b);
  if (!id_a || !id_b) return std::nullopt;
  if (f == *id_a) return f;
  for (auto g : cat.hom(b, a)) {
    if (cat.compose(g, f) == *id_a && cat.compose(f, g) == *id_b) return g;
  }
  return std::nullopt;
}

std::vector<ArrowId> find_isomorphisms(const Category& cat, ObjectId a, ObjectId b) {
  std::vector<ArrowId> out;
  for (auto f : cat.hom(a, b))
    if (is_iso(cat, f)) out.push_back(f);
  return out;
}

bool isomorphic(const Category& cat, ObjectId a, ObjectId b) {
  if (a == b && cat.identity_of(a)) return true;
  for (auto f : cat.hom(a, b))
    if (is_iso(cat, f)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Full subcategories of FinSet

Category full_subcategory_of_finset(std::span<const std::size_t> sizes,
                                    const Budget& budget) {
  std::size_t total = 0;
  for (auto a : sizes) {
    for (auto b : sizes) {
      auto count = count_functions(a, b, budget.max_arrows);
      if (!count || total + *count > budget.max_arrows) {
        throw CapacityError("full subcategory exceeds the arrow budget of " +
                            std::to_string(budget.max_arrows));
      }
      total += *count;
    }
  }
  auto universe = std::make_shared<FinSetUniverse>(
      std::vector<std::size_t>(sizes.begin(), sizes.end()));

  Category cat;
  const std::size_t n = sizes.size();
  cat.object_labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cat.object_labels_.push_back("X" + std::to_string(i));
  cat.identities_.assign(n, std::nullopt);
  cat.arrows_.reserve(total);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ObjectId da{static_cast<std::uint32_t>(a)};
      const ObjectId cb{static_cast<std::uint32_t>(b)};
      const std::size_t count = universe->hom_size(da, cb);
      std::optional<std::size_t> id_code;
      if (a == b) {
        std::vector<std::size_t> t(sizes[a]);
        std::iota(t.begin(), t.end(), std::size_t{0});
        id_code = universe->lookup(da, cb, t).index - universe->first_arrow(da, cb).index;
      }
      for (std::size_t code = 0; code < count; ++code) {
        std::string label;
        if (id_code && *id_code == code) {
          label = "id_X" + std::to_string(a);
          cat.identities_[a] = ArrowId{static_cast<std::uint32_t>(cat.arrows_.size())};
        } else {
          label = "f" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(code);
        }
        cat.arrows_.push_back(ArrowInfo{da, cb, std::move(label)});
      }
    }
  }
  cat.rule_ = std::make_shared<FinSetRule>(universe);
  cat.universe_ = universe;
  cat.index_homs();
  return cat;
}

}  // namespace fincat
