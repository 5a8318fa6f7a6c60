#pragma once

// Finite presented categories: explicit objects, named arrows, designated
// identities and a composition table. Every law is decided by enumeration.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincat/config.hpp"
#include "fincat/error.hpp"

namespace fincat {

struct ObjectId {
  std::uint32_t index = 0;
  friend auto operator<=>(ObjectId, ObjectId) = default;
};

struct ArrowId {
  std::uint32_t index = 0;
  friend auto operator<=>(ArrowId, ArrowId) = default;
};

struct ArrowInfo {
  ObjectId dom;
  ObjectId cod;
  std::string label;
};

/// Composition computed on demand instead of read from a stored table.
class CompositionRule {
 public:
  virtual ~CompositionRule() = default;
  /// g . f, or nullopt when the rule has no entry for the pair.
  virtual std::optional<ArrowId> compose(ArrowId g, ArrowId f) const = 0;
};

/// Arrow indexing of a full subcategory of finite sets.
///
/// Arrows are ordered by (domain object, codomain object, code), where the
/// code of a mapping table m : A -> B is the base-|B| number whose most
/// significant digit is m(0).
class FinSetUniverse {
 public:
  explicit FinSetUniverse(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t size_of(ObjectId x) const { return sizes_.at(x.index); }
  std::size_t arrow_count() const noexcept { return total_; }

  ObjectId dom(ArrowId a) const;
  ObjectId cod(ArrowId a) const;
  std::vector<std::size_t> table(ArrowId a) const;
  ArrowId lookup(ObjectId dom, ObjectId cod,
                 std::span<const std::size_t> table) const;
  std::size_t hom_size(ObjectId dom, ObjectId cod) const;
  ArrowId first_arrow(ObjectId dom, ObjectId cod) const;

 private:
  std::size_t pair_slot(ArrowId a) const;

  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;  // (dom, cod) row-major, plus sentinel
  std::size_t total_ = 0;
};

class Category {
 public:
  Category() = default;

  std::size_t object_count() const noexcept { return object_labels_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  ObjectId dom(ArrowId a) const { return info(a).dom; }
  ObjectId cod(ArrowId a) const { return info(a).cod; }
  const ArrowInfo& info(ArrowId a) const;

  const std::string& object_label(ObjectId x) const;
  const std::string& arrow_label(ArrowId a) const { return info(a).label; }
  /// Label when present, otherwise "#<index>".
  std::string object_name(ObjectId x) const;
  std::string arrow_name(ArrowId a) const;

  std::optional<ObjectId> find_object(std::string_view label) const;
  std::optional<ArrowId> find_arrow(std::string_view label) const;

  std::optional<ArrowId> identity_of(ObjectId x) const;
  /// Throws StructuralError when no identity is designated.
  ArrowId identity(ObjectId x) const;
  bool is_identity(ArrowId a) const;

  /// Arrows x -> y in ascending index order.
  const std::vector<ArrowId>& hom(ObjectId x, ObjectId y) const;

  /// The raw table entry for g . f, if any. Never checks composability.
  std::optional<ArrowId> entry(ArrowId g, ArrowId f) const;
  /// g . f. Throws ComposabilityError for non-composable pairs and
  /// StructuralError when the table has no entry.
  ArrowId compose(ArrowId g, ArrowId f) const;

  /// Every stored table entry as (g, f, g.f), ordered by (g, f). Empty for
  /// categories whose composition is computed by a rule.
  std::vector<std::tuple<ArrowId, ArrowId, ArrowId>> table_entries() const;
  bool has_explicit_table() const noexcept { return rule_ == nullptr; }

  /// Non-null for categories built by full_subcategory_of_finset.
  const FinSetUniverse* finset_universe() const noexcept {
    return universe_.get();
  }

  std::vector<ObjectId> objects() const;
  std::vector<ArrowId> arrows() const;

  /// Opposite category: same objects and arrows, dom/cod swapped, composition
  /// table transposed.
  Category dual() const;

 private:
  friend class CategoryBuilder;
  friend Category full_subcategory_of_finset(std::span<const std::size_t>,
                                             const Budget&);

  void index_homs();

  static std::uint64_t key(ArrowId g, ArrowId f) {
    return (std::uint64_t{g.index} << 32) | f.index;
  }

  std::vector<std::string> object_labels_;
  std::vector<ArrowInfo> arrows_;
  std::vector<std::optional<ArrowId>> identities_;
  std::unordered_map<std::uint64_t, ArrowId> table_;
  std::shared_ptr<const CompositionRule> rule_;
  std::shared_ptr<const FinSetUniverse> universe_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> homs_;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Mutable assembly of a Category. build() checks that every id resolves and
/// that labels are unique; axioms are left to validate_category.
class CategoryBuilder {
 public:
  ObjectId add_object(std::string label = {});
  ArrowId add_arrow(ObjectId dom, ObjectId cod, std::string label = {});
  /// Adds an arrow labelled id_<object label> and designates it.
  ArrowId add_identity(ObjectId x);
  void set_identity(ObjectId x, ArrowId a);
  void set_composite(ArrowId g, ArrowId f, ArrowId gf);
  bool has_composite(ArrowId g, ArrowId f) const;
  /// Fills id . f = f and f . id = f for every designated identity where the
  /// table has no entry yet.
  void fill_identity_composites();

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  Category build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowInfo> arrows_;
  std::vector<std::pair<ObjectId, ArrowId>> identities_;
  std::unordered_map<std::uint64_t, ArrowId> table_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string law;
  std::vector<ArrowId> arrows;
  std::vector<ObjectId> objects;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  const Violation* find(std::string_view law) const;
};

namespace law {
inline constexpr std::string_view identity_missing = "identity missing for object";
inline constexpr std::string_view identity_not_endo = "identity is not an endomorphism";
inline constexpr std::string_view non_composable_entry = "composition defined on non-composable pair";
inline constexpr std::string_view table_incomplete = "composition table incomplete";
inline constexpr std::string_view composite_typing = "composite has wrong domain or codomain";
inline constexpr std::string_view left_identity = "left identity law";
inline constexpr std::string_view right_identity = "right identity law";
inline constexpr std::string_view associativity = "associativity";
}  // namespace law

/// Lists every violated category axiom with its lexicographically least
/// witness. Witness tuples are written in application order (f, g, h).
ValidationReport validate_category(const Category& cat);

ArrowId compose(const Category& cat, ArrowId g, ArrowId f);

// ---------------------------------------------------------------------------
// Arrow classification

struct Cancellation {
  bool holds = true;
  /// Least distinct pair (g, h) with g < h that f fails to cancel.
  std::optional<std::pair<ArrowId, ArrowId>> witness;
  explicit operator bool() const noexcept { return holds; }
};

Cancellation is_monic(const Category& cat, ArrowId f);
Cancellation is_epic(const Category& cat, ArrowId f);
std::optional<ArrowId> is_iso(const Category& cat, ArrowId f);
std::vector<ArrowId> find_isomorphisms(const Category& cat, ObjectId a,
                                       ObjectId b);
bool isomorphic(const Category& cat, ObjectId a, ObjectId b);

/// One object per listed size, one arrow per total function, composition by
/// function composition (computed, not stored).
Category full_subcategory_of_finset(std::span<const std::size_t> sizes,
                                    const Budget& budget = {});
inline Category full_subcategory_of_finset(std::initializer_list<std::size_t> sizes,
                                           const Budget& budget = {}) {
  return full_subcategory_of_finset(
      std::span<const std::size_t>(sizes.begin(), sizes.size()), budget);
}

/// Number of total functions |b|^|a| with 0^0 = 1; nullopt past `cap`.
std::optional<std::size_t> count_functions(std::size_t a, std::size_t b,
                                           std::size_t cap);

}  // namespace fincat

template <>
struct std::hash<fincat::ObjectId> {
  std::size_t operator()(fincat::ObjectId x) const noexcept { return x.index; }
};

template <>
struct std::hash<fincat::ArrowId> {
  std::size_t operator()(fincat::ArrowId a) const noexcept { return a.index; }
};
