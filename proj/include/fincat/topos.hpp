#pragma once

// Topos axioms checked inside a presented category.
//
// "Limits for all finite diagrams" is reduced to a terminal object, binary
// products and equalizers (dually: initial object, binary coproducts and
// coequalizers). Every clause is decided by the generic limits engine and
// reports either a witness or its least missing instance.

#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/config.hpp"

namespace fincat {

enum class ClauseStatus { pass, fail, unverified, skipped };

std::string_view to_string(ClauseStatus s);

struct ToposClause {
  std::string name;
  ClauseStatus status = ClauseStatus::pass;
  std::string detail;  // witness on pass, least missing instance on fail
};

inline constexpr std::string_view kLimitReduction =
    "finite limits = terminal object + binary products + equalizers; "
    "finite colimits = initial object + binary coproducts + coequalizers";

struct ToposReport {
  ToposClause finite_limits{"finite limits", ClauseStatus::pass, {}};
  ToposClause finite_colimits{"finite colimits", ClauseStatus::pass, {}};
  ToposClause exponentials{"exponentials", ClauseStatus::pass, {}};
  ToposClause classifier{"subobject classifier", ClauseStatus::pass, {}};
  /// terminal, binary products, equalizers, initial, binary coproducts,
  /// coequalizers, in that order.
  std::vector<ToposClause> parts;
  std::string reduction{kLimitReduction};

  std::optional<ObjectId> terminal;
  std::optional<ObjectId> initial;
  std::optional<ObjectId> omega;
  std::optional<ArrowId> true_arrow;

  bool is_topos() const;
  /// Detail of the first failing clause in the order above.
  std::optional<std::string> first_failure() const;
};

ToposReport topos_check(CategoryPtr cat, const Budget& budget = {});

struct NnoWitness {
  ObjectId object;
  ArrowId zero;
  ArrowId successor;
};

/// Kind predicates. `_paper` fields follow the literal textbook wording:
///   nondegenerate  more than one object and more than one arrow
///   well-pointed   the only arrow 1 -> 1 is the identity
///   bivalent       exactly two objects and two arrows
/// Optional fields are empty when their prerequisite (terminal object or
/// classifier) is missing.
struct ToposKinds {
  bool nondegenerate_paper = false;
  std::optional<bool> well_pointed_paper;
  bool bivalent_paper = false;
  std::optional<bool> boolean;
  std::optional<std::size_t> truth_value_count;
  /// Searched only among the presented objects and arrows.
  std::optional<NnoWitness> nno_witness;
  bool nno_searched = false;
  std::vector<std::string> notes;
};

ToposKinds topos_kinds(CategoryPtr cat, const Budget& budget = {});
ToposKinds topos_kinds(CategoryPtr cat, const ToposReport& report, const Budget& budget = {});

/// Subobjects of `a` up to equivalence of monomorphisms, as a poset.
class SubobjectPoset {
 public:
  SubobjectPoset(const Category& cat, ObjectId a);

  std::size_t size() const noexcept { return reps_.size(); }
  /// One representative monic per class, least arrow index first.
  const std::vector<ArrowId>& representatives() const noexcept { return reps_; }
  bool leq(std::size_t i, std::size_t j) const { return le_[i][j]; }
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> join(std::size_t i, std::size_t j) const;
  /// A class c with meet(i, c) = bottom and join(i, c) = top.
  std::optional<std::size_t> complement(std::size_t i) const;

 private:
  std::vector<ArrowId> reps_;
  std::vector<std::vector<bool>> le_;
};

}  // namespace fincat
