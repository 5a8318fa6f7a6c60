#pragma once

// Slice categories C/X and arrow categories C(->), materialized as fresh
// presented categories with provenance back to the base.

#include <optional>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/config.hpp"
#include "fincat/finset.hpp"
#include "fincat/functor.hpp"

namespace fincat {

struct SliceCategory {
  CategoryPtr category;
  CategoryPtr base;
  ObjectId over;
  std::vector<ArrowId> object_arrow;      // slice object -> base arrow into X
  std::vector<ArrowId> arrow_underlying;  // slice arrow -> base arrow f with psi . f = phi

  /// The slice object carried by a base arrow into X.
  std::optional<ObjectId> object_of(ArrowId phi) const;
};

/// Objects are the arrows into X in index order; arrows are the commuting
/// triangles, ordered by (source, target, underlying arrow). Identities are
/// labelled id_<object>, other arrows t<k>. CapacityError past max_arrows.
SliceCategory slice_category(CategoryPtr cat, ObjectId x, const Budget& budget = {});

struct ArrowCategory {
  CategoryPtr category;
  CategoryPtr base;
  std::vector<ArrowId> object_arrow;  // object -> base arrow phi
  /// Arrow -> (u, f) with psi . f = u . phi, u between codomains and f
  /// between domains.
  std::vector<std::pair<ArrowId, ArrowId>> arrow_square;

  ObjectId object_of(ArrowId phi) const { return ObjectId{phi.index}; }
};

/// Objects are all arrows of the base; arrows are the commuting squares,
/// labelled q<k> apart from identities. CapacityError past max_arrows.
ArrowCategory arrow_category(CategoryPtr cat, const Budget& budget = {});

/// (X -> I) |-> I, (u, f) |-> u.
Functor codomain_functor(const ArrowCategory& arrows);

struct InclusionFunctor {
  Functor functor;
  /// Least square (u, f) between included objects with u != id_X; its
  /// existence shows the inclusion is not full.
  std::optional<ArrowId> non_full_witness;
  bool full() const noexcept { return !non_full_witness; }
};

/// Slice object phi |-> phi, triangle f |-> (id_X, f). Both constructions
/// must share the same base.
InclusionFunctor inclusion_functor(const SliceCategory& slice, const ArrowCategory& arrows);

// --- fibers of finite-set families ----------------------------------------

struct Fiber {
  std::size_t index;                  // i in the base I
  std::vector<std::size_t> domain;    // phi^-1(i), ascending
  std::vector<std::size_t> codomain;  // psi^-1(u(i)), ascending
  FinSetArrow map;                    // f restricted, reindexed to 0..
};

/// Splits f into f_i : X_i -> Y_u(i) for a commuting square psi . f = u . phi.
/// ContractError when the square does not commute or the arrows do not chain.
std::vector<Fiber> fiber_decompose(const FinSetArrow& phi, const FinSetArrow& f,
                                   const FinSetArrow& psi, const FinSetArrow& u);

/// Inverse of fiber_decompose.
FinSetArrow fiber_reassemble(const FinSetArrow& phi, const FinSetArrow& psi,
                             const FinSetArrow& u, const std::vector<Fiber>& fibers);

/// The constant family I x X -> I (first projection).
FinSetArrow constant_family(const FinSetObject& i, const FinSetObject& x,
                            const Budget& budget = {});

}  // namespace fincat
