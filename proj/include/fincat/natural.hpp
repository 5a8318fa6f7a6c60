#pragma once

// Natural transformations and the three adjunction checkers: hom-set
// bijection, unit and counit, universal morphisms. Each checker stands on its
// own; none of them converts its data into another style.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/config.hpp"
#include "fincat/finset.hpp"
#include "fincat/functor.hpp"
#include "fincat/limits.hpp"

namespace fincat {

struct NatTrans {
  Functor from;
  Functor to;
  std::vector<ArrowId> components;  // indexed by source object

  ArrowId operator()(ObjectId x) const { return components.at(x.index); }
};

namespace law {
inline constexpr std::string_view component_typing = "component has wrong domain or codomain";
inline constexpr std::string_view naturality = "naturality square";
}  // namespace law

/// Typing of every component and every naturality square, least witness per
/// law. ContractError unless the functors are parallel.
ValidationReport validate_nat_trans(const NatTrans& eta);

NatTrans identity_nat_trans(const Functor& f);
/// (mu . eta)_A = mu_A . eta_A.
NatTrans vertical_compose(const NatTrans& mu, const NatTrans& eta);

struct HorizontalComposite {
  NatTrans result;  // components beta_{G A} . H(alpha_A)
  bool formulas_agree = true;
  /// Least object where K(alpha_A) . beta_{F A} differs.
  std::optional<ObjectId> disagreement;
};

/// alpha : F => G between C -> D, beta : H => K between D -> E.
HorizontalComposite horizontal_compose(const NatTrans& beta, const NatTrans& alpha);

// ---------------------------------------------------------------------------
// Adjunctions. F : D -> C is the left adjoint, G : C -> D the right one.

enum class Verdict { pass, fail, unverified };

std::string_view to_string(Verdict v);

struct AdjunctionCandidate {
  Functor left;    // F : D -> C
  Functor right;   // G : C -> D
  NatTrans unit;   // 1_D => G F
  NatTrans counit; // F G => 1_C
};

struct TriangleReport {
  Verdict verdict = Verdict::pass;
  /// Least Y in D with eps_{F Y} . F(eta_Y) != id_{F Y}.
  std::optional<ObjectId> left_failure;
  /// Least X in C with G(eps_X) . eta_{G X} != id_{G X}.
  std::optional<ObjectId> right_failure;
  std::string detail;
};

TriangleReport check_unit_counit(const AdjunctionCandidate& c);

/// phi_{A,B} : Hom_C(F A, B) -> Hom_D(A, G B) for every A in D, B in C.
/// maps[A * |C| + B][i] is the image of the i-th arrow of Hom_C(F A, B).
struct HomSetFamily {
  std::vector<std::vector<ArrowId>> maps;
};

struct HomSetReport {
  Verdict verdict = Verdict::pass;
  std::string detail;
  /// The checked family, or the one found by search.
  std::optional<HomSetFamily> family;
  /// Arrows of the violated square: f, then alpha (in D) or beta (in C).
  std::vector<ArrowId> witness;
};

/// Verifies a supplied family: each map a bijection, natural in A and in B.
/// Without a family, searches for one when every hom-set involved has at
/// most 8 arrows; search nodes are bounded by budget.max_cones * 100.
HomSetReport check_homset_adjunction(const Functor& f, const Functor& g,
                                     const std::optional<HomSetFamily>& family,
                                     const Budget& budget = {});

struct UniversalArrowReport {
  Verdict verdict = Verdict::pass;
  std::optional<ObjectId> object;  // Y of the first failure
  std::optional<ArrowId> arrow;    // f : F Y -> X of the first failure
  std::size_t solutions = 0;       // number of g found there
  std::string detail;
};

/// eps : F(GX) -> X is universal from F to X: for every Y and every
/// f : F Y -> X exactly one g : Y -> GX has eps . F(g) = f.
UniversalArrowReport universal_morphism_check(const Functor& f, ObjectId x, ObjectId gx,
                                              ArrowId eps);

/// Whether F carries the limit cone `lim` of d to a limit of F . d. Throws
/// ContractError unless `lim` is a limit, CapacityError when the cone budget
/// prevents a verdict.
bool check_preserves_limit(const Functor& f, const Diagram& d, const Cone& lim,
                           const Budget& budget = {});

struct HomFunctor {
  ObjectId base;    // A
  Functor functor;  // into a fresh full subcategory of finite sets
  /// Hom(A, B) for every B, elements labelled by arrow names in index order.
  std::vector<FinSetObject> carriers;
};

/// Hom(A, -). Throws CapacityError when the target category exceeds budget.
HomFunctor hom_functor(CategoryPtr cat, ObjectId a, const Budget& budget = {});
/// Several hom functors sharing one target, so transformations between them
/// can be formed.
std::vector<HomFunctor> hom_functors(CategoryPtr cat, const std::vector<ObjectId>& bases,
                                     const Budget& budget = {});

/// Precomposition with h : B -> A as a transformation Hom(A, -) => Hom(B, -).
/// Both functors must come from one hom_functors call.
NatTrans hom_precomposition(const HomFunctor& from, const HomFunctor& to, ArrowId h);

}  // namespace fincat
