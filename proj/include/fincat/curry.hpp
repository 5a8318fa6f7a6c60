#pragma once

// The adjunction A x - -| (-)^A on finite sets, checked pointwise on mapping
// tables. For |A| > 1 no finite full subcategory is closed under both
// functors, so the adjunction laws are evaluated on FinSetArrows directly;
// presented_curry_adjunction covers the closed cases |A| <= 1.

#include <functional>
#include <string>

#include "fincat/finset.hpp"
#include "fincat/natural.hpp"

namespace fincat {

struct CurryAdjunction {
  FinSetObject a;
  Budget budget;

  FinSetObject left(const FinSetObject& x) const;   // A x X
  FinSetArrow left(const FinSetArrow& f) const;     // id_A x f
  FinSetObject right(const FinSetObject& y) const;  // Y^A
  FinSetArrow right(const FinSetArrow& h) const;    // h^A

  FinSetArrow unit(const FinSetObject& x) const;    // curry(id_{A x X}) : X -> (A x X)^A
  FinSetArrow counit(const FinSetObject& y) const;  // ev : A x Y^A -> Y

  /// f : A x X -> Y  |->  curry(f) : X -> Y^A
  FinSetArrow transpose(const FinSetObject& x, const FinSetArrow& f) const;
  /// g : X -> Y^A  |->  ev . (id_A x g)
  FinSetArrow untranspose(const FinSetObject& y, const FinSetArrow& g) const;
};

/// A candidate hom-set bijection Hom(A x X, Y) -> Hom(X, Y^A).
using Transpose = std::function<FinSetArrow(const FinSetObject& x, const FinSetArrow& f)>;

struct PointwiseReport {
  bool holds = true;
  std::size_t checked = 0;
  std::string detail;  // first failure
};

/// transpose is a bijection Hom(A x X, Y) -> Hom(X, Y^A) inverse to
/// untranspose.
PointwiseReport check_curry_bijection(const CurryAdjunction& adj, const FinSetObject& x,
                                      const FinSetObject& y);

/// phi(beta . f . (id_A x alpha)) = beta^A . phi(f) . alpha for every
/// alpha : X' -> X, beta : Y -> Y' and f : A x X -> Y.
PointwiseReport check_curry_naturality(const CurryAdjunction& adj, const Transpose& phi,
                                       const FinSetObject& x2, const FinSetObject& x,
                                       const FinSetObject& y, const FinSetObject& y2);

/// eps_{A x X} . (id_A x eta_X) = id and (eps_Y)^A . eta_{Y^A} = id.
PointwiseReport check_curry_triangles(const CurryAdjunction& adj, const FinSetObject& x,
                                      const FinSetObject& y);

/// For every f : A x X -> Y exactly one g : X -> Y^A has ev . (id_A x g) = f,
/// and that g is curry(f).
PointwiseReport check_curry_universal(const CurryAdjunction& adj, const FinSetObject& x,
                                      const FinSetObject& y);

/// The bijection derived from the unit, f |-> f^A . eta_X, equals curry.
PointwiseReport check_unit_transpose(const CurryAdjunction& adj, const FinSetObject& x,
                                     const FinSetObject& y);

struct PresentedCurry {
  AdjunctionCandidate candidate;
  HomSetFamily curry_family;
};

/// The curry adjunction inside a full subcategory of finite sets. Each
/// functor picks the first object of the required size; ContractError when
/// the subcategory lacks one (always the case for some object once |A| > 1).
PresentedCurry presented_curry_adjunction(CategoryPtr cat, std::size_t a,
                                          const Budget& budget = {});

}  // namespace fincat
