#pragma once

// Limits and colimits of finite diagrams by exhaustive cone enumeration.
//
// For every candidate apex L the engine enumerates all cones at L and keeps
// those that are universal: for each apex N the map u |-> (phi_X . u) from
// Hom(N, L) to the cones at N must be a bijection. This is the definition of
// a limit read literally; no algebraic shortcuts are taken.

#include <optional>
#include <string_view>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/config.hpp"
#include "fincat/functor.hpp"

namespace fincat {

enum class Shape { empty, discrete_pair, parallel_pair, cospan, span };

std::string_view to_string(Shape s);
std::optional<Shape> parse_shape(std::string_view name);

/// Index categories:
///   empty          no objects
///   discrete-pair  X, Y
///   parallel-pair  X, Y; f, g : X -> Y
///   cospan         X, Y, Z; f : X -> Z, g : Y -> Z
///   span           X, Y, Z; f : Z -> X, g : Z -> Y
CategoryPtr build_shape(Shape s);

/// Diagram of a named shape. `objects` lists images of X, Y[, Z]; `arrows`
/// lists images of f[, g].
Diagram shape_diagram(Shape s, CategoryPtr target, std::vector<ObjectId> objects,
                      std::vector<ArrowId> arrows = {});

struct Cone {
  ObjectId apex;
  std::vector<ArrowId> legs;  // one per index object, apex -> D(X)
  friend bool operator==(const Cone&, const Cone&) = default;
};

struct Cocone {
  ObjectId nadir;
  std::vector<ArrowId> legs;  // one per index object, D(X) -> nadir
  friend bool operator==(const Cocone&, const Cocone&) = default;
};

bool is_cone(const Diagram& d, const Cone& c);
bool is_cocone(const Diagram& d, const Cocone& c);

template <typename C>
struct ConeEnumeration {
  std::vector<C> cones;
  bool truncated = false;  // cone budget hit; the list is a prefix
};

/// Every cone, ordered by apex index and then lexicographically by legs.
ConeEnumeration<Cone> enumerate_cones(const Diagram& d, const Budget& budget = {});
ConeEnumeration<Cocone> enumerate_cocones(const Diagram& d, const Budget& budget = {});

enum class UniversalStatus {
  found,
  absent,
  ambiguous,        // non-isomorphic universal apexes: the presentation is broken
  budget_exceeded,  // universality unverified
};

std::string_view to_string(UniversalStatus s);

template <typename C>
struct UniversalResult {
  UniversalStatus status = UniversalStatus::absent;
  /// Least universal (co)cone by apex index.
  std::optional<C> universal;
  /// Every object carrying some universal (co)cone.
  std::vector<ObjectId> qualifying;
  /// Certificate: every (co)cone and its mediating arrow into (out of) the
  /// universal one. Empty unless status is found.
  std::vector<C> cones;
  std::vector<ArrowId> mediating;

  bool found() const noexcept { return status == UniversalStatus::found; }
};

using LimitResult = UniversalResult<Cone>;
using ColimitResult = UniversalResult<Cocone>;

LimitResult find_limit(const Diagram& d, const Budget& budget = {});
ColimitResult find_colimit(const Diagram& d, const Budget& budget = {});

/// Whether this particular (co)cone is universal; nullopt when the cone
/// budget prevents verification. Non-cones are never universal.
std::optional<bool> is_limit_cone(const Diagram& d, const Cone& c, const Budget& budget = {});
std::optional<bool> is_colimit_cocone(const Diagram& d, const Cocone& c,
                                      const Budget& budget = {});

/// The unique u with phi_X . u = psi_X. Throws ContractError when `limit` is
/// not a verified limit or `other` is not a cone over the same diagram.
ArrowId mediating_morphism(const Diagram& d, const LimitResult& limit, const Cone& other);
/// The unique u with u . lambda_X = lambda'_X.
ArrowId mediating_morphism(const Diagram& d, const ColimitResult& colimit,
                           const Cocone& other);

/// Same object and arrow maps between the opposite categories.
Diagram dual_diagram(const Diagram& d);

/// Square p2 ; g = p1 ; f over the cospan X -f-> Z <-g- Y is a pullback.
std::optional<bool> is_pullback_square(CategoryPtr cat, ArrowId f, ArrowId g, ArrowId p1,
                                       ArrowId p2, const Budget& budget = {});

}  // namespace fincat
