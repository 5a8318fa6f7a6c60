#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A functor between presented categories, given by its object and arrow
/// maps (arrow_map covers identities too).
struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<ObjectId> object_map;
  std::vector<ArrowId> arrow_map;

  ObjectId operator()(ObjectId x) const { return object_map.at(x.index); }
  ArrowId operator()(ArrowId a) const { return arrow_map.at(a.index); }
};

/// A diagram of shape J in C is a functor J -> C.
using Diagram = Functor;

/// Builds a functor from object images and images of the non-identity
/// arrows; identities go to the identities of their images unless `arrows`
/// names them explicitly. Throws ContractError if an arrow is left unmapped.
Functor make_functor(CategoryPtr source, CategoryPtr target,
                     std::vector<ObjectId> objects,
                     const std::vector<std::pair<ArrowId, ArrowId>>& arrows);

Functor identity_functor(CategoryPtr cat);
Functor constant_functor(CategoryPtr source, CategoryPtr target, ObjectId value);
/// outer . inner; throws ContractError unless inner.target is outer.source.
Functor compose_functors(const Functor& outer, const Functor& inner);

namespace law {
inline constexpr std::string_view functor_identity = "functor preserves identities";
inline constexpr std::string_view functor_typing = "functor respects domain and codomain";
inline constexpr std::string_view functor_composition = "functor preserves composition";
}  // namespace law

/// Every violated functor law with its least witness. Unresolved ids throw
/// StructuralError.
ValidationReport validate_functor(const Functor& f);
ValidationReport validate_diagram(const Diagram& d);

/// Pointer identity, or equal object/arrow/identity structure.
bool same_category(const Category& a, const Category& b);
bool same_functor(const Functor& a, const Functor& b);

}  // namespace fincat
