#pragma once

// Text format for categories, finite sets, maps, diagrams, functors and
// natural transformations.
//
//   category C { object A, B; arrow f : A -> B; compose f . id_A = f; }
//   finset X = { a, b }
//   map m : X -> X { a -> b; b -> a; }
//   diagram D : parallel-pair -> C { X -> A; Y -> B; f -> f; g -> f; }
//   functor F : C -> C { A -> A; B -> B; f -> f; }
//   nattrans eta : F => F { A -> id_A; B -> id_B; }
//
// Identities are implicit and named id_<object>. Composites with an identity
// are filled in unless a compose line gives them. Names are declared before
// use and are unique across all top-level declarations. `//` starts a comment.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/finset.hpp"
#include "fincat/functor.hpp"
#include "fincat/natural.hpp"

namespace fincat::dsl {

enum class ErrorKind { lexical, syntax, resolution };

std::string_view to_string(ErrorKind k);

/// Error codes: 1xx lexical, 2xx syntax, 3xx resolution.
namespace code {
inline constexpr int unexpected_character = 101;
inline constexpr int incomplete_arrow = 102;
inline constexpr int unexpected_token = 201;
inline constexpr int unexpected_end = 202;
inline constexpr int undeclared = 301;
inline constexpr int duplicate = 302;
inline constexpr int kind_mismatch = 303;
inline constexpr int incomplete = 304;
}  // namespace code

struct ParseError {
  ErrorKind kind = ErrorKind::syntax;
  int code = 0;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, in bytes
  std::string message;
  std::string expected;    // hint, may be empty

  std::string to_string() const;
};

class ParseFailure : public Error {
 public:
  explicit ParseFailure(ParseError e) : Error(ErrorCode::parse, e.to_string()), error_(std::move(e)) {}
  const ParseError& error() const noexcept { return error_; }

 private:
  ParseError error_;
};

using Binding = std::pair<std::string, std::string>;

struct CategoryDecl {
  struct Arrow {
    std::string name, dom, cod;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };
  struct Compose {
    std::string g, f, h;  // g . f = h
    friend bool operator==(const Compose&, const Compose&) = default;
  };
  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<Compose> compositions;
  friend bool operator==(const CategoryDecl&, const CategoryDecl&) = default;
};

struct FinsetDecl {
  std::string name;
  std::vector<std::string> elements;
  friend bool operator==(const FinsetDecl&, const FinsetDecl&) = default;
};

struct MapDecl {
  std::string name, dom, cod;
  std::vector<Binding> entries;
  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

struct DiagramDecl {
  std::string name, shape, target;
  std::vector<Binding> bindings;
  friend bool operator==(const DiagramDecl&, const DiagramDecl&) = default;
};

struct FunctorDecl {
  std::string name, source, target;
  std::vector<Binding> bindings;
  friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

struct NatTransDecl {
  std::string name, from, to;
  std::vector<Binding> components;
  friend bool operator==(const NatTransDecl&, const NatTransDecl&) = default;
};

using Declaration =
    std::variant<CategoryDecl, FinsetDecl, MapDecl, DiagramDecl, FunctorDecl, NatTransDecl>;

std::string_view kind_name(const Declaration& d);
const std::string& decl_name(const Declaration& d);

struct SpecDocument {
  std::vector<Declaration> declarations;
  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/// Total: returns the document or throws ParseFailure with the first error.
SpecDocument parse_spec(std::string_view text);

/// Canonical text. parse_spec(format_spec(d)) == d for every parsed d.
std::string format_spec(const SpecDocument& doc);

bool is_identifier(std::string_view s);

/// Names resolved into library objects.
struct Workspace {
  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, FinSetObject> finsets;
  std::map<std::string, FinSetArrow> maps;
  std::map<std::string, Diagram> diagrams;
  std::map<std::string, Functor> functors;
  std::map<std::string, NatTrans> nattrans;
};

/// Builds every declaration. Arrow indices of a category: one identity per
/// object in object order, then the declared arrows.
Workspace build_workspace(const SpecDocument& doc);

/// A category block for `cat` with its full table, identity composites
/// omitted. Throws ContractError when a label is not an identifier.
std::string export_category(std::string_view name, const Category& cat,
                            const std::vector<std::string>& comments = {});

}  // namespace fincat::dsl
