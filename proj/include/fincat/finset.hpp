#pragma once

// Direct constructions in the category of finite sets. Elements are the
// indices 0..size-1; every construction uses one fixed canonical encoding:
//
//   product      (a, b)            -> a * |B| + b
//   coproduct    a, b              -> a, |A| + b
//   equalizer    agreeing elements in ascending order
//   coequalizer  classes ordered by their least member
//   pullback     pairs (x, y) with f(x) = g(y), lexicographic
//   exponential  mapping m : A -> B -> sum m(a) * |B|^(|A|-1-a)

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/config.hpp"

namespace fincat {

struct FinSetObject {
  std::size_t size = 0;
  /// Empty, or one distinct display name per element.
  std::vector<std::string> labels;

  static FinSetObject of_size(std::size_t n) { return FinSetObject{n, {}}; }
  /// Throws ContractError on duplicate labels.
  static FinSetObject labelled(std::vector<std::string> labels);

  std::string element_name(std::size_t i) const;
  friend bool operator==(const FinSetObject&, const FinSetObject&) = default;
};

struct FinSetArrow {
  FinSetObject dom;
  FinSetObject cod;
  std::vector<std::size_t> table;

  /// Throws ContractError unless table has dom.size entries below cod.size.
  static FinSetArrow make(FinSetObject dom, FinSetObject cod, std::vector<std::size_t> table);

  std::size_t operator()(std::size_t x) const { return table.at(x); }
  friend bool operator==(const FinSetArrow& a, const FinSetArrow& b) {
    return a.dom.size == b.dom.size && a.cod.size == b.cod.size && a.table == b.table;
  }
};

FinSetArrow fs_identity(const FinSetObject& a);
/// g . f; throws ContractError when the carriers do not match.
FinSetArrow fs_compose(const FinSetArrow& g, const FinSetArrow& f);
bool fs_has_injective_table(const FinSetArrow& f);

/// All total mappings a -> b in code order. Throws CapacityError past the
/// carrier budget.
std::vector<FinSetArrow> fs_hom(const FinSetObject& a, const FinSetObject& b,
                                const Budget& budget = {});

// --- (co)limits ------------------------------------------------------------

struct ProductBundle {
  FinSetObject object;
  FinSetArrow first;   // pi_1
  FinSetArrow second;  // pi_2
};

ProductBundle fs_product(const FinSetObject& a, const FinSetObject& b, const Budget& budget = {});
/// The unique u : X -> A x B with pi_1 . u = f and pi_2 . u = g.
FinSetArrow fs_pair(const ProductBundle& p, const FinSetArrow& f, const FinSetArrow& g);
/// f x g : A x C -> A' x C' between canonical products.
FinSetArrow fs_product_map(const FinSetArrow& f, const FinSetArrow& g, const Budget& budget = {});

struct CoproductBundle {
  FinSetObject object;
  FinSetArrow first;   // iota_1
  FinSetArrow second;  // iota_2
};

CoproductBundle fs_coproduct(const FinSetObject& a, const FinSetObject& b,
                             const Budget& budget = {});
/// The unique u : A + B -> X with u . iota_1 = f and u . iota_2 = g.
FinSetArrow fs_copair(const CoproductBundle& c, const FinSetArrow& f, const FinSetArrow& g);

struct EqualizerBundle {
  FinSetObject object;
  FinSetArrow inclusion;
};

EqualizerBundle fs_equalizer(const FinSetArrow& f, const FinSetArrow& g);
/// The unique u with e . u = z; z must equalize the pair.
FinSetArrow fs_equalizer_factor(const EqualizerBundle& e, const FinSetArrow& f,
                                const FinSetArrow& g, const FinSetArrow& z);

struct CoequalizerBundle {
  FinSetObject object;
  FinSetArrow quotient;
};

CoequalizerBundle fs_coequalizer(const FinSetArrow& f, const FinSetArrow& g);
/// The unique u with u . q = z; z must coequalize the pair.
FinSetArrow fs_coequalizer_factor(const CoequalizerBundle& q, const FinSetArrow& f,
                                  const FinSetArrow& g, const FinSetArrow& z);

struct PullbackBundle {
  FinSetObject object;
  FinSetArrow first;   // p1 : P -> dom f
  FinSetArrow second;  // p2 : P -> dom g
};

PullbackBundle fs_pullback(const FinSetArrow& f, const FinSetArrow& g, const Budget& budget = {});
FinSetArrow fs_pullback_factor(const PullbackBundle& p, const FinSetArrow& f,
                               const FinSetArrow& g, const FinSetArrow& q1,
                               const FinSetArrow& q2);
/// Whether p1, p2 form a pullback of the cospan f, g (commuting, and
/// P -> {(x, y) | f x = g y} bijective).
bool fs_is_pullback(const FinSetArrow& f, const FinSetArrow& g, const FinSetArrow& p1,
                    const FinSetArrow& p2);

struct PushoutBundle {
  FinSetObject object;
  FinSetArrow first;   // cod f -> P
  FinSetArrow second;  // cod g -> P
};

PushoutBundle fs_pushout(const FinSetArrow& f, const FinSetArrow& g, const Budget& budget = {});
FinSetArrow fs_pushout_factor(const PushoutBundle& p, const FinSetArrow& f,
                              const FinSetArrow& g, const FinSetArrow& q1,
                              const FinSetArrow& q2);

enum class Extremal { terminal, initial };

FinSetObject fs_extremal(Extremal kind);
FinSetArrow fs_to_terminal(const FinSetObject& x);
FinSetArrow fs_from_initial(const FinSetObject& x);

// --- exponentials ----------------------------------------------------------

struct ExponentialBundle {
  FinSetObject base;        // A
  FinSetObject target;      // B
  FinSetObject exp_object;  // B^A
  ProductBundle domain;     // A x B^A
  FinSetArrow ev;           // A x B^A -> B

  std::vector<std::size_t> decode(std::size_t code) const;
  std::size_t encode(const std::vector<std::size_t>& table) const;
};

ExponentialBundle fs_exponential(const FinSetObject& a, const FinSetObject& b,
                                 const Budget& budget = {});
/// For f : A x C -> B, the unique f^ : C -> B^A with ev . (id_A x f^) = f.
FinSetArrow fs_curry(const FinSetObject& a, const FinSetObject& c, const FinSetArrow& f,
                     const Budget& budget = {});
/// Inverse of fs_curry: g : C -> B^A gives ev . (id_A x g) : A x C -> B.
FinSetArrow fs_uncurry(const FinSetObject& a, const FinSetObject& b, const FinSetArrow& g,
                       const Budget& budget = {});
/// The point 1 -> B^A encoding f.
FinSetArrow fs_name(const FinSetArrow& f, const Budget& budget = {});
/// Postcomposition h^A : Y^A -> Y'^A.
FinSetArrow fs_exp_map(const FinSetObject& a, const FinSetArrow& h, const Budget& budget = {});

// --- members ---------------------------------------------------------------

std::vector<FinSetArrow> fs_members(const FinSetObject& a);

struct PointClassification {
  bool injective = false;
  bool surjective = false;
};

/// Injectivity and surjectivity quantified over members 1 -> A.
PointClassification fs_point_classify(const FinSetArrow& f);

/// The arrow of a full finite-set subcategory carrying `f`, between the given
/// objects; throws ContractError on size mismatch.
ArrowId fs_embed(const Category& cat, ObjectId dom, ObjectId cod, const FinSetArrow& f);
FinSetArrow fs_extract(const Category& cat, ArrowId a);

}  // namespace fincat
