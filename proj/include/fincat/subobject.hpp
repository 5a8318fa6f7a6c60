#pragma once

// Subobjects of finite sets, the classifier Omega, the Heyting algebra of
// subobjects and power objects.

#include <cstddef>
#include <vector>

#include "fincat/config.hpp"
#include "fincat/finset.hpp"

namespace fincat {

/// A subobject in normal form: the sorted image of a monomorphism.
struct Subobject {
  FinSetObject ambient;
  std::vector<std::size_t> members;

  /// Sorts and dedupes; ContractError for elements outside the ambient set.
  static Subobject of(FinSetObject ambient, std::vector<std::size_t> members);
  /// The image of an injective arrow; ContractError if `m` is not injective.
  static Subobject from_mono(const FinSetArrow& m);

  bool contains(std::size_t x) const;
  FinSetObject carrier() const { return FinSetObject::of_size(members.size()); }
  FinSetArrow inclusion() const;

  friend bool operator==(const Subobject& a, const Subobject& b) {
    return a.ambient.size == b.ambient.size && a.members == b.members;
  }
};

struct Omega {
  FinSetObject object;     // labels false, true
  FinSetArrow true_arrow;  // 1 -> Omega selecting index 1
};

inline constexpr std::size_t kFalse = 0;
inline constexpr std::size_t kTrue = 1;

Omega fs_subobject_classifier();
/// 1 -> Omega classifying the empty subobject of 1.
FinSetArrow fs_false_arrow();

FinSetArrow fs_characteristic(const Subobject& s);
/// Whether chi makes (S -> 1, S >-> A, true, chi) a pullback square.
bool fs_classifies(const Subobject& s, const FinSetArrow& chi);
/// The subobject pulled back from true along chi.
Subobject fs_classified(const FinSetArrow& chi);

/// f^-1(S) for S on cod(f).
Subobject fs_inverse_image(const FinSetArrow& f, const Subobject& s);

/// Sub(A) with its lattice operations. Implication is computed as the largest
/// U with S meet U <= T by search over all subobjects.
class SubobjectAlgebra {
 public:
  explicit SubobjectAlgebra(FinSetObject ambient, const Budget& budget = {});

  const FinSetObject& ambient() const noexcept { return ambient_; }
  /// Every subobject, ordered by membership bitmask (element i is bit i).
  const std::vector<Subobject>& all() const noexcept { return all_; }

  Subobject top() const;
  Subobject bottom() const;
  bool leq(const Subobject& s, const Subobject& t) const;
  Subobject meet(const Subobject& s, const Subobject& t) const;
  Subobject join(const Subobject& s, const Subobject& t) const;
  Subobject implies(const Subobject& s, const Subobject& t) const;
  Subobject complement(const Subobject& s) const;

 private:
  void require_ambient(const Subobject& s) const;

  FinSetObject ambient_;
  std::vector<Subobject> all_;
};

struct PowerObject {
  ExponentialBundle exp;   // Omega^A
  FinSetObject object;     // P(A)
  FinSetArrow membership;  // A x P(A) -> Omega

  /// The point of P(A) naming chi_S.
  FinSetArrow point_of(const Subobject& s) const;
};

PowerObject fs_power_object(const FinSetObject& a, const Budget& budget = {});

}  // namespace fincat
