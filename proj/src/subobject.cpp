#include "fincat/subobject.hpp"

#include <algorithm>

namespace fincat {

Subobject Subobject::of(FinSetObject ambient, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= ambient.size)
    throw ContractError("subobject member " + std::to_string(members.back()) +
                        " outside ambient set of size " + std::to_string(ambient.size));
  return Subobject{std::move(ambient), std::move(members)};
}

Subobject Subobject::from_mono(const FinSetArrow& m) {
  if (!fs_has_injective_table(m)) throw ContractError("subobject needs a monic (injective) arrow");
  return of(m.cod, m.table);
}

bool Subobject::contains(std::size_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

FinSetArrow Subobject::inclusion() const { return FinSetArrow{carrier(), ambient, members}; }

Omega fs_subobject_classifier() {
  Omega o;
  o.object = FinSetObject::labelled({"false", "true"});
  o.true_arrow = FinSetArrow{fs_extremal(Extremal::terminal), o.object, {kTrue}};
  return o;
}

FinSetArrow fs_false_arrow() {
  return FinSetArrow{fs_extremal(Extremal::terminal), fs_subobject_classifier().object, {kFalse}};
}

FinSetArrow fs_characteristic(const Subobject& s) {
  const auto omega = fs_subobject_classifier();
  std::vector<std::size_t> t(s.ambient.size, kFalse);
  for (auto m : s.members) t[m] = kTrue;
  return FinSetArrow{s.ambient, omega.object, std::move(t)};
}

bool fs_classifies(const Subobject& s, const FinSetArrow& chi) {
  const auto omega = fs_subobject_classifier();
  if (chi.dom.size != s.ambient.size || chi.cod.size != omega.object.size) return false;
  return fs_is_pullback(chi, omega.true_arrow, s.inclusion(), fs_to_terminal(s.carrier()));
}

Subobject fs_classified(const FinSetArrow& chi) {
  const auto omega = fs_subobject_classifier();
  auto p = fs_pullback(chi, omega.true_arrow);
  return Subobject::from_mono(p.first);
}

Subobject fs_inverse_image(const FinSetArrow& f, const Subobject& s) {
  if (s.ambient.size != f.cod.size)
    throw ContractError("inverse image needs a subobject of the codomain");
  std::vector<std::size_t> members;
  for (std::size_t b = 0; b < f.dom.size; ++b)
    if (s.contains(f.table[b])) members.push_back(b);
  return Subobject{f.dom, std::move(members)};
}

// --- SubobjectAlgebra -------------------------------------------------------

SubobjectAlgebra::SubobjectAlgebra(FinSetObject ambient, const Budget& budget)
    : ambient_(std::move(ambient)) {
  if (ambient_.size >= 63 || (std::size_t{1} << ambient_.size) > budget.max_carrier)
    throw CapacityError("subobject lattice exceeds the carrier budget of " +
                        std::to_string(budget.max_carrier));
  const std::size_t n = std::size_t{1} << ambient_.size;
  all_.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ambient_.size; ++i)
      if (mask >> i & 1u) members.push_back(i);
    all_.push_back(Subobject{ambient_, std::move(members)});
  }
}

void SubobjectAlgebra::require_ambient(const Subobject& s) const {
  if (s.ambient.size != ambient_.size)
    throw ContractError("subobject belongs to a different ambient object");
}

Subobject SubobjectAlgebra::top() const { return all_.back(); }
Subobject SubobjectAlgebra::bottom() const { return all_.front(); }

bool SubobjectAlgebra::leq(const Subobject& s, const Subobject& t) const {
  require_ambient(s);
  require_ambient(t);
  return std::includes(t.members.begin(), t.members.end(), s.members.begin(), s.members.end());
}

Subobject SubobjectAlgebra::meet(const Subobject& s, const Subobject& t) const {
  require_ambient(s);
  require_ambient(t);
  Subobject r{ambient_, {}};
  std::set_intersection(s.members.begin(), s.members.end(), t.members.begin(), t.members.end(),
                        std::back_inserter(r.members));
  return r;
}

Subobject SubobjectAlgebra::join(const Subobject& s, const Subobject& t) const {
  require_ambient(s);
  require_ambient(t);
  Subobject r{ambient_, {}};
  std::set_union(s.members.begin(), s.members.end(), t.members.begin(), t.members.end(),
                 std::back_inserter(r.members));
  return r;
}

Subobject SubobjectAlgebra::implies(const Subobject& s, const Subobject& t) const {
  require_ambient(s);
  require_ambient(t);
  std::vector<const Subobject*> candidates;
  for (const auto& u : all_)
    if (leq(meet(s, u), t)) candidates.push_back(&u);
  for (const auto* c : candidates) {
    bool largest = std::all_of(candidates.begin(), candidates.end(),
                               [&](const Subobject* u) { return leq(*u, *c); });
    if (largest) return *c;
  }
  throw ContractError("no largest subobject U with S meet U <= T");
}

Subobject SubobjectAlgebra::complement(const Subobject& s) const { return implies(s, bottom()); }

// --- power objects ------------------------------------------------------------

FinSetArrow PowerObject::point_of(const Subobject& s) const {
  if (s.ambient.size != exp.base.size)
    throw ContractError("subobject belongs to a different ambient object");
  return FinSetArrow{fs_extremal(Extremal::terminal), object,
                     {exp.encode(fs_characteristic(s).table)}};
}

PowerObject fs_power_object(const FinSetObject& a, const Budget& budget) {
  auto e = fs_exponential(a, fs_subobject_classifier().object, budget);
  PowerObject p{e, e.exp_object, e.ev};
  return p;
}

}  // namespace fincat
