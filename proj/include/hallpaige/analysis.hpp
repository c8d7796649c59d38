#pragma once

// Structural predicates around the Sylow-2 subgroup: the good/bad verdict,
// the index-2 sign kernel of a bad group, the odd-order core, the Frobenius
// count of 2-elements, and the non-conjugacy of 2-element cyclic subgroups
// outside an index-2 normal subgroup.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hallpaige/error.hpp"
#include "hallpaige/group.hpp"

namespace hallpaige {

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

/// Largest power of two dividing n.
inline std::size_t two_part(std::size_t n) { return n & (~n + 1); }

inline bool is_two_element(const Group& g, Elem x) {
  return is_power_of_two(g.element_order(x));
}

inline std::vector<Elem> two_elements(const Group& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (is_two_element(g, x)) out.push_back(x);
  return out;
}

/// A Sylow-2 subgroup, grown from a cyclic 2-subgroup of maximal order by
/// repeatedly adjoining an element of N_G(P) whose image in N_G(P)/P has
/// order 2. Ties are broken by smallest element id.
inline Subgroup sylow2(const Group& g) {
  const std::size_t target = two_part(g.order());
  if (target == 1) return Subgroup::trivial(g);
  Elem start = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (is_two_element(g, x) && g.element_order(x) > g.element_order(start)) start = x;
  Subgroup p = subgroup_generated(g, {start});
  while (p.size() < target) {
    const Subgroup norm = normalizer(g, p);
    std::optional<Elem> step;
    for (Elem x : norm.elements()) {
      if (p.contains(x)) continue;
      // order of xP in N/P
      std::size_t k = 1;
      Elem y = x;
      while (!p.contains(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (is_power_of_two(k)) {
        step = g.power(x, k / 2);
        break;
      }
    }
    ensure(step.has_value(), "normalizer ascent stalled below the Sylow order");
    std::vector<Elem> seed = p.elements();
    seed.push_back(*step);
    p = subgroup_generated(g, seed);
    ensure(is_power_of_two(p.size()), "ascent produced a non-2-group");
  }
  return p;
}

struct HpVerdict {
  bool good = false;
  std::size_t sylow2_order = 1;
  bool sylow2_cyclic = true;
  Subgroup witness;
};

inline bool is_cyclic(const Group& g, const Subgroup& h) {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](Elem x) { return g.element_order(x) == h.size(); });
}

inline HpVerdict hall_paige_verdict(const Group& g) {
  Subgroup p = sylow2(g);
  const bool cyc = is_cyclic(g, p);
  const std::size_t order = p.size();
  return HpVerdict{order == 1 || !cyc, order, cyc, std::move(p)};
}

inline bool is_bad(const Group& g) { return !hall_paige_verdict(g).good; }

/// Kernel of the sign of the regular representation: g lies outside iff
/// ord(g) is even and |G|/ord(g) is odd.
inline Subgroup index2_characteristic(const Group& g) {
  if (!is_bad(g)) fail(Errc::NotBad, "group " + g.label() + " is good");
  std::vector<Elem> keep;
  for (Elem x = 0; x < g.order(); ++x) {
    const std::size_t o = g.element_order(x);
    const bool odd_perm = o % 2 == 0 && (g.order() / o) % 2 == 1;
    if (!odd_perm) keep.push_back(x);
  }
  Subgroup k(g, std::move(keep));
  ensure(k.size() * 2 == g.order(), "sign kernel does not have index 2");
  return k;
}

struct OddCore {
  Subgroup core;
  std::vector<Subgroup> tower;  // descending, each of index 2 in the previous
};

inline OddCore odd_core_tower(const Group& g) {
  if (!is_bad(g)) fail(Errc::NotBad, "group " + g.label() + " is good");
  std::vector<Subgroup> tower;
  Subgroup cur = Subgroup::whole(g);
  while (cur.size() % 2 == 0) {
    InducedGroup ig = induced_group(g, cur);
    Subgroup k = index2_characteristic(ig.group);
    std::vector<Elem> up;
    for (Elem e : k.elements()) up.push_back(ig.embed[e]);
    cur = Subgroup(g, std::move(up));
    tower.push_back(cur);
  }
  const std::size_t idx = g.order() / cur.size();
  ensure(is_power_of_two(idx), "odd core index is not a 2-power");
  Quotient q = quotient(g, cur);
  ensure(is_cyclic(q.group, Subgroup::whole(q.group)), "quotient by odd core is not cyclic");
  return OddCore{std::move(cur), std::move(tower)};
}

/// Number of 2-elements is a multiple of the Sylow-2 order.
inline bool verify_frobenius2(const Group& g) {
  return two_elements(g).size() % two_part(g.order()) == 0;
}

/// For G good and N normal of index 2: true iff the cyclic subgroups <x>,
/// x a 2-element of G - N, are not all conjugate in G.
inline bool two_element_classes_not_all_conjugate(const Group& g, const Subgroup& n) {
  if (!hall_paige_verdict(g).good)
    fail(Errc::BadPrecondition, "group is not good");
  if (n.size() * 2 != g.order())
    fail(Errc::BadPrecondition, "subgroup does not have index 2");
  if (!is_normal(g, n)) fail(Errc::BadPrecondition, "subgroup is not normal");

  std::set<std::vector<Elem>> cyclic_subgroups;
  for (Elem x = 0; x < g.order(); ++x)
    if (!n.contains(x) && is_two_element(g, x))
      cyclic_subgroups.insert(subgroup_generated(g, {x}).elements());
  ensure(!cyclic_subgroups.empty(), "no 2-elements outside an index-2 subgroup");

  const Subgroup first(g, *cyclic_subgroups.begin());
  std::set<std::vector<Elem>> orbit;
  for (Elem y = 0; y < g.order(); ++y)
    orbit.insert(conjugate_subgroup(g, first, y).elements());
  return std::any_of(cyclic_subgroups.begin(), cyclic_subgroups.end(),
                     [&](const auto& s) { return !orbit.contains(s); });
}

}  // namespace hallpaige
