#pragma once

// Finite groups as indexed multiplication tables, together with the
// subgroup / coset / double-coset machinery the lifting constructions use.
//
// Element ids are 0..n-1 and the identity is always id 0.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hallpaige/error.hpp"

namespace hallpaige {

using Elem = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Orders up to this bound get an exhaustive associativity check; larger
/// tables are sampled.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 512;
inline constexpr std::size_t kAssociativitySamples = 100000;

class Group {
 public:
  static constexpr Elem identity = 0;

  /// Builds a group from a flat row-major table whose identity is already
  /// element 0. Validates the latin property, identity, inverses and
  /// associativity; throws Error on the first violation.
  Group(std::size_t n, std::vector<Elem> table, std::string label = {})
      : n_(n), mul_(std::move(table)), label_(std::move(label)) {
    validate();
  }

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {mul_.data() + a * n_, n_};
  }
  std::span<const Elem> table() const noexcept { return mul_; }

  /// Order of g as a group element.
  std::size_t element_order(Elem g) const noexcept { return orders_[g]; }

  Elem power(Elem g, std::uint64_t k) const noexcept {
    Elem r = identity;
    for (std::uint64_t i = 0; i < k % orders_[g]; ++i) r = mul(r, g);
    return r;
  }

  Elem conjugate(Elem g, Elem x) const noexcept {  // x g x^-1
    return mul(mul(x, g), inv(x));
  }

  bool is_abelian() const noexcept {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool operator==(const Group& o) const noexcept {
    return n_ == o.n_ && mul_ == o.mul_;
  }

 private:
  void validate() {
    if (n_ == 0) fail(Errc::NoIdentity, "empty table");
    if (mul_.size() != n_ * n_)
      fail(Errc::SizeMismatch, "table has " + std::to_string(mul_.size()) +
                                   " entries, expected " +
                                   std::to_string(n_ * n_));
    for (std::size_t i = 0; i < mul_.size(); ++i)
      if (mul_[i] >= n_)
        fail(Errc::NotLatin, "entry out of range at (" +
                                 std::to_string(i / n_) + "," +
                                 std::to_string(i % n_) + ")");
    std::vector<std::uint8_t> seen(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t c = 0; c < n_; ++c) {
        if (seen[mul(r, c)]++)
          fail(Errc::NotLatin, "row " + std::to_string(r) + " repeats symbol " +
                                   std::to_string(mul(r, c)) + " at column " +
                                   std::to_string(c));
      }
    }
    for (std::size_t c = 0; c < n_; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < n_; ++r) {
        if (seen[mul(r, c)]++)
          fail(Errc::NotLatin, "column " + std::to_string(c) +
                                   " repeats symbol " +
                                   std::to_string(mul(r, c)) + " at row " +
                                   std::to_string(r));
      }
    }
    for (Elem g = 0; g < n_; ++g)
      if (mul(0, g) != g || mul(g, 0) != g)
        fail(Errc::NoIdentity,
             "element 0 is not an identity (fails at " + std::to_string(g) + ")");
    inv_.assign(n_, 0);
    for (Elem g = 0; g < n_; ++g) {
      auto r = row(g);
      Elem h = static_cast<Elem>(std::find(r.begin(), r.end(), 0) - r.begin());
      if (mul(h, g) != 0)
        fail(Errc::NoInverse, "element " + std::to_string(g) +
                                  " has right inverse " + std::to_string(h) +
                                  " that is not a left inverse");
      inv_[g] = h;
    }
    check_associative();
    orders_.assign(n_, 1);
    for (Elem g = 1; g < n_; ++g) {
      Elem x = g;
      std::size_t k = 1;
      while (x != 0) {
        x = mul(x, g);
        ++k;
      }
      orders_[g] = k;
    }
  }

  void check_associative() const {
    auto report = [](Elem a, Elem b, Elem c) {
      fail(Errc::NotAssociative, "triple (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," +
                                     std::to_string(c) + ")");
    };
    if (n_ <= kExhaustiveAssociativityLimit) {
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) {
          const Elem ab = mul(a, b);
          auto rb = row(b);
          auto rab = row(ab);
          auto ra = row(a);
          for (Elem c = 0; c < n_; ++c)
            if (rab[c] != ra[rb[c]]) report(a, b, c);
        }
      return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n_ - 1));
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) report(a, b, c);
    }
  }

  std::size_t n_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::string label_;
};

/// Validates an arbitrary Cayley table and relabels its identity to 0.
inline Group from_cayley_table(const std::vector<std::vector<Elem>>& rows,
                               std::string label = {}) {
  const std::size_t n = rows.size();
  if (n == 0) fail(Errc::NoIdentity, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      fail(Errc::NotLatin, "row " + std::to_string(r) + " has " +
                               std::to_string(rows[r].size()) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      if (rows[r][c] >= n)
        fail(Errc::NotLatin, "entry out of range at (" + std::to_string(r) +
                                 "," + std::to_string(c) + ")");
  }
  // Locate a two-sided identity before relabelling.
  std::optional<Elem> e;
  for (Elem cand = 0; cand < n && !e; ++cand) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g)
      ok = rows[cand][g] == g && rows[g][cand] == g;
    if (ok) e = cand;
  }
  if (!e) {
    // Report latin failures in preference to a missing identity.
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::uint8_t> seen(n);
      for (std::size_t c = 0; c < n; ++c)
        if (seen[rows[r][c]]++)
          fail(Errc::NotLatin, "row " + std::to_string(r) +
                                   " repeats symbol " +
                                   std::to_string(rows[r][c]) +
                                   " at column " + std::to_string(c));
    }
    fail(Errc::NoIdentity, "no element acts as a two-sided identity");
  }
  // Swap labels 0 and e.
  auto relabel = [&](Elem x) -> Elem {
    if (x == *e) return 0;
    if (x == 0) return *e;
    return x;
  };
  std::vector<Elem> flat(n * n);
  for (Elem r = 0; r < n; ++r)
    for (Elem c = 0; c < n; ++c)
      flat[relabel(r) * n + relabel(c)] = relabel(rows[r][c]);
  return Group(n, std::move(flat), std::move(label));
}

/// A subgroup of a parent group: sorted element ids plus a membership bitset.
class Subgroup {
 public:
  /// Validates closure under multiplication and inversion.
  Subgroup(const Group& parent, std::vector<Elem> elems)
      : parent_order_(parent.order()), members_(parent.order()) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (Elem e : elems) {
      if (e >= parent_order_)
        fail(Errc::NotSubgroup, "element id " + std::to_string(e) + " out of range");
      members_.set(e);
    }
    elements_ = std::move(elems);
    if (elements_.empty() || elements_.front() != 0)
      fail(Errc::NotSubgroup, "identity missing");
    for (Elem a : elements_) {
      if (!members_.test(parent.inv(a)))
        fail(Errc::NotSubgroup, "not closed under inverse at " + std::to_string(a));
      for (Elem b : elements_)
        if (!members_.test(parent.mul(a, b)))
          fail(Errc::NotSubgroup, "not closed: " + std::to_string(a) + "*" +
                                      std::to_string(b));
    }
    ensure(parent_order_ % elements_.size() == 0, "Lagrange violated");
  }

  static Subgroup trivial(const Group& g) { return Subgroup(g, {0}); }
  static Subgroup whole(const Group& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(g, std::move(all));
  }

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t parent_order() const noexcept { return parent_order_; }
  std::size_t index() const noexcept { return parent_order_ / elements_.size(); }
  bool contains(Elem g) const { return members_.test(g); }
  const std::vector<Elem>& elements() const& noexcept { return elements_; }
  std::vector<Elem> elements() && noexcept { return std::move(elements_); }
  const ElementSet& members() const noexcept { return members_; }

  bool operator==(const Subgroup& o) const noexcept {
    return elements_ == o.elements_;
  }

 private:
  std::size_t parent_order_;
  std::vector<Elem> elements_;
  ElementSet members_;
};

inline ElementSet to_set(std::size_t n, std::span<const Elem> elems) {
  ElementSet s(n);
  for (Elem e : elems) s.set(e);
  return s;
}

inline std::vector<Elem> to_list(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

/// {a*b : a in A, b in B}, exhaustively.
inline ElementSet set_product(const Group& g, const ElementSet& a,
                              const ElementSet& b) {
  ElementSet out(g.order());
  const auto bl = to_list(b);
  for (auto i = a.find_first(); i != ElementSet::npos; i = a.find_next(i)) {
    auto r = g.row(static_cast<Elem>(i));
    for (Elem y : bl) out.set(r[y]);
  }
  return out;
}

/// Left translate x*S.
inline ElementSet translate_left(const Group& g, Elem x, const ElementSet& s) {
  ElementSet out(g.order());
  auto r = g.row(x);
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.set(r[i]);
  return out;
}

/// Smallest subgroup containing the seed.
inline Subgroup subgroup_generated(const Group& g, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s >= g.order())
      fail(Errc::NotSubgroup, "element id " + std::to_string(s) + " out of range");
    if (s != 0) gens.push_back(s);
  }
  ElementSet in(g.order());
  std::vector<Elem> elems{0};
  in.set(0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Elem s : gens) {
      Elem x = g.mul(elems[i], s);
      if (!in.test(x)) {
        in.set(x);
        elems.push_back(x);
      }
    }
  return Subgroup(g, std::move(elems));
}

inline Subgroup subgroup_generated(const Group& g,
                                   std::initializer_list<Elem> seed) {
  return subgroup_generated(g, std::span<const Elem>(seed.begin(), seed.size()));
}

inline Subgroup intersection(const Group& g, const Subgroup& a,
                             const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(g, std::move(out));
}

/// x H x^-1.
inline Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, Elem x) {
  std::vector<Elem> out;
  out.reserve(h.size());
  for (Elem e : h.elements()) out.push_back(g.conjugate(e, x));
  return Subgroup(g, std::move(out));
}

inline bool is_normal(const Group& g, const Subgroup& h) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem e : h.elements())
      if (!h.contains(g.conjugate(e, x))) return false;
  return true;
}

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem e : h.elements())
      if (!h.contains(g.conjugate(e, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

inline Subgroup center(const Group& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

/// Subgroup generated by all commutators a^-1 b^-1 a b.
inline Subgroup commutator_subgroup(const Group& g) {
  ElementSet comm(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      comm.set(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  auto seed = to_list(comm);
  return subgroup_generated(g, seed);
}

enum class Side { Left, Right };

/// Cosets gH (Left) or Hg (Right). Cosets are numbered by their smallest
/// element, which is also the recorded representative.
struct CosetSpace {
  Side side = Side::Left;
  std::vector<Elem> reps;
  std::vector<std::uint32_t> coset_of;

  std::size_t size() const noexcept { return reps.size(); }

  std::vector<Elem> members(const Group& g, const Subgroup& h,
                            std::size_t k) const {
    std::vector<Elem> out;
    out.reserve(h.size());
    for (Elem e : h.elements())
      out.push_back(side == Side::Left ? g.mul(reps[k], e) : g.mul(e, reps[k]));
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline CosetSpace cosets(const Group& g, const Subgroup& h, Side side) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  CosetSpace cs;
  cs.side = side;
  cs.coset_of.assign(g.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (cs.coset_of[x] != unset) continue;
    const auto k = static_cast<std::uint32_t>(cs.reps.size());
    cs.reps.push_back(x);
    for (Elem e : h.elements())
      cs.coset_of[side == Side::Left ? g.mul(x, e) : g.mul(e, x)] = k;
  }
  ensure(cs.reps.size() * h.size() == g.order(), "cosets do not partition");
  return cs;
}

/// Partition of a group into H-double cosets HxH.
struct DoubleCosetMap {
  struct Class {
    Elem rep;
    std::vector<Elem> elements;
  };
  std::vector<Class> classes;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

inline ElementSet double_coset_set(const Group& g, const Subgroup& h, Elem x) {
  ElementSet out(g.order());
  for (Elem a : h.elements()) {
    Elem ax = g.mul(a, x);
    for (Elem b : h.elements()) out.set(g.mul(ax, b));
  }
  return out;
}

inline DoubleCosetMap double_cosets(const Group& g, const Subgroup& h) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  DoubleCosetMap dc;
  dc.class_of.assign(g.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (dc.class_of[x] != unset) continue;
    const auto k = static_cast<std::uint32_t>(dc.classes.size());
    auto set = double_coset_set(g, h, x);
    auto elems = to_list(set);
    for (Elem e : elems) dc.class_of[e] = k;
    // |HxH| = |H|^2 / |H ∩ xHx^-1|
    const auto stab = intersection(g, h, conjugate_subgroup(g, h, x));
    ensure(elems.size() * stab.size() == h.size() * h.size(),
           "double coset size formula fails at rep " + std::to_string(x));
    dc.classes.push_back({x, std::move(elems)});
  }
  return dc;
}

struct Quotient {
  Group group;
  std::vector<Elem> projection;  // parent element -> quotient element
  std::vector<Elem> reps;        // quotient element -> smallest preimage
};

/// G/N on coset ids; coset k is the one whose smallest element is reps[k].
inline Quotient quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(Errc::NotNormal, "subgroup is not normal");
  auto cs = cosets(g, n, Side::Left);
  const std::size_t m = cs.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = cs.coset_of[g.mul(cs.reps[a], cs.reps[b])];
  std::vector<Elem> proj(cs.coset_of.begin(), cs.coset_of.end());
  std::string label = g.label().empty() ? std::string{} : g.label() + "/N";
  return Quotient{Group(m, std::move(table), std::move(label)), std::move(proj),
                  std::move(cs.reps)};
}

/// A subgroup regarded as a group in its own right. Local id i corresponds
/// to parent element embed[i]; subgroup elements are numbered in increasing
/// parent-id order, so the identity stays at 0.
struct InducedGroup {
  Group group;
  std::vector<Elem> embed;
  std::vector<Elem> local;  // parent id -> local id, or npos
  static constexpr Elem npos = static_cast<Elem>(-1);
};

inline InducedGroup induced_group(const Group& g, const Subgroup& h) {
  const auto& el = h.elements();
  std::vector<Elem> local(g.order(), InducedGroup::npos);
  for (Elem i = 0; i < el.size(); ++i) local[el[i]] = i;
  const std::size_t m = el.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = local[g.mul(el[a], el[b])];
  return InducedGroup{Group(m, std::move(table)), el, std::move(local)};
}

/// Maps a subgroup of the parent that lies inside h to local ids of h.
inline Subgroup localize(const InducedGroup& ig, const Subgroup& k) {
  std::vector<Elem> out;
  out.reserve(k.size());
  for (Elem e : k.elements()) {
    ensure(ig.local[e] != InducedGroup::npos, "subgroup not contained");
    out.push_back(ig.local[e]);
  }
  return Subgroup(ig.group, std::move(out));
}

}  // namespace hallpaige
