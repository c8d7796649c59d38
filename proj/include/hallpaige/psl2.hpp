#pragma once

// PSL(2,q) as Möbius permutations of the projective line, with the
// subgroups B = H⋉U, U, H, V = nUn and the involution n: z ↦ -1/z, plus
// the complete-mapping constructions for q <= 16.
//
// Points 0..q-1 are field elements, point q is ∞.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hallpaige/analysis.hpp"
#include "hallpaige/error.hpp"
#include "hallpaige/finite_field.hpp"
#include "hallpaige/group.hpp"
#include "hallpaige/lifting.hpp"
#include "hallpaige/mapping.hpp"
#include "hallpaige/permutation.hpp"

namespace hallpaige {

struct Psl2Context {
  std::size_t q = 0;
  FiniteField field;
  PermutationGroup perm;  // perm.group is PSL(2,q)
  Subgroup b, u, h, v;
  Elem n = 0;
  bool simple = false;  // false for q = 2, 3

  const Group& group() const { return perm.group; }
  std::size_t infinity() const { return q; }
};

namespace detail {

/// z ↦ (az+b)/(cz+d) on the projective line, ad - bc != 0.
inline Permutation mobius(const FiniteField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                          std::uint32_t d) {
  const auto q = static_cast<std::uint32_t>(f.order());
  Permutation p(q + 1);
  for (std::uint32_t z = 0; z <= q; ++z) {
    std::uint32_t num, den;
    if (z == q) {
      num = a;
      den = c;
    } else {
      num = f.add(f.mul(a, z), b);
      den = f.add(f.mul(c, z), d);
    }
    p[z] = den == 0 ? q : f.mul(num, f.inv(den));
  }
  ensure(is_bijection(p), "Möbius map is not a bijection");
  return p;
}

}  // namespace detail

inline Psl2Context psl2(std::size_t q) {
  if (q < 2 || q > 16) fail(Errc::UnsupportedQ, "q = " + std::to_string(q) + " outside 2..16");
  FiniteField f(q);  // UnsupportedQ for non-prime-powers
  const auto qq = static_cast<std::uint32_t>(q);
  const std::uint32_t lambda = f.primitive_element();
  const std::uint32_t square = f.mul(lambda, lambda);
  const std::uint32_t minus1 = f.neg(1);

  std::vector<Permutation> translations;
  for (std::uint32_t t = 0; t < qq; ++t) translations.push_back(detail::mobius(f, 1, t, 0, 1));
  const Permutation dilation = detail::mobius(f, square, 0, 0, 1);
  const Permutation inversion = detail::mobius(f, 0, minus1, 1, 0);

  std::vector<Permutation> gens(translations.begin() + 1, translations.end());
  gens.push_back(dilation);
  gens.push_back(inversion);
  PermutationGroup pg = permutation_group(gens, kDefaultClosureCap, "psl2:" + std::to_string(q));

  const std::size_t expected = q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
  ensure(pg.group.order() == expected, "PSL(2,q) has the wrong order");

  std::vector<Elem> u_ids, h_ids, v_ids, b_ids;
  for (const auto& t : translations) u_ids.push_back(pg.id_of(t));
  Permutation d = identity_permutation(q + 1);
  do {
    h_ids.push_back(pg.id_of(d));
    d = compose(d, dilation);
  } while (d != identity_permutation(q + 1));
  for (std::uint32_t t = 0; t < qq; ++t) v_ids.push_back(pg.id_of(detail::mobius(f, 1, 0, t, 1)));
  for (Elem e = 0; e < pg.elements.size(); ++e)
    if (pg.elements[e][q] == q) b_ids.push_back(e);
  std::sort(u_ids.begin(), u_ids.end());
  std::sort(h_ids.begin(), h_ids.end());
  std::sort(v_ids.begin(), v_ids.end());

  const Group& g = pg.group;
  Subgroup u(g, u_ids), h(g, h_ids), v(g, v_ids), b(g, b_ids);
  const Elem n = pg.id_of(inversion);

  ensure(u.size() == q, "|U| != q");
  ensure(h.size() == (q - 1) / (q % 2 == 1 ? 2 : 1), "|H| wrong");
  ensure(b.size() == u.size() * h.size(), "|B| != |H||U|");
  ensure(is_normal(induced_group(g, b).group, localize(induced_group(g, b), u)), "U not normal in B");
  ensure(g.mul(n, n) == 0 && n != 0, "n is not an involution");
  ensure(!b.contains(n), "n lies in B");
  ensure(conjugate_subgroup(g, u, n).elements() == v.elements(), "nUn != V");
  // U is a full Sylow p-subgroup
  ensure((g.order() / q) % f.characteristic() != 0, "p divides [G:U]");

  return Psl2Context{q, std::move(f), std::move(pg), std::move(b), std::move(u), std::move(h),
                     std::move(v), n, q >= 4};
}

/// Every element is uniquely h·u or u'·n·h·u.
inline bool verify_normal_form(const Psl2Context& ctx) {
  const Group& g = ctx.group();
  std::vector<std::uint8_t> hits(g.order());
  std::size_t count = 0;
  for (Elem h : ctx.h.elements())
    for (Elem u : ctx.u.elements()) {
      ++count;
      if (hits[g.mul(h, u)]++) return false;
    }
  for (Elem u1 : ctx.u.elements()) {
    const Elem un = g.mul(u1, ctx.n);
    for (Elem h : ctx.h.elements()) {
      const Elem unh = g.mul(un, h);
      for (Elem u : ctx.u.elements()) {
        ++count;
        if (hits[g.mul(unh, u)]++) return false;
      }
    }
  }
  return count == g.order();
}

namespace detail {

inline ElementSet element_set(const Group& g, std::span<const Elem> elems) { return to_set(g.order(), elems); }

/// x·S for a set S
inline ElementSet left_times(const Group& g, Elem x, const ElementSet& s) { return translate_left(g, x, s); }

/// n h U
inline ElementSet nh_u(const Psl2Context& ctx, Elem h) {
  const Group& g = ctx.group();
  return left_times(g, g.mul(ctx.n, h), element_set(g, ctx.u.elements()));
}

}  // namespace detail

/// (UnhU)(Unh'U) ⊇ Unh''U for all h, h', h'' in H, and H ⊆ UnUnUn.
inline bool verify_unhu(const Psl2Context& ctx) {
  if (ctx.q % 2 == 0) fail(Errc::BadPrecondition, "verify_unhu needs q odd");
  const Group& g = ctx.group();
  const ElementSet uset = detail::element_set(g, ctx.u.elements());
  std::vector<ElementSet> unhu;
  for (Elem h : ctx.h.elements())
    unhu.push_back(set_product(g, uset, detail::nh_u(ctx, h)));
  for (const auto& a : unhu)
    for (const auto& b : unhu) {
      const ElementSet ab = set_product(g, a, b);
      for (const auto& c : unhu)
        if (!c.is_subset_of(ab)) return false;
    }
  const ElementSet un = set_product(g, uset, detail::element_set(g, std::vector<Elem>{ctx.n}));
  const ElementSet ununun = set_product(g, set_product(g, un, un), un);
  return detail::element_set(g, ctx.h.elements()).is_subset_of(ununun);
}

/// Smallest-id v in U with nhU ⊆ v·nhU·nhU.
inline Elem find_vh(const Psl2Context& ctx, Elem h) {
  if (ctx.q % 2 == 0) fail(Errc::BadPrecondition, "find_vh needs q odd");
  if (!ctx.h.contains(h)) fail(Errc::BadPrecondition, "element is not in H");
  const Group& g = ctx.group();
  const ElementSet nhu = detail::nh_u(ctx, h);
  const ElementSet prod = set_product(g, nhu, nhu);
  for (Elem v : ctx.u.elements())
    if (nhu.is_subset_of(detail::left_times(g, v, prod))) return v;
  fail(Errc::NotFound, "no v_h for h = " + std::to_string(h));
}

struct Psl2Build {
  CompleteMapping mapping;
  char branch = '?';
  std::vector<std::pair<Elem, Elem>> vh;  // (h, v_h), branch a only
  std::optional<Elem> zeta;               // branch a only
};

namespace detail {

/// Near-mapping triple on H ⨿ (U×H) with the three tweaked values.
inline CosetTriple psl2_tweaked_triple(const Psl2Context& ctx, Psl2Build& out) {
  const Group& g = ctx.group();
  const CosetSpace lc = cosets(g, ctx.u, Side::Left);
  const std::size_t hn = ctx.h.size();

  Elem gen = 0;
  for (Elem e : ctx.h.elements())
    if (g.element_order(e) == hn) {
      gen = e;
      break;
    }
  ensure(gen != 0 || hn == 1, "H is not cyclic");
  std::vector<Elem> power(hn);  // exponent -> element
  std::vector<std::size_t> exponent(g.order());
  Elem cur = 0;
  for (std::size_t i = 0; i < hn; ++i) {
    power[i] = cur;
    exponent[cur] = i;
    cur = g.mul(cur, gen);
  }
  const NearMappingCyclic nm = near_cm_cyclic(hn);
  auto alpha = [&](Elem h) { return power[nm.alpha[exponent[h]]]; };
  auto beta = [&](Elem h) { return power[nm.beta[exponent[h]]]; };

  std::vector<Elem> vh(g.order());
  for (Elem h : ctx.h.elements()) {
    vh[h] = find_vh(ctx, h);
    out.vh.emplace_back(h, vh[h]);
  }
  const Elem n = ctx.n;
  auto coset = [&](Elem x) { return lc.coset_of[x]; };
  auto mul = [&](std::initializer_list<Elem> xs) {
    Elem r = 0;
    for (Elem x : xs) r = g.mul(r, x);
    return r;
  };

  // I = H first (in increasing id), then U×H lexicographically
  std::vector<Elem> hs = ctx.h.elements();
  std::vector<Elem> us = ctx.u.elements();
  CosetTriple t;
  std::size_t idx_one = 0, idx_vzeta_one = 0, idx_one_zeta = 0;
  const Elem zeta = g.inv(alpha(0));
  out.zeta = zeta;
  for (Elem h : hs) {
    t.x.push_back(coset(h));
    t.y.push_back(coset(alpha(h)));
    t.z.push_back(coset(beta(h)));
  }
  for (Elem u : us)
    for (Elem h : hs) {
      const std::size_t i = t.x.size();
      if (u == vh[zeta] && h == 0) idx_vzeta_one = i;
      if (u == 0 && h == zeta) idx_one_zeta = i;
      t.x.push_back(coset(mul({u, vh[h], n, h})));
      t.y.push_back(coset(mul({u, n, h})));
      t.z.push_back(coset(mul({u, n, h})));
    }
  idx_one = 0;  // identity of H is the first element of hs
  ensure(hs.front() == 0, "identity not first in H");

  const Elem vz = vh[zeta];
  t.x[idx_one] = coset(mul({vz, vh[0], n}));
  t.y[idx_one] = coset(mul({vz, n}));
  t.z[idx_one] = coset(0);
  t.x[idx_vzeta_one] = coset(mul({vz, n, zeta}));
  t.y[idx_vzeta_one] = coset(alpha(0));
  t.z[idx_vzeta_one] = coset(mul({vz, n}));
  t.x[idx_one_zeta] = coset(0);
  t.y[idx_one_zeta] = coset(mul({n, zeta}));
  t.z[idx_one_zeta] = coset(mul({n, zeta}));
  return t;
}

}  // namespace detail

/// Complete mapping of PSL(2,q):
///   a. q ≡ 1 mod 4: tweaked near-mapping triple on G/U, lifted through U
///   b. q ≡ 3 mod 4: |B| odd, lift the squaring map of B over B-double cosets
///   c. q even: mapping of B from U and B/U ≅ H, lifted over B-double cosets
inline Psl2Build build_cm_psl2(const Psl2Context& ctx) {
  const Group& g = ctx.group();
  if (!hall_paige_verdict(g).good) fail(Errc::BadGroup, "PSL(2," + std::to_string(ctx.q) + ") is bad");
  Psl2Build out;
  const InducedGroup ib = induced_group(g, ctx.b);
  if (ctx.q % 4 == 1) {
    out.branch = 'a';
    const CosetTriple t = detail::psl2_tweaked_triple(ctx, out);
    // the tweaked triple must already satisfy x(i)y(i) ⊇ z(i) everywhere
    coset_triple_factors(g, ctx.u, cosets(g, ctx.u, Side::Left), t);
    const InducedGroup iu = induced_group(g, ctx.u);
    out.mapping = lift_lcst(g, ctx.u, t, cm_odd(iu.group));
  } else if (ctx.q % 2 == 1) {
    out.branch = 'b';
    out.mapping = lift_dcst(g, ctx.b, cm_odd(ib.group));
  } else {
    out.branch = 'c';
    const Subgroup u_local = localize(ib, ctx.u);
    const InducedGroup iu = induced_group(ib.group, u_local);
    const SearchResult sr = search(iu.group);
    ensure(sr.status == CoverStatus::Found, "no complete mapping of U");
    const Quotient bq = quotient(ib.group, u_local);
    const CompleteMapping cm_b = compose_normal(ib.group, u_local, *sr.mapping, cm_odd(bq.group));
    out.mapping = lift_dcst(g, ctx.b, cm_b);
  }
  ensure(verify(g, out.mapping).ok, "PSL(2,q) mapping fails verification");
  return out;
}

}  // namespace hallpaige
