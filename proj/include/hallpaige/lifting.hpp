#pragma once

// Constructions that lift complete mappings from subgroups and quotients:
//
//   partition_involutions  split I = J ⨿ K with S(J) = T(J) = K
//   common_transversal     one set transversal to cosets of H and of K
//   lift_lcst              coset triple x(i)y(i) ⊇ z(i) + mapping of H -> G
//   compose_normal         mappings of N and G/N -> G
//   lift_z2_center         mapping of G/<x>, x a central involution -> G
//   lift_dcosets           double-coset permutations + mapping of H -> G
//   lift_dcst              D² ⊇ D for every H-double coset + mapping of H -> G
//
// Every lift verifies its output before returning.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hallpaige/error.hpp"
#include "hallpaige/group.hpp"
#include "hallpaige/mapping.hpp"
#include "hallpaige/matching.hpp"

namespace hallpaige {

/// Two fixed-point-free involutions on {0..m-1}.
struct InvolutionPair {
  std::vector<std::uint32_t> s;
  std::vector<std::uint32_t> t;
};

struct InvolutionPartition {
  std::vector<std::uint32_t> j;
  std::vector<std::uint32_t> k;
};

/// Each component of the graph with edges {i,S(i)}, {i,T(i)} is an
/// alternating cycle; walking it from its smallest index with colour J and
/// alternating S- and T-steps 2-colours it.
inline InvolutionPartition partition_involutions(const InvolutionPair& p) {
  const std::size_t m = p.s.size();
  if (p.t.size() != m) fail(Errc::SizeMismatch, "S and T act on sets of different sizes");
  if (m % 2 == 1) fail(Errc::HasFixedPoint, "odd domain size " + std::to_string(m));
  for (const auto* inv : {&p.s, &p.t}) {
    const char* name = inv == &p.s ? "S" : "T";
    for (std::uint32_t i = 0; i < m; ++i) {
      if ((*inv)[i] >= m) fail(Errc::NotInvolution, std::string(name) + " maps out of range");
      if ((*inv)[i] == i)
        fail(Errc::HasFixedPoint, std::string(name) + " fixes " + std::to_string(i));
      if ((*inv)[(*inv)[i]] != i)
        fail(Errc::NotInvolution, std::string(name) + " does not square to identity at " +
                                      std::to_string(i));
    }
  }
  enum : std::uint8_t { Unset, InJ, InK };
  std::vector<std::uint8_t> colour(m, Unset);
  for (std::uint32_t start = 0; start < m; ++start) {
    if (colour[start] != Unset) continue;
    std::uint32_t cur = start;
    bool use_s = true;
    do {
      colour[cur] = use_s ? InJ : InK;
      cur = use_s ? p.s[cur] : p.t[cur];
      use_s = !use_s;
    } while (cur != start);
  }
  InvolutionPartition out;
  for (std::uint32_t i = 0; i < m; ++i) (colour[i] == InJ ? out.j : out.k).push_back(i);
  for (auto j : out.j)
    ensure(colour[p.s[j]] == InK && colour[p.t[j]] == InK, "involution partition failed");
  return out;
}

/// A set meeting every left coset of H once and every `k_side` coset of K
/// once, ordered by the index of its left H-coset.
inline std::vector<Elem> common_transversal(const Group& g, const Subgroup& h,
                                            const Subgroup& k, Side k_side) {
  if (h.size() != k.size())
    fail(Errc::OrderMismatch, "subgroups have orders " + std::to_string(h.size()) + " and " +
                                  std::to_string(k.size()));
  const CosetSpace hc = cosets(g, h, Side::Left);
  const CosetSpace kc = cosets(g, k, k_side);
  const std::size_t m = hc.size();
  BipartiteMatching bm(m, m);
  std::unordered_map<std::uint64_t, Elem> witness;
  for (Elem x = 0; x < g.order(); ++x) {
    const std::uint64_t key = std::uint64_t{hc.coset_of[x]} * m + kc.coset_of[x];
    if (witness.try_emplace(key, x).second) bm.add_edge(hc.coset_of[x], kc.coset_of[x]);
  }
  if (bm.solve() != m) fail(Errc::MatchingFailed, "no perfect matching between coset spaces");
  std::vector<Elem> out(m);
  for (std::uint32_t i = 0; i < m; ++i)
    out[i] = witness.at(std::uint64_t{i} * m + bm.mate_of_left(i));

  std::vector<std::uint8_t> hit_h(m), hit_k(m);
  for (Elem x : out) {
    ensure(!hit_h[hc.coset_of[x]]++, "transversal repeats an H-coset");
    ensure(!hit_k[kc.coset_of[x]]++, "transversal repeats a K-coset");
  }
  return out;
}

/// Three maps from I = {0..[G:H]-1} to left cosets of H, given as coset
/// indices of cosets(G, H, Left).
struct CosetTriple {
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> y;
  std::vector<std::uint32_t> z;
};

namespace detail {

inline void require_mapping(const Group& g, const CompleteMapping& cm, const std::string& what) {
  if (cm.phi.size() != g.order() || cm.psi.size() != g.order())
    fail(Errc::BadSubmapping, what + ": mapping has wrong size");
  if (auto v = verify(g, cm); !v)
    fail(Errc::BadSubmapping, what + ": " + v.failure);
}

inline void require_bijection(const std::vector<std::uint32_t>& f, std::size_t m,
                              const char* name) {
  if (f.size() != m)
    fail(Errc::TripleViolation, std::string(name) + " has " + std::to_string(f.size()) +
                                    " values, expected " + std::to_string(m));
  std::vector<std::uint8_t> seen(m);
  for (auto v : f)
    if (v >= m || seen[v]++)
      fail(Errc::TripleViolation, std::string(name) + " is not a bijection onto G/H");
}

inline CompleteMapping checked_triple(const Group& g, const std::vector<Elem>& a,
                                      const std::vector<Elem>& b, const std::vector<Elem>& c) {
  try {
    CompleteMapping cm = cm_from_triple(g, a, b, c);
    auto v = verify(g, cm);
    ensure(v.ok, "lifted mapping fails verification: " + v.failure);
    return cm;
  } catch (const Error& e) {
    if (e.code() == Errc::TripleInvalid) fail(Errc::Internal, e.what());
    throw;
  }
}

}  // namespace detail

/// Checks x(i)y(i) ⊇ z(i) for every i; returns x_i in x(i) with
/// x_i y(i) = z(i), taking the smallest such element id.
inline std::vector<Elem> coset_triple_factors(const Group& g, const Subgroup& h,
                                              const CosetSpace& cs, const CosetTriple& t) {
  const std::size_t m = cs.size();
  detail::require_bijection(t.x, m, "x");
  detail::require_bijection(t.y, m, "y");
  detail::require_bijection(t.z, m, "z");
  std::vector<Elem> xs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Elem yrep = cs.reps[t.y[i]];
    bool found = false;
    for (Elem x : cs.members(g, h, t.x[i]))
      if (cs.coset_of[g.mul(x, yrep)] == t.z[i]) {
        xs[i] = x;
        found = true;
        break;
      }
    if (!found)
      fail(Errc::TripleViolation, "x(i)y(i) does not contain z(i) at i = " + std::to_string(i));
  }
  return xs;
}

/// Lifts a complete mapping of H (in the local numbering of
/// induced_group(g, h)) through a coset triple.
inline CompleteMapping lift_lcst(const Group& g, const Subgroup& h, const CosetTriple& triple,
                                 const CompleteMapping& cm_h) {
  const InducedGroup ig = induced_group(g, h);
  detail::require_mapping(ig.group, cm_h, "mapping of H");
  const CosetSpace lc = cosets(g, h, Side::Left);
  const CosetSpace rc = cosets(g, h, Side::Right);
  const std::size_t m = lc.size();
  const std::vector<Elem> xs = coset_triple_factors(g, h, lc, triple);

  // {y_i}: simultaneous left and right transversal with y_i in y(i).
  const std::vector<Elem> trans = common_transversal(g, h, h, Side::Right);
  std::vector<Elem> ys(m);
  std::vector<std::uint32_t> index_of_right(m);
  for (std::size_t i = 0; i < m; ++i) {
    ys[i] = trans[triple.y[i]];
    index_of_right[rc.coset_of[ys[i]]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Elem> zs(m);
  for (std::size_t i = 0; i < m; ++i) {
    zs[i] = g.mul(xs[i], ys[i]);
    ensure(lc.coset_of[zs[i]] == triple.z[i], "z_i not in z(i)");
  }

  const std::size_t k = h.size();
  std::vector<Elem> big_a, big_b, big_c;
  big_a.reserve(m * k);
  big_b.reserve(m * k);
  big_c.reserve(m * k);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem j = 0; j < k; ++j) {
      const Elem a = ig.embed[j];
      const Elem b = ig.embed[cm_h.phi[j]];
      const Elem c = ig.embed[cm_h.psi[j]];
      // y_i a(j) = d(i,j) y_r(i,j)
      const Elem w = g.mul(ys[i], a);
      const std::uint32_t r = index_of_right[rc.coset_of[w]];
      const Elem d = g.mul(w, g.inv(ys[r]));
      ensure(h.contains(d), "d(i,j) outside H");
      big_a.push_back(g.mul(xs[i], d));
      big_b.push_back(g.mul(ys[r], b));
      big_c.push_back(g.mul(zs[i], c));
    }
  return detail::checked_triple(g, big_a, big_b, big_c);
}

/// cm_n is in the local numbering of induced_group(g, n); cm_q in the
/// numbering of quotient(g, n).
inline CompleteMapping compose_normal(const Group& g, const Subgroup& n,
                                      const CompleteMapping& cm_n, const CompleteMapping& cm_q) {
  const Quotient q = quotient(g, n);
  detail::require_mapping(induced_group(g, n).group, cm_n, "mapping of N");
  detail::require_mapping(q.group, cm_q, "mapping of G/N");
  // Quotient ids coincide with left-coset indices of cosets(g, n, Left).
  CosetTriple t;
  for (Elem i = 0; i < q.group.order(); ++i) {
    t.x.push_back(i);
    t.y.push_back(cm_q.phi[i]);
    t.z.push_back(cm_q.psi[i]);
  }
  return lift_lcst(g, n, t, cm_n);
}

/// Sum of the A/B/C construction over a central involution x. cm_q is in
/// the numbering of quotient(g, {1, x}).
inline CompleteMapping lift_z2_center(const Group& g, Elem x, const CompleteMapping& cm_q) {
  if (x == 0 || x >= g.order() || g.mul(x, x) != 0)
    fail(Errc::NotCentralInvolution, "element " + std::to_string(x) + " is not an involution");
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) != g.mul(y, x))
      fail(Errc::NotCentralInvolution, "element " + std::to_string(x) + " is not central");
  const Subgroup n(g, {0, x});
  const Quotient q = quotient(g, n);
  const std::size_t m = q.group.order();
  if (m % 2 == 1)
    fail(Errc::QuotientOdd, "quotient has odd order, so <x> is a cyclic Sylow-2 subgroup");
  detail::require_mapping(q.group, cm_q, "mapping of G/<x>");

  Elem ybar = 0;
  for (Elem e = 1; e < m; ++e)
    if (q.group.element_order(e) == 2) {
      ybar = e;
      break;
    }
  ensure(ybar != 0, "even-order quotient without an involution");

  const auto& bbar = cm_q.phi;
  const auto& cbar = cm_q.psi;
  std::vector<Elem> bbar_inv(m), cbar_inv(m);
  for (Elem i = 0; i < m; ++i) {
    bbar_inv[bbar[i]] = i;
    cbar_inv[cbar[i]] = i;
  }
  InvolutionPair st;
  for (Elem i = 0; i < m; ++i) {
    st.s.push_back(bbar_inv[q.group.mul(bbar[i], ybar)]);
    st.t.push_back(cbar_inv[q.group.mul(cbar[i], ybar)]);
  }
  const InvolutionPartition jk = partition_involutions(st);

  const Elem y = q.reps[ybar];
  std::vector<Elem> b(m), c(m), a(m);
  for (auto j : jk.j) {
    b[j] = q.reps[bbar[j]];
    c[j] = q.reps[cbar[j]];
    b[st.s[j]] = g.mul(b[j], y);
    c[st.t[j]] = g.mul(c[j], y);
  }
  for (Elem i = 0; i < m; ++i) {
    ensure(q.projection[b[i]] == bbar[i] && q.projection[c[i]] == cbar[i], "lift misses a coset");
    a[i] = g.mul(c[i], g.inv(b[i]));
  }

  std::vector<Elem> big_a, big_b, big_c;
  const Elem yinv_x = g.mul(g.inv(y), x);
  for (auto j : jk.j) {
    big_a.push_back(a[j]);
    big_b.push_back(b[j]);
    big_c.push_back(c[j]);
    big_a.push_back(g.mul(a[j], x));
    big_b.push_back(g.mul(g.mul(b[j], y), x));
    big_c.push_back(g.mul(c[j], y));
  }
  for (auto k : jk.k) {
    big_a.push_back(a[k]);
    big_b.push_back(g.mul(b[k], yinv_x));
    big_c.push_back(g.mul(c[k], yinv_x));
    big_a.push_back(g.mul(a[k], x));
    big_b.push_back(b[k]);
    big_c.push_back(g.mul(c[k], x));
  }
  return detail::checked_triple(g, big_a, big_b, big_c);
}

/// phi and psi permute the classes of double_cosets(g, h) (by class index).
inline CompleteMapping lift_dcosets(const Group& g, const Subgroup& h, const CompleteMapping& cm_h,
                                    const std::vector<std::uint32_t>& phi,
                                    const std::vector<std::uint32_t>& psi) {
  const DoubleCosetMap dc = double_cosets(g, h);
  const std::size_t nd = dc.size();
  for (const auto* p : {&phi, &psi}) {
    std::vector<std::uint8_t> seen(nd);
    if (p->size() != nd)
      fail(Errc::BadPrecondition, "class permutation has the wrong size");
    for (auto v : *p)
      if (v >= nd || seen[v]++)
        fail(Errc::BadPrecondition, "class map is not a permutation");
  }
  std::vector<ElementSet> sets;
  for (const auto& cl : dc.classes) sets.push_back(to_set(g.order(), cl.elements));
  for (std::size_t d = 0; d < nd; ++d) {
    const auto sz = dc.classes[d].elements.size();
    if (dc.classes[phi[d]].elements.size() != sz || dc.classes[psi[d]].elements.size() != sz)
      fail(Errc::SizeCondition, "class " + std::to_string(d) + " (rep " +
                                    std::to_string(dc.classes[d].rep) +
                                    ") differs in size from its images");
    if (!sets[psi[d]].is_subset_of(set_product(g, sets[d], sets[phi[d]])))
      fail(Errc::ContainmentFailed, "D·phi(D) does not contain psi(D) for class " +
                                        std::to_string(d) + " (rep " +
                                        std::to_string(dc.classes[d].rep) + ")");
  }
  const InducedGroup ig = induced_group(g, h);
  detail::require_mapping(ig.group, cm_h, "mapping of H");

  const CosetSpace lc = cosets(g, h, Side::Left);
  CosetTriple t;
  for (std::size_t d = 0; d < nd; ++d) {
    const Elem zd = dc.classes[psi[d]].elements.front();
    Elem xd = 0, yd = 0;
    bool found = false;
    for (Elem x : dc.classes[d].elements) {
      const Elem y = g.mul(g.inv(x), zd);
      if (sets[phi[d]].test(y)) {
        xd = x;
        yd = y;
        found = true;
        break;
      }
    }
    ensure(found, "no factorization z_D = x_D y_D");
    auto stab = [&](Elem e) {
      return localize(ig, intersection(g, h, conjugate_subgroup(g, h, e)));
    };
    const Subgroup sx = stab(xd), sz = stab(zd), sy = stab(yd);
    const std::vector<Elem> xset = common_transversal(ig.group, sx, sz, Side::Left);
    const std::vector<Elem> yset = cosets(ig.group, sy, Side::Left).reps;
    ensure(xset.size() == yset.size(), "transversal sizes differ");
    for (std::size_t k = 0; k < xset.size(); ++k) {
      const Elem hx = ig.embed[xset[k]];
      const Elem hy = ig.embed[yset[k]];  // mu_D by index order
      t.x.push_back(lc.coset_of[g.mul(hx, xd)]);
      t.y.push_back(lc.coset_of[g.mul(hy, yd)]);
      t.z.push_back(lc.coset_of[g.mul(hx, zd)]);
    }
  }
  return lift_lcst(g, h, t, cm_h);
}

/// Index of the first class D with D² not containing D, if any.
inline std::optional<std::size_t> dcst_witness(const Group& g, const DoubleCosetMap& dc) {
  for (std::size_t d = 0; d < dc.size(); ++d) {
    const ElementSet s = to_set(g.order(), dc.classes[d].elements);
    if (!s.is_subset_of(set_product(g, s, s))) return d;
  }
  return std::nullopt;
}

inline CompleteMapping lift_dcst(const Group& g, const Subgroup& h, const CompleteMapping& cm_h) {
  const DoubleCosetMap dc = double_cosets(g, h);
  if (auto d = dcst_witness(g, dc))
    fail(Errc::ContainmentFailed, "D² does not contain D for class " + std::to_string(*d) +
                                      " (rep " + std::to_string(dc.classes[*d].rep) + ")");
  std::vector<std::uint32_t> id(dc.size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  return lift_dcosets(g, h, cm_h, id, id);
}

}  // namespace hallpaige
