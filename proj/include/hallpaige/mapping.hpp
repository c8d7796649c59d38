#pragma once

// Complete mappings: permutations phi, psi of G with g*phi(g) = psi(g).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <optional>
#include <string>
#include <vector>

#include "hallpaige/error.hpp"
#include "hallpaige/exact_cover.hpp"
#include "hallpaige/group.hpp"

namespace hallpaige {

struct CompleteMapping {
  std::vector<Elem> phi;
  std::vector<Elem> psi;

  bool operator==(const CompleteMapping&) const = default;
};

/// Outcome of verify(); `failure` names the first violated constraint.
struct Verification {
  bool ok = true;
  std::string failure;
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {
inline std::optional<std::size_t> first_repeat(const std::vector<Elem>& v, std::size_t n) {
  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= n || seen[v[i]]) return i;
    seen[v[i]] = 1;
  }
  return std::nullopt;
}
}  // namespace detail

inline Verification verify(const Group& g, const CompleteMapping& cm) {
  const std::size_t n = g.order();
  if (cm.phi.size() != n || cm.psi.size() != n)
    fail(Errc::SizeMismatch, "mapping tables have sizes " + std::to_string(cm.phi.size()) +
                                 "/" + std::to_string(cm.psi.size()) + ", group order " +
                                 std::to_string(n));
  if (auto i = detail::first_repeat(cm.phi, n))
    return {false, "phi is not a bijection (element " + std::to_string(*i) + ")"};
  if (auto i = detail::first_repeat(cm.psi, n))
    return {false, "psi is not a bijection (element " + std::to_string(*i) + ")"};
  for (Elem x = 0; x < n; ++x)
    if (g.mul(x, cm.phi[x]) != cm.psi[x])
      return {false, "g*phi(g) != psi(g) at g = " + std::to_string(x)};
  return {};
}

/// Normalizes a triple a(i)b(i) = c(i) of bijections I -> G into (phi, psi)
/// with phi = b∘a^-1 and psi = c∘a^-1.
inline CompleteMapping cm_from_triple(const Group& g, const std::vector<Elem>& a,
                                      const std::vector<Elem>& b,
                                      const std::vector<Elem>& c) {
  const std::size_t n = g.order();
  if (a.size() != n || b.size() != n || c.size() != n)
    fail(Errc::TripleInvalid, "triple maps have the wrong size");
  for (const auto* m : {&a, &b, &c})
    if (auto i = detail::first_repeat(*m, n))
      fail(Errc::TripleInvalid, "map is not a bijection at index " + std::to_string(*i));
  CompleteMapping cm{std::vector<Elem>(n), std::vector<Elem>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (g.mul(a[i], b[i]) != c[i])
      fail(Errc::TripleInvalid, "a(i)b(i) != c(i) at index " + std::to_string(i));
    cm.phi[a[i]] = b[i];
    cm.psi[a[i]] = c[i];
  }
  return cm;
}

/// Triple view (a = identity) of a complete mapping.
struct Triple {
  std::vector<Elem> a, b, c;
};

inline Triple triple_of(const CompleteMapping& cm) {
  Triple t;
  t.a.resize(cm.phi.size());
  for (Elem i = 0; i < t.a.size(); ++i) t.a[i] = i;
  t.b = cm.phi;
  t.c = cm.psi;
  return t;
}

inline CompleteMapping cm_odd(const Group& g) {
  if (g.order() % 2 == 0)
    fail(Errc::EvenOrder, "group of order " + std::to_string(g.order()) + " is even");
  CompleteMapping cm;
  for (Elem x = 0; x < g.order(); ++x) {
    cm.phi.push_back(x);
    cm.psi.push_back(g.mul(x, x));
  }
  ensure(verify(g, cm).ok, "squaring map is not a bijection");
  return cm;
}

/// True when the product of all elements, taken in the abelianization
/// G/G', is not the identity. A complete mapping forces that product to be
/// trivial: multiplying g*phi(g) = psi(g) over all g in an abelian quotient
/// gives (prod g)^2 = prod g.
inline bool abelianization_obstruction(const Group& g) {
  const Subgroup derived = commutator_subgroup(g);
  const Quotient ab = quotient(g, derived);
  Elem sum = Group::identity;
  for (Elem x = 0; x < g.order(); ++x) sum = ab.group.mul(sum, ab.projection[x]);
  return sum != Group::identity;
}

inline constexpr std::uint64_t kDefaultSearchBudget = 100000000;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  /// Refute immediately when the abelianization product is nontrivial.
  /// Disable to force a plain exhaustive search.
  bool use_obstruction = true;
  /// Node cap of the first run, doubled on each restart; 0 = single run.
  std::uint64_t restart_cap = 10000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct SearchResult {
  CoverStatus status = CoverStatus::NotFound;
  std::optional<CompleteMapping> mapping;
  std::uint64_t nodes = 0;
  bool refuted_by_obstruction = false;
};

namespace detail {

/// One DLX run with rows and columns relabelled by a seeded shuffle
/// (seed 0 keeps the natural order).
inline CoverStatus transversal_run(const Group& g, std::uint64_t seed, std::uint64_t budget,
                                   std::vector<std::pair<Elem, Elem>>& cells,
                                   std::uint64_t& nodes) {
  const std::size_t n = g.order();
  std::vector<ExactCover::Index> relabel(3 * n);
  std::iota(relabel.begin(), relabel.end(), ExactCover::Index{0});
  std::vector<std::size_t> order(n * n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::shuffle(order.begin(), order.end(), rng);
  }
  ExactCover dlx(3 * n);
  for (auto r : order) {
    const Elem x = static_cast<Elem>(r / n), y = static_cast<Elem>(r % n);
    dlx.add_row({relabel[x], relabel[n + y], relabel[2 * n + g.mul(x, y)]});
  }
  std::vector<std::size_t> rows;
  const CoverStatus st = dlx.first(rows, budget);
  nodes += dlx.nodes();
  cells.clear();
  for (auto r : rows) {
    const auto cell = order[r];
    cells.emplace_back(static_cast<Elem>(cell / n), static_cast<Elem>(cell % n));
  }
  return st;
}

}  // namespace detail

/// Transversal search on the Cayley table as an exact cover: row (g,h)
/// covers columns row-g, col-h and symbol g*h.
///
/// Runs complete DLX searches under growing node caps, the first in natural
/// order and later ones on seeded shuffles of rows and columns. Any run that
/// finishes settles the answer; the seeds are fixed, so results are
/// reproducible.
inline SearchResult search(const Group& g, const SearchOptions& opts = {}) {
  const std::size_t n = g.order();
  if (opts.use_obstruction && abelianization_obstruction(g))
    return SearchResult{CoverStatus::NotFound, std::nullopt, 0, true};
  SearchResult res;
  res.status = CoverStatus::BudgetExhausted;
  std::vector<std::pair<Elem, Elem>> cells;
  std::uint64_t cap = opts.restart_cap;
  for (std::uint64_t attempt = 0; res.nodes < opts.budget; ++attempt) {
    const std::uint64_t left = opts.budget - res.nodes;
    const bool last = opts.restart_cap == 0 || cap >= left;
    const std::uint64_t seed = attempt == 0 ? 0 : opts.seed + attempt;
    const CoverStatus st = detail::transversal_run(g, seed, last ? left : cap, cells, res.nodes);
    if (st != CoverStatus::BudgetExhausted) {
      res.status = st;
      break;
    }
    if (last) break;
    cap *= 2;
  }
  if (res.status == CoverStatus::Found) {
    CompleteMapping cm{std::vector<Elem>(n), std::vector<Elem>(n)};
    for (auto [x, y] : cells) {
      cm.phi[x] = y;
      cm.psi[x] = g.mul(x, y);
    }
    ensure(verify(g, cm).ok, "exact cover produced an invalid mapping");
    res.mapping = std::move(cm);
  }
  return res;
}

/// Cyclic group Z_2k with permutations alpha, beta satisfying
/// c + alpha(c) = beta(c) for every c != 0, beta(0) = 0 and alpha(0) = k.
struct NearMappingCyclic {
  std::size_t order = 0;
  std::vector<Elem> alpha;
  std::vector<Elem> beta;
};

inline NearMappingCyclic near_cm_cyclic(std::size_t order) {
  if (order == 0 || order % 2 == 1)
    fail(Errc::OddOrder, "order " + std::to_string(order) + " is not even and positive");
  const std::size_t k = order / 2;
  NearMappingCyclic nm{order, std::vector<Elem>(order), std::vector<Elem>(order)};
  nm.alpha[0] = static_cast<Elem>(k);
  for (std::size_t i = 1; i < k; ++i) nm.alpha[i] = static_cast<Elem>(i);
  for (std::size_t i = k; i < order; ++i) nm.alpha[i] = static_cast<Elem>((i + 1) % order);
  for (std::size_t i = 0; i < k; ++i) nm.beta[i] = static_cast<Elem>(2 * i);
  for (std::size_t i = k; i < order; ++i) nm.beta[i] = static_cast<Elem>((2 * i + 1) % order);

  ensure(!detail::first_repeat(nm.alpha, order) && !detail::first_repeat(nm.beta, order),
         "near mapping tables are not permutations");
  for (std::size_t c = 1; c < order; ++c)
    ensure((c + nm.alpha[c]) % order == nm.beta[c], "near mapping identity fails");
  ensure(nm.beta[0] == 0 && nm.alpha[0] != 0, "near mapping base values wrong");
  return nm;
}

}  // namespace hallpaige
