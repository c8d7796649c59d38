#pragma once

// Brute-force reference implementations used to derive expected values.
// They share no code with the library beyond the Group table accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hallpaige/group.hpp"

namespace oracle {

using hallpaige::Elem;
using hallpaige::Group;

/// Element orders by repeated multiplication.
inline std::size_t order_of(const Group& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

inline std::vector<std::size_t> order_census(const Group& g) {
  std::vector<std::size_t> census(g.order() + 1);
  for (Elem x = 0; x < g.order(); ++x) ++census[order_of(g, x)];
  return census;
}

/// Closure of a set of elements under multiplication (finite group, so
/// inverses come for free).
inline std::set<Elem> closure(const Group& g, std::set<Elem> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

/// Every subgroup, by repeatedly joining cyclic subgroups.
inline std::set<std::set<Elem>> all_subgroups(const Group& g) {
  std::set<std::set<Elem>> subs{{0}};
  std::vector<std::set<Elem>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::set<Elem>> next;
    for (const auto& s : frontier)
      for (Elem x = 0; x < g.order(); ++x) {
        if (s.count(x)) continue;
        auto t = s;
        t.insert(x);
        auto c = closure(g, t);
        if (subs.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return subs;
}

inline std::size_t largest_two_subgroup(const Group& g) {
  std::size_t best = 1;
  for (const auto& s : all_subgroups(g))
    if ((s.size() & (s.size() - 1)) == 0) best = std::max(best, s.size());
  return best;
}

/// All complete mappings as phi tables, by backtracking over phi with the
/// psi-injectivity constraint.
inline std::vector<std::vector<Elem>> all_complete_mappings(const Group& g,
                                                            std::size_t limit = SIZE_MAX) {
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> phi(n);
  std::vector<char> used_phi(n), used_psi(n);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (out.size() >= limit) return;
    if (x == n) {
      out.push_back(phi);
      return;
    }
    for (Elem y = 0; y < n; ++y) {
      const Elem z = g.mul(static_cast<Elem>(x), y);
      if (used_phi[y] || used_psi[z]) continue;
      used_phi[y] = used_psi[z] = 1;
      phi[x] = y;
      rec(x + 1);
      used_phi[y] = used_psi[z] = 0;
    }
  };
  rec(0);
  return out;
}

inline bool has_complete_mapping(const Group& g) { return !all_complete_mappings(g, 1).empty(); }

/// Double cosets as a set of element sets.
inline std::set<std::set<Elem>> double_cosets(const Group& g, const std::vector<Elem>& h) {
  std::set<std::set<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    std::set<Elem> d;
    for (Elem a : h)
      for (Elem b : h) d.insert(g.mul(g.mul(a, x), b));
    out.insert(d);
  }
  return out;
}

/// A finite Coxeter group from its Coxeter matrix, realised by the
/// geometric (Tits) representation in floating point and enumerated by
/// breadth-first search. Length = BFS distance from the identity.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const std::vector<std::vector<int>>& m) : l_(static_cast<int>(m.size())) {
    // B(e_i, e_j) = -cos(pi / m_ij)
    std::vector<std::vector<double>> b(l_, std::vector<double>(l_));
    for (int i = 0; i < l_; ++i)
      for (int j = 0; j < l_; ++j) b[i][j] = i == j ? 1.0 : -std::cos(M_PI / m[i][j]);
    // s_i(v) = v - 2 B(e_i, v) e_i, as a matrix acting on column vectors
    for (int i = 0; i < l_; ++i) {
      Mat s = identity();
      for (int j = 0; j < l_; ++j) s[i * l_ + j] -= 2 * b[i][j];
      gens_.push_back(s);
    }
    std::map<Key, std::size_t> index;
    elems_.push_back(identity());
    length_.push_back(0);
    words_.push_back({});
    index.emplace(key(elems_[0]), 0);
    for (std::size_t k = 0; k < elems_.size(); ++k)
      for (int s = 0; s < l_; ++s) {
        Mat x = mul(elems_[k], gens_[s]);
        auto [it, fresh] = index.emplace(key(x), elems_.size());
        if (fresh) {
          elems_.push_back(x);
          length_.push_back(length_[k] + 1);
          auto w = words_[k];
          w.push_back(s + 1);
          words_.push_back(w);
        }
        right_[{k, s}] = it->second;
      }
    for (std::size_t k = 0; k < elems_.size(); ++k)
      for (int s = 0; s < l_; ++s) left_[{k, s}] = index.at(key(mul(gens_[s], elems_[k])));
    index_ = std::move(index);
  }

  std::size_t size() const { return elems_.size(); }
  int length(std::size_t k) const { return length_[k]; }
  const std::vector<int>& word(std::size_t k) const { return words_[k]; }
  std::size_t right(std::size_t k, int s) const { return right_.at({k, s - 1}); }
  std::size_t left(std::size_t k, int s) const { return left_.at({k, s - 1}); }

  std::size_t element(const std::vector<int>& w) const {
    std::size_t k = 0;
    for (int s : w) k = right(k, s);
    return k;
  }

  /// Minimal double coset representatives of W' = <S - {r}>, sorted by length.
  std::vector<std::size_t> min_double_coset_reps(int r) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < size(); ++k) {
      bool minimal = true;
      for (int s = 1; s <= l_ && minimal; ++s)
        if (s != r && (length(right(k, s)) < length(k) || length(left(k, s)) < length(k)))
          minimal = false;
      if (minimal) out.push_back(k);
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](auto a, auto b) { return length(a) < length(b); });
    return out;
  }

  std::size_t num_cosets(int r) const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < size(); ++k) {
      bool minimal = true;
      for (int s = 1; s <= l_; ++s)
        if (s != r && length(right(k, s)) < length(k)) minimal = false;
      n += minimal;
    }
    return n;
  }

  /// {v : BvB ⊆ BwB·BuB}, from the word of w processed right to left.
  std::set<std::size_t> hecke(const std::vector<int>& w, const std::vector<int>& u) const {
    std::set<std::size_t> cur{element(u)};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      std::set<std::size_t> next;
      for (auto v : cur) {
        const auto sv = left(v, *it);
        next.insert(sv);
        if (length(sv) < length(v)) next.insert(v);
      }
      cur = std::move(next);
    }
    return cur;
  }

 private:
  using Mat = std::vector<double>;
  using Key = std::vector<long long>;

  Mat identity() const {
    Mat m(l_ * l_, 0.0);
    for (int i = 0; i < l_; ++i) m[i * l_ + i] = 1.0;
    return m;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat c(l_ * l_, 0.0);
    for (int i = 0; i < l_; ++i)
      for (int k = 0; k < l_; ++k)
        for (int j = 0; j < l_; ++j) c[i * l_ + j] += a[i * l_ + k] * b[k * l_ + j];
    return c;
  }
  static Key key(const Mat& m) {
    Key k;
    for (double x : m) k.push_back(std::llround(x * 1e6));
    return k;
  }

  int l_;
  std::vector<Mat> gens_;
  std::vector<Mat> elems_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_;
  std::map<std::pair<std::size_t, int>, std::size_t> right_, left_;
  std::map<Key, std::size_t> index_;
};

}  // namespace oracle
