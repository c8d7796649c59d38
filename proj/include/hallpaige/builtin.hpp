#pragma once

// Built-in group families with fixed element numbering:
//
//   cyclic n            residues 0..n-1 under addition
//   dihedral n          order 2n; id i is r^i (0 <= i < n), id n+i is r^i s,
//                       with s r s = r^-1
//   symmetric n         permutations of 0..n-1 in lexicographic order,
//                       composed left to right
//   alternating n       even permutations in lexicographic order
//   elementary p^k      vectors over F_p, id = sum of coord_i * p^i
//   quaternion8         1,-1,i,-i,j,-j,k,-k as ids 0..7
//   direct product G×H id g*|H| + h

#include <algorithm>
#include <string>
#include <vector>

#include "hallpaige/error.hpp"
#include "hallpaige/group.hpp"
#include "hallpaige/permutation.hpp"

namespace hallpaige {

inline Group cyclic(std::size_t n) {
  if (n == 0) fail(Errc::UnsupportedSpec, "cyclic group of order 0");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return Group(n, std::move(t), "cyclic:" + std::to_string(n));
}

inline Group dihedral(std::size_t n) {
  if (n == 0) fail(Errc::UnsupportedSpec, "dihedral group with n = 0");
  const std::size_t m = 2 * n;
  std::vector<Elem> t(m * m);
  // (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b)
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
      std::size_t k = a ? (i + n - j) % n : (i + j) % n;
      t[x * m + y] = static_cast<Elem>(k + n * ((a + b) % 2));
    }
  return Group(m, std::move(t), "dihedral:" + std::to_string(n));
}

namespace detail {

inline std::vector<Permutation> lex_permutations(std::size_t n, bool even_only) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    if (even_only) {
      std::size_t inv = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
      if (inv % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Group group_on_list(const std::vector<Permutation>& elems, std::string label) {
  std::unordered_map<Permutation, Elem, PermutationHash> idx;
  for (Elem i = 0; i < elems.size(); ++i) idx.emplace(elems[i], i);
  const std::size_t m = elems.size();
  std::vector<Elem> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      t[a * m + b] = idx.at(compose(elems[a], elems[b]));
  return Group(m, std::move(t), std::move(label));
}

}  // namespace detail

inline std::vector<Permutation> symmetric_elements(std::size_t n) {
  return detail::lex_permutations(n, false);
}
inline std::vector<Permutation> alternating_elements(std::size_t n) {
  return detail::lex_permutations(n, true);
}

inline Group symmetric(std::size_t n) {
  if (n == 0 || n > 7) fail(Errc::UnsupportedSpec, "symmetric n must be in 1..7");
  return detail::group_on_list(symmetric_elements(n), "sym:" + std::to_string(n));
}

inline Group alternating(std::size_t n) {
  if (n == 0 || n > 7) fail(Errc::UnsupportedSpec, "alternating n must be in 1..7");
  return detail::group_on_list(alternating_elements(n), "alt:" + std::to_string(n));
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Group elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) fail(Errc::UnsupportedSpec, std::to_string(p) + " is not prime");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > kMaxTableOrder) fail(Errc::UnsupportedSpec, "elementary abelian group too large");
  }
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[a * n + b] = static_cast<Elem>(r);
    }
  return Group(n, std::move(t), "ea:" + std::to_string(p) + "^" + std::to_string(k));
}

inline Group quaternion8() {
  // id = 2*unit + sign, units 1,i,j,k; unit products in the sign/unit form.
  static constexpr int unit_mul[4][4][2] = {
      // {sign, unit}
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},  // 1*
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},  // i*: i,-1,k,-j
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},  // j*: j,-k,-1,i
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},  // k*: k,j,-i,-1
  };
  std::vector<Elem> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& ub = unit_mul[a / 2][b / 2];
      int sign = (a % 2 + b % 2 + ub[0]) % 2;
      t[a * 8 + b] = static_cast<Elem>(2 * ub[1] + sign);
    }
  return Group(8, std::move(t), "q8");
}

inline Group direct_product(const Group& g, const Group& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (n > kMaxTableOrder) fail(Errc::UnsupportedSpec, "direct product too large");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem gx = g.mul(static_cast<Elem>(a / nh), static_cast<Elem>(b / nh));
      Elem hx = h.mul(static_cast<Elem>(a % nh), static_cast<Elem>(b % nh));
      t[a * n + b] = static_cast<Elem>(gx * nh + hx);
    }
  return Group(n, std::move(t), "prod:(" + g.label() + "," + h.label() + ")");
}

}  // namespace hallpaige
