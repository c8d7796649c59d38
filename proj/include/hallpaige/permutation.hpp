#pragma once

// Permutation groups: closure from generators and conversion to a table.
//
// Products compose left to right: (a*b)(x) = b(a(x)).

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hallpaige/error.hpp"
#include "hallpaige/group.hpp"

namespace hallpaige {

using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultClosureCap = 1000000;
/// Largest order for which a full multiplication table is materialized.
inline constexpr std::size_t kMaxTableOrder = 8192;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  return p;
}

/// a then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) r[a[i]] = i;
  return r;
}

inline bool is_bijection(const Permutation& p) {
  std::vector<std::uint8_t> seen(p.size());
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

/// Parses disjoint-cycle notation such as "(0 1 2)(3 4)" on `degree` points.
/// Commas are accepted as separators inside a cycle. "()" is the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<std::uint8_t> used(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail(Errc::ParseError, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail(Errc::ParseError, "bad cycle notation: " + std::string(text));
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v >= degree)
        fail(Errc::ParseError, "point " + std::to_string(v) + " exceeds degree " +
                                   std::to_string(degree));
      if (used[v])
        fail(Errc::ParseError, "point " + std::to_string(v) + " repeated");
      used[v] = 1;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

inline std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<std::uint8_t> seen(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = 1;
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

/// A permutation group with its elements enumerated; element k of `group`
/// is `elements[k]`, and element 0 is the identity permutation.
struct PermutationGroup {
  Group group;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, Elem, PermutationHash> index;

  Elem id_of(const Permutation& p) const {
    auto it = index.find(p);
    if (it == index.end()) fail(Errc::NotFound, "permutation not in group");
    return it->second;
  }
};

/// Breadth-first closure of the generators. Elements are numbered in BFS
/// discovery order (generators applied on the right, in the order given).
inline PermutationGroup permutation_group(const std::vector<Permutation>& gens,
                                          std::size_t cap = kDefaultClosureCap,
                                          std::string label = {}) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != degree)
      fail(Errc::ParseError, "generators have differing degrees");
    if (!is_bijection(g)) fail(Errc::ParseError, "generator is not a bijection");
  }
  std::vector<Permutation> elems{identity_permutation(degree)};
  std::unordered_map<Permutation, Elem, PermutationHash> index{{elems[0], 0}};
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<std::vector<Elem>> right(gens.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation x = compose(elems[i], gens[k]);
      auto [it, inserted] = index.try_emplace(x, static_cast<Elem>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap)
          fail(Errc::ClosureTooLarge,
               "closure exceeds " + std::to_string(cap) + " elements");
        elems.push_back(std::move(x));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right[k].push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  if (n > kMaxTableOrder)
    fail(Errc::ClosureTooLarge, "group of order " + std::to_string(n) +
                                    " exceeds table limit " +
                                    std::to_string(kMaxTableOrder));
  // mul[a][b] = mul[a][parent(b)] * gen(b); parents precede children.
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b)
      table[a * n + b] = right[via[b]][table[a * n + parent[b]]];
  }
  return PermutationGroup{Group(n, std::move(table), std::move(label)),
                          std::move(elems), std::move(index)};
}

inline Group from_permutations(const std::vector<Permutation>& gens,
                               std::size_t cap = kDefaultClosureCap) {
  return permutation_group(gens, cap).group;
}

}  // namespace hallpaige
