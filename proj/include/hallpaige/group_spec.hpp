#pragma once

// Textual group descriptors:
//
//   spec := cyclic:n | dihedral:n | sym:n | alt:n | q8 | ea:p^k
//         | prod:(spec,spec) | cayley:<path> | perm:<path> | psl2:q
//
// dihedral:n has order 2n. Paths run to the end of the spec (or to the
// enclosing comma/paren inside prod).

#include <string>
#include <string_view>
#include <vector>

#include "hallpaige/builtin.hpp"
#include "hallpaige/error.hpp"
#include "hallpaige/group.hpp"
#include "hallpaige/io.hpp"
#include "hallpaige/psl2.hpp"

namespace hallpaige {

namespace detail {

inline std::size_t spec_number(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos)
    fail(Errc::UnsupportedSpec, "bad number in group spec: " + std::string(whole));
  return std::stoul(std::string(s));
}

/// Index of the comma separating the two factors of "prod:(a,b)"'s body.
inline std::size_t top_level_comma(std::string_view body) {
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace detail

inline Group parse_group_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (colon == std::string_view::npos || arg.empty())
      fail(Errc::UnsupportedSpec, "missing argument in group spec: " + std::string(spec));
  };
  if (head == "q8" && colon == std::string_view::npos) return quaternion8();
  if (head == "cyclic" || head == "dihedral") {
    need_arg();
    const auto n = detail::spec_number(arg, spec);
    if (n == 0 || (head == "cyclic" ? n : 2 * n) > kMaxTableOrder)
      fail(Errc::UnsupportedSpec, "order out of range: " + std::string(spec));
    return head == "cyclic" ? cyclic(n) : dihedral(n);
  }
  if (head == "sym" || head == "alt") {
    need_arg();
    const auto n = detail::spec_number(arg, spec);
    if (n == 0 || n > 7) fail(Errc::UnsupportedSpec, "degree must be 1..7: " + std::string(spec));
    return head == "sym" ? symmetric(n) : alternating(n);
  }
  if (head == "ea") {
    need_arg();
    const auto caret = arg.find('^');
    if (caret == std::string_view::npos) fail(Errc::UnsupportedSpec, "ea needs p^k: " + std::string(spec));
    const auto p = detail::spec_number(arg.substr(0, caret), spec);
    const auto k = detail::spec_number(arg.substr(caret + 1), spec);
    if (!is_prime(p) || k == 0) fail(Errc::UnsupportedSpec, "ea needs prime p and k >= 1: " + std::string(spec));
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      order *= p;
      if (order > kMaxTableOrder) fail(Errc::UnsupportedSpec, "order out of range: " + std::string(spec));
    }
    return elementary_abelian(p, k);
  }
  if (head == "psl2") {
    need_arg();
    return psl2(detail::spec_number(arg, spec)).perm.group;
  }
  if (head == "cayley") {
    need_arg();
    return read_cayley_file(std::string(arg));
  }
  if (head == "perm") {
    need_arg();
    return read_permutation_file(std::string(arg));
  }
  if (head == "prod") {
    need_arg();
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')')
      fail(Errc::UnsupportedSpec, "prod needs (spec,spec): " + std::string(spec));
    const std::string_view body = arg.substr(1, arg.size() - 2);
    const auto comma = detail::top_level_comma(body);
    if (comma == std::string_view::npos)
      fail(Errc::UnsupportedSpec, "prod needs two factors: " + std::string(spec));
    const Group a = parse_group_spec(body.substr(0, comma));
    const Group b = parse_group_spec(body.substr(comma + 1));
    if (a.order() * b.order() > kMaxTableOrder)
      fail(Errc::UnsupportedSpec, "direct product too large: " + std::string(spec));
    return direct_product(a, b);
  }
  fail(Errc::UnsupportedSpec, "unknown group spec: " + std::string(spec));
}

/// The built-in catalog up to the given order: cyclic groups, dihedral
/// groups, elementary abelian groups of rank >= 2, Q8, S3, A4, S4, A5, and
/// direct products of two nontrivial members. Deterministic order.
inline std::vector<std::string> catalog_specs(std::size_t max_order) {
  struct Base {
    std::string spec;
    std::size_t order;
  };
  std::vector<Base> base;
  for (std::size_t n = 2; n <= max_order; ++n) base.push_back({"cyclic:" + std::to_string(n), n});
  for (std::size_t n = 3; 2 * n <= max_order; ++n) base.push_back({"dihedral:" + std::to_string(n), 2 * n});
  for (std::size_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::size_t order = p * p;
    for (std::size_t k = 2; order <= max_order; ++k, order *= p)
      base.push_back({"ea:" + std::to_string(p) + "^" + std::to_string(k), order});
  }
  for (const Base& b : {Base{"q8", 8}, Base{"sym:3", 6}, Base{"alt:4", 12}, Base{"sym:4", 24}, Base{"alt:5", 60}})
    if (b.order <= max_order) base.push_back(b);

  std::vector<std::string> out{"cyclic:1"};
  for (const auto& b : base) out.push_back(b.spec);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      if (base[i].order * base[j].order <= max_order)
        out.push_back("prod:(" + base[i].spec + "," + base[j].spec + ")");
  return out;
}

}  // namespace hallpaige
