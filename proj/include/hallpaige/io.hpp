#pragma once

// File formats.
//
//   Cayley table   first token n, then n rows of n 0-based entries
//   permutations   first line degree, then one generator per line in
//                  disjoint-cycle notation; blank lines and #-comments skipped
//   mapping CSV    header "g,phi,psi", then one row per element id

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hallpaige/error.hpp"
#include "hallpaige/group.hpp"
#include "hallpaige/mapping.hpp"
#include "hallpaige/permutation.hpp"

namespace hallpaige {

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  return in;
}

inline std::uint64_t parse_count(const std::string& tok, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
    fail(Errc::ParseError, "bad " + what + ": '" + tok + "'");
  return std::stoull(tok);
}

}  // namespace detail

inline Group read_cayley_table(std::istream& in, std::string label = {}) {
  std::string tok;
  if (!(in >> tok)) fail(Errc::ParseError, "empty Cayley table");
  const auto n = detail::parse_count(tok, "order");
  if (n == 0 || n > kMaxTableOrder) fail(Errc::ParseError, "order " + tok + " out of range");
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> tok)) fail(Errc::ParseError, "Cayley table ends early at row " + std::to_string(i));
      const auto v = detail::parse_count(tok, "entry");
      if (v >= n) fail(Errc::ParseError, "entry " + tok + " out of range");
      rows[i][j] = static_cast<Elem>(v);
    }
  if (in >> tok) fail(Errc::ParseError, "trailing data after Cayley table: '" + tok + "'");
  return from_cayley_table(rows, std::move(label));
}

inline Group read_cayley_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_cayley_table(in, "cayley:" + path);
}

inline std::vector<Permutation> read_generators(std::istream& in) {
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_degree) {
      std::istringstream ls(line);
      std::string tok, extra;
      ls >> tok;
      if (ls >> extra) fail(Errc::ParseError, "first line must be the degree");
      degree = detail::parse_count(tok, "degree");
      if (degree == 0 || degree > 1000) fail(Errc::ParseError, "degree out of range");
      have_degree = true;
      continue;
    }
    gens.push_back(parse_cycles(line, degree));
  }
  if (!have_degree) fail(Errc::ParseError, "permutation file has no degree line");
  if (gens.empty()) gens.push_back(identity_permutation(degree));
  return gens;
}

inline Group read_permutation_file(const std::string& path) {
  auto in = detail::open_input(path);
  return permutation_group(read_generators(in), kDefaultClosureCap, "perm:" + path).group;
}

inline void write_mapping_csv(std::ostream& out, const CompleteMapping& cm) {
  out << "g,phi,psi\n";
  for (std::size_t g = 0; g < cm.phi.size(); ++g) out << g << ',' << cm.phi[g] << ',' << cm.psi[g] << '\n';
}

/// Rows may come in any order but must name each id 0..n-1 exactly once.
inline CompleteMapping read_mapping_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(Errc::ParseError, "empty mapping file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "g,phi,psi") fail(Errc::ParseError, "mapping header must be 'g,phi,psi'");
  std::vector<std::array<std::uint64_t, 3>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<std::uint64_t, 3> r{};
    std::istringstream ls(line);
    std::string field;
    int k = 0;
    while (std::getline(ls, field, ',')) {
      if (k == 3) fail(Errc::ParseError, "too many fields: " + line);
      r[k++] = detail::parse_count(field, "mapping value");
    }
    if (k != 3) fail(Errc::ParseError, "expected 3 fields: " + line);
    rows.push_back(r);
  }
  const std::size_t n = rows.size();
  CompleteMapping cm{std::vector<Elem>(n), std::vector<Elem>(n)};
  std::vector<std::uint8_t> seen(n);
  for (const auto& r : rows) {
    if (r[0] >= n || seen[r[0]]++) fail(Errc::ParseError, "element ids must be 0..n-1 once each");
    cm.phi[r[0]] = static_cast<Elem>(r[1]);
    cm.psi[r[0]] = static_cast<Elem>(r[2]);
  }
  return cm;
}

inline CompleteMapping read_mapping_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_mapping_csv(in);
}

}  // namespace hallpaige
