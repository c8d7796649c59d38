#pragma once

// Finite Coxeter systems of types A_l, B_l (= C_l), D_l, E_6..8, F_4 and
// I_2(m), with elements represented by their permutation of the root set.
//
// Crystallographic types carry a Cartan matrix and integer root coordinates
// in the simple-root basis. I_2(m) uses the 2m unit roots at angles kπ/m:
// root k is positive for k < m, root k+m is -root k, and the reflection in
// root a sends k to 2a + m - k (mod 2m).
//
// Node labels are 1..l. A, B, D, F use Bourbaki numbering. E_l uses the
// numbering in which node 3 is the branch node adjacent to 2, 4 and 5, the
// short arm is 3-4, the arm 3-2-1 has length two, and 3-5-6-...-l is the
// long arm (so 2, 4, 5, 7 pairwise commute).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hallpaige/error.hpp"

namespace hallpaige::coxeter {

enum class Type { A, B, D, E, F, I };

/// Sequence of generator labels (1-based).
using Word = std::vector<int>;

inline std::string format_word(const Word& w, bool spaced = false) {
  if (w.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

/// Parses "43234" (single-digit labels), "4 3 2 3 4", or "ε"/"e"/"" for the
/// identity.
inline Word parse_word(const std::string& text) {
  Word w;
  if (text == "ε" || text == "e" || text.empty()) return w;
  const bool spaced = text.find_first_of(" ,") != std::string::npos;
  if (!spaced) {
    for (char c : text) {
      if (c < '1' || c > '9') fail(Errc::ParseError, "bad word: " + text);
      w.push_back(c - '0');
    }
    return w;
  }
  int cur = 0;
  bool have = false;
  for (char c : text + " ") {
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + (c - '0');
      have = true;
    } else if (c == ' ' || c == ',') {
      if (have) w.push_back(cur);
      cur = 0;
      have = false;
    } else {
      fail(Errc::ParseError, "bad word: " + text);
    }
  }
  return w;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// A group element as the permutation it induces on the roots.
struct Element {
  std::vector<std::uint16_t> perm;
  bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : e.perm) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class CoxeterSystem {
 public:
  CoxeterSystem(Type type, int rank, int dihedral_m = 0) : type_(type), rank_(rank), m_(dihedral_m) {
    if (type == Type::I) {
      build_dihedral();
    } else {
      build_cartan();
      build_roots();
    }
    build_coxeter_matrix();
    validate();
  }

  Type type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::string name() const {
    static const char* letters = "ABDEFI";
    if (type_ == Type::I) return "I2(" + std::to_string(m_) + ")";
    return std::string(1, letters[static_cast<int>(type_)]) + std::to_string(rank_);
  }
  bool crystallographic() const noexcept { return !cartan_.empty(); }

  /// Cartan matrix, A[i][j] = <alpha_i^vee, alpha_j>; empty for non-crystallographic I_2(m).
  const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const noexcept { return coxeter_; }
  int m(int i, int j) const { return coxeter_[i - 1][j - 1]; }

  std::size_t num_positive_roots() const noexcept { return npos_; }
  std::size_t num_roots() const noexcept { return 2 * npos_; }
  /// Simple-root coordinates of root k (crystallographic types only).
  const std::vector<std::vector<int>>& root_coordinates() const noexcept { return roots_; }
  bool is_positive(std::size_t root) const noexcept { return root < npos_; }

  /// Order of W from the classical formulas.
  std::uint64_t group_order() const {
    auto fact = [](std::uint64_t n) {
      std::uint64_t r = 1;
      for (std::uint64_t i = 2; i <= n; ++i) r *= i;
      return r;
    };
    const auto l = static_cast<std::uint64_t>(rank_);
    switch (type_) {
      case Type::A: return fact(l + 1);
      case Type::B: return (std::uint64_t{1} << l) * fact(l);
      case Type::D: return (std::uint64_t{1} << (l - 1)) * fact(l);
      case Type::E: return l == 6 ? 51840 : l == 7 ? 2903040 : 696729600;
      case Type::F: return 1152;
      case Type::I: return 2 * static_cast<std::uint64_t>(m_);
    }
    return 0;
  }

  // ---- elements ----------------------------------------------------------

  Element identity() const {
    Element e;
    e.perm.resize(num_roots());
    std::iota(e.perm.begin(), e.perm.end(), std::uint16_t{0});
    return e;
  }

  void check_label(int s) const {
    if (s < 1 || s > rank_)
      fail(Errc::Unsupported, "generator " + std::to_string(s) + " outside 1.." + std::to_string(rank_));
  }

  /// s·w
  Element left_mul(int s, const Element& w) const {
    const auto& g = gens_[s - 1];
    Element r;
    r.perm.resize(w.perm.size());
    for (std::size_t b = 0; b < w.perm.size(); ++b) r.perm[b] = g[w.perm[b]];
    return r;
  }

  /// w·s
  Element right_mul(const Element& w, int s) const {
    const auto& g = gens_[s - 1];
    Element r;
    r.perm.resize(w.perm.size());
    for (std::size_t b = 0; b < w.perm.size(); ++b) r.perm[b] = w.perm[g[b]];
    return r;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element r;
    r.perm.resize(a.perm.size());
    for (std::size_t x = 0; x < a.perm.size(); ++x) r.perm[x] = a.perm[b.perm[x]];
    return r;
  }

  Element inverse(const Element& w) const {
    Element r;
    r.perm.resize(w.perm.size());
    for (std::size_t x = 0; x < w.perm.size(); ++x) r.perm[w.perm[x]] = static_cast<std::uint16_t>(x);
    return r;
  }

  Element element(const Word& w) const {
    Element e = identity();
    for (int s : w) {
      check_label(s);
      e = right_mul(e, s);
    }
    return e;
  }

  /// Number of positive roots sent to negative roots.
  int length(const Element& w) const {
    int n = 0;
    for (std::size_t b = 0; b < npos_; ++b) n += w.perm[b] >= npos_;
    return n;
  }
  int length(const Word& w) const { return length(element(w)); }
  bool is_reduced(const Word& w) const { return length(w) == static_cast<int>(w.size()); }

  /// l(w s) < l(w)
  bool right_descent(const Element& w, int s) const { return w.perm[simple_[s - 1]] >= npos_; }
  /// l(s w) < l(w)
  bool left_descent(const Element& w, int s) const {
    const auto target = simple_[s - 1];
    for (std::size_t b = 0; b < w.perm.size(); ++b)
      if (w.perm[b] == target) return b >= npos_;
    return false;
  }

  /// Lexicographically least reduced word (repeatedly strip the smallest
  /// left descent).
  Word reduced_word(Element w) const {
    Word out;
    for (;;) {
      int s = 0;
      for (int i = 1; i <= rank_; ++i)
        if (left_descent(w, i)) {
          s = i;
          break;
        }
      if (s == 0) break;
      out.push_back(s);
      w = left_mul(s, w);
    }
    return out;
  }

  const std::vector<std::uint16_t>& generator_permutation(int s) const { return gens_[s - 1]; }
  std::uint16_t simple_root(int s) const { return simple_[s - 1]; }

 private:
  void build_cartan() {
    const int l = rank_;
    auto bad = [&] { fail(Errc::Unsupported, "unsupported Coxeter type/rank"); };
    switch (type_) {
      case Type::A: if (l < 1) bad(); break;
      case Type::B: if (l < 2) bad(); break;
      case Type::D: if (l < 4) bad(); break;
      case Type::E: if (l < 6 || l > 8) bad(); break;
      case Type::F: if (l != 4) bad(); break;
      case Type::I: break;
    }
    if (l > 40) bad();
    cartan_.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
    auto bond = [&](int a, int b) { cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1; };
    switch (type_) {
      case Type::A:
        for (int i = 1; i < l; ++i) bond(i, i + 1);
        break;
      case Type::B:
        for (int i = 1; i < l - 1; ++i) bond(i, i + 1);
        // alpha_l short: <alpha_{l-1}^v, alpha_l> = -1, <alpha_l^v, alpha_{l-1}> = -2
        cartan_[l - 2][l - 1] = -1;
        cartan_[l - 1][l - 2] = -2;
        break;
      case Type::D:
        for (int i = 1; i < l - 1; ++i) bond(i, i + 1);
        bond(l - 2, l);
        break;
      case Type::E:
        bond(1, 2);
        bond(2, 3);
        bond(3, 4);
        bond(3, 5);
        for (int i = 5; i < l; ++i) bond(i, i + 1);
        break;
      case Type::F:
        bond(1, 2);
        cartan_[1][2] = -1;
        cartan_[2][1] = -2;
        bond(3, 4);
        break;
      case Type::I: break;
    }
  }

  void build_roots() {
    const int l = rank_;
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<std::vector<int>> all;
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(l, 0);
      e[i] = 1;
      seen.emplace(e, all.size());
      all.push_back(e);
    }
    for (std::size_t k = 0; k < all.size(); ++k)
      for (int i = 0; i < l; ++i) {
        auto r = reflect(all[k], i);
        if (seen.emplace(r, all.size()).second) all.push_back(r);
        if (all.size() > 20000) fail(Errc::Unsupported, "root system too large");
      }
    // positives first (in discovery order), then their negatives
    std::vector<std::vector<int>> pos;
    for (auto& r : all)
      if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
    npos_ = pos.size();
    ensure(2 * npos_ == all.size(), "root system is not symmetric");
    roots_ = pos;
    for (auto& r : pos) {
      std::vector<int> neg(r.size());
      std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
      roots_.push_back(neg);
    }
    std::map<std::vector<int>, std::uint16_t> index;
    for (std::size_t k = 0; k < roots_.size(); ++k) index.emplace(roots_[k], static_cast<std::uint16_t>(k));
    gens_.assign(l, std::vector<std::uint16_t>(roots_.size()));
    for (int i = 0; i < l; ++i)
      for (std::size_t k = 0; k < roots_.size(); ++k) gens_[i][k] = index.at(reflect(roots_[k], i));
    simple_.resize(l);
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(l, 0);
      e[i] = 1;
      simple_[i] = index.at(e);
    }
  }

  std::vector<int> reflect(const std::vector<int>& beta, int i) const {
    int pairing = 0;  // <beta, alpha_i^vee>
    for (int j = 0; j < rank_; ++j) pairing += beta[j] * cartan_[i][j];
    auto r = beta;
    r[i] -= pairing;
    return r;
  }

  void build_dihedral() {
    if (rank_ != 2 || m_ < 2 || m_ > 1000)
      fail(Errc::Unsupported, "I2(m) needs rank 2 and 2 <= m <= 1000");
    npos_ = static_cast<std::size_t>(m_);
    const int twom = 2 * m_;
    simple_ = {0, static_cast<std::uint16_t>(m_ - 1)};
    gens_.assign(2, std::vector<std::uint16_t>(twom));
    for (int s = 0; s < 2; ++s) {
      const int a = simple_[s];
      for (int k = 0; k < twom; ++k)
        gens_[s][k] = static_cast<std::uint16_t>(((2 * a + m_ - k) % twom + twom) % twom);
    }
  }

  void build_coxeter_matrix() {
    const int l = rank_;
    coxeter_.assign(l, std::vector<int>(l, 1));
    if (type_ == Type::I) {
      coxeter_[0][1] = coxeter_[1][0] = m_;
      return;
    }
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (i == j) continue;
        switch (cartan_[i][j] * cartan_[j][i]) {
          case 0: coxeter_[i][j] = 2; break;
          case 1: coxeter_[i][j] = 3; break;
          case 2: coxeter_[i][j] = 4; break;
          case 3: coxeter_[i][j] = 6; break;
          default: fail(Errc::Unsupported, "invalid Cartan entry");
        }
      }
  }

  void validate() const {
    const std::size_t l = static_cast<std::size_t>(rank_);
    std::size_t expected = 0;
    switch (type_) {
      case Type::A: expected = l * (l + 1) / 2; break;
      case Type::B: expected = l * l; break;
      case Type::D: expected = l * (l - 1); break;
      case Type::E: expected = l == 6 ? 36 : l == 7 ? 63 : 120; break;
      case Type::F: expected = 24; break;
      case Type::I: expected = static_cast<std::size_t>(m_); break;
    }
    ensure(npos_ == expected, name() + ": positive root count mismatch");
    // (s_i s_j) has order m_ij on the roots
    for (int i = 1; i <= rank_; ++i)
      for (int j = 1; j <= rank_; ++j) {
        Element w = identity();
        const Element id = w;
        int order = 0;
        do {
          w = right_mul(right_mul(w, i), j);
          ++order;
        } while (!(w == id) && order <= 1000);
        ensure(order == coxeter_[i - 1][j - 1], name() + ": Coxeter matrix inconsistent with roots");
      }
  }

  Type type_;
  int rank_;
  int m_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<std::vector<int>> roots_;
  std::size_t npos_ = 0;
  std::vector<std::vector<std::uint16_t>> gens_;
  std::vector<std::uint16_t> simple_;
};

/// Parses a type token: "A", "B", "C", "D", "E", "F" (optionally followed by
/// the rank, which must then agree), or "I2(m)".
inline CoxeterSystem coxeter_system(const std::string& type, int rank) {
  if (type.empty()) fail(Errc::Unsupported, "empty Coxeter type");
  if (type.rfind("I2(", 0) == 0 && type.back() == ')') {
    const std::string digits = type.substr(3, type.size() - 4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      fail(Errc::Unsupported, "bad dihedral type " + type);
    if (rank != 2) fail(Errc::Unsupported, "I2(m) has rank 2");
    return CoxeterSystem(Type::I, 2, std::stoi(digits));
  }
  Type t;
  switch (type[0]) {
    case 'A': t = Type::A; break;
    case 'B':
    case 'C': t = Type::B; break;
    case 'D': t = Type::D; break;
    case 'E': t = Type::E; break;
    case 'F': t = Type::F; break;
    default: fail(Errc::Unsupported, "unsupported Coxeter type " + type);
  }
  if (type.size() > 1) {
    const std::string digits = type.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), ::isdigit) || std::stoi(digits) != rank)
      fail(Errc::Unsupported, "type " + type + " does not match rank " + std::to_string(rank));
  }
  return CoxeterSystem(t, rank);
}

// ---- parabolic cosets -----------------------------------------------------

/// Minimal coset representatives of W/W' (W' generated by S - {r}) and the
/// double cosets W'\W/W'.
struct ParabolicDoubleCosets {
  int dropped = 0;
  std::vector<Element> coset_reps;
  std::vector<Word> coset_words;  // lexicographically least reduced words
  std::vector<int> coset_lengths;
  /// action[s-1][c] = coset index of s·(coset c)
  std::vector<std::vector<std::uint32_t>> action;
  /// w(omega_r) in fundamental-weight coordinates, crystallographic types only.
  std::vector<std::vector<int>> weights;

  /// Coset indices in each double coset, classes ordered by rep length.
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_rep;  // coset index of the minimal element
  std::vector<Word> class_words;

  std::size_t num_cosets() const noexcept { return coset_reps.size(); }
};

namespace detail {

inline Element reduce_to_min_coset_rep(const CoxeterSystem& sys, Element v, int dropped) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 1; j <= sys.rank(); ++j)
      if (j != dropped && sys.right_descent(v, j)) {
        v = sys.right_mul(v, j);
        changed = true;
      }
  }
  return v;
}

inline std::vector<int> weight_action(const CoxeterSystem& sys, std::vector<int> lambda, int s) {
  // s_i(lambda)_j = lambda_j - lambda_i * A_ji
  const auto& a = sys.cartan();
  const int li = lambda[s - 1];
  for (int j = 0; j < sys.rank(); ++j) lambda[j] -= li * a[j][s - 1];
  return lambda;
}

}  // namespace detail

/// Breadth-first search over W/W' from the identity coset; a coset first
/// reached at depth d has a minimal representative of length d.
inline ParabolicDoubleCosets min_coset_reps(const CoxeterSystem& sys, int r) {
  sys.check_label(r);
  ParabolicDoubleCosets pd;
  pd.dropped = r;
  std::unordered_map<Element, std::uint32_t, ElementHash> index;
  auto add = [&](Element e, int len) {
    index.emplace(e, static_cast<std::uint32_t>(pd.coset_reps.size()));
    pd.coset_reps.push_back(std::move(e));
    pd.coset_lengths.push_back(len);
  };
  add(sys.identity(), 0);
  for (std::size_t k = 0; k < pd.coset_reps.size(); ++k) {
    for (int s = 1; s <= sys.rank(); ++s) {
      Element v = sys.left_mul(s, pd.coset_reps[k]);
      if (sys.left_descent(v, s) == false) continue;  // s·w shorter than w
      bool minimal = true;
      for (int j = 1; j <= sys.rank() && minimal; ++j)
        if (j != r && sys.right_descent(v, j)) minimal = false;
      if (minimal && !index.contains(v)) add(std::move(v), pd.coset_lengths[k] + 1);
      if (pd.coset_reps.size() > 2000000) fail(Errc::SetTooLarge, "too many cosets");
    }
  }
  const std::size_t n = pd.coset_reps.size();
  pd.action.assign(sys.rank(), std::vector<std::uint32_t>(n));
  for (int s = 1; s <= sys.rank(); ++s)
    for (std::size_t k = 0; k < n; ++k) {
      Element v = detail::reduce_to_min_coset_rep(sys, sys.left_mul(s, pd.coset_reps[k]), r);
      auto it = index.find(v);
      ensure(it != index.end(), "coset action left the orbit");
      pd.action[s - 1][k] = it->second;
    }
  for (std::size_t k = 0; k < n; ++k) {
    pd.coset_words.push_back(sys.reduced_word(pd.coset_reps[k]));
    ensure(static_cast<int>(pd.coset_words[k].size()) == pd.coset_lengths[k], "BFS depth != length");
  }

  if (sys.crystallographic()) {
    // Orbit of the fundamental weight; must be in bijection with the cosets.
    std::vector<int> omega(sys.rank(), 0);
    omega[r - 1] = 1;
    std::set<std::vector<int>> distinct;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> lambda = omega;
      const Word& w = pd.coset_words[k];
      for (auto it = w.rbegin(); it != w.rend(); ++it) lambda = detail::weight_action(sys, lambda, *it);
      distinct.insert(lambda);
      pd.weights.push_back(std::move(lambda));
    }
    ensure(distinct.size() == n, "weight orbit size differs from coset count");
    for (std::size_t k = 0; k < n; ++k)
      for (int s = 1; s <= sys.rank(); ++s)
        ensure(detail::weight_action(sys, pd.weights[k], s) == pd.weights[pd.action[s - 1][k]],
               "coset action disagrees with weight action");
  }
  return pd;
}

/// Adds the double-coset layer: orbits of W' on W/W'.
inline ParabolicDoubleCosets double_coset_reps(const CoxeterSystem& sys, int r) {
  ParabolicDoubleCosets pd = min_coset_reps(sys, r);
  const std::size_t n = pd.num_cosets();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> cls(n, unset);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (cls[start] != unset) continue;
    const auto id = static_cast<std::uint32_t>(classes.size());
    std::vector<std::uint32_t> members{start};
    cls[start] = id;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int s = 1; s <= sys.rank(); ++s) {
        if (s == r) continue;
        auto c = pd.action[s - 1][members[k]];
        if (cls[c] == unset) {
          cls[c] = id;
          members.push_back(c);
        }
      }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  struct Entry {
    std::vector<std::uint32_t> members;
    std::uint32_t rep;
  };
  std::vector<Entry> entries;
  for (auto& m : classes) {
    std::uint32_t rep = m.front();
    for (auto c : m)
      if (pd.coset_lengths[c] < pd.coset_lengths[rep]) rep = c;
    int ties = 0;
    for (auto c : m) ties += pd.coset_lengths[c] == pd.coset_lengths[rep];
    ensure(ties == 1, "double coset has no unique minimal element");
    // the minimal double coset rep has no left descent in W' either
    for (int s = 1; s <= sys.rank(); ++s)
      if (s != r) ensure(!sys.left_descent(pd.coset_reps[rep], s), "class rep not minimal");
    entries.push_back({std::move(m), rep});
  }
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (pd.coset_lengths[a.rep] != pd.coset_lengths[b.rep])
      return pd.coset_lengths[a.rep] < pd.coset_lengths[b.rep];
    return pd.coset_words[a.rep] < pd.coset_words[b.rep];
  });
  for (auto& e : entries) {
    pd.class_words.push_back(pd.coset_words[e.rep]);
    pd.class_rep.push_back(e.rep);
    pd.classes.push_back(std::move(e.members));
  }
  return pd;
}

// ---- 0-Hecke double-coset products -----------------------------------------

inline constexpr std::size_t kDefaultHeckeCap = 1000000;

/// {v : BvB ⊆ (BwB)(BuB)}, by left recursion on w:
/// P(ε,u) = {u}, P(s·w', u) = ⋃_{v ∈ P(w',u)} ({sv} if l(sv) > l(v) else {sv, v}).
inline std::vector<Element> hecke_double_coset_product(const CoxeterSystem& sys, const Word& w,
                                                       const Word& u,
                                                       std::size_t cap = kDefaultHeckeCap) {
  if (!sys.is_reduced(w) || !sys.is_reduced(u))
    fail(Errc::BadPrecondition, "hecke product expects reduced words");
  std::unordered_set<Element, ElementHash> cur{sys.element(u)};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int s = *it;
    std::unordered_set<Element, ElementHash> next;
    next.reserve(cur.size() * 2);
    for (const Element& v : cur) {
      const bool shorter = sys.left_descent(v, s);  // l(sv) < l(v)
      next.insert(sys.left_mul(s, v));
      if (shorter) next.insert(v);
      if (next.size() > cap)
        fail(Errc::SetTooLarge, "hecke product exceeds " + std::to_string(cap) + " elements");
    }
    cur = std::move(next);
  }
  std::vector<std::pair<Word, Element>> keyed;
  keyed.reserve(cur.size());
  for (const auto& e : cur) keyed.emplace_back(sys.reduced_word(e), e);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

inline bool contains(const std::vector<Element>& set, const Element& e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

// ---- the u^-1 s_1...s_p u form ---------------------------------------------

struct YuckCertificate {
  Word u;
  std::vector<int> core;  // pairwise commuting generators
};

/// True iff reverse(u)·core·u is a reduced word equal to w.
inline bool verify_yuck_form(const CoxeterSystem& sys, const Word& w, const YuckCertificate& cert) {
  for (std::size_t a = 0; a < cert.core.size(); ++a) {
    sys.check_label(cert.core[a]);
    for (std::size_t b = a + 1; b < cert.core.size(); ++b)
      if (cert.core[a] == cert.core[b] || sys.m(cert.core[a], cert.core[b]) != 2)
        fail(Errc::NonCommutingCore, "core generators " + std::to_string(cert.core[a]) + " and " +
                                         std::to_string(cert.core[b]) + " do not commute");
  }
  const Word full = concat({reversed(cert.u), cert.core, cert.u});
  return sys.is_reduced(full) && sys.element(full) == sys.element(w);
}

/// The dropped generator for which stored certificates exist: the end node
/// of A_l (l), of B_l and D_l away from the fork or double bond (1), and
/// l for E_l, 4 for F_4, 1 for I_2(m).
inline int default_drop(const CoxeterSystem& sys) {
  switch (sys.type()) {
    case Type::A: return sys.rank();
    case Type::B: return 1;
    case Type::D: return 1;
    case Type::E: return sys.rank();
    case Type::F: return 4;
    case Type::I: return 1;
  }
  return 1;
}

/// Certificates for every minimal double coset representative of W' in W
/// for the default dropped node, or nullopt when none are stored.
inline std::optional<std::vector<YuckCertificate>> stored_certificates(const CoxeterSystem& sys,
                                                                       int r) {
  if (r != default_drop(sys)) return std::nullopt;
  const int l = sys.rank();
  std::vector<YuckCertificate> certs{{{}, {}}};
  auto w = [](const char* s) { return parse_word(s); };
  switch (sys.type()) {
    case Type::I: {
      // odd palindromes r s r ... r of length <= m: u is the part after the middle letter
      const int m = sys.m(1, 2);
      for (int len = 1; len <= m; len += 2) {
        Word pal;
        for (int k = 0; k < len; ++k) pal.push_back(k % 2 == 0 ? 1 : 2);
        const int mid = len / 2;
        certs.push_back({Word(pal.begin() + mid + 1, pal.end()), {pal[mid]}});
      }
      break;
    }
    case Type::A:
      certs.push_back({{}, {l}});
      break;
    case Type::B: {
      certs.push_back({{}, {1}});
      Word u;
      for (int i = l - 1; i >= 1; --i) u.push_back(i);
      certs.push_back({u, {l}});
      break;
    }
    case Type::D: {
      certs.push_back({{}, {1}});
      Word u;
      for (int i = l - 2; i >= 1; --i) u.push_back(i);
      certs.push_back({u, {l - 1, l}});
      break;
    }
    case Type::E:
      certs.push_back({{}, {l}});
      if (l == 6) {
        certs.push_back({w("356"), {2, 4}});
      } else if (l == 7) {
        certs.push_back({w("3567"), {2, 4}});
        certs.push_back({w("635234123567"), {4, 5, 7}});
      } else {
        certs.push_back({w("35678"), {2, 4}});
        certs.push_back({w("6352341235678"), {4, 5, 7}});
        certs.push_back({w("7653423567123564352341235678"), {8}});
      }
      break;
    case Type::F:
      certs.push_back({{}, {4}});
      certs.push_back({w("34"), {2}});
      certs.push_back({w("234"), {1, 3}});
      certs.push_back({w("3213234"), {4}});
      break;
  }
  return certs;
}

enum class P2Method { Product, Form };

struct P2ClassReport {
  Word rep;
  int length = 0;
  P2Method method = P2Method::Product;
  bool pass = false;
  std::size_t product_size = 0;              // product method
  std::optional<YuckCertificate> certificate;  // form method
};

/// Product method for |W| up to this bound, form method above.
inline constexpr std::uint64_t kProductMethodLimit = 52000;

inline P2Method default_p2_method(const CoxeterSystem& sys) {
  return sys.group_order() <= kProductMethodLimit ? P2Method::Product : P2Method::Form;
}

/// Checks (BwB)² ⊇ BwB for each minimal double coset representative w,
/// either by the 0-Hecke product (w ∈ P(w,w)) or by a stored certificate
/// exhibiting w = u^-1 s_1..s_p u with commuting s_i.
inline std::vector<P2ClassReport> verify_p2(const CoxeterSystem& sys, int r, P2Method method,
                                            std::size_t cap = kDefaultHeckeCap) {
  const ParabolicDoubleCosets pd = double_coset_reps(sys, r);
  std::vector<P2ClassReport> out;
  std::optional<std::vector<YuckCertificate>> certs;
  if (method == P2Method::Form) {
    certs = stored_certificates(sys, r);
    if (!certs)
      fail(Errc::MissingCertificate, "no stored certificates for " + sys.name() + " dropping " +
                                         std::to_string(r));
  }
  for (std::size_t c = 0; c < pd.classes.size(); ++c) {
    P2ClassReport rep;
    rep.rep = pd.class_words[c];
    rep.length = static_cast<int>(rep.rep.size());
    rep.method = method;
    const Element e = pd.coset_reps[pd.class_rep[c]];
    if (method == P2Method::Product) {
      const auto prod = hecke_double_coset_product(sys, rep.rep, rep.rep, cap);
      rep.product_size = prod.size();
      rep.pass = contains(prod, e);
    } else {
      for (const auto& cert : *certs) {
        const Word full = concat({reversed(cert.u), cert.core, cert.u});
        if (sys.element(full) == e) {
          rep.certificate = cert;
          rep.pass = verify_yuck_form(sys, rep.rep, cert);
          break;
        }
      }
      if (!rep.certificate)
        fail(Errc::MissingCertificate, "no certificate for representative " + format_word(rep.rep));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace hallpaige::coxeter
