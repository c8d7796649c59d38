#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hallpaige/coxeter.hpp"
#include "oracles.hpp"

using namespace hallpaige;
using namespace hallpaige::coxeter;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Internal;
}

std::vector<std::string> words_of(const ParabolicDoubleCosets& pd) {
  std::vector<std::string> out;
  for (const auto& w : pd.class_words) out.push_back(format_word(w));
  return out;
}

std::vector<CoxeterSystem> small_systems() {
  std::vector<CoxeterSystem> out;
  for (int l = 1; l <= 4; ++l) out.emplace_back(Type::A, l);
  for (int l = 2; l <= 4; ++l) out.emplace_back(Type::B, l);
  out.emplace_back(Type::D, 4);
  out.emplace_back(Type::F, 4);
  for (int m = 3; m <= 8; ++m) out.emplace_back(Type::I, 2, m);
  return out;
}

Word random_word(std::mt19937& rng, int rank, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % rank) + 1);
  return w;
}

}  // namespace

TEST_CASE("word formatting") {
  CHECK(format_word({}) == "ε");
  CHECK(format_word({4, 3, 2}) == "432");
  CHECK(format_word({4, 3, 2}, true) == "4 3 2");
  CHECK(parse_word("ε").empty());
  CHECK(parse_word("432") == Word{4, 3, 2});
  CHECK(parse_word("4 3 2") == Word{4, 3, 2});
  CHECK(code_of([] { parse_word("4x"); }) == Errc::ParseError);
}

TEST_CASE("root systems and group orders") {
  CHECK(CoxeterSystem(Type::A, 2).num_positive_roots() == 3);
  CHECK(CoxeterSystem(Type::F, 4).num_positive_roots() == 24);
  CHECK(CoxeterSystem(Type::E, 8).num_positive_roots() == 120);
  CHECK(CoxeterSystem(Type::E, 6).num_positive_roots() == 36);
  CHECK(CoxeterSystem(Type::D, 4).num_positive_roots() == 12);
  CHECK(CoxeterSystem(Type::I, 2, 7).num_positive_roots() == 7);
  CHECK(CoxeterSystem(Type::E, 8).group_order() == 696729600);
  CHECK(CoxeterSystem(Type::F, 4).m(2, 3) == 4);
  CHECK(CoxeterSystem(Type::I, 2, 5).m(1, 2) == 5);
  for (const auto& sys : small_systems()) {
    INFO(sys.name());
    CHECK(oracle::CoxeterGroup(sys.coxeter_matrix()).size() == sys.group_order());
  }
}

TEST_CASE("coxeter system lookup") {
  CHECK(coxeter_system("F4", 4).name() == "F4");
  CHECK(coxeter_system("E", 7).name() == "E7");
  CHECK(coxeter_system("C", 3).name() == "B3");
  CHECK(coxeter_system("I2(6)", 2).name() == "I2(6)");
  CHECK(code_of([] { coxeter_system("H", 3); }) == Errc::Unsupported);
  CHECK(code_of([] { coxeter_system("E", 9); }) == Errc::Unsupported);
  CHECK(code_of([] { coxeter_system("F4", 3); }) == Errc::Unsupported);
  CHECK(code_of([] { coxeter_system("D", 3); }) == Errc::Unsupported);
  CHECK(code_of([] { CoxeterSystem(Type::A, 2).element({3}); }) == Errc::Unsupported);
}

TEST_CASE("length agrees with the reflection-representation oracle") {
  const CoxeterSystem a2(Type::A, 2);
  CHECK(a2.length(Word{}) == 0);
  CHECK(a2.length(Word{1}) == 1);
  CHECK(a2.length(parse_word("121")) == 3);
  CHECK(a2.length(parse_word("1212")) == 2);
  for (const auto& sys : small_systems()) {
    const oracle::CoxeterGroup o(sys.coxeter_matrix());
    INFO(sys.name());
    for (std::size_t k = 0; k < o.size(); ++k) {
      const Word w(o.word(k).begin(), o.word(k).end());
      REQUIRE(sys.length(w) == o.length(k));
      const Word rw = sys.reduced_word(sys.element(w));
      REQUIRE(o.element(std::vector<int>(rw.begin(), rw.end())) == k);
      REQUIRE(sys.is_reduced(rw));
    }
  }
}

TEST_CASE("length is subadditive, with equality exactly for reduced concatenations") {
  std::mt19937 rng(5);
  for (const auto& sys : small_systems()) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word a = random_word(rng, sys.rank(), rng() % 8), b = random_word(rng, sys.rank(), rng() % 8);
      const Word ab = concat({a, b});
      const int la = sys.length(a), lb = sys.length(b), lab = sys.length(ab);
      REQUIRE(lab <= la + lb);
      const Word ra = sys.reduced_word(sys.element(a)), rb = sys.reduced_word(sys.element(b));
      REQUIRE((lab == la + lb) == sys.is_reduced(concat({ra, rb})));
      REQUIRE(sys.multiply(sys.element(a), sys.element(b)) == sys.element(ab));
      REQUIRE(sys.multiply(sys.element(a), sys.inverse(sys.element(a))) == sys.identity());
    }
  }
}

TEST_CASE("minimal coset representatives") {
  const CoxeterSystem a2(Type::A, 2);
  const auto pd = min_coset_reps(a2, 2);
  REQUIRE(pd.num_cosets() == 3);
  CHECK(format_word(pd.coset_words[0]) == "ε");
  CHECK(format_word(pd.coset_words[1]) == "2");
  CHECK(format_word(pd.coset_words[2]) == "12");
  CHECK(min_coset_reps(CoxeterSystem(Type::F, 4), 4).num_cosets() == 24);
  CHECK(min_coset_reps(CoxeterSystem(Type::E, 8), 8).num_cosets() == 240);
  CHECK(min_coset_reps(CoxeterSystem(Type::E, 7), 7).num_cosets() == 56);
  CHECK(min_coset_reps(CoxeterSystem(Type::E, 6), 6).num_cosets() == 27);

  for (const auto& sys : small_systems()) {
    const oracle::CoxeterGroup o(sys.coxeter_matrix());
    for (int r = 1; r <= sys.rank(); ++r) {
      INFO(sys.name() << " r=" << r);
      const auto p = min_coset_reps(sys, r);
      REQUIRE(p.num_cosets() == o.num_cosets(r));
      for (std::size_t c = 0; c < p.num_cosets(); ++c) {
        REQUIRE(sys.length(p.coset_reps[c]) == p.coset_lengths[c]);
        for (int s = 1; s <= sys.rank(); ++s)
          if (s != r) REQUIRE_FALSE(sys.right_descent(p.coset_reps[c], s));
      }
    }
  }
}

TEST_CASE("double coset representatives agree with the oracle") {
  for (const auto& sys : small_systems()) {
    const oracle::CoxeterGroup o(sys.coxeter_matrix());
    for (int r = 1; r <= sys.rank(); ++r) {
      INFO(sys.name() << " r=" << r);
      const auto pd = double_coset_reps(sys, r);
      std::vector<std::size_t> mine;
      for (const auto& w : pd.class_words) mine.push_back(o.element(std::vector<int>(w.begin(), w.end())));
      auto expected = o.min_double_coset_reps(r);
      std::vector<std::size_t> sorted_mine = mine;
      std::sort(sorted_mine.begin(), sorted_mine.end());
      std::sort(expected.begin(), expected.end());
      REQUIRE(sorted_mine == expected);
      for (std::size_t c = 1; c < pd.class_words.size(); ++c)
        REQUIRE(pd.class_words[c - 1].size() <= pd.class_words[c].size());
      std::size_t total = 0;
      for (const auto& cl : pd.classes) total += cl.size();
      REQUIRE(total == pd.num_cosets());
    }
  }
}

TEST_CASE("double coset representatives of exceptional types") {
  CHECK(words_of(double_coset_reps(CoxeterSystem(Type::F, 4), 4)) ==
        std::vector<std::string>{"ε", "4", "43234", "43213234", "432132343213234"});
  CHECK(words_of(double_coset_reps(CoxeterSystem(Type::E, 6), 6)) ==
        std::vector<std::string>{"ε", "6", "65324356"});
  CHECK(words_of(double_coset_reps(CoxeterSystem(Type::E, 7), 7)) ==
        std::vector<std::string>{"ε", "7", "7653243567", "765321432534653217653243567"});
  CHECK(words_of(double_coset_reps(CoxeterSystem(Type::E, 8), 8)) ==
        std::vector<std::string>{"ε", "8", "876532435678", "87653214325346532176532435678",
                                 "876532143253465321765324356787653214325346532176532435678"});
}

TEST_CASE("double coset representatives of dihedral and classical types") {
  for (int m = 3; m <= 8; ++m) {
    // 1, r, rsr, rsrsr, ... of length below m
    const auto pd = double_coset_reps(CoxeterSystem(Type::I, 2, m), 1);
    std::vector<std::string> expected{"ε"};
    for (int len = 1; len < m; len += 2) {
      std::string w;
      for (int k = 0; k < len; ++k) w += k % 2 ? '2' : '1';
      expected.push_back(w);
    }
    CHECK(words_of(pd) == expected);
  }
  for (int l = 2; l <= 5; ++l) {
    // ε, r, and r conjugated through the chain to the double bond
    std::string long_word;
    for (int i = 1; i < l; ++i) long_word += std::to_string(i);
    long_word += std::to_string(l);
    for (int i = l - 1; i >= 1; --i) long_word += std::to_string(i);
    CHECK(words_of(double_coset_reps(CoxeterSystem(Type::B, l), 1)) ==
          std::vector<std::string>{"ε", "1", long_word});
  }
  for (int l = 1; l <= 6; ++l) {
    const auto words = words_of(double_coset_reps(CoxeterSystem(Type::A, l), l));
    CHECK(words == std::vector<std::string>{"ε", std::to_string(l)});
  }
}

TEST_CASE("hecke double coset products") {
  const CoxeterSystem a2(Type::A, 2);
  const auto ss = hecke_double_coset_product(a2, {1}, {1});
  REQUIRE(ss.size() == 2);
  CHECK(ss[0] == a2.identity());
  CHECK(ss[1] == a2.element({1}));
  const auto reduced = hecke_double_coset_product(a2, {1}, {2});
  REQUIRE(reduced.size() == 1);
  CHECK(reduced[0] == a2.element({1, 2}));
  CHECK(hecke_double_coset_product(a2, parse_word("121"), parse_word("121")).size() == 6);
  CHECK(code_of([&] { hecke_double_coset_product(a2, {1, 1}, {2}); }) == Errc::BadPrecondition);
  CHECK(code_of([&] {
          hecke_double_coset_product(CoxeterSystem(Type::F, 4), parse_word("432132343213234"),
                                     parse_word("432132343213234"), 10);
        }) == Errc::SetTooLarge);

  std::mt19937 rng(9);
  for (const auto& sys : small_systems()) {
    const oracle::CoxeterGroup o(sys.coxeter_matrix());
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = sys.reduced_word(sys.element(random_word(rng, sys.rank(), rng() % 10)));
      const Word u = sys.reduced_word(sys.element(random_word(rng, sys.rank(), rng() % 10)));
      std::set<std::size_t> mine;
      for (const auto& e : hecke_double_coset_product(sys, w, u)) {
        const Word rw = sys.reduced_word(e);
        mine.insert(o.element(std::vector<int>(rw.begin(), rw.end())));
      }
      REQUIRE(mine == o.hecke(std::vector<int>(w.begin(), w.end()), std::vector<int>(u.begin(), u.end())));
      const Word wu = concat({w, u});
      if (sys.is_reduced(wu)) {
        REQUIRE(mine.size() == 1);
        REQUIRE(*mine.begin() == o.element(std::vector<int>(wu.begin(), wu.end())));
      }
      // commuting reduced products can be taken in either order
      if (sys.multiply(sys.element(w), sys.element(u)) == sys.multiply(sys.element(u), sys.element(w)) &&
          sys.is_reduced(concat({w, u})))
        REQUIRE(hecke_double_coset_product(sys, w, u) == hecke_double_coset_product(sys, u, w));
    }
  }
}

TEST_CASE("yuck form certificates") {
  const CoxeterSystem e6(Type::E, 6), e7(Type::E, 7);
  CHECK(verify_yuck_form(e6, parse_word("65324356"), {parse_word("356"), {2, 4}}));
  CHECK(verify_yuck_form(e7, parse_word("765321432534653217653243567"),
                         {parse_word("635234123567"), {4, 5, 7}}));
  CHECK(verify_yuck_form(e6, {}, {{}, {}}));
  CHECK_FALSE(verify_yuck_form(e6, parse_word("65324356"), {parse_word("356"), {2}}));
  // the word 6 3 3 6 is not reduced
  CHECK_FALSE(verify_yuck_form(e6, {}, {{6}, {}}));
  CHECK(code_of([&] { verify_yuck_form(e6, {}, {{}, {2, 3}}); }) == Errc::NonCommutingCore);
}

TEST_CASE("stored certificates are reduced and cover every representative") {
  std::vector<CoxeterSystem> systems = small_systems();
  for (int l = 5; l <= 6; ++l) {
    systems.emplace_back(Type::A, l);
    systems.emplace_back(Type::D, l);
  }
  systems.emplace_back(Type::B, 5);
  for (int l = 6; l <= 8; ++l) systems.emplace_back(Type::E, l);
  for (const auto& sys : systems) {
    INFO(sys.name());
    const int r = default_drop(sys);
    const auto reports = verify_p2(sys, r, P2Method::Form);
    for (const auto& rep : reports) {
      REQUIRE(rep.certificate);
      REQUIRE(rep.pass);
    }
    REQUIRE(reports.size() == double_coset_reps(sys, r).classes.size());
  }
  CHECK(code_of([] { verify_p2(CoxeterSystem(Type::F, 4), 1, P2Method::Form); }) == Errc::MissingCertificate);
}

TEST_CASE("product method passes on groups of moderate order") {
  // the inner nodes of F4 have classes with w outside P(w,w)
  for (const auto& sys : small_systems())
    for (int r = 1; r <= sys.rank(); ++r) {
      if (sys.type() == Type::F && r != default_drop(sys)) continue;
      INFO(sys.name() << " r=" << r);
      for (const auto& rep : verify_p2(sys, r, P2Method::Product)) {
        REQUIRE(rep.pass);
        REQUIRE(rep.product_size >= 1);
      }
    }
  CHECK(default_p2_method(CoxeterSystem(Type::E, 6)) == P2Method::Product);
  CHECK(default_p2_method(CoxeterSystem(Type::E, 7)) == P2Method::Form);
}
