#include <catch2/catch_amalgamated.hpp>

#include "hallpaige/builtin.hpp"
#include "hallpaige/psl2.hpp"
#include "oracles.hpp"

using namespace hallpaige;

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

// |SL(2,F)| / |{±1}| by counting determinant-one matrices
std::size_t psl2_order_by_matrices(const FiniteField& f) {
  const auto q = static_cast<FiniteField::Value>(f.order());
  std::size_t sl = 0;
  for (FiniteField::Value a = 0; a < q; ++a)
    for (FiniteField::Value b = 0; b < q; ++b)
      for (FiniteField::Value c = 0; c < q; ++c)
        for (FiniteField::Value d = 0; d < q; ++d) sl += f.sub(f.mul(a, d), f.mul(b, c)) == 1;
  return f.neg(1) == 1 ? sl : sl / 2;
}

}  // namespace

TEST_CASE("finite fields") {
  for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const FiniteField f(q);
    INFO(q);
    CHECK(f.order() == q);
    const auto g = f.primitive_element();
    std::size_t ord = 1;
    for (auto x = g; x != 1; x = f.mul(x, g)) ++ord;
    CHECK(ord == q - 1);
    for (FiniteField::Value a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK(FiniteField(9).characteristic() == 3);
  CHECK(FiniteField(16).degree() == 4);
  CHECK(code_of([] { FiniteField(6); }) == Errc::UnsupportedQ);
  CHECK(code_of([] { FiniteField(10); }) == Errc::UnsupportedQ);
}

TEST_CASE("PSL(2,q) orders and subgroups") {
  for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const Psl2Context ctx = psl2(q);
    INFO(q);
    CHECK(ctx.group().order() == psl2_order_by_matrices(ctx.field));
    CHECK(ctx.u.size() == q);
    CHECK(ctx.b.size() * (q + 1) == ctx.group().order());
    CHECK(verify_normal_form(ctx));
    CHECK(ctx.simple == (q >= 4));
    if (ctx.simple) CHECK(commutator_subgroup(ctx.group()).size() == ctx.group().order());
  }
  CHECK(oracle::order_census(psl2(4).group()) == oracle::order_census(alternating(5)));
  CHECK(oracle::order_census(psl2(5).group()) == oracle::order_census(alternating(5)));
  CHECK(code_of([] { psl2(17); }) == Errc::UnsupportedQ);
  CHECK(code_of([] { psl2(6); }) == Errc::UnsupportedQ);
  CHECK(code_of([] { psl2(1); }) == Errc::UnsupportedQ);
}

TEST_CASE("UnhU products for odd q") {
  for (std::size_t q : {5, 7, 9, 11, 13}) {
    INFO(q);
    CHECK(verify_unhu(psl2(q)));
  }
  CHECK(code_of([] { verify_unhu(psl2(4)); }) == Errc::BadPrecondition);
  const Psl2Context ctx = psl2(13);
  for (Elem h : ctx.h.elements()) {
    const Elem v = find_vh(ctx, h);
    CHECK(ctx.u.contains(v));
  }
  CHECK(code_of([&] {
          Elem outside = 0;
          while (ctx.h.contains(outside)) ++outside;
          find_vh(ctx, outside);
        }) == Errc::BadPrecondition);
}

TEST_CASE("complete mappings of PSL(2,q)") {
  const std::map<std::size_t, char> branch{{4, 'c'}, {5, 'a'},  {7, 'b'},  {8, 'c'},  {9, 'a'},
                                           {11, 'b'}, {13, 'a'}, {16, 'c'}, {3, 'b'}};
  for (auto [q, expected] : branch) {
    const Psl2Context ctx = psl2(q);
    INFO(q);
    const Psl2Build b = build_cm_psl2(ctx);
    CHECK(b.branch == expected);
    CHECK(verify(ctx.group(), b.mapping).ok);
    CHECK(b.zeta.has_value() == (expected == 'a'));
    if (expected == 'a') CHECK(b.vh.size() == ctx.h.size());
  }
  CHECK(code_of([] { build_cm_psl2(psl2(2)); }) == Errc::BadGroup);
}
