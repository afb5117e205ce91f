#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsc/errors.hpp"
#include "gsc/ff.hpp"

using namespace gsc;

TEST_CASE("prime field arithmetic and constant normalization") {
  const FieldCtx* f3 = make_field(3, 1);
  CHECK(f3->q == 3);
  CHECK(Fq(f3, -1) + Fq(f3, 1) == f3->zero());
  CHECK(Fq(f3, 5) == Fq(f3, 2));
  CHECK(Fq(f3, 2) * Fq(f3, 2) == Fq(f3, 1));
  CHECK(Fq(f3, 2).inv() == Fq(f3, 2));
  CHECK(Fq(f3, 2).pow(0).is_one());
}

TEST_CASE("field contexts are interned") {
  CHECK(make_field(3, 2) == make_field(3, 2));
  CHECK(make_field(5, 1) != make_field(5, 2));
}

TEST_CASE("field size and degree limits are enforced") {
  CHECK_THROWS_AS(make_field(127, 3), PreconditionError);   // 127^3 > 2e6
  CHECK_THROWS_AS(make_field(2, 9), PreconditionError);     // degree > 8
  CHECK_THROWS_AS(make_field(6, 1), PreconditionError);     // p not prime
  CHECK_THROWS_AS(make_field(4, 1), PreconditionError);
}

TEST_CASE("generator order and discrete logs") {
  for (auto [p, f] : {std::pair<int64_t, int64_t>{3, 2}, {5, 2}, {2, 4}, {7, 2}}) {
    const FieldCtx* ctx = make_field(p, f);
    CHECK(element_order(ctx->gen) == ctx->q - 1);
    CHECK(discrete_log(ctx->gen.pow(5)) == 5 % (ctx->q - 1));
    CHECK(discrete_log(ctx->one()) == 0);
  }
}

TEST_CASE("key round trip covers the whole field") {
  const FieldCtx* ctx = make_field(3, 3);
  for (int64_t k = 0; k < ctx->q; ++k) CHECK(element_from_key(ctx, k).key() == k);
}

TEST_CASE("frobenius is the q0-power map and fixes the prime field") {
  const FieldCtx* ctx = make_field(3, 2);
  for (int64_t k = 0; k < ctx->q; ++k) {
    Fq x = element_from_key(ctx, k);
    CHECK(frob_power(x, 1) == x.pow(3));
    CHECK(frob_power(frob_power(x, 1), 1) == x);
  }
  CHECK(frob_power(Fq(ctx, 2), 1) == Fq(ctx, 2));
}

TEST_CASE("imaginary unit is skew under conjugation") {
  for (auto [p, f] : {std::pair<int64_t, int64_t>{3, 2}, {5, 2}, {7, 2}, {3, 4}}) {
    const FieldCtx* ctx = make_field(p, f);
    Fq iota = imaginary_unit(ctx);
    CHECK(frob_power(iota, ctx->f / 2) == -iota);
    CHECK(!iota.is_zero());
  }
  // odd degree or characteristic two has no such unit
  CHECK_THROWS_AS(imaginary_unit(make_field(3, 1)), PreconditionError);
  CHECK_THROWS_AS(imaginary_unit(make_field(2, 2)), PreconditionError);
}

TEST_CASE("imaginary unit squares in the fixed subfield") {
  const FieldCtx* f9 = make_field(3, 2);
  CHECK(imaginary_unit(f9) * imaginary_unit(f9) == Fq(f9, -1));
  const FieldCtx* f25 = make_field(5, 2);
  Fq i5 = imaginary_unit(f25);
  // over F_25 conjugation is x -> x^5, so the unit satisfies i^4 = -1 and
  // its square is an element of order four in the prime field: here 2.
  CHECK(i5 * i5 == Fq(f25, 2));
  CHECK((i5 * i5) * (i5 * i5) == Fq(f25, -1));
}

TEST_CASE("unitary q is the square root of the field size") {
  CHECK(unitary_q(make_field(3, 2)) == 3);
  CHECK(unitary_q(make_field(5, 2)) == 5);
  CHECK(unitary_q(make_field(2, 4)) == 4);
}

TEST_CASE("embeddings are ring maps and compose") {
  const FieldCtx* f3 = make_field(3, 1);
  const FieldCtx* f9 = make_field(3, 2);
  const FieldCtx* f81 = make_field(3, 4);
  for (int64_t k = 0; k < f9->q; ++k) {
    Fq x = element_from_key(f9, k);
    Fq y = element_from_key(f9, (k * 7 + 1) % f9->q);
    CHECK(embed(x * y, f81) == embed(x, f81) * embed(y, f81));
    CHECK(embed(x + y, f81) == embed(x, f81) + embed(y, f81));
  }
  for (int64_t k = 0; k < f3->q; ++k) {
    Fq x = element_from_key(f3, k);
    CHECK(embed(embed(x, f9), f81) == embed(x, f81));
  }
  // embedding requires divisible degrees
  CHECK_THROWS_AS(embed(make_field(3, 3)->gen, f81), PreconditionError);
}

TEST_CASE("element_at_lex_rank is a bijection onto the field") {
  const FieldCtx* ctx = make_field(5, 2);
  int64_t distinct = 0;
  for (int64_t r = 0; r < ctx->q; ++r) {
    Fq x = element_at_lex_rank(ctx, r);
    distinct += (element_at_lex_rank(ctx, r).key() == x.key()) ? 1 : 0;
  }
  CHECK(distinct == ctx->q);
  CHECK(element_at_lex_rank(ctx, 0).is_zero());
}
