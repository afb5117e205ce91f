#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsc/errors.hpp"
#include "gsc/ff.hpp"
#include "gsc/linalg.hpp"

using namespace gsc;

namespace {

// deterministic pseudo-random fill from the lexicographic element order;
// the generator state stays wide so reduction mod q cannot collapse it
Mat fill(int r, int c, const FieldCtx* ctx, int64_t seed) {
  Mat m(r, c, ctx);
  int64_t s = seed + 1;
  for (Fq& e : m.a) {
    s = (s * 48271) % 2147483647;
    e = element_at_lex_rank(ctx, s % ctx->q);
  }
  return m;
}

Mat single_block(int n, const FieldCtx* ctx) {
  Mat m(n, n, ctx);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = ctx->one();
  return m;
}

}  // namespace

TEST_CASE("ring axioms on deterministic samples") {
  const FieldCtx* ctx = make_field(3, 2);
  Mat A = fill(4, 4, ctx, 1), B = fill(4, 4, ctx, 2), C = fill(4, 4, ctx, 3);
  CHECK(A * (B + C) == A * B + A * C);
  CHECK((A * B) * C == A * (B * C));
  CHECK((A - A).is_zero());
  CHECK(-A + A == Mat(4, 4, ctx));
  CHECK(A * Mat::identity(4, ctx) == A);
}

TEST_CASE("pow matches repeated multiplication") {
  const FieldCtx* ctx = make_field(5, 1);
  Mat A = fill(3, 3, ctx, 9);
  CHECK(A.pow(0) == Mat::identity(3, ctx));
  CHECK(A.pow(1) == A);
  CHECK(A.pow(3) == A * A * A);
  CHECK_THROWS_AS(A.pow(-1), PreconditionError);
}

TEST_CASE("determinant is multiplicative and detects singularity") {
  const FieldCtx* ctx = make_field(7, 1);
  Mat A = fill(3, 3, ctx, 4), B = fill(3, 3, ctx, 11);
  CHECK(det(A * B) == det(A) * det(B));
  Mat S(2, 2, ctx);
  S.at(0, 0) = ctx->one();
  S.at(1, 0) = ctx->one();  // rank one
  CHECK(det(S).is_zero());
  CHECK_THROWS_AS(inverse(S), PreconditionError);
}

TEST_CASE("inverse really inverts") {
  const FieldCtx* ctx = make_field(3, 2);
  for (int64_t seed : {1, 2, 5, 8}) {
    Mat A = fill(4, 4, ctx, seed);
    if (det(A).is_zero()) continue;
    CHECK(A * inverse(A) == Mat::identity(4, ctx));
    CHECK(inverse(A) * A == Mat::identity(4, ctx));
  }
}

TEST_CASE("rank plus kernel dimension is the column count") {
  const FieldCtx* ctx = make_field(3, 1);
  for (int64_t seed = 0; seed < 6; ++seed) {
    Mat A = fill(3, 5, ctx, seed);
    std::vector<Mat> kb = kernel_basis(A);
    CHECK(rank(A) + static_cast<int>(kb.size()) == 5);
    for (const Mat& v : kb) CHECK((A * v).is_zero());
  }
}

TEST_CASE("kernel basis of the zero map is the standard basis size") {
  const FieldCtx* ctx = make_field(3, 1);
  CHECK(kernel_basis(Mat(3, 3, ctx)).size() == 3);
  CHECK(rank(Mat(0, 4, ctx)) == 0);
  CHECK(kernel_basis(Mat(0, 4, ctx)).size() == 4);
}

TEST_CASE("solve_particular finds solutions exactly when they exist") {
  const FieldCtx* ctx = make_field(5, 1);
  Mat A(2, 3, ctx);
  A.at(0, 0) = ctx->one();
  A.at(1, 1) = ctx->one();
  Mat b(2, 1, ctx);
  b.at(0, 0) = Fq(ctx, 2);
  b.at(1, 0) = Fq(ctx, 3);
  auto x = solve_particular(A, b);
  REQUIRE(x.has_value());
  CHECK(A * *x == b);

  Mat A2(2, 2, ctx);  // second row zero but b2 nonzero: unsolvable
  A2.at(0, 0) = ctx->one();
  auto x2 = solve_particular(A2, b);
  CHECK(!x2.has_value());

  // unconstrained system: zero rows, any x works
  auto x3 = solve_particular(Mat(0, 3, ctx), Mat(0, 1, ctx));
  REQUIRE(x3.has_value());
  CHECK(x3->rows == 3);
}

TEST_CASE("jordan type reads off block sizes") {
  const FieldCtx* ctx = make_field(3, 1);
  CHECK(jordan_type(Mat(3, 3, ctx)) == std::vector<int64_t>{1, 1, 1});
  CHECK(jordan_type(single_block(4, ctx)) == std::vector<int64_t>{4});
  Mat m(5, 5, ctx);
  m.at(0, 1) = ctx->one();
  m.at(1, 2) = ctx->one();
  m.at(3, 4) = ctx->one();
  CHECK(jordan_type(m) == std::vector<int64_t>{3, 2});
  CHECK_THROWS_AS(jordan_type(Mat::identity(2, ctx)), PreconditionError);
}

TEST_CASE("transpose and frobenius commute with products appropriately") {
  const FieldCtx* ctx = make_field(3, 2);
  Mat A = fill(3, 3, ctx, 21), B = fill(3, 3, ctx, 22);
  CHECK(A.transpose().transpose() == A);
  CHECK((A * B).transpose() == B.transpose() * A.transpose());
  CHECK(frob(A * B, 1) == frob(A, 1) * frob(B, 1));
  CHECK(frob(frob(A, 1), 1) == A);
}

TEST_CASE("standard sesquilinear form: gram, hermitian symmetry") {
  const FieldCtx* ctx = make_field(3, 2);
  SesquiForm form = make_standard_form(3, ctx);
  CHECK(form.q == 3);
  CHECK(form.conj_e == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(form.gram.at(i, j) == (i + j == 2 ? ctx->one() : ctx->zero()));
  Mat v = fill(3, 1, ctx, 31), w = fill(3, 1, ctx, 32);
  CHECK(form_eval(form, v, w) == frob_power(form_eval(form, w, v), form.conj_e));
  // sesquilinearity in the second slot
  Fq c = ctx->gen;
  CHECK(form_eval(form, v, w * c) == form_eval(form, v, w) * frob_power(c, form.conj_e));
  CHECK_THROWS_AS(make_standard_form(3, make_field(3, 1)), PreconditionError);
}

TEST_CASE("form compatibility predicates") {
  const FieldCtx* ctx = make_field(3, 2);
  SesquiForm form = make_standard_form(2, ctx);
  CHECK(is_form_compatible_group(form, Mat::identity(2, ctx)));
  Fq iota = imaginary_unit(ctx);
  Mat x(2, 2, ctx);
  x.at(0, 1) = iota;  // mirror of (0,1) is itself; iota^q = -iota makes it skew
  CHECK(is_form_compatible_lie(form, x));
  Mat bad(2, 2, ctx);
  bad.at(0, 1) = ctx->one();
  CHECK(!is_form_compatible_lie(form, bad));
}

TEST_CASE("solve_conjugation finds a conjugator for equal types only") {
  const FieldCtx* ctx = make_field(3, 1);
  Mat A = single_block(3, ctx);
  Mat B = A.transpose();
  auto g = solve_conjugation(A, B);
  REQUIRE(g.has_value());
  CHECK(*g * A == B * *g);
  CHECK(!det(*g).is_zero());
  Mat C(3, 3, ctx);
  C.at(0, 1) = ctx->one();
  CHECK_THROWS_AS(solve_conjugation(A, C), PreconditionError);  // types (3) vs (2,1)
}

TEST_CASE("mat_key separates distinct matrices") {
  const FieldCtx* ctx = make_field(3, 2);
  Mat A = fill(2, 2, ctx, 1), B = fill(2, 2, ctx, 2);
  CHECK(mat_key(A) == mat_key(A));
  CHECK(mat_key(A) != mat_key(B));
}
