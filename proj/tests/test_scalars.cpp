#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsc/errors.hpp"
#include "gsc/ff.hpp"
#include "gsc/linalg.hpp"
#include "gsc/partitions.hpp"
#include "gsc/reps.hpp"
#include "gsc/scalars.hpp"
#include "gsc/springer.hpp"

using namespace gsc;

TEST_CASE("split scalar is trivial") {
  CuspidalDatum dt{4, 3, 1, 0, FrobType::split};
  ScalarResult r = gamma_split(Partition{{3, 1}}, dt, 3);
  CHECK(r.gamma == Cyclotomic::one());
  CHECK(r.epsilon == Cyclotomic::one());
  CHECK(r.m == 2);
  CHECK(r.c1_index == 0);
  CHECK(r.alpha_invariance);
  CHECK(r.oracle_match);
}

TEST_CASE("split scalar for a quadratic datum") {
  CuspidalDatum dt{4, 3, 2, 1, FrobType::split};
  ScalarResult r = gamma_split(Partition{{2, 2}}, dt, 3);  // 2 | q - 1
  CHECK(r.gamma == Cyclotomic::one());
  CHECK(r.m == 4);
}

TEST_CASE("split gates") {
  // d must divide q - 1
  CHECK_THROWS_AS(gamma_split(Partition{{3, 3}}, CuspidalDatum{6, 3, 3, 1, FrobType::split}, 3),
                  PreconditionError);
  // frobenius type must match
  CHECK_THROWS_AS(gamma_split(Partition{{2, 2}}, CuspidalDatum{4, 3, 2, 1, FrobType::nonsplit}, 3),
                  PreconditionError);
  // d must divide every part
  CHECK_THROWS_AS(gamma_split(Partition{{3, 1}}, CuspidalDatum{4, 3, 2, 1, FrobType::split}, 3),
                  PreconditionError);
  // q must be a power of p
  CHECK_THROWS_AS(gamma_split(Partition{{2, 2}}, CuspidalDatum{4, 3, 2, 1, FrobType::split}, 5),
                  PreconditionError);
}

TEST_CASE("nonsplit scalar: worked values for two twos") {
  CuspidalDatum dt3{4, 3, 2, 1, FrobType::nonsplit};
  ScalarResult r3 = gamma_nonsplit(Partition{{2, 2}}, dt3, 3);
  CHECK(r3.m == 4);
  CHECK(r3.c1_index == 1);
  CHECK(r3.epsilon == Cyclotomic::minus_one());
  CHECK(r3.gamma == Cyclotomic::minus_one());
  CHECK(r3.alpha_invariance);
  CHECK(r3.oracle_match);

  CuspidalDatum dt5{4, 5, 2, 1, FrobType::nonsplit};
  ScalarResult r5 = gamma_nonsplit(Partition{{2, 2}}, dt5, 5);
  CHECK(r5.c1_index == 0);
  CHECK(r5.epsilon == Cyclotomic::one());
  CHECK(r5.gamma == Cyclotomic::one());
}

TEST_CASE("nonsplit scalar: three twos and the regular case") {
  ScalarResult r = gamma_nonsplit(Partition{{2, 2, 2}}, CuspidalDatum{6, 3, 2, 1, FrobType::nonsplit}, 3);
  CHECK(r.m == 12);
  CHECK(r.c1_index == 1);
  CHECK(r.gamma == Cyclotomic::minus_one());

  ScalarResult r2 = gamma_nonsplit(Partition{{2, 2, 2}}, CuspidalDatum{6, 5, 2, 1, FrobType::nonsplit}, 5);
  CHECK(r2.c1_index == 0);
  CHECK(r2.gamma == Cyclotomic::one());

  ScalarResult r4 = gamma_nonsplit(Partition{{4}}, CuspidalDatum{4, 3, 2, 1, FrobType::nonsplit}, 3);
  CHECK(r4.m == 0);
  CHECK(r4.c1_index == 0);
  CHECK(r4.gamma == Cyclotomic::one());
}

TEST_CASE("nonsplit scalar with the other unit character") {
  // j = 3 pairs the same c1 index with a different character power
  ScalarResult r = gamma_nonsplit(Partition{{2, 2}}, CuspidalDatum{4, 3, 2, 3, FrobType::nonsplit}, 3);
  CHECK(r.epsilon == Cyclotomic::root(3 * 1, 2));
  CHECK(r.gamma == Cyclotomic::minus_one());
}

TEST_CASE("nonsplit gates") {
  // d must divide q + 1
  CHECK_THROWS_AS(
      gamma_nonsplit(Partition{{3, 3}}, CuspidalDatum{6, 3, 3, 1, FrobType::nonsplit}, 3),
      PreconditionError);
  // characteristic two is out of range for the twisted construction
  CHECK_THROWS_AS(gamma_nonsplit(Partition{{3, 3}}, CuspidalDatum{6, 2, 3, 1, FrobType::nonsplit}, 2),
                  PreconditionError);
  // d >= 2
  CHECK_THROWS_AS(gamma_nonsplit(Partition{{2, 2}}, CuspidalDatum{4, 3, 1, 0, FrobType::nonsplit}, 3),
                  PreconditionError);
}

TEST_CASE("dispatcher routes by frobenius type") {
  CuspidalDatum sp{4, 3, 2, 1, FrobType::split};
  CuspidalDatum ns{4, 3, 2, 1, FrobType::nonsplit};
  CHECK(gamma_scalar(Partition{{2, 2}}, sp, 3).gamma == Cyclotomic::one());
  CHECK(gamma_scalar(Partition{{2, 2}}, ns, 3).gamma == Cyclotomic::minus_one());
}

TEST_CASE("kernel twist value: worked cases") {
  const FieldCtx* f9 = make_field(3, 2);
  SesquiForm form4 = make_standard_form(4, f9);
  ConjugationData cd = conjugation_data(4, 2, Partition{{2, 2}}, form4);
  C1Result c1 = c1_compute(cd);
  CHECK(c1.index == 1);
  CHECK(c1.value == embed(Fq(f9, -1), c1.field));

  const FieldCtx* f25 = make_field(5, 2);
  SesquiForm form6 = make_standard_form(6, f25);
  ConjugationData cd2 = conjugation_data(6, 3, Partition{{3, 3}}, form6);
  CHECK(c1_compute(cd2).index == 0);
}

TEST_CASE("scalar-weighted class function table for rank two") {
  CuspidalDatum dt{2, 3, 2, 1, FrobType::nonsplit};
  std::vector<YRow> rows = y_function_table(dt, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lambda == Partition{{2}});
  CHECK(rows[0].rho_index == 1);
  CHECK(rows[0].class_rep == 0);
  CHECK(rows[0].value == Cyclotomic::one());
  CHECK(rows[1].class_rep == 1);
  CHECK(rows[1].value == Cyclotomic::minus_one());
}

TEST_CASE("split table weights are the bare character values") {
  CuspidalDatum dt{4, 3, 2, 1, FrobType::split};
  std::vector<YRow> rows = y_function_table(dt, 3);
  std::vector<SpringerEntry> entries = springer_table(dt);
  size_t idx = 0;
  for (const SpringerEntry& e : entries) {
    TwistedClasses tc = twisted_classes(e.big_m, 3, FrobType::split);
    for (int64_t a : tc.reps) {
      REQUIRE(idx < rows.size());
      CHECK(rows[idx].lambda == e.lambda);
      CHECK(rows[idx].value == rho_value(e.rho_index, e.big_m, a));
      ++idx;
    }
  }
  CHECK(idx == rows.size());
}
