#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsc/errors.hpp"
#include "gsc/partitions.hpp"
#include "gsc/springer.hpp"

using namespace gsc;

TEST_CASE("cuspidal data enumeration: counts and members") {
  std::vector<CuspidalDatum> d45 = enumerate_cuspidal(4, 5, FrobType::split);
  REQUIRE(d45.size() == 4);
  CHECK(d45[0].d == 1);
  CHECK(d45[0].j == 0);
  CHECK(d45[1].d == 2);
  CHECK(d45[1].j == 1);
  CHECK(d45[2].d == 4);
  CHECK(d45[2].j == 1);
  CHECK(d45[3].d == 4);
  CHECK(d45[3].j == 3);
  CHECK(enumerate_cuspidal(6, 5, FrobType::split).size() == 6);
  CHECK(enumerate_cuspidal(8, 2, FrobType::split).size() == 1);  // n' = 1
  CHECK(enumerate_cuspidal(1, 3, FrobType::split).size() == 1);
}

TEST_CASE("frob type parsing") {
  CHECK(parse_frob("split") == FrobType::split);
  CHECK(parse_frob("nonsplit") == FrobType::nonsplit);
  CHECK(frob_name(FrobType::nonsplit) == "nonsplit");
  CHECK_THROWS_AS(parse_frob("twisted"), PreconditionError);
}

TEST_CASE("induction table for the quadratic datum in rank four") {
  CuspidalDatum dt{4, 5, 2, 1, FrobType::split};
  std::vector<SpringerEntry> t = springer_table(dt);
  REQUIRE(t.size() == 2);
  CHECK(t[0].mu == Partition{{2}});
  CHECK(t[0].lambda == Partition{{4}});
  CHECK(t[0].big_m == 4);
  CHECK(t[0].rho_index == 2);
  CHECK(t[0].m == 0);
  CHECK(t[0].dim_py == 0);
  CHECK(t[1].mu == Partition{{1, 1}});
  CHECK(t[1].lambda == Partition{{2, 2}});
  CHECK(t[1].big_m == 2);
  CHECK(t[1].rho_index == 1);
  CHECK(t[1].m == 4);
  CHECK(t[1].dim_py == 2);
}

TEST_CASE("induction table for the cubic datum in rank six") {
  CuspidalDatum dt{6, 5, 3, 1, FrobType::split};
  std::vector<SpringerEntry> t = springer_table(dt);
  REQUIRE(t.size() == 2);
  CHECK(t[0].lambda == Partition{{6}});
  CHECK(t[0].big_m == 6);
  CHECK(t[0].rho_index == 2);
  CHECK(t[1].lambda == Partition{{3, 3}});
  CHECK(t[1].big_m == 3);
  CHECK(t[1].rho_index == 1);
}

TEST_CASE("the table scales the small partition by d") {
  CuspidalDatum dt{6, 7, 2, 1, FrobType::split};
  for (const SpringerEntry& e : springer_table(dt)) {
    CHECK(e.lambda == scale(e.mu, 2));
    CHECK(e.big_m % 2 == 0);  // d divides the component order on its block
    CHECK(e.m == compute_m(e.lambda, 2));
    CHECK(e.dim_py * 2 == e.m);
  }
}

TEST_CASE("table gates: the character index must be a unit mod d") {
  CHECK_THROWS_AS(springer_table(CuspidalDatum{4, 5, 2, 0, FrobType::split}), PreconditionError);
  CHECK_THROWS_AS(springer_table(CuspidalDatum{4, 5, 1, 1, FrobType::split}), PreconditionError);
  CHECK_THROWS_AS(springer_table(CuspidalDatum{4, 5, 3, 1, FrobType::split}), PreconditionError);
  CHECK_THROWS_AS(springer_table(CuspidalDatum{4, 5, 4, 2, FrobType::split}), PreconditionError);
}

TEST_CASE("counting identity: data count equals labeled class count") {
  BijectionCheck bc = check_bijection(4, 5);
  CHECK(bc.by_data == 9);
  CHECK(bc.by_classes == 9);
  CHECK(bc.equal);
  for (int64_t n = 1; n <= 30; ++n)
    for (int64_t p : {2, 3, 5, 7}) CHECK(check_bijection(n, p).equal);
}

TEST_CASE("frobenius action on the component group") {
  CHECK(component_F_action(4, 5, FrobType::split) == 1);
  CHECK(component_F_action(4, 5, FrobType::nonsplit) == 3);
  CHECK(component_F_action(2, 3, FrobType::nonsplit) == 1);
  CHECK(component_F_action(1, 7, FrobType::split) == 0);
  CHECK(component_F_action(6, 5, FrobType::nonsplit) == 1);
}

TEST_CASE("twisted class counts") {
  TwistedClasses a = twisted_classes(2, 3, FrobType::split);
  CHECK(a.e == 1);
  CHECK(a.count == 2);
  CHECK(a.reps == std::vector<int64_t>{0, 1});

  TwistedClasses b = twisted_classes(4, 3, FrobType::nonsplit);
  CHECK(b.e == 1);
  CHECK(b.count == 4);

  TwistedClasses c = twisted_classes(4, 5, FrobType::nonsplit);
  CHECK(c.e == 3);
  CHECK(c.count == 2);
  CHECK(c.reps == std::vector<int64_t>{0, 1});

  TwistedClasses d = twisted_classes(1, 7, FrobType::nonsplit);
  CHECK(d.count == 1);
  CHECK(d.reps == std::vector<int64_t>{0});
}

TEST_CASE("character values on the component group") {
  CHECK(rho_value(2, 4, 1) == Cyclotomic::minus_one());
  CHECK(rho_value(1, 4, 1) == Cyclotomic::root(1, 4));
  CHECK(rho_value(1, 4, 2) == Cyclotomic::minus_one());
  CHECK(rho_value(0, 4, 3) == Cyclotomic::one());
  CHECK(rho_value(3, 6, 2) == Cyclotomic::one());
}
