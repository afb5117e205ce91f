#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsc/cyclotomic.hpp"
#include "gsc/partitions.hpp"

namespace gsc {

enum class FrobType { split, nonsplit };

FrobType parse_frob(const std::string& s);          // "split" / "nonsplit"
std::string frob_name(FrobType frob);

// An induction datum for SL_n over a field of characteristic p: a block size
// d dividing the p'-part of n together with a primitive character index j
// (gcd(j, d) = 1, with j = 0 for d = 1), and the Frobenius form.
struct CuspidalDatum {
  int64_t n = 0;
  int64_t p = 0;
  int64_t d = 0;
  int64_t j = 0;
  FrobType frob = FrobType::split;
};

// All data for (n, p): d runs over the divisors of n' ascending, j ascending.
std::vector<CuspidalDatum> enumerate_cuspidal(int64_t n, int64_t p, FrobType frob);

// One row of the correspondence table for a fixed datum: the Weyl-group
// label mu (a partition of n/d), the class lambda = d * mu it indexes, the
// order M of the component group at lambda, the character index rho on it,
// and the cohomological degree m with its half dim P_y.
struct SpringerEntry {
  Partition mu;
  Partition lambda;
  int64_t big_m = 0;      // component group order at lambda
  int64_t rho_index = 0;  // character exponent on the component group
  int64_t m = 0;
  int64_t dim_py = 0;
};

std::vector<SpringerEntry> springer_table(const CuspidalDatum& datum);

// Counting identity: sum over data of the number of table rows equals the
// total number of pairs (class, component character).
struct BijectionCheck {
  int64_t by_data = 0;     // sum of phi(d) * p(n/d) over d | n'
  int64_t by_classes = 0;  // sum of component group orders over lambda |- n
  bool equal = false;
};

BijectionCheck check_bijection(int64_t n, int64_t p);

// Exponent e of the Frobenius action x -> x^e on the cyclic component group
// of order M: q for the split form, -q for the nonsplit one (mod M).
int64_t component_F_action(int64_t big_m, int64_t q, FrobType frob);

// F-twisted classes of the cyclic component group of order M: there are
// gcd(M, e - 1) of them, represented by the exponents 0 .. count-1.
struct TwistedClasses {
  int64_t e = 0;
  int64_t count = 0;
  std::vector<int64_t> reps;
};

TwistedClasses twisted_classes(int64_t big_m, int64_t q, FrobType frob);

// Value of the rho-character on the class with exponent a: zeta_M^(rho * a).
Cyclotomic rho_value(int64_t rho_index, int64_t big_m, int64_t a);

}  // namespace gsc
