#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsc/cyclotomic.hpp"
#include "gsc/partitions.hpp"
#include "gsc/reps.hpp"
#include "gsc/springer.hpp"

namespace gsc {

// The Frobenius scalar on the top cohomology of the fiber at a nilpotent of
// type lambda, normalized by q^(m/2): gamma = epsilon * (-1)^(m/2) for the
// nonsplit form and 1 for the split one, together with the cross-checks that
// validated it.
struct ScalarResult {
  int64_t m = 0;
  int64_t c1_index = 0;        // exponent of the Frobenius twist scalar in mu_d
  Cyclotomic epsilon;          // character value on the twist scalar
  Cyclotomic gamma;            // normalized top-cohomology scalar
  bool alpha_invariance = true;  // same answer for every admissible alpha
  bool oracle_match = true;      // formula agrees with the direct computation
  std::string description;
};

// Scalar for the split Frobenius; requires d | q - 1 and d | every part.
ScalarResult gamma_split(const Partition& lambda, const CuspidalDatum& datum, int64_t q);

// Scalar for the nonsplit Frobenius; requires d >= 2, d | q + 1, odd p,
// and d | every part.  Runs the direct oracle and the alpha sweep.
ScalarResult gamma_nonsplit(const Partition& lambda, const CuspidalDatum& datum, int64_t q);

ScalarResult gamma_scalar(const Partition& lambda, const CuspidalDatum& datum, int64_t q);

// c1 = alpha^(t(1+q)) det g0, as an element of mu_d with its exponent.
C1Result c1_compute(const ConjugationData& cd);

// Same with an explicit alpha (must satisfy alpha^n = det g).
C1Result c1_with_alpha(const ConjugationData& cd, const Fq& alpha);

// One row of the Y-function table: the value of gamma * rho on a twisted
// class of the component group.
struct YRow {
  Partition lambda;
  int64_t rho_index = 0;
  int64_t class_rep = 0;
  Cyclotomic value;
};

std::vector<YRow> y_function_table(const CuspidalDatum& datum, int64_t q);

}  // namespace gsc
