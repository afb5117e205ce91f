#pragma once

// Brute-force cross-checks: direct Frobenius-twist computation, exhaustive
// centralizer and conjugacy-class enumeration over small fields, point
// counts of flag fibers, and exact polynomial interpolation of those counts.
// Everything here is independent of the closed-form machinery it validates.

#include <cstdint>
#include <vector>

#include "gsc/linalg.hpp"
#include "gsc/partitions.hpp"
#include "gsc/reps.hpp"
#include "gsc/springer.hpp"

namespace gsc {

// Exponent k with g1^{-1} F(g1) acting on Ker y0 by det = zeta_d^k, computed
// directly from g and the Frobenius of the unitary group (g1 = alpha^{-1} g).
int64_t c1_direct(const ConjugationData& cd);
int64_t c1_direct_with_alpha(const ConjugationData& cd, const Fq& alpha);

// |{ X in SL_n(F_q) : X y = y X }| by exhaustive scan (q^(n^2) candidates,
// checked against `budget`).
int64_t enumerate_centralizer(const Mat& y, int64_t budget);

// The same order in closed form:
// q^(sum (lambda^T_i)^2 - sum m_i^2) * prod_i |GL_{m_i}(q)| * gcd(q-1, gcd(parts)) / (q-1)
// with m_i the multiplicity of the part value i.
int64_t centralizer_order_formula(const Partition& lambda, int64_t q);

// Number of rational conjugacy classes of nilpotents of type lambda in the
// (split or nonsplit) rational Lie algebra, by explicit orbit enumeration
// under SL_n(F_q) resp. the special unitary group.
int64_t count_rational_classes(const Partition& lambda, int64_t q, FrobType frob, int64_t budget);

// All elements of the special unitary group of the form, by constraint-driven
// frame enumeration; checked against the closed-form group order.
std::vector<Mat> enumerate_su_group(const SesquiForm& form, int64_t budget);

// Number of d-step flags fixed by the split nilpotent of type lambda with a
// regular induced map on every step, over the field of ctx.
int64_t count_py_points(const Partition& lambda, int64_t d, const FieldCtx* ctx, int64_t budget);

// Exact interpolation through (xs[i], ys[i]); CheckError if the polynomial
// has a non-integer coefficient.
struct PolyFit {
  std::vector<int64_t> coeffs;  // coeffs[k] multiplies x^k
  int64_t degree = 0;
};

PolyFit interpolate_integer_polynomial(const std::vector<int64_t>& xs,
                                       const std::vector<int64_t>& ys);

}  // namespace gsc
