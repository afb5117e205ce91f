#include "gsc/scalars.hpp"

#include <numeric>

#include "gsc/errors.hpp"
#include "gsc/oracle.hpp"

namespace gsc {

namespace {

// f with q = p^f; PreconditionError if q is not a power of p.
int64_t power_of(int64_t q, int64_t p) {
  require(q >= 2 && p >= 2, "power_of: bad arguments");
  int64_t f = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++f;
  }
  require(t == 1 && f >= 1, "q must be a power of the datum's characteristic");
  return f;
}

void check_common(const Partition& lambda, const CuspidalDatum& datum) {
  require(lambda.sum() == datum.n, "scalar: partition must sum to n");
  require(datum.d >= 1 && datum.n % datum.d == 0, "scalar: d must divide n");
  for (int64_t part : lambda.parts)
    require(part % datum.d == 0, "scalar: d must divide every part of lambda");
}

}  // namespace

C1Result c1_with_alpha(const ConjugationData& cd, const Fq& alpha) {
  int64_t q = unitary_q(cd.ctx);
  require((q + 1) % cd.d == 0, "c1: d must divide q + 1");
  require(alpha.ctx() == cd.alpha_ctx, "c1: alpha lives in the wrong field");
  ensure(alpha.pow(cd.n) == embed(cd.det_g, cd.alpha_ctx), "c1: alpha^n != det g");

  C1Result r;
  r.field = cd.alpha_ctx;
  r.value = embed(cd.det_g0, cd.alpha_ctx) * alpha.pow(cd.t * (1 + q));
  ensure(r.value.pow(cd.d).is_one(),
         "c1: twist scalar " + r.value.str() + " is not a d-th root of unity (d = " +
             std::to_string(cd.d) + ", det g0 = " + cd.det_g0.str() + ")");
  Fq zeta = embed(zeta_root(cd.ctx, cd.d), cd.alpha_ctx);
  Fq acc = cd.alpha_ctx->one();
  r.index = -1;
  for (int64_t k = 0; k < cd.d; ++k) {
    if (acc == r.value) {
      r.index = k;
      break;
    }
    acc = acc * zeta;
  }
  ensure(r.index >= 0, "c1: twist scalar is not a power of the canonical root");
  return r;
}

C1Result c1_compute(const ConjugationData& cd) { return c1_with_alpha(cd, cd.alpha); }

ScalarResult gamma_split(const Partition& lambda, const CuspidalDatum& datum, int64_t q) {
  require(datum.frob == FrobType::split, "gamma_split: datum is not split");
  check_common(lambda, datum);
  power_of(q, datum.p);
  require((q - 1) % datum.d == 0, "gamma_split: d must divide q - 1");

  ScalarResult r;
  r.m = compute_m(lambda, datum.d);
  r.c1_index = 0;
  r.epsilon = Cyclotomic::one();
  r.gamma = Cyclotomic::one();
  r.alpha_invariance = true;
  r.oracle_match = true;
  r.description = "split form: the fiber scalar is q^(m/2) with m = " + std::to_string(r.m);
  return r;
}

ScalarResult gamma_nonsplit(const Partition& lambda, const CuspidalDatum& datum, int64_t q) {
  require(datum.frob == FrobType::nonsplit, "gamma_nonsplit: datum is not nonsplit");
  require(datum.d >= 2, "gamma_nonsplit: the nonsplit scalar needs d >= 2");
  check_common(lambda, datum);
  require(datum.p > 2, "gamma_nonsplit: characteristic must be odd");
  int64_t f = power_of(q, datum.p);
  require((q + 1) % datum.d == 0, "gamma_nonsplit: d must divide q + 1");

  const FieldCtx* ctx2 = make_field(datum.p, 2 * f);
  SesquiForm form = make_standard_form(static_cast<int>(datum.n), ctx2);
  ConjugationData cd = conjugation_data(datum.n, datum.d, lambda, form);

  C1Result c1 = c1_compute(cd);
  int64_t direct = c1_direct(cd);

  ScalarResult r;
  r.m = compute_m(lambda, datum.d);
  r.c1_index = c1.index;
  r.oracle_match = (direct == c1.index);

  // sweep every other admissible alpha (alpha * omega with omega^n = 1);
  // when fewer than three rational n-th roots of unity exist the sweep is
  // exhaustive over all of them
  r.alpha_invariance = true;
  int64_t Q = cd.alpha_ctx->q;
  int64_t g1 = std::gcd(cd.n, Q - 1);
  int64_t sweeps = std::min<int64_t>(3, g1);
  Fq omega = cd.alpha_ctx->gen.pow((Q - 1) / g1);
  Fq cur = cd.alpha;
  for (int64_t i = 1; i < sweeps; ++i) {
    cur = cur * omega;
    C1Result swept = c1_with_alpha(cd, cur);
    int64_t swept_direct = c1_direct_with_alpha(cd, cur);
    if (swept.index != c1.index || swept_direct != c1.index) r.alpha_invariance = false;
  }

  r.epsilon = Cyclotomic::root(datum.j * c1.index, datum.d);
  r.gamma = r.epsilon * Cyclotomic::root(r.m / 2, 2);
  r.description = "nonsplit form: the fiber scalar is epsilon * (-q)^(m/2) with m = " +
                  std::to_string(r.m) + "; gamma = epsilon * (-1)^(m/2)";
  return r;
}

ScalarResult gamma_scalar(const Partition& lambda, const CuspidalDatum& datum, int64_t q) {
  return datum.frob == FrobType::split ? gamma_split(lambda, datum, q)
                                       : gamma_nonsplit(lambda, datum, q);
}

std::vector<YRow> y_function_table(const CuspidalDatum& datum, int64_t q) {
  power_of(q, datum.p);
  std::vector<YRow> rows;
  for (const SpringerEntry& entry : springer_table(datum)) {
    ScalarResult sc = gamma_scalar(entry.lambda, datum, q);
    TwistedClasses tc = twisted_classes(entry.big_m, q, datum.frob);
    for (int64_t a : tc.reps) {
      YRow row;
      row.lambda = entry.lambda;
      row.rho_index = entry.rho_index;
      row.class_rep = a;
      row.value = sc.gamma * rho_value(entry.rho_index, entry.big_m, a);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace gsc
