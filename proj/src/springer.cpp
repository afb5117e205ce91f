#include "gsc/springer.hpp"

#include <numeric>

#include "gsc/errors.hpp"

namespace gsc {

FrobType parse_frob(const std::string& s) {
  if (s == "split") return FrobType::split;
  if (s == "nonsplit") return FrobType::nonsplit;
  throw PreconditionError("unknown Frobenius form '" + s + "' (expected split or nonsplit)");
}

std::string frob_name(FrobType frob) { return frob == FrobType::split ? "split" : "nonsplit"; }

std::vector<CuspidalDatum> enumerate_cuspidal(int64_t n, int64_t p, FrobType frob) {
  require(n >= 1, "enumerate_cuspidal: n must be positive");
  require(p >= 2, "enumerate_cuspidal: p must be a prime");
  int64_t np = n_prime(n, p);
  std::vector<CuspidalDatum> out;
  for (int64_t d : divisors(np))
    for (int64_t j = 0; j < d; ++j) {
      if (std::gcd(j, d) != 1) continue;  // d = 1 admits exactly j = 0
      CuspidalDatum datum;
      datum.n = n;
      datum.p = p;
      datum.d = d;
      datum.j = j;
      datum.frob = frob;
      out.push_back(datum);
    }
  return out;
}

std::vector<SpringerEntry> springer_table(const CuspidalDatum& datum) {
  require(datum.n >= 1 && datum.d >= 1, "springer_table: bad datum");
  require(datum.n % datum.d == 0, "springer_table: d must divide n");
  int64_t np = n_prime(datum.n, datum.p);
  require(np % datum.d == 0, "springer_table: d must divide the p'-part of n");
  if (datum.d == 1)
    require(datum.j == 0, "springer_table: d = 1 carries only j = 0");
  else
    require(datum.j >= 1 && datum.j < datum.d && std::gcd(datum.j, datum.d) == 1,
            "springer_table: j must be a unit mod d");

  std::vector<SpringerEntry> out;
  for (const Partition& mu : partitions_of(datum.n / datum.d)) {
    SpringerEntry e;
    e.mu = mu;
    e.lambda = scale(mu, datum.d);
    e.big_m = component_group_order(e.lambda, datum.p);
    ensure(e.big_m % datum.d == 0, "springer_table: component order not divisible by d");
    e.rho_index = (datum.j % e.big_m) * (e.big_m / datum.d) % e.big_m;
    e.m = compute_m(e.lambda, datum.d);
    e.dim_py = e.m / 2;
    out.push_back(std::move(e));
  }
  return out;
}

BijectionCheck check_bijection(int64_t n, int64_t p) {
  require(n >= 1, "check_bijection: n must be positive");
  int64_t np = n_prime(n, p);
  BijectionCheck r;
  for (int64_t d : divisors(np)) r.by_data += euler_phi(d) * static_cast<int64_t>(partitions_of(n / d).size());
  for (const Partition& lambda : partitions_of(n)) r.by_classes += component_group_order(lambda, p);
  r.equal = r.by_data == r.by_classes;
  return r;
}

int64_t component_F_action(int64_t big_m, int64_t q, FrobType frob) {
  require(big_m >= 1, "component_F_action: order must be positive");
  int64_t e = (frob == FrobType::split ? q : -q) % big_m;
  if (e < 0) e += big_m;
  return e;
}

TwistedClasses twisted_classes(int64_t big_m, int64_t q, FrobType frob) {
  TwistedClasses tc;
  tc.e = component_F_action(big_m, q, frob);
  int64_t shift = (tc.e - 1) % big_m;
  if (shift < 0) shift += big_m;
  tc.count = shift == 0 ? big_m : std::gcd(big_m, shift);
  for (int64_t a = 0; a < tc.count; ++a) tc.reps.push_back(a);
  return tc;
}

Cyclotomic rho_value(int64_t rho_index, int64_t big_m, int64_t a) {
  return Cyclotomic::root(rho_index * a, big_m);
}

}  // namespace gsc
