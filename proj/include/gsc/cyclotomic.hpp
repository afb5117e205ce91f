#pragma once

// Exact roots of unity: e^{2 pi i k/m} stored as a reduced fraction k/m of a
// full turn.  Enough character-value arithmetic for the scalar computations;
// no floating point.

#include <cstdint>
#include <numeric>
#include <string>

namespace gsc {

struct Cyclotomic {
  int64_t k = 0;  // numerator of the turn fraction, 0 <= k < m
  int64_t m = 1;  // denominator, >= 1; gcd(k, m) == 1 unless k == 0

  static Cyclotomic root(int64_t k, int64_t m) {
    Cyclotomic c;
    c.m = m;
    c.k = ((k % m) + m) % m;
    c.reduce();
    return c;
  }
  static Cyclotomic one() { return root(0, 1); }
  static Cyclotomic minus_one() { return root(1, 2); }
  static Cyclotomic sign(int64_t s) { return s >= 0 ? one() : minus_one(); }

  void reduce() {
    if (k == 0) {
      m = 1;
      return;
    }
    int64_t g = std::gcd(k, m);
    k /= g;
    m /= g;
  }

  Cyclotomic operator*(const Cyclotomic& o) const {
    // k/m + k'/m' mod 1
    int64_t mm = std::lcm(m, o.m);
    return root(k * (mm / m) + o.k * (mm / o.m), mm);
  }
  Cyclotomic pow(int64_t e) const {
    int64_t ee = ((e % m) + m) % m;
    return root(k * ee, m);
  }
  Cyclotomic inv() const { return root(-k, m); }
  bool operator==(const Cyclotomic& o) const { return k == o.k && m == o.m; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool is_one() const { return k == 0; }

  std::string str() const {
    if (k == 0) return "1";
    if (m == 2) return "-1";
    return "zeta" + std::to_string(m) + "^" + std::to_string(k);
  }
};

}  // namespace gsc
