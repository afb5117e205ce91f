#pragma once

// Integer partitions and the combinatorial quantities attached to nilpotent
// classes of sl_n: transposes, component group orders, and the cohomological
// degree m whose half is the relevant fiber dimension.

#include <cstdint>
#include <string>
#include <vector>

namespace gsc {

struct Partition {
  std::vector<int64_t> parts;  // weakly decreasing, all > 0

  int64_t sum() const {
    int64_t s = 0;
    for (int64_t x : parts) s += x;
    return s;
  }
  int64_t max_part() const { return parts.empty() ? 0 : parts.front(); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
};

// Build from arbitrary positive integers (sorted weakly decreasing).
Partition make_partition(std::vector<int64_t> parts);

// Parse "4,2,2" (ordering normalized); PreconditionError on junk.
Partition parse_partition(const std::string& s);

std::string to_string(const Partition& p);

Partition transpose(const Partition& p);

// d * lambda, partwise.
Partition scale(const Partition& p, int64_t d);

// gcd of all parts.
int64_t gcd_parts(const Partition& p);

// Largest divisor of n coprime to p.
int64_t n_prime(int64_t n, int64_t p);

// Order of the component group of the centralizer of a nilpotent of type
// lambda in SL_n: gcd(n', lambda_1, lambda_2, ...) with n' = n_prime(n, p).
int64_t component_group_order(const Partition& lambda, int64_t p);

// The cohomological degree m = sum_i (lambda^T_i)^2 - n.  Always even.
// d must divide every part (the partition must belong to the d-block).
int64_t compute_m(const Partition& lambda, int64_t d);

// dim P_y = m / 2.
int64_t dim_py(const Partition& lambda, int64_t d);

// Springer fiber dimension by the independent formula sum_i (i-1) lambda_i;
// equals compute_m(lambda, 1) / 2 (cross-checked in tests).
int64_t springer_fiber_dim(const Partition& lambda);

// All partitions of n, descending lexicographic order ((n) first).
std::vector<Partition> partitions_of(int64_t n);

// All partitions of n with every part divisible by d.
std::vector<Partition> partitions_with_parts_divisible(int64_t n, int64_t d);

int64_t euler_phi(int64_t n);
std::vector<int64_t> divisors(int64_t n);  // ascending

}  // namespace gsc
