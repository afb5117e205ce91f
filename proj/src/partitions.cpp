#include "gsc/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "gsc/errors.hpp"

namespace gsc {

Partition make_partition(std::vector<int64_t> parts) {
  for (int64_t x : parts) require(x > 0, "partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

Partition parse_partition(const std::string& s) {
  std::vector<int64_t> parts;
  size_t i = 0;
  require(!s.empty(), "empty partition string");
  while (i < s.size()) {
    size_t j = i;
    while (j < s.size() && s[j] != ',') ++j;
    std::string tok = s.substr(i, j - i);
    require(!tok.empty(), "partition: empty component");
    for (char c : tok) require(c >= '0' && c <= '9', "partition: not a number: " + tok);
    parts.push_back(std::stoll(tok));
    i = j + 1;
  }
  return make_partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s;
}

Partition transpose(const Partition& p) {
  std::vector<int64_t> t;
  if (p.parts.empty()) return Partition{};
  for (int64_t i = 1; i <= p.parts[0]; ++i) {
    int64_t cnt = 0;
    for (int64_t x : p.parts)
      if (x >= i) ++cnt;
    t.push_back(cnt);
  }
  return Partition{std::move(t)};
}

Partition scale(const Partition& p, int64_t d) {
  require(d >= 1, "scale: d must be positive");
  Partition r = p;
  for (auto& x : r.parts) x *= d;
  return r;
}

int64_t gcd_parts(const Partition& p) {
  int64_t g = 0;
  for (int64_t x : p.parts) g = std::gcd(g, x);
  return g;
}

int64_t n_prime(int64_t n, int64_t p) {
  require(n >= 1 && p >= 2, "n_prime: need n >= 1 and p >= 2");
  while (n % p == 0) n /= p;
  return n;
}

int64_t component_group_order(const Partition& lambda, int64_t p) {
  int64_t n = lambda.sum();
  require(n >= 1, "component_group_order: empty partition");
  int64_t g = n_prime(n, p);
  for (int64_t x : lambda.parts) g = std::gcd(g, x);
  return g;
}

int64_t compute_m(const Partition& lambda, int64_t d) {
  require(d >= 1, "compute_m: d must be positive");
  for (int64_t x : lambda.parts)
    require(x % d == 0, "compute_m: every part must be divisible by d");
  int64_t n = lambda.sum();
  Partition t = transpose(lambda);
  int64_t s = 0;
  for (int64_t x : t.parts) s += x * x;
  int64_t m = s - n;
  ensure(m % 2 == 0 && m >= 0, "compute_m: degree must be even and nonnegative");
  return m;
}

int64_t dim_py(const Partition& lambda, int64_t d) { return compute_m(lambda, d) / 2; }

int64_t springer_fiber_dim(const Partition& lambda) {
  int64_t s = 0;
  for (size_t i = 0; i < lambda.parts.size(); ++i) s += static_cast<int64_t>(i) * lambda.parts[i];
  return s;
}

namespace {
void gen_partitions(int64_t n, int64_t maxpart, std::vector<int64_t>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int64_t k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int64_t n) {
  require(n >= 1, "partitions_of: need n >= 1");
  std::vector<Partition> out;
  std::vector<int64_t> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_with_parts_divisible(int64_t n, int64_t d) {
  require(d >= 1 && n >= 1, "partitions_with_parts_divisible: bad arguments");
  std::vector<Partition> out;
  if (n % d != 0) return out;
  for (const auto& mu : partitions_of(n / d)) out.push_back(scale(mu, d));
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r -= r / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> ds;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace gsc
