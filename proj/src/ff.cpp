#include "gsc/ff.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace gsc {

namespace {

int64_t mod_pow(int64_t b, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> ps;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// --- dense polynomial arithmetic over F_p (coefficients 0..p-1) ----------

using Poly = std::vector<int64_t>;  // poly[i] = coefficient of x^i

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, int64_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    int64_t lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      size_t k = shift + i;
      a[k] = ((a[k] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_powmod(Poly base, int64_t e, const Poly& m, int64_t p) {
  Poly r = {1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    int64_t inv_lead = mod_pow(b.back(), p - 2, p);
    Poly bm = b;
    for (auto& c : bm) c = c * inv_lead % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree f over F_p.
bool is_irreducible(const Poly& m, int64_t p) {
  int64_t f = static_cast<int64_t>(m.size()) - 1;
  Poly x = {0, 1};
  // x^(p^f) == x mod m
  Poly t = x;
  for (int64_t i = 0; i < f; ++i) t = poly_powmod(t, p, m, p);
  Poly diff = t;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^(p^(f/l)) - x, m) == 1 for every prime l | f
  for (int64_t l : prime_factors(f)) {
    Poly u = x;
    for (int64_t i = 0; i < f / l; ++i) u = poly_powmod(u, p, m, p);
    Poly d = u;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = ((d[1] - 1) % p + p) % p;
    trim(d);
    Poly g = poly_gcd(m, d, p);
    if (static_cast<int64_t>(g.size()) - 1 != 0) return false;
  }
  return true;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<int64_t, int64_t>, std::unique_ptr<FieldCtx>> fields;
  // discrete log tables, built lazily per context
  std::map<const FieldCtx*, std::unordered_map<int64_t, int64_t>> logs;
  // cached embedding roots per (small ctx, big ctx)
  std::map<std::pair<const FieldCtx*, const FieldCtx*>, Fq> roots;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Fq::Fq(const FieldCtx* ctx, int64_t constant) : ctx_(ctx) {
  c_.fill(0);
  int64_t v = constant % ctx->p;
  if (v < 0) v += ctx->p;
  c_[0] = static_cast<int32_t>(v);
}

bool Fq::is_zero() const {
  for (int i = 0; i < ctx_->f; ++i)
    if (c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

bool Fq::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < ctx_->f; ++i)
    if (c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

bool Fq::operator==(const Fq& o) const {
  require(ctx_ == o.ctx_, "Fq: comparing elements of different fields");
  for (int i = 0; i < ctx_->f; ++i)
    if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
  return true;
}

Fq Fq::operator+(const Fq& o) const {
  require(ctx_ == o.ctx_, "Fq: adding elements of different fields");
  Fq r = *this;
  for (int i = 0; i < ctx_->f; ++i) {
    size_t k = static_cast<size_t>(i);
    r.c_[k] = static_cast<int32_t>((r.c_[k] + o.c_[k]) % ctx_->p);
  }
  return r;
}

Fq Fq::operator-(const Fq& o) const {
  require(ctx_ == o.ctx_, "Fq: subtracting elements of different fields");
  Fq r = *this;
  for (int i = 0; i < ctx_->f; ++i) {
    size_t k = static_cast<size_t>(i);
    r.c_[k] = static_cast<int32_t>(((r.c_[k] - o.c_[k]) % ctx_->p + ctx_->p) % ctx_->p);
  }
  return r;
}

Fq Fq::operator-() const {
  Fq r = *this;
  for (int i = 0; i < ctx_->f; ++i) {
    size_t k = static_cast<size_t>(i);
    r.c_[k] = static_cast<int32_t>((ctx_->p - r.c_[k]) % ctx_->p);
  }
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  require(ctx_ == o.ctx_, "Fq: multiplying elements of different fields");
  const int f = static_cast<int>(ctx_->f);
  const int64_t p = ctx_->p;
  std::array<int64_t, 2 * kMaxFieldDeg> prod{};
  for (int i = 0; i < f; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < f; ++j) {
      prod[static_cast<size_t>(i + j)] +=
          static_cast<int64_t>(c_[static_cast<size_t>(i)]) * o.c_[static_cast<size_t>(j)];
    }
  }
  // reduce degree >= f terms by the monic modulus
  for (int k = 2 * f - 2; k >= f; --k) {
    int64_t lead = prod[static_cast<size_t>(k)] % p;
    if (lead == 0) continue;
    for (int i = 0; i < f; ++i) {
      prod[static_cast<size_t>(k - f + i)] -= lead * ctx_->modulus[static_cast<size_t>(i)];
    }
    prod[static_cast<size_t>(k)] = 0;
  }
  Fq r;
  r.ctx_ = ctx_;
  for (int i = 0; i < f; ++i) {
    r.c_[static_cast<size_t>(i)] = static_cast<int32_t>((prod[static_cast<size_t>(i)] % p + p) % p);
  }
  return r;
}

Fq Fq::pow(int64_t e) const {
  if (is_zero()) {
    require(e > 0 || e == 0, "Fq: 0 to a negative power");
    return e == 0 ? ctx_->one() : *this;
  }
  int64_t m = ctx_->q - 1;
  int64_t ee = e % m;
  if (ee < 0) ee += m;
  Fq r = ctx_->one();
  Fq b = *this;
  while (ee > 0) {
    if (ee & 1) r = r * b;
    b = b * b;
    ee >>= 1;
  }
  return r;
}

Fq Fq::inv() const {
  require(!is_zero(), "Fq: inverse of zero");
  return pow(ctx_->q - 2);
}

int64_t Fq::key() const {
  int64_t k = 0;
  for (int i = static_cast<int>(ctx_->f) - 1; i >= 0; --i) {
    k = k * ctx_->p + c_[static_cast<size_t>(i)];
  }
  return k;
}

std::string Fq::str() const {
  std::string s;
  for (int i = static_cast<int>(ctx_->f) - 1; i >= 0; --i) {
    int64_t c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

Fq element_from_key(const FieldCtx* ctx, int64_t k) {
  require(k >= 0 && k < ctx->q, "element_from_key: key out of range");
  Fq r;
  r.ctx_ = ctx;
  for (int i = 0; i < ctx->f; ++i) {
    r.c_[static_cast<size_t>(i)] = static_cast<int32_t>(k % ctx->p);
    k /= ctx->p;
  }
  return r;
}

Fq element_at_lex_rank(const FieldCtx* ctx, int64_t r) {
  require(r >= 0 && r < ctx->q, "element_at_lex_rank: rank out of range");
  // Digits of r base p, least significant first; the most significant digit
  // becomes c_0, so ranks order coefficient vectors lexicographically by
  // (c_0, c_1, ..., c_{f-1}).
  std::array<int64_t, kMaxFieldDeg> d{};
  for (int i = 0; i < ctx->f; ++i) {
    d[static_cast<size_t>(i)] = r % ctx->p;
    r /= ctx->p;
  }
  int64_t key = 0;
  for (int i = static_cast<int>(ctx->f) - 1; i >= 0; --i) {
    // coefficient c_i = digit f-1-i
    key = key * ctx->p + d[static_cast<size_t>(ctx->f - 1 - i)];
  }
  return element_from_key(ctx, key);
}

const FieldCtx* make_field(int64_t p, int64_t f) {
  require(p >= 2 && is_prime(p), "make_field: p must be prime");
  require(f >= 1 && f <= kMaxFieldDeg, "make_field: need 1 <= f <= 8");
  int64_t q = 1;
  for (int64_t i = 0; i < f; ++i) {
    q *= p;
    require(q <= kMaxFieldSize, "make_field: field too large (p^f > 2e6)");
  }
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.fields.find({p, f});
  if (it != reg.fields.end()) return it->second.get();

  auto ctx = std::make_unique<FieldCtx>();
  ctx->p = p;
  ctx->f = f;
  ctx->q = q;

  // Modulus: first irreducible monic polynomial in lexicographic order of
  // (c_0, ..., c_{f-1}).  For f = 1 this is x itself.
  if (f == 1) {
    ctx->modulus[0] = 0;
    ctx->modulus[1] = 1;
  } else {
    bool found = false;
    for (int64_t r = 0; r < q; ++r) {
      Poly m(static_cast<size_t>(f) + 1, 0);
      m[static_cast<size_t>(f)] = 1;
      int64_t rr = r;
      for (int64_t i = f - 1; i >= 0; --i) {
        m[static_cast<size_t>(i)] = rr % p;  // c_{f-1} varies fastest, c_0 slowest
        rr /= p;
      }
      if (is_irreducible(m, p)) {
        for (int64_t i = 0; i <= f; ++i)
          ctx->modulus[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
        found = true;
        break;
      }
    }
    ensure(found, "make_field: no irreducible modulus found");
  }

  // Generator: first element in lexicographic order with full multiplicative
  // order q - 1.
  const FieldCtx* raw = ctx.get();
  auto factors = prime_factors(q - 1);
  bool gen_found = false;
  for (int64_t r = 1; r < q; ++r) {
    Fq cand = element_at_lex_rank(raw, r);
    bool primitive = true;
    for (int64_t l : factors) {
      if (cand.pow((q - 1) / l).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx->gen = cand;
      gen_found = true;
      break;
    }
  }
  ensure(gen_found, "make_field: no generator found");

  auto* ptr = ctx.get();
  reg.fields.emplace(std::make_pair(p, f), std::move(ctx));
  return ptr;
}

Fq frob_power(const Fq& x, int64_t e) {
  int64_t f = x.ctx()->f;
  int64_t ee = ((e % f) + f) % f;
  Fq r = x;
  for (int64_t i = 0; i < ee; ++i) r = r.pow(x.ctx()->p);
  return r;
}

int64_t discrete_log(const Fq& x) {
  require(!x.is_zero(), "discrete_log: zero has no logarithm");
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto& table = reg.logs[x.ctx()];
  if (table.empty()) {
    table.reserve(static_cast<size_t>(x.ctx()->q));
    Fq cur = x.ctx()->one();
    for (int64_t k = 0; k < x.ctx()->q - 1; ++k) {
      table.emplace(cur.key(), k);
      cur = cur * x.ctx()->gen;
    }
  }
  auto it = table.find(x.key());
  ensure(it != table.end(), "discrete_log: element not found (corrupt field)");
  return it->second;
}

int64_t element_order(const Fq& x) {
  require(!x.is_zero(), "element_order: zero has no order");
  int64_t n = x.ctx()->q - 1;
  int64_t ord = n;
  for (int64_t l : prime_factors(n)) {
    while (ord % l == 0 && x.pow(ord / l).is_one()) ord /= l;
  }
  return ord;
}

Fq embed(const Fq& x, const FieldCtx* big) {
  const FieldCtx* small = x.ctx();
  if (small == big) return x;
  require(small->p == big->p, "embed: characteristic mismatch");
  require(big->f % small->f == 0, "embed: degree of target not a multiple");
  auto& reg = registry();
  Fq root;
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(small, big);
    auto it = reg.roots.find(key);
    if (it != reg.roots.end()) {
      root = it->second;
    } else {
      // first root (in lexicographic order) of the small modulus in big
      bool found = false;
      for (int64_t r = 0; r < big->q; ++r) {
        Fq cand = element_at_lex_rank(big, r);
        // evaluate small modulus at cand (Horner)
        Fq v = big->zero();
        for (int64_t i = small->f; i >= 0; --i) {
          v = v * cand + Fq(big, small->modulus[static_cast<size_t>(i)]);
        }
        if (v.is_zero()) {
          root = cand;
          found = true;
          break;
        }
      }
      ensure(found, "embed: no root of modulus in target field");
      reg.roots.emplace(key, root);
    }
  }
  Fq out = big->zero();
  Fq power = big->one();
  for (int i = 0; i < small->f; ++i) {
    out = out + Fq(big, x.coeff(i)) * power;
    power = power * root;
  }
  return out;
}

Fq imaginary_unit(const FieldCtx* ctx) {
  require(ctx->f % 2 == 0, "imaginary_unit: field degree must be even");
  require(ctx->p > 2, "imaginary_unit: characteristic must be odd");
  int64_t q0 = unitary_q(ctx);
  return ctx->gen.pow((q0 + 1) / 2);
}

int64_t unitary_q(const FieldCtx* ctx) {
  require(ctx->f % 2 == 0, "unitary_q: field degree must be even");
  int64_t q0 = 1;
  for (int64_t i = 0; i < ctx->f / 2; ++i) q0 *= ctx->p;
  return q0;
}

}  // namespace gsc
