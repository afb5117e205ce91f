#pragma once

// Exact arithmetic in small finite fields F_{p^f}.
//
// Elements are polynomials in a fixed generator of the field over F_p,
// reduced modulo a deterministically chosen irreducible monic modulus, so
// that any two runs (and any two machines) agree bit-for-bit on every
// representation.  Fields are interned: make_field(p, f) returns the same
// context pointer for the same arguments, and elements carry their context.
//
// Sizes are deliberately small (p^f <= ~2*10^6, f <= 8): discrete logarithms
// are table lookups and exhaustive scans over a field are cheap.  Every
// routine is exact; there is no floating point anywhere.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gsc/errors.hpp"

namespace gsc {

inline constexpr int kMaxFieldDeg = 8;
inline constexpr int64_t kMaxFieldSize = 2'000'000;

struct FieldCtx;

// One element of F_{p^f}: coefficient vector c_0 + c_1 x + ... + c_{f-1} x^{f-1}
// in the polynomial basis of the context's modulus.
class Fq {
 public:
  Fq() : ctx_(nullptr) { c_.fill(0); }
  Fq(const FieldCtx* ctx, int64_t constant);  // the image of an integer

  const FieldCtx* ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator-() const;
  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  Fq inv() const;
  Fq pow(int64_t e) const;

  // Coefficient of x^i, 0 <= i < f.
  int64_t coeff(int i) const { return c_[static_cast<size_t>(i)]; }

  // Canonical integer key sum_i c_i p^i in [0, q).  Used for hashing and
  // for building lookup tables; it is a bijection with the field.
  int64_t key() const;

  // Human-readable polynomial, highest degree first: "2x^3+x+1", "0", "2".
  std::string str() const;

  friend struct FieldCtx;
  friend Fq element_from_key(const FieldCtx* ctx, int64_t k);

 private:
  std::array<int32_t, kMaxFieldDeg> c_;
  const FieldCtx* ctx_;
};

struct FieldCtx {
  int64_t p = 0;  // characteristic (prime)
  int64_t f = 0;  // extension degree over F_p
  int64_t q = 0;  // p^f
  // Monic modulus of degree f: modulus[i] is the coefficient of x^i,
  // modulus[f] == 1.  Chosen as the first irreducible polynomial in the
  // lexicographic order of (c_0, c_1, ..., c_{f-1}).
  std::array<int64_t, kMaxFieldDeg + 1> modulus{};
  // The first multiplicative generator in the same lexicographic order.
  Fq gen;

  Fq zero() const { return Fq(this, 0); }
  Fq one() const { return Fq(this, 1); }
};

// Interned field construction; deterministic for fixed (p, f).
const FieldCtx* make_field(int64_t p, int64_t f);

// Element with canonical key k (inverse of Fq::key()).
Fq element_from_key(const FieldCtx* ctx, int64_t k);

// The element of lexicographic rank r, ordering coefficient vectors by
// (c_0, c_1, ..., c_{f-1}) with c_0 most significant.  Rank 0 is zero.
Fq element_at_lex_rank(const FieldCtx* ctx, int64_t r);

// x^(p^e) — the e-th power of the absolute Frobenius.
Fq frob_power(const Fq& x, int64_t e);

// Index k in [0, q-1) with gen^k = x; error on x = 0.
int64_t discrete_log(const Fq& x);

// The multiplicative order of x (error on x = 0).
int64_t element_order(const Fq& x);

// Image of x under the deterministic embedding F_{p^a} -> F_{p^b} (a | b),
// defined by sending the small field's generator basis through the
// lexicographically first root of the small modulus in the big field.
// Embeddings are cached per ordered pair of contexts.
Fq embed(const Fq& x, const FieldCtx* big);

// For a context F_{q0^2} (even f), the canonical imaginary unit
// iota = gen^((q0+1)/2), which satisfies iota^{q0} = -iota.  Requires p > 2.
Fq imaginary_unit(const FieldCtx* ctx);

// p^(f/2) for an even-degree context (the "q" of its unitary structure).
int64_t unitary_q(const FieldCtx* ctx);

}  // namespace gsc
