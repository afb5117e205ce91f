#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsc/linalg.hpp"
#include "gsc/partitions.hpp"

namespace gsc {

// A nilpotent matrix together with the string basis it was built from.
//
// The matrix acts on each basis string by  y . f[i][j] = signs[i][j] * f[i][j+1]
// (with signs[i][last] = 0).  Kinds:
//   "split"         block shift with unit signs over F_q
//   "twisted"       skew element of the unitary Lie algebra over F_{q^2}
//   "twisted-cut"   a twisted element with every d-th link removed
//   "levi-regular"  block element that is regular in each d x d block
struct NilpotentRep {
  std::string kind;
  Partition lambda;  // Jordan type of the matrix
  int64_t d = 0;     // block size for "twisted-cut" / "levi-regular", else 0
  const FieldCtx* ctx = nullptr;
  Mat matrix;
  std::vector<std::vector<Mat>> strings;  // strings[i][j] = column vector f^(i)_{j+1}
  std::vector<std::vector<Fq>> signs;     // signs[i][j], terminal entry zero
};

// Basis giving the standard Gram table for a self-paired string structure:
// <f[i][j], f[i'][k]> is 1 when i == i' and j + k == lambda_i + 1 with j != k,
// the recorded middle value (+-1) when additionally j == k, and 0 otherwise.
struct TwistedBasis {
  std::vector<std::vector<Mat>> vectors;
  std::vector<Fq> middle_values;  // per string; zero for strings of even length
};

// Conjugation data between the block-regular element y0 of type (d^t) and its
// string-aligned conjugate y1, over the field of the sesquilinear form.
struct ConjugationData {
  int64_t n = 0, d = 0, t = 0, z = 0;  // z = number of odd parts of lambda/d
  Partition lambda;
  const FieldCtx* ctx = nullptr;

  NilpotentRep y0;  // block-regular element, type (d^t)
  NilpotentRep y1;  // conjugate built on the h-basis, type (d^t)

  std::vector<std::vector<Mat>> h_basis;  // h^(i)_j column vectors
  Fq transition_det;                      // det of the e -> h transition, +-1

  Mat g;     // Ad(g) y0 = y1, identity on the lower block coordinates
  Fq det_g;  // +-1
  Mat g0;    // restriction of g to Ker y0 (t x t)
  Fq det_g0;

  std::vector<int> w1_coords, w0_coords, w2_coords;  // 0-based coordinate sets
  std::vector<int> kernel_coords;                    // Ker y0 coordinates

  const FieldCtx* alpha_ctx = nullptr;  // extension holding alpha and mu_n
  Fq alpha;                             // alpha^n = det g, alpha = 1 when det g = 1
};

// A root of unity in an explicit finite field, with its exponent relative to
// the canonical generator of mu_d.
struct C1Result {
  const FieldCtx* field = nullptr;
  Fq value;
  int64_t index = 0;  // value == zeta_d^index
};

// sl2 triple through a nilpotent rep: [h,y] = 2y, [h,y_minus] = -2 y_minus,
// [y, y_minus] = h.  Requires p > every part of the rep's type.
struct Sl2Triple {
  Mat y, y_minus, h;
};

// Block shift matrix with unit links over any field.
NilpotentRep split_rep(const Partition& lambda, const FieldCtx* ctx);

// Deterministic self-paired basis compatible with the standard form.
TwistedBasis twisted_basis(const Partition& lambda, const SesquiForm& form);

// Skew nilpotent element of type lambda in the unitary Lie algebra.
NilpotentRep twisted_rep(const Partition& lambda, const SesquiForm& form);

// Remove every d-th link of a twisted rep; result has type (d^(n/d)).
NilpotentRep twisted_y1(const NilpotentRep& rep, int64_t d);

// Block element of type (d^(n/d)): plus blocks, minus blocks, and a regular
// middle block when the number of blocks is odd.
NilpotentRep twisted_y0(int64_t n, int64_t d, const SesquiForm& form);

// sl2 triple through rep.matrix (requires p > max part).
Sl2Triple sl2_triple(const NilpotentRep& rep);

// Checks that v = y_lambda - y1 satisfies v * y1_minus = y1_minus * v = 0.
bool slice_check(const NilpotentRep& y_lambda, const NilpotentRep& y1);

// Builds y0, the h-basis, y1, the conjugator g with Ad(g) y0 = y1, and the
// scalar alpha with alpha^n = det g, all with invariant checks.
ConjugationData conjugation_data(int64_t n, int64_t d, const Partition& lambda,
                                 const SesquiForm& form);

// Canonical generator of mu_d inside the form's field: gen^((q^2-1)/d).
Fq zeta_root(const FieldCtx* ctx, int64_t d);

// Matrix with every entry pushed through a field embedding.
Mat mat_embed(const Mat& m, const FieldCtx* big);

}  // namespace gsc
