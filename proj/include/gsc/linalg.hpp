#pragma once

// Exact dense linear algebra over the finite fields of ff.hpp: elimination,
// kernels, Jordan type of nilpotent matrices, and the antidiagonal
// sesquilinear form that defines the unitary structure.

#include <optional>
#include <string>
#include <vector>

#include "gsc/ff.hpp"

namespace gsc {

struct Mat {
  int rows = 0, cols = 0;
  const FieldCtx* ctx = nullptr;
  std::vector<Fq> a;

  Mat() = default;
  Mat(int r, int c, const FieldCtx* cx)
      : rows(r), cols(c), ctx(cx), a(static_cast<size_t>(r) * static_cast<size_t>(c), cx->zero()) {}

  static Mat identity(int n, const FieldCtx* cx);

  Fq& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Fq& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Fq& s) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat pow(int64_t e) const;  // e >= 0, square matrices
  bool is_zero() const;
  std::string str() const;  // multi-line, for diagnostics
};

// Entrywise p^e-th power (absolute Frobenius applied to every entry).
Mat frob(const Mat& m, int64_t e);

int rank(const Mat& m);
Fq det(const Mat& m);
Mat inverse(const Mat& m);  // PreconditionError if singular

// Basis of { x : m x = 0 } as column vectors, deterministic order.
std::vector<Mat> kernel_basis(const Mat& m);

// One solution of m x = b (b a column), if any.
std::optional<Mat> solve_particular(const Mat& m, const Mat& b);

// Jordan type of a nilpotent matrix: the partition whose k-th transpose
// entry is rank(m^{k-1}) - rank(m^k).  PreconditionError if m is not
// nilpotent.  Parts are returned weakly decreasing.
std::vector<int64_t> jordan_type(const Mat& m);

// The sesquilinear form <v, w> = sum_i v_i (w_{n+1-i})^q on F_{q^2}^n,
// with Gram matrix the antidiagonal permutation matrix.  The context must
// have even degree; q is p^{f/2}.
struct SesquiForm {
  const FieldCtx* ctx = nullptr;
  int n = 0;
  int64_t q = 0;       // p^{f/2}
  int64_t conj_e = 0;  // f/2: conjugation is frob_power(., conj_e)
  Mat gram;            // antidiagonal ones
};

SesquiForm make_standard_form(int n, const FieldCtx* ctx);

Fq form_eval(const SesquiForm& form, const Mat& v, const Mat& w);

// Whether g preserves the form:  g^T * Gram * g^(q) == Gram.
bool is_form_compatible_group(const SesquiForm& form, const Mat& g);

// Whether x is skew-adjoint for the form:  x^T * Gram + Gram * x^(q) == 0.
// Together with trace zero this characterizes the rational points of the
// twisted Lie algebra.
bool is_form_compatible_lie(const SesquiForm& form, const Mat& x);

// Find an invertible X with X A = B X, by computing the kernel of the
// Sylvester operator X -> XA - BX and searching small combinations of its
// basis (identity first when A == B, then single basis matrices, then pairs
// with one scalar coefficient, then triples).  Returns nullopt if the
// bounded search finds nothing; throws BudgetError if the kernel is too
// large to search within `budget` candidate evaluations.
std::optional<Mat> solve_conjugation(const Mat& A, const Mat& B, int64_t budget = 1'000'000);

// Canonical byte key of a matrix (entries' canonical keys, 4 bytes each,
// row-major); used to hash group elements in the brute-force enumerations.
std::string mat_key(const Mat& m);

}  // namespace gsc
