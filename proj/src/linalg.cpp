#include "gsc/linalg.hpp"

#include <algorithm>

namespace gsc {

Mat Mat::identity(int n, const FieldCtx* cx) {
  Mat m(n, n, cx);
  for (int i = 0; i < n; ++i) m.at(i, i) = cx->one();
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows == o.rows && cols == o.cols && ctx == o.ctx, "Mat: shape/field mismatch in +");
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows == o.rows && cols == o.cols && ctx == o.ctx, "Mat: shape/field mismatch in -");
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  require(cols == o.rows && ctx == o.ctx, "Mat: shape/field mismatch in *");
  Mat r(rows, o.cols, ctx);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const Fq& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        r.at(i, j) = r.at(i, j) + v * o.at(k, j);
      }
    }
  }
  return r;
}

Mat Mat::operator*(const Fq& s) const {
  require(ctx == s.ctx(), "Mat: scalar from a different field");
  Mat r = *this;
  for (auto& e : r.a) e = e * s;
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.a) e = -e;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  require(rows == o.rows && cols == o.cols && ctx == o.ctx, "Mat: shape/field mismatch in ==");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(cols, rows, ctx);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(int64_t e) const {
  require(rows == cols, "Mat: pow of non-square matrix");
  require(e >= 0, "Mat: negative power");
  Mat r = identity(rows, ctx);
  Mat b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& e : a)
    if (!e.is_zero()) return false;
  return true;
}

std::string Mat::str() const {
  std::string s;
  for (int i = 0; i < rows; ++i) {
    s += "[";
    for (int j = 0; j < cols; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

Mat frob(const Mat& m, int64_t e) {
  Mat r = m;
  for (auto& x : r.a) x = frob_power(x, e);
  return r;
}

namespace {

// Row echelon form in place; returns (rank, det-sign-and-product info).
// Deterministic: each pivot is the first row with a nonzero entry.
struct Echelon {
  Mat m;
  int rank = 0;
  Fq det_product;  // product of pivots times swap signs (square case)
  std::vector<int> pivot_cols;
};

Echelon echelon(Mat m) {
  Echelon e;
  Fq detp = m.ctx->one();
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
      detp = -detp;
    }
    detp = detp * m.at(r, c);
    Fq inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Fq factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  e.det_product = detp;
  e.m = std::move(m);
  return e;
}

}  // namespace

int rank(const Mat& m) { return echelon(m).rank; }

Fq det(const Mat& m) {
  require(m.rows == m.cols, "det: non-square matrix");
  Echelon e = echelon(m);
  return e.rank == m.rows ? e.det_product : m.ctx->zero();
}

Mat inverse(const Mat& m) {
  require(m.rows == m.cols, "inverse: non-square matrix");
  int n = m.rows;
  Mat aug(n, 2 * n, m.ctx);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.ctx->one();
  }
  Echelon e = echelon(std::move(aug));
  require(e.rank >= n && e.pivot_cols.size() >= static_cast<size_t>(n) &&
              e.pivot_cols[static_cast<size_t>(n) - 1] == n - 1,
          "inverse: singular matrix");
  Mat r(n, n, m.ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = e.m.at(i, n + j);
  return r;
}

std::vector<Mat> kernel_basis(const Mat& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Mat> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Mat v(m.cols, 1, m.ctx);
    v.at(free, 0) = m.ctx->one();
    // back-substitute: pivot row r has leading 1 in column pivot_cols[r]
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
      int pc = e.pivot_cols[r];
      v.at(pc, 0) = -e.m.at(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> solve_particular(const Mat& m, const Mat& b) {
  require(b.rows == m.rows && b.cols == 1 && b.ctx == m.ctx, "solve_particular: bad rhs");
  Mat aug(m.rows, m.cols + 1, m.ctx);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b.at(i, 0);
  }
  Echelon e = echelon(std::move(aug));
  // inconsistent iff a pivot lands in the last column
  for (int c : e.pivot_cols)
    if (c == m.cols) return std::nullopt;
  Mat x(m.cols, 1, m.ctx);
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x.at(e.pivot_cols[r], 0) = e.m.at(static_cast<int>(r), m.cols);
  }
  return x;
}

std::vector<int64_t> jordan_type(const Mat& m) {
  require(m.rows == m.cols, "jordan_type: non-square matrix");
  int n = m.rows;
  require(m.pow(n).is_zero(), "jordan_type: matrix is not nilpotent");
  // ranks of successive powers
  std::vector<int> r = {n};
  Mat p = Mat::identity(n, m.ctx);
  while (!p.is_zero()) {
    p = p * m;
    r.push_back(rank(p));
  }
  // transpose partition: parts-with-index->k count = r[k-1] - r[k]
  std::vector<int64_t> tr;
  for (size_t k = 1; k < r.size(); ++k) {
    int diff = r[k - 1] - r[k];
    if (diff > 0) tr.push_back(diff);
  }
  // jordan parts = transpose of tr
  std::vector<int64_t> parts;
  if (!tr.empty()) {
    for (int64_t i = 1; i <= tr[0]; ++i) {
      int64_t cnt = 0;
      for (int64_t t : tr)
        if (t >= i) ++cnt;
      parts.push_back(cnt);
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

SesquiForm make_standard_form(int n, const FieldCtx* ctx) {
  require(ctx->f % 2 == 0, "make_standard_form: field degree must be even");
  SesquiForm form;
  form.ctx = ctx;
  form.n = n;
  form.q = unitary_q(ctx);
  form.conj_e = ctx->f / 2;
  form.gram = Mat(n, n, ctx);
  for (int i = 0; i < n; ++i) form.gram.at(i, n - 1 - i) = ctx->one();
  return form;
}

Fq form_eval(const SesquiForm& form, const Mat& v, const Mat& w) {
  require(v.rows == form.n && v.cols == 1 && w.rows == form.n && w.cols == 1 &&
              v.ctx == form.ctx && w.ctx == form.ctx,
          "form_eval: expected column vectors of the form's size");
  Fq s = form.ctx->zero();
  for (int i = 0; i < form.n; ++i) {
    // <v, w> = sum_i v_i (w_{n+1-i})^q with 1-based indices
    s = s + v.at(i, 0) * frob_power(w.at(form.n - 1 - i, 0), form.conj_e);
  }
  return s;
}

bool is_form_compatible_group(const SesquiForm& form, const Mat& g) {
  require(g.rows == form.n && g.cols == form.n && g.ctx == form.ctx,
          "is_form_compatible_group: wrong shape or field");
  return g.transpose() * form.gram * frob(g, form.conj_e) == form.gram;
}

bool is_form_compatible_lie(const SesquiForm& form, const Mat& x) {
  require(x.rows == form.n && x.cols == form.n && x.ctx == form.ctx,
          "is_form_compatible_lie: wrong shape or field");
  return (x.transpose() * form.gram + form.gram * frob(x, form.conj_e)).is_zero();
}

std::optional<Mat> solve_conjugation(const Mat& A, const Mat& B, int64_t budget) {
  require(A.rows == A.cols && B.rows == B.cols && A.rows == B.rows && A.ctx == B.ctx,
          "solve_conjugation: need square matrices of equal size over one field");
  int n = A.rows;
  const FieldCtx* ctx = A.ctx;
  if (A.pow(n).is_zero() || B.pow(n).is_zero()) {
    require(A.pow(n).is_zero() && B.pow(n).is_zero() && jordan_type(A) == jordan_type(B),
            "solve_conjugation: matrices are not conjugate (different nilpotent types)");
  }
  if (A == B) return Mat::identity(n, ctx);  // canonical solution first

  // kernel of X -> XA - BX as an n^2 x n^2 system over the field
  Mat sys(n * n, n * n, ctx);
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int row = idx(i, j);
      for (int l = 0; l < n; ++l) {
        // (XA)_{ij} contributes A_{lj} to unknown X_{il}
        sys.at(row, idx(i, l)) = sys.at(row, idx(i, l)) + A.at(l, j);
      }
      for (int k = 0; k < n; ++k) {
        // (BX)_{ij} contributes -B_{ik} to unknown X_{kj}
        sys.at(row, idx(k, j)) = sys.at(row, idx(k, j)) - B.at(i, k);
      }
    }
  }
  std::vector<Mat> kb = kernel_basis(sys);
  auto unflatten = [&](const Mat& v) {
    Mat x(n, n, ctx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = v.at(idx(i, j), 0);
    return x;
  };
  std::vector<Mat> basis;
  basis.reserve(kb.size());
  for (const auto& v : kb) basis.push_back(unflatten(v));

  int64_t tried = 0;
  auto ok = [&](const Mat& x) -> bool {
    if (++tried > budget) throw BudgetError("solve_conjugation: search budget exceeded");
    return !det(x).is_zero();
  };

  for (const auto& x : basis)
    if (ok(x)) return x;
  // pairs with one scalar coefficient
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      for (int64_t r = 1; r < ctx->q; ++r) {
        Mat x = basis[i] + basis[j] * element_at_lex_rank(ctx, r);
        if (ok(x)) return x;
      }
    }
  }
  // triples, unit coefficients
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      for (size_t k = j + 1; k < basis.size(); ++k) {
        Mat x = basis[i] + basis[j] + basis[k];
        if (ok(x)) return x;
      }
  return std::nullopt;
}

std::string mat_key(const Mat& m) {
  std::string s;
  s.reserve(m.a.size() * 4);
  for (const auto& e : m.a) {
    int64_t k = e.key();
    for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((k >> (8 * b)) & 0xff));
  }
  return s;
}

}  // namespace gsc
