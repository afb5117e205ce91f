#include "gsc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gsc/errors.hpp"

namespace gsc {

namespace {

struct Ledger {
  int64_t left = 0;
  void charge(int64_t c, const char* what) {
    if (c < 0 || c > left) throw BudgetError(std::string(what) + ": work budget exceeded");
    left -= c;
  }
};

std::pair<int64_t, int64_t> factor_prime_power(int64_t q) {
  require(q >= 2, "q must be at least 2");
  int64_t p = 0;
  for (int64_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) p = q;
  int64_t f = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++f;
  }
  require(t == 1, "q must be a prime power");
  return {p, f};
}

std::vector<Fq> field_elements(const FieldCtx* ctx) {
  std::vector<Fq> out;
  out.reserve(static_cast<size_t>(ctx->q));
  for (int64_t k = 0; k < ctx->q; ++k) out.push_back(element_from_key(ctx, k));
  return out;
}

// The subfield fixed by the e-th Frobenius power, as an element list.
std::vector<Fq> subfield_elements(const FieldCtx* ctx, int64_t e) {
  std::vector<Fq> out;
  for (int64_t k = 0; k < ctx->q; ++k) {
    Fq x = element_from_key(ctx, k);
    if (frob_power(x, e) == x) out.push_back(x);
  }
  return out;
}

// Reduced row echelon form in place; returns the rank.  The result is the
// canonical representative of the row space.
int rref_inplace(Mat& m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Fq inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Fq factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    ++r;
  }
  return r;
}

int64_t ipow64(int64_t b, int64_t e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int64_t su_order(int64_t n, int64_t q) {
  int64_t r = ipow64(q, n * (n - 1) / 2);
  for (int64_t k = 2; k <= n; ++k) r *= ipow64(q, k) - (k % 2 == 0 ? 1 : -1);
  return r;
}

// F_q-basis of the skew matrices of the form (n^2 elements): two elements
// x E_(r,c) - conj(x) E_mirror per position pair, one trace-like element per
// antidiagonal position.
std::vector<Mat> skew_basis(const SesquiForm& form) {
  const FieldCtx* ctx = form.ctx;
  int n = form.n;
  Fq tau = ctx->p > 2 ? imaginary_unit(ctx) : ctx->one();
  std::vector<Mat> basis;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int mr = n - 1 - c, mc = n - 1 - r;
      if (r == mr && c == mc) {
        Mat B(n, n, ctx);
        B.at(r, c) = tau;
        basis.push_back(std::move(B));
      } else if (std::make_pair(r, c) < std::make_pair(mr, mc)) {
        for (const Fq& x : {ctx->one(), ctx->gen}) {
          Mat B(n, n, ctx);
          B.at(r, c) = x;
          B.at(mr, mc) = -frob_power(x, form.conj_e);
          basis.push_back(std::move(B));
        }
      }
    }
  ensure(basis.size() == static_cast<size_t>(n) * static_cast<size_t>(n),
         "skew_basis: wrong dimension");
  for (const Mat& B : basis)
    ensure(is_form_compatible_lie(form, B), "skew_basis: basis element is not skew");
  return basis;
}

Fq trace_of(const Mat& m) {
  Fq t = m.ctx->zero();
  for (int i = 0; i < m.rows; ++i) t = t + m.at(i, i);
  return t;
}

int64_t kernel_det_index(const ConjugationData& cd, const Mat& M, const char* what) {
  const FieldCtx* big = cd.alpha_ctx;
  int n = static_cast<int>(cd.n);
  int t = static_cast<int>(cd.t);
  Mat R(t, t, big);
  for (int c = 0; c < t; ++c) {
    int cc = cd.kernel_coords[static_cast<size_t>(c)];
    for (int r = 0; r < n; ++r) {
      if (M.at(r, cc).is_zero()) continue;
      auto it = std::find(cd.kernel_coords.begin(), cd.kernel_coords.end(), r);
      ensure(it != cd.kernel_coords.end(),
             std::string(what) + ": twist does not stabilize Ker y0");
      R.at(static_cast<int>(it - cd.kernel_coords.begin()), c) = M.at(r, cc);
    }
  }
  Fq val = det(R);
  ensure(val.pow(cd.d).is_one(), std::string(what) + ": kernel determinant " + val.str() +
                                     " is not a root of unity of order dividing " +
                                     std::to_string(cd.d));
  Fq zeta = embed(zeta_root(cd.ctx, cd.d), big);
  Fq acc = big->one();
  for (int64_t k = 0; k < cd.d; ++k) {
    if (acc == val) return k;
    acc = acc * zeta;
  }
  throw CheckError(std::string(what) + ": kernel determinant is not a power of the canonical root");
}

std::vector<Mat> su_group_impl(const SesquiForm& form, Ledger& ledger) {
  const FieldCtx* ctx = form.ctx;
  int n = form.n;
  std::vector<Fq> elems = field_elements(ctx);
  std::vector<Mat> cols;
  std::vector<Mat> out;
  std::function<void()> place = [&]() {
    int m = static_cast<int>(cols.size());
    if (m == n) {
      Mat X(n, n, ctx);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) X.at(r, c) = cols[static_cast<size_t>(c)].at(r, 0);
      if (det(X).is_one()) out.push_back(std::move(X));
      return;
    }
    // pairing constraints against the chosen columns, conjugated to be
    // F_{q^2}-linear in the new column x:
    //   sum_j conj(c_a[n-1-j]) x_j = Gram(a, m)
    Mat A(m, n, ctx);
    Mat b(m, 1, ctx);
    for (int a = 0; a < m; ++a) {
      for (int j = 0; j < n; ++j)
        A.at(a, j) = frob_power(cols[static_cast<size_t>(a)].at(n - 1 - j, 0), form.conj_e);
      if (a + m == n - 1) b.at(a, 0) = ctx->one();
    }
    auto x0 = solve_particular(A, b);
    if (!x0) return;
    std::vector<Mat> kb = kernel_basis(A);
    int dim = static_cast<int>(kb.size());
    int64_t combos = 1;
    for (int i = 0; i < dim; ++i) {
      combos *= ctx->q;
      if (combos > ledger.left) throw BudgetError("enumerate_su_group: work budget exceeded");
    }
    ledger.charge(combos, "enumerate_su_group");
    Fq want = (2 * m == n - 1) ? ctx->one() : ctx->zero();
    std::vector<int64_t> digit(static_cast<size_t>(dim), 0);
    Mat x = *x0;
    while (true) {
      if (!x.is_zero() && form_eval(form, x, x) == want) {
        cols.push_back(x);
        place();
        cols.pop_back();
      }
      int pos = 0;
      while (pos < dim) {
        int64_t old = digit[static_cast<size_t>(pos)];
        int64_t next = (old + 1) % ctx->q;
        digit[static_cast<size_t>(pos)] = next;
        Fq delta = elems[static_cast<size_t>(next)] - elems[static_cast<size_t>(old)];
        for (int r = 0; r < n; ++r)
          x.at(r, 0) = x.at(r, 0) + delta * kb[static_cast<size_t>(pos)].at(r, 0);
        if (next != 0) break;
        ++pos;
      }
      if (pos == dim) break;
    }
  };
  place();
  int64_t expect = su_order(n, form.q);
  ensure(static_cast<int64_t>(out.size()) == expect,
         "enumerate_su_group: found " + std::to_string(out.size()) + " elements, expected " +
             std::to_string(expect));
  return out;
}

}  // namespace

int64_t c1_direct_with_alpha(const ConjugationData& cd, const Fq& alpha) {
  const FieldCtx* big = cd.alpha_ctx;
  require(alpha.ctx() == big, "c1 direct: alpha lives in the wrong field");
  ensure(alpha.pow(cd.n) == embed(cd.det_g, big), "c1 direct: alpha^n != det g");
  int n = static_cast<int>(cd.n);
  int64_t f0 = cd.ctx->f / 2;

  Mat g1 = mat_embed(cd.g, big) * alpha.inv();
  Mat w0(n, n, big);
  for (int i = 0; i < n; ++i) w0.at(i, n - 1 - i) = big->one();
  // unitary Frobenius F(X) = w0 (X^(q))^{-T} w0^{-1}; w0 is an involution
  Mat Fg1 = w0 * inverse(frob(g1, f0).transpose()) * w0;
  Mat M = inverse(g1) * Fg1;

  Mat y0big = mat_embed(cd.y0.matrix, big);
  ensure(M * y0big == y0big * M, "c1 direct: twist does not centralize y0");
  return kernel_det_index(cd, M, "c1 direct");
}

int64_t c1_direct(const ConjugationData& cd) { return c1_direct_with_alpha(cd, cd.alpha); }

int64_t enumerate_centralizer(const Mat& y, int64_t budget) {
  require(y.rows == y.cols && y.rows >= 1 && y.ctx != nullptr, "enumerate_centralizer: bad matrix");
  const FieldCtx* ctx = y.ctx;
  int n = y.rows;
  Ledger ledger{budget};
  int64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= ctx->q;
    if (total > ledger.left) throw BudgetError("enumerate_centralizer: work budget exceeded");
  }
  ledger.charge(total, "enumerate_centralizer");
  std::vector<Fq> elems = field_elements(ctx);

  std::vector<int64_t> digit(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  Mat X(n, n, ctx);
  int64_t count = 0;
  while (true) {
    if (X * y == y * X && det(X).is_one()) ++count;
    size_t pos = 0;
    while (pos < digit.size()) {
      int64_t next = (digit[pos] + 1) % ctx->q;
      digit[pos] = next;
      X.a[pos] = elems[static_cast<size_t>(next)];
      if (next != 0) break;
      ++pos;
    }
    if (pos == digit.size()) break;
  }
  return count;
}

int64_t centralizer_order_formula(const Partition& lambda, int64_t q) {
  require(!lambda.parts.empty(), "centralizer_order_formula: empty partition");
  Partition lt = transpose(lambda);
  int64_t dim = 0;
  for (int64_t x : lt.parts) dim += x * x;
  std::map<int64_t, int64_t> mult;
  for (int64_t part : lambda.parts) ++mult[part];
  int64_t sq = 0;
  int64_t units = 1;
  for (const auto& [value, m] : mult) {
    (void)value;
    sq += m * m;
    for (int64_t k = 0; k < m; ++k) units *= ipow64(q, m) - ipow64(q, k);
  }
  int64_t zgl = ipow64(q, dim - sq) * units;
  int64_t g = std::gcd(q - 1, gcd_parts(lambda));
  return zgl / (q - 1) * g;
}

std::vector<Mat> enumerate_su_group(const SesquiForm& form, int64_t budget) {
  Ledger ledger{budget};
  return su_group_impl(form, ledger);
}

int64_t count_rational_classes(const Partition& lambda, int64_t q, FrobType frob, int64_t budget) {
  auto [p, f] = factor_prime_power(q);
  int n = static_cast<int>(lambda.sum());
  require(n >= 1, "count_rational_classes: empty partition");
  Ledger ledger{budget};

  std::vector<Mat> nilpotents;
  std::vector<Mat> group, group_inv;

  if (frob == FrobType::split) {
    const FieldCtx* ctx = make_field(p, f);
    std::vector<Fq> elems = field_elements(ctx);
    int64_t total = 1;
    for (int i = 0; i < n * n; ++i) {
      total *= ctx->q;
      if (2 * total > ledger.left)
        throw BudgetError("count_rational_classes: work budget exceeded");
    }
    ledger.charge(2 * total, "count_rational_classes scan");
    std::vector<int64_t> digit(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    Mat X(n, n, ctx);
    while (true) {
      if (trace_of(X).is_zero() && X.pow(n).is_zero() && jordan_type(X) == lambda.parts)
        nilpotents.push_back(X);
      if (det(X).is_one()) {
        group.push_back(X);
        group_inv.push_back(inverse(X));
      }
      size_t pos = 0;
      while (pos < digit.size()) {
        int64_t next = (digit[pos] + 1) % ctx->q;
        digit[pos] = next;
        X.a[pos] = elems[static_cast<size_t>(next)];
        if (next != 0) break;
        ++pos;
      }
      if (pos == digit.size()) break;
    }
  } else {
    const FieldCtx* ctx2 = make_field(p, 2 * f);
    SesquiForm form = make_standard_form(n, ctx2);
    std::vector<Mat> basis = skew_basis(form);
    std::vector<Fq> sub = subfield_elements(ctx2, f);
    ensure(static_cast<int64_t>(sub.size()) == q,
           "count_rational_classes: subfield has wrong size");
    int64_t total = 1;
    for (int i = 0; i < n * n; ++i) {
      total *= q;
      if (total > ledger.left) throw BudgetError("count_rational_classes: work budget exceeded");
    }
    ledger.charge(total, "count_rational_classes scan");
    // odometer over coefficients with incremental updates
    std::vector<int64_t> digit(basis.size(), 0);
    Mat X(n, n, ctx2);
    Fq tr = ctx2->zero();
    std::vector<Fq> basis_tr;
    for (const Mat& B : basis) basis_tr.push_back(trace_of(B));
    while (true) {
      if (tr.is_zero() && X.pow(n).is_zero() && jordan_type(X) == lambda.parts)
        nilpotents.push_back(X);
      size_t pos = 0;
      while (pos < digit.size()) {
        int64_t next = (digit[pos] + 1) % static_cast<int64_t>(sub.size());
        Fq delta = sub[static_cast<size_t>(next)] - sub[static_cast<size_t>(digit[pos])];
        digit[pos] = next;
        const Mat& B = basis[pos];
        for (size_t idx = 0; idx < X.a.size(); ++idx)
          if (!B.a[idx].is_zero()) X.a[idx] = X.a[idx] + delta * B.a[idx];
        tr = tr + delta * basis_tr[pos];
        if (next != 0) break;
        ++pos;
      }
      if (pos == digit.size()) break;
    }
    group = su_group_impl(form, ledger);
    for (const Mat& g : group) group_inv.push_back(inverse(g));
  }

  std::unordered_set<std::string> visited;
  int64_t classes = 0;
  for (const Mat& x : nilpotents) {
    std::string key = mat_key(x);
    if (visited.count(key)) continue;
    ++classes;
    ledger.charge(static_cast<int64_t>(group.size()), "count_rational_classes orbits");
    for (size_t i = 0; i < group.size(); ++i)
      visited.insert(mat_key(group[i] * x * group_inv[i]));
  }
  return classes;
}

int64_t count_py_points(const Partition& lambda, int64_t d, const FieldCtx* ctx, int64_t budget) {
  require(d >= 1, "count_py_points: d must be positive");
  require(lambda.sum() % d == 0, "count_py_points: d must divide n");
  Ledger ledger{budget};
  Mat y = split_rep(lambda, ctx).matrix;
  std::vector<Fq> elems = field_elements(ctx);

  std::function<int64_t(const Mat&)> go = [&](const Mat& ymat) -> int64_t {
    int n = ymat.rows;
    if (n == 0) return 1;
    Mat yd = ymat.pow(d);
    Mat ydm1 = ymat.pow(d - 1);
    std::vector<Mat> kb = kernel_basis(yd);
    int dim = static_cast<int>(kb.size());
    int64_t combos = 1;
    for (int i = 0; i < dim; ++i) {
      combos *= ctx->q;
      if (combos > ledger.left) throw BudgetError("count_py_points: work budget exceeded");
    }
    ledger.charge(combos, "count_py_points");

    std::unordered_set<std::string> seen;
    std::vector<Mat> spans;  // RREF rows of each d-dimensional first step
    std::vector<int64_t> digit(static_cast<size_t>(dim), 0);
    Mat v(n, 1, ctx);
    while (true) {
      if (!v.is_zero() && !(ydm1 * v).is_zero()) {
        Mat rows(static_cast<int>(d), n, ctx);
        Mat w = v;
        for (int64_t j = 0; j < d; ++j) {
          for (int c = 0; c < n; ++c) rows.at(static_cast<int>(j), c) = w.at(c, 0);
          if (j + 1 < d) w = ymat * w;
        }
        int rk = rref_inplace(rows);
        ensure(rk == static_cast<int>(d), "count_py_points: step is not d-dimensional");
        std::string key = mat_key(rows);
        if (seen.insert(key).second) spans.push_back(rows);
      }
      int pos = 0;
      while (pos < dim) {
        int64_t next = (digit[static_cast<size_t>(pos)] + 1) % ctx->q;
        Fq delta = elems[static_cast<size_t>(next)] -
                   elems[static_cast<size_t>(digit[static_cast<size_t>(pos)])];
        digit[static_cast<size_t>(pos)] = next;
        for (int r = 0; r < n; ++r)
          v.at(r, 0) = v.at(r, 0) + delta * kb[static_cast<size_t>(pos)].at(r, 0);
        if (next != 0) break;
        ++pos;
      }
      if (pos == dim) break;
    }

    int64_t total = 0;
    for (const Mat& U : spans) {
      Mat P(n, n, ctx);
      for (int j = 0; j < static_cast<int>(d); ++j)
        for (int r = 0; r < n; ++r) P.at(r, j) = U.at(j, r);
      int have = static_cast<int>(d);
      for (int e = 0; e < n && have < n; ++e) {
        Mat sub(n, have + 1, ctx);
        for (int r = 0; r < n; ++r) {
          for (int c = 0; c < have; ++c) sub.at(r, c) = P.at(r, c);
          sub.at(r, have) = (r == e) ? ctx->one() : ctx->zero();
        }
        if (rank(sub) == have + 1) {
          for (int r = 0; r < n; ++r) P.at(r, have) = (r == e) ? ctx->one() : ctx->zero();
          ++have;
        }
      }
      ensure(have == n, "count_py_points: could not complete a basis");
      Mat Pinv = inverse(P);
      Mat Ybar = Pinv * ymat * P;
      int m2 = n - static_cast<int>(d);
      for (int r = 0; r < m2; ++r)
        for (int c = 0; c < static_cast<int>(d); ++c)
          ensure(Ybar.at(static_cast<int>(d) + r, c).is_zero(),
                 "count_py_points: step is not invariant");
      Mat C(m2, m2, ctx);
      for (int r = 0; r < m2; ++r)
        for (int c = 0; c < m2; ++c)
          C.at(r, c) = Ybar.at(static_cast<int>(d) + r, static_cast<int>(d) + c);
      total += go(C);
    }
    return total;
  };
  return go(y);
}

namespace {

struct Rat {
  __int128 num = 0;
  __int128 den = 1;
};

Rat rat_make(__int128 n, __int128 d) {
  ensure(d != 0, "interpolation: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return {n / a, d / a};
}

Rat rat_add(const Rat& a, const Rat& b) { return rat_make(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat rat_sub(const Rat& a, const Rat& b) { return rat_make(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat rat_mul(const Rat& a, const Rat& b) { return rat_make(a.num * b.num, a.den * b.den); }
Rat rat_div(const Rat& a, const Rat& b) {
  ensure(b.num != 0, "interpolation: division by zero");
  return rat_make(a.num * b.den, a.den * b.num);
}

}  // namespace

PolyFit interpolate_integer_polynomial(const std::vector<int64_t>& xs,
                                       const std::vector<int64_t>& ys) {
  require(!xs.empty() && xs.size() == ys.size(), "interpolation: need matching nonempty points");
  require(xs.size() <= 9, "interpolation: too many points");
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      require(xs[i] != xs[j], "interpolation: duplicate x values");

  size_t k = xs.size();
  std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < k; ++i) {
    __int128 pw = 1;
    for (size_t j = 0; j < k; ++j) {
      A[i][j] = rat_make(pw, 1);
      pw *= xs[i];
    }
    A[i][k] = rat_make(ys[i], 1);
  }
  // Gaussian elimination with exact rationals
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && A[piv][col].num == 0) ++piv;
    ensure(piv < k, "interpolation: singular system");
    std::swap(A[col], A[piv]);
    Rat lead = A[col][col];
    for (size_t j = col; j <= k; ++j) A[col][j] = rat_div(A[col][j], lead);
    for (size_t i = 0; i < k; ++i) {
      if (i == col || A[i][col].num == 0) continue;
      Rat factor = A[i][col];
      for (size_t j = col; j <= k; ++j) A[i][j] = rat_sub(A[i][j], rat_mul(factor, A[col][j]));
    }
  }

  PolyFit fit;
  for (size_t i = 0; i < k; ++i) {
    const Rat& c = A[i][k];
    ensure(c.den == 1, "interpolation: coefficient of x^" + std::to_string(i) +
                           " is not an integer");
    ensure(c.num <= INT64_MAX && c.num >= INT64_MIN, "interpolation: coefficient overflow");
    fit.coeffs.push_back(static_cast<int64_t>(c.num));
  }
  fit.degree = 0;
  for (size_t i = 0; i < fit.coeffs.size(); ++i)
    if (fit.coeffs[i] != 0) fit.degree = static_cast<int64_t>(i);
  return fit;
}

}  // namespace gsc
