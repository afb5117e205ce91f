#include "gsc/reps.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gsc/errors.hpp"

namespace gsc {

namespace {

Mat unit_vec(int n, int k, const FieldCtx* ctx) {
  Mat v(n, 1, ctx);
  v.at(k, 0) = ctx->one();
  return v;
}

// The matrix sending f^(i)_j to signs[i][j] * f^(i)_{j+1}, expressed in the
// standard coordinates:  F * S * F^{-1}  with F the basis-column matrix and
// S the shift-with-signs in string coordinates.
Mat matrix_from_strings(int n, const FieldCtx* ctx,
                        const std::vector<std::vector<Mat>>& strings,
                        const std::vector<std::vector<Fq>>& signs) {
  Mat F(n, n, ctx);
  Mat S(n, n, ctx);
  int col = 0;
  for (size_t i = 0; i < strings.size(); ++i) {
    int len = static_cast<int>(strings[i].size());
    for (int j = 0; j < len; ++j) {
      const Mat& v = strings[i][j];
      require(v.rows == n && v.cols == 1, "matrix_from_strings: bad vector shape");
      for (int r = 0; r < n; ++r) F.at(r, col + j) = v.at(r, 0);
      if (j + 1 < len) S.at(col + j + 1, col + j) = signs[i][j];
    }
    ensure(signs[i].size() == strings[i].size() && signs[i].back().is_zero(),
           "matrix_from_strings: signs must end with a terminal zero");
    col += len;
  }
  require(col == n, "matrix_from_strings: strings do not fill the space");
  return F * S * inverse(F);
}

Partition rectangle(int64_t d, int64_t t) {
  return make_partition(std::vector<int64_t>(static_cast<size_t>(t), d));
}

std::vector<int64_t> rect_parts(int64_t d, int64_t t) {
  return std::vector<int64_t>(static_cast<size_t>(t), d);
}

// Gram value the self-paired string table prescribes for a pair of basis
// positions; middles[i] is the middle value of string i (zero when even).
Fq expected_gram(const FieldCtx* ctx, const std::vector<int64_t>& lens,
                 const std::vector<Fq>& middles, size_t i, int64_t j, size_t ip, int64_t k) {
  if (i == ip && j + k == lens[i] + 1) {
    if (j == k) return middles[i];
    return ctx->one();
  }
  return ctx->zero();
}

void verify_gram_table(const SesquiForm& form, const std::vector<std::vector<Mat>>& vecs,
                       const std::vector<Fq>& middles, const std::string& what) {
  std::vector<int64_t> lens;
  for (const auto& s : vecs) lens.push_back(static_cast<int64_t>(s.size()));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (int64_t j = 1; j <= lens[i]; ++j)
      for (size_t ip = 0; ip < vecs.size(); ++ip)
        for (int64_t k = 1; k <= lens[ip]; ++k) {
          Fq got = form_eval(form, vecs[i][static_cast<size_t>(j - 1)],
                             vecs[ip][static_cast<size_t>(k - 1)]);
          Fq want = expected_gram(form.ctx, lens, middles, i, j, ip, k);
          ensure(got == want, what + ": pairing table violated at strings " + std::to_string(i) +
                                  "," + std::to_string(ip) + " positions " + std::to_string(j) +
                                  "," + std::to_string(k));
        }
}

// Sign pattern (+1)^(mid-1), eps, (-1)^(len-1-mid), 0   with mid = [len/2];
// empty apart from the terminal zero when len == 1.
std::vector<Fq> plus_pattern(const FieldCtx* ctx, int64_t len, const Fq& eps) {
  std::vector<Fq> s;
  int64_t mid = len / 2;
  for (int64_t j = 1; j < len; ++j) {
    if (j < mid)
      s.push_back(ctx->one());
    else if (j == mid)
      s.push_back(eps);
    else
      s.push_back(-ctx->one());
  }
  s.push_back(ctx->zero());
  return s;
}

std::vector<Fq> negate_pattern(std::vector<Fq> s) {
  for (auto& x : s) x = -x;
  return s;
}

std::vector<Fq> constant_pattern(const FieldCtx* ctx, int64_t len, const Fq& val) {
  std::vector<Fq> s(static_cast<size_t>(len - 1), val);
  s.push_back(ctx->zero());
  return s;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

// Least s >= 0 with a*s = r (mod m); requires gcd(a, m) | r.
int64_t solve_congruence(int64_t a, int64_t r, int64_t m) {
  int64_t g = gcd64(a % m, m);
  require(r % g == 0, "solve_congruence: no solution");
  int64_t m2 = m / g;
  int64_t a2 = (a / g) % m2;
  int64_t r2 = (r / g) % m2;
  // inverse of a2 mod m2 by exhaustive small search (moduli here are tiny)
  int64_t inv = -1;
  for (int64_t x = 0; x < m2; ++x)
    if ((a2 * x) % m2 == 1 % m2) {
      inv = x;
      break;
    }
  ensure(inv >= 0, "solve_congruence: inverse not found");
  return (r2 * inv) % m2;
}

}  // namespace

Mat mat_embed(const Mat& m, const FieldCtx* big) {
  Mat res(m.rows, m.cols, big);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) res.at(i, j) = embed(m.at(i, j), big);
  return res;
}

Fq zeta_root(const FieldCtx* ctx, int64_t d) {
  require(d >= 1 && (ctx->q - 1) % d == 0, "zeta_root: d must divide q - 1");
  return ctx->gen.pow((ctx->q - 1) / d);
}

NilpotentRep split_rep(const Partition& lambda, const FieldCtx* ctx) {
  require(!lambda.parts.empty(), "split_rep: empty partition");
  int n = static_cast<int>(lambda.sum());
  NilpotentRep rep;
  rep.kind = "split";
  rep.lambda = lambda;
  rep.ctx = ctx;
  int offset = 0;
  for (int64_t part : lambda.parts) {
    std::vector<Mat> vecs;
    for (int64_t j = 0; j < part; ++j) vecs.push_back(unit_vec(n, offset + static_cast<int>(j), ctx));
    rep.strings.push_back(std::move(vecs));
    rep.signs.push_back(constant_pattern(ctx, part, ctx->one()));
    offset += static_cast<int>(part);
  }
  rep.matrix = matrix_from_strings(n, ctx, rep.strings, rep.signs);
  ensure(jordan_type(rep.matrix) == lambda.parts, "split_rep: wrong block type");
  return rep;
}

TwistedBasis twisted_basis(const Partition& lambda, const SesquiForm& form) {
  const FieldCtx* ctx = form.ctx;
  require(ctx->p > 2, "twisted_basis: characteristic must be odd");
  int n = form.n;
  require(lambda.sum() == n, "twisted_basis: partition size must match the form");

  Fq half = Fq(ctx, 2).inv();
  std::vector<bool> coord_used(static_cast<size_t>(n), false);
  int central = (n % 2 == 1) ? (n - 1) / 2 : -1;

  TwistedBasis basis;
  std::vector<Mat> committed;  // all vectors committed so far, flat

  auto commit = [&](const Mat& v) {
    for (int r = 0; r < n; ++r)
      if (!v.at(r, 0).is_zero()) coord_used[static_cast<size_t>(r)] = true;
    committed.push_back(v);
  };

  for (int64_t part : lambda.parts) {
    std::vector<Mat> vecs(static_cast<size_t>(part), Mat());
    Fq middle_value = ctx->zero();
    // paired outer positions: smallest free coordinate pair (k, n-1-k)
    for (int64_t j = 1; 2 * j < part + 1; ++j) {
      int found = -1;
      for (int k = 0; k < n; ++k) {
        int kp = n - 1 - k;
        if (k >= kp) break;  // only scan k below its partner (skips the central coordinate)
        if (!coord_used[static_cast<size_t>(k)] && !coord_used[static_cast<size_t>(kp)]) {
          found = k;
          break;
        }
      }
      ensure(found >= 0, "twisted_basis: no free coordinate pair");
      vecs[static_cast<size_t>(j - 1)] = unit_vec(n, found, ctx);
      vecs[static_cast<size_t>(part - j)] = unit_vec(n, n - 1 - found, ctx);
      commit(vecs[static_cast<size_t>(j - 1)]);
      commit(vecs[static_cast<size_t>(part - j)]);
    }
    // middle position of an odd string: first self-dual candidate orthogonal
    // to everything already placed.  The central coordinate goes first: a
    // mirror-pair middle consumes a whole pair, and the coordinate count only
    // works out when the lone unpaired middle (present iff n is odd) sits on
    // the central coordinate while the remaining middles share pairs two by
    // two through the +-1/2 variants.
    if (part % 2 == 1) {
      int64_t jm = (part + 1) / 2;
      std::vector<Mat> candidates;
      if (central >= 0) candidates.push_back(unit_vec(n, central, ctx));
      for (int k = 0; k < n; ++k) {
        if (k == n - 1 - k) continue;
        Mat plus = unit_vec(n, k, ctx);
        plus.at(n - 1 - k, 0) = half;
        Mat minus = unit_vec(n, k, ctx);
        minus.at(n - 1 - k, 0) = -half;
        candidates.push_back(plus);
        candidates.push_back(minus);
      }
      bool placed = false;
      for (const Mat& cand : candidates) {
        Fq self = form_eval(form, cand, cand);
        if (self != ctx->one() && self != -ctx->one()) continue;
        bool ok = true;
        for (const Mat& prev : committed) {
          if (!form_eval(form, cand, prev).is_zero() || !form_eval(form, prev, cand).is_zero()) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        vecs[static_cast<size_t>(jm - 1)] = cand;
        middle_value = self;
        commit(cand);
        placed = true;
        break;
      }
      ensure(placed, "twisted_basis: no admissible middle vector");
    }
    basis.vectors.push_back(std::move(vecs));
    basis.middle_values.push_back(middle_value);
  }

  verify_gram_table(form, basis.vectors, basis.middle_values, "twisted_basis");
  return basis;
}

NilpotentRep twisted_rep(const Partition& lambda, const SesquiForm& form) {
  const FieldCtx* ctx = form.ctx;
  TwistedBasis basis = twisted_basis(lambda, form);
  Fq iota = imaginary_unit(ctx);

  NilpotentRep rep;
  rep.kind = "twisted";
  rep.lambda = lambda;
  rep.ctx = ctx;
  rep.strings = basis.vectors;
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    int64_t part = lambda.parts[i];
    Fq eps = (part % 2 == 0) ? iota : basis.middle_values[i];
    rep.signs.push_back(plus_pattern(ctx, part, eps));
  }
  rep.matrix = matrix_from_strings(form.n, ctx, rep.strings, rep.signs);
  ensure(jordan_type(rep.matrix) == lambda.parts, "twisted_rep: wrong block type");
  ensure(is_form_compatible_lie(form, rep.matrix), "twisted_rep: matrix is not skew for the form");
  return rep;
}

NilpotentRep twisted_y1(const NilpotentRep& rep, int64_t d) {
  require(d >= 2, "twisted_y1: d must be at least 2");
  require(rep.ctx != nullptr && !rep.strings.empty(), "twisted_y1: rep has no strings");
  require(rep.kind == "twisted", "twisted_y1: input must be a twisted rep");
  for (int64_t part : rep.lambda.parts)
    require(part % d == 0, "twisted_y1: d must divide every part");
  const FieldCtx* ctx = rep.ctx;
  int n = static_cast<int>(rep.lambda.sum());

  NilpotentRep cut;
  cut.kind = "twisted-cut";
  cut.d = d;
  cut.lambda = rectangle(d, n / d);
  cut.ctx = ctx;
  for (size_t i = 0; i < rep.strings.size(); ++i) {
    int64_t part = rep.lambda.parts[i];
    for (int64_t a = 0; a < part / d; ++a) {
      std::vector<Mat> piece;
      std::vector<Fq> psigns;
      for (int64_t j = 0; j < d; ++j) {
        piece.push_back(rep.strings[i][static_cast<size_t>(a * d + j)]);
        psigns.push_back(j + 1 < d ? rep.signs[i][static_cast<size_t>(a * d + j)] : ctx->zero());
      }
      cut.strings.push_back(std::move(piece));
      cut.signs.push_back(std::move(psigns));
    }
  }
  cut.matrix = matrix_from_strings(n, ctx, cut.strings, cut.signs);
  ensure(jordan_type(cut.matrix) == rect_parts(d, n / d), "twisted_y1: wrong block type after cut");
  SesquiForm form = make_standard_form(n, ctx);
  ensure(is_form_compatible_lie(form, cut.matrix), "twisted_y1: cut matrix is not skew");
  return cut;
}

NilpotentRep twisted_y0(int64_t n, int64_t d, const SesquiForm& form) {
  const FieldCtx* ctx = form.ctx;
  require(ctx->p > 2, "twisted_y0: characteristic must be odd");
  require(d >= 2 && n % d == 0, "twisted_y0: d must be at least 2 and divide n");
  require(form.n == n, "twisted_y0: form dimension mismatch");
  int64_t t = n / d;
  Fq iota = imaginary_unit(ctx);

  NilpotentRep rep;
  rep.kind = "levi-regular";
  rep.d = d;
  rep.lambda = rectangle(d, t);
  rep.ctx = ctx;
  for (int64_t i = 1; i <= t; ++i) {
    std::vector<Mat> vecs;
    for (int64_t j = 1; j <= d; ++j)
      vecs.push_back(unit_vec(static_cast<int>(n), static_cast<int>((i - 1) * d + j - 1), ctx));
    rep.strings.push_back(std::move(vecs));
    if (2 * i <= t)
      rep.signs.push_back(constant_pattern(ctx, d, ctx->one()));
    else if (2 * i >= t + 2)
      rep.signs.push_back(constant_pattern(ctx, d, -ctx->one()));
    else  // central block, t odd
      rep.signs.push_back(plus_pattern(ctx, d, d % 2 == 0 ? iota : ctx->one()));
  }
  rep.matrix = matrix_from_strings(static_cast<int>(n), ctx, rep.strings, rep.signs);
  ensure(jordan_type(rep.matrix) == rect_parts(d, t), "twisted_y0: wrong block type");
  ensure(is_form_compatible_lie(form, rep.matrix), "twisted_y0: matrix is not skew");
  return rep;
}

Sl2Triple sl2_triple(const NilpotentRep& rep) {
  const FieldCtx* ctx = rep.ctx;
  require(ctx != nullptr, "sl2_triple: rep has no field");
  require(ctx->p > rep.lambda.max_part(), "sl2_triple: characteristic must exceed every part");
  int n = static_cast<int>(rep.lambda.sum());

  Mat B(n, n, ctx);
  Mat Ylow(n, n, ctx);
  Mat H(n, n, ctx);
  int col = 0;
  for (size_t i = 0; i < rep.strings.size(); ++i) {
    int64_t len = static_cast<int64_t>(rep.strings[i].size());
    Mat w = rep.strings[i][0];
    for (int64_t j = 0; j < len; ++j) {
      ensure(!w.is_zero(), "sl2_triple: string image vanished early");
      for (int r = 0; r < n; ++r) B.at(r, col + static_cast<int>(j)) = w.at(r, 0);
      H.at(col + static_cast<int>(j), col + static_cast<int>(j)) = Fq(ctx, 2 * j + 1 - len);
      if (j >= 1)
        Ylow.at(col + static_cast<int>(j) - 1, col + static_cast<int>(j)) = Fq(ctx, j * (len - j));
      w = rep.matrix * w;
    }
    ensure(w.is_zero(), "sl2_triple: string does not terminate");
    col += static_cast<int>(len);
  }
  Mat Binv = inverse(B);

  Sl2Triple triple;
  triple.y = rep.matrix;
  triple.y_minus = B * Ylow * Binv;
  triple.h = B * H * Binv;

  auto bracket = [](const Mat& a, const Mat& b) { return a * b - b * a; };
  Fq two = Fq(ctx, 2);
  ensure(bracket(triple.h, triple.y) == triple.y * two, "sl2_triple: [h,y] != 2y");
  ensure(bracket(triple.h, triple.y_minus) == triple.y_minus * (-two),
         "sl2_triple: [h,y-] != -2y-");
  ensure(bracket(triple.y, triple.y_minus) == triple.h, "sl2_triple: [y,y-] != h");
  return triple;
}

bool slice_check(const NilpotentRep& y_lambda, const NilpotentRep& y1) {
  require(y_lambda.ctx == y1.ctx, "slice_check: mismatched fields");
  require(y_lambda.lambda.sum() == y1.lambda.sum(), "slice_check: mismatched sizes");
  Sl2Triple triple = sl2_triple(y1);
  Mat v = y_lambda.matrix - y1.matrix;
  return (v * triple.y_minus).is_zero() && (triple.y_minus * v).is_zero();
}

ConjugationData conjugation_data(int64_t n, int64_t d, const Partition& lambda,
                                 const SesquiForm& form) {
  const FieldCtx* ctx = form.ctx;
  require(lambda.sum() == n, "conjugation_data: partition must sum to n");
  require(d >= 2 && n % d == 0, "conjugation_data: d must be at least 2 and divide n");
  for (int64_t part : lambda.parts)
    require(part % d == 0, "conjugation_data: d must divide every part");
  require(ctx->p > 2, "conjugation_data: characteristic must be odd");
  require(form.n == n, "conjugation_data: form dimension mismatch");

  ConjugationData cd;
  cd.n = n;
  cd.d = d;
  cd.t = n / d;
  cd.lambda = lambda;
  cd.ctx = ctx;

  int64_t t = cd.t;
  int64_t z = 0;
  for (int64_t part : lambda.parts)
    if ((part / d) % 2 == 1) ++z;
  cd.z = z;
  ensure((t - z) % 2 == 0, "conjugation_data: parity of odd quotient parts is off");

  Fq iota = imaginary_unit(ctx);
  Fq half = Fq(ctx, 2).inv();
  int64_t dp = d / 2;  // floor

  cd.y0 = twisted_y0(n, d, form);

  // string classification (1-based block index): crosses below the band,
  // self-paired strings inside the band, central string at (t+1)/2 if t odd
  int64_t nc = (t - z) / 2;
  auto is_central = [&](int64_t i) { return t % 2 == 1 && 2 * i == t + 1; };
  auto is_self = [&](int64_t i) { return i > nc && i <= t - nc && !is_central(i); };

  auto block_vec = [&](int64_t i, int64_t j) {  // e^(i)_j, both 1-based
    return unit_vec(static_cast<int>(n), static_cast<int>((i - 1) * d + j - 1), ctx);
  };

  // h-basis and the signs of y1 on it
  cd.h_basis.assign(static_cast<size_t>(t), {});
  std::vector<std::vector<Fq>> y1_signs(static_cast<size_t>(t));
  std::vector<Fq> h_middles(static_cast<size_t>(t), ctx->zero());
  for (int64_t i = 1; i <= t; ++i) {
    int64_t ip = t + 1 - i;
    std::vector<Mat>& hs = cd.h_basis[static_cast<size_t>(i - 1)];
    if (!is_self(i)) {
      for (int64_t j = 1; j <= d; ++j) hs.push_back(block_vec(i, j));
      if (is_central(i)) {
        y1_signs[static_cast<size_t>(i - 1)] =
            plus_pattern(ctx, d, d % 2 == 0 ? iota : ctx->one());
        if (d % 2 == 1) h_middles[static_cast<size_t>(i - 1)] = ctx->one();
      } else {
        y1_signs[static_cast<size_t>(i - 1)] =
            constant_pattern(ctx, d, i <= nc ? ctx->one() : -ctx->one());
      }
      continue;
    }
    // self-paired string: head from its own block, tail from the partner
    bool plus_oriented = (2 * i <= t + 1);
    int64_t a = plus_oriented ? i : ip;  // the smaller index of the pair
    int64_t b = t + 1 - a;
    for (int64_t j = 1; j <= dp; ++j) hs.push_back(block_vec(i, j));
    if (d % 2 == 1) {
      Mat mid = block_vec(a, dp + 1);
      Mat other = block_vec(b, dp + 1);
      Fq coef = plus_oriented ? half : -half;
      for (int r = 0; r < n; ++r) mid.at(r, 0) = mid.at(r, 0) + coef * other.at(r, 0);
      hs.push_back(mid);
      h_middles[static_cast<size_t>(i - 1)] = plus_oriented ? ctx->one() : -ctx->one();
    }
    for (int64_t j = d - dp + 1; j <= d; ++j) hs.push_back(block_vec(ip, j));
    if (plus_oriented) {
      y1_signs[static_cast<size_t>(i - 1)] =
          plus_pattern(ctx, d, d % 2 == 0 ? iota : ctx->one());
    } else {
      y1_signs[static_cast<size_t>(i - 1)] =
          negate_pattern(plus_pattern(ctx, d, d % 2 == 0 ? iota.inv() : -ctx->one()));
    }
  }

  // pairing table of the h-basis: strings below the band pair with their
  // partner string, everything inside the band pairs with itself
  for (int64_t i = 1; i <= t; ++i) {
    int64_t dual_i = (is_self(i) || is_central(i)) ? i : t + 1 - i;
    for (int64_t ip = 1; ip <= t; ++ip)
      for (int64_t j = 1; j <= d; ++j)
        for (int64_t k = 1; k <= d; ++k) {
          Fq got = form_eval(form, cd.h_basis[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                             cd.h_basis[static_cast<size_t>(ip - 1)][static_cast<size_t>(k - 1)]);
          Fq want = ctx->zero();
          if (ip == dual_i && j + k == d + 1) {
            if (i == ip && j == k)
              want = h_middles[static_cast<size_t>(i - 1)];
            else
              want = ctx->one();
          }
          ensure(got == want, "conjugation_data: h-basis pairing violated at strings " +
                                  std::to_string(i) + "," + std::to_string(ip) + " positions " +
                                  std::to_string(j) + "," + std::to_string(k));
        }
  }

  // transition matrix e -> h
  Mat H(static_cast<int>(n), static_cast<int>(n), ctx);
  {
    int col = 0;
    for (int64_t i = 0; i < t; ++i)
      for (int64_t j = 0; j < d; ++j, ++col)
        for (int r = 0; r < n; ++r)
          H.at(r, col) = cd.h_basis[static_cast<size_t>(i)][static_cast<size_t>(j)].at(r, 0);
  }
  cd.transition_det = det(H);
  ensure(cd.transition_det == ctx->one() || cd.transition_det == -ctx->one(),
         "conjugation_data: transition determinant is not a sign");

  cd.y1.kind = "twisted-cut";
  cd.y1.d = d;
  cd.y1.lambda = rectangle(d, t);
  cd.y1.ctx = ctx;
  cd.y1.strings = cd.h_basis;
  cd.y1.signs = y1_signs;
  cd.y1.matrix = matrix_from_strings(static_cast<int>(n), ctx, cd.y1.strings, cd.y1.signs);
  ensure(jordan_type(cd.y1.matrix) == rect_parts(d, t), "conjugation_data: y1 has wrong type");
  ensure(is_form_compatible_lie(form, cd.y1.matrix), "conjugation_data: y1 is not skew");

  // coordinate blocks (0-based): heads, middles (odd d), tails
  for (int64_t i = 1; i <= t; ++i)
    for (int64_t j = 1; j <= d; ++j) {
      int c = static_cast<int>((i - 1) * d + j - 1);
      if (j <= dp)
        cd.w1_coords.push_back(c);
      else if (d % 2 == 1 && j == dp + 1)
        cd.w0_coords.push_back(c);
      else
        cd.w2_coords.push_back(c);
      if (j == d) cd.kernel_coords.push_back(c);
    }

  // conjugator: match the iterated strings of y0 and y1
  Mat V(static_cast<int>(n), static_cast<int>(n), ctx);
  Mat W(static_cast<int>(n), static_cast<int>(n), ctx);
  {
    int col = 0;
    for (int64_t i = 0; i < t; ++i) {
      Mat v = cd.y0.strings[static_cast<size_t>(i)][0];
      Mat w = cd.h_basis[static_cast<size_t>(i)][0];
      for (int64_t j = 0; j < d; ++j, ++col) {
        ensure(!v.is_zero() && !w.is_zero(), "conjugation_data: string image vanished");
        for (int r = 0; r < n; ++r) {
          V.at(r, col) = v.at(r, 0);
          W.at(r, col) = w.at(r, 0);
        }
        v = cd.y0.matrix * v;
        w = cd.y1.matrix * w;
      }
    }
  }
  cd.g = W * inverse(V);
  ensure(cd.g * cd.y0.matrix == cd.y1.matrix * cd.g, "conjugation_data: Ad(g) y0 != y1");
  cd.det_g = det(cd.g);
  ensure(cd.det_g == ctx->one() || cd.det_g == -ctx->one(),
         "conjugation_data: det g is not a sign");

  // g fixes every head coordinate and permutes-with-scalars the tails
  for (int c : cd.w1_coords)
    for (int r = 0; r < n; ++r)
      ensure(cd.g.at(r, c) == (r == c ? ctx->one() : ctx->zero()),
             "conjugation_data: g does not fix the head coordinates");
  for (int c : cd.w0_coords)
    for (int r = 0; r < n; ++r)
      if (!cd.g.at(r, c).is_zero())
        ensure(std::find(cd.w0_coords.begin(), cd.w0_coords.end(), r) != cd.w0_coords.end(),
               "conjugation_data: g does not stabilize the middle coordinates");
  for (int c : cd.w2_coords) {
    int nonzero = 0;
    for (int r = 0; r < n; ++r)
      if (!cd.g.at(r, c).is_zero()) {
        ++nonzero;
        ensure(std::find(cd.w2_coords.begin(), cd.w2_coords.end(), r) != cd.w2_coords.end(),
               "conjugation_data: g does not stabilize the tail coordinates");
      }
    ensure(nonzero == 1, "conjugation_data: g is not monomial on the tail coordinates");
  }

  // restriction of g to Ker y0
  {
    int tt = static_cast<int>(t);
    cd.g0 = Mat(tt, tt, ctx);
    for (int cidx = 0; cidx < tt; ++cidx) {
      int c = cd.kernel_coords[static_cast<size_t>(cidx)];
      for (int r = 0; r < n; ++r) {
        if (cd.g.at(r, c).is_zero()) continue;
        auto it = std::find(cd.kernel_coords.begin(), cd.kernel_coords.end(), r);
        ensure(it != cd.kernel_coords.end(),
               "conjugation_data: g does not stabilize Ker y0");
        cd.g0.at(static_cast<int>(it - cd.kernel_coords.begin()), cidx) = cd.g.at(r, c);
      }
    }
    // Ker y0 really is spanned by the terminal block coordinates
    std::vector<Mat> ker = kernel_basis(cd.y0.matrix);
    ensure(static_cast<int64_t>(ker.size()) == t, "conjugation_data: Ker y0 has wrong dimension");
    for (const Mat& kv : ker)
      for (int r = 0; r < n; ++r)
        if (!kv.at(r, 0).is_zero())
          ensure(std::find(cd.kernel_coords.begin(), cd.kernel_coords.end(), r) !=
                     cd.kernel_coords.end(),
                 "conjugation_data: Ker y0 is not supported on the terminal coordinates");
  }
  cd.det_g0 = det(cd.g0);
  ensure(cd.det_g0 == ctx->one() || cd.det_g0 == -ctx->one(),
         "conjugation_data: det g0 is not a sign");

  // scalar alpha with alpha^n = det g, in an extension where the n-th roots
  // of unity that exist rationally can be swept
  int64_t n1 = n_prime(n, ctx->p);
  int64_t target = std::min<int64_t>(3, n1);
  bool det_is_one = cd.det_g == ctx->one();
  const FieldCtx* best = nullptr;
  for (int64_t deg = ctx->f; deg <= kMaxFieldDeg; deg += ctx->f) {
    int64_t Q = 1;
    bool overflow = false;
    for (int64_t i = 0; i < deg; ++i) {
      Q *= ctx->p;
      if (Q > kMaxFieldSize) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
    int64_t g1 = gcd64(n, Q - 1);
    bool exists = det_is_one || ((Q - 1) / 2) % g1 == 0;
    if (exists && (g1 >= target || g1 == n1)) {
      best = make_field(ctx->p, deg);
      break;
    }
  }
  require(best != nullptr, "conjugation_data: no admissible field for alpha within size caps");
  cd.alpha_ctx = best;
  if (det_is_one) {
    cd.alpha = best->one();
  } else {
    int64_t Q = best->q;
    int64_t s = solve_congruence(n % (Q - 1), (Q - 1) / 2, Q - 1);
    cd.alpha = best->gen.pow(s);
  }
  ensure(cd.alpha.pow(n) == embed(cd.det_g, best), "conjugation_data: alpha^n != det g");

  return cd;
}

}  // namespace gsc
