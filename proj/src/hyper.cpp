#include "mzvlab/hyper.hpp"

#include "mzvlab/numeric.hpp"

#include <set>
#include <sstream>

namespace mzvlab {

namespace {

using NS = TruncSeries<BigReal>;
using Key = NS::Key;

std::string key_str(const Key& k) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ")";
  return os.str();
}

// s / (n + X) for a series X without constant term: (1/n) sum_k (-X/n)^k s.
NS div_shift(const NS& s, long n, const NS& X) {
  NS acc = s * BigReal(Rat(1, n));
  NS cur = s;
  Rat coef(1, n);
  for (unsigned k = 1; k <= s.cap(); ++k) {
    cur = cur * X;
    if (cur.terms().empty()) break;
    coef *= Rat(-1, n);
    acc += cur * BigReal(coef);
  }
  return acc;
}

// Solve M x = b by Gaussian elimination with partial pivoting.
std::vector<BigReal> gauss_solve(std::vector<std::vector<BigReal>> M, std::vector<BigReal> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (abs(M[r][col]) > abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = col + 1; r < n; ++r) {
      BigReal f = M[r][col] / M[col][col];
      for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigReal> x(n);
  for (size_t r = n; r-- > 0;) {
    BigReal s = b[r];
    for (size_t c = r + 1; c < n; ++c) s -= M[r][c] * x[c];
    x[r] = s / M[r][r];
  }
  return x;
}

// Extrapolate S(infinity) from the model
//   S(N) = S + N^{1-a} sum_{j<=m1} c_j ln^j N + N^{-a} sum_{j<=m2} d_j ln^j N,
// i.e. the leading Euler-Maclaurin tail of sums with harmonic-log weights plus
// its first subleading power, both log-dressed. Needs m1 + m2 + 3 samples.
BigReal fit_tail2(const std::vector<long>& Ns, const std::vector<BigReal>& Ss, unsigned a,
                  unsigned m1, unsigned m2) {
  size_t n = m1 + m2 + 3;
  std::vector<std::vector<BigReal>> M(n, std::vector<BigReal>(n));
  std::vector<BigReal> b(n);
  for (size_t r = 0; r < n; ++r) {
    BigReal Np = pow(BigReal(Ns[r]), 1 - static_cast<int>(a));
    BigReal lg = log(BigReal(Ns[r]));
    M[r][0] = 1;
    BigReal f = Np;
    for (size_t j = 0; j <= m1; ++j) {
      M[r][j + 1] = f;
      f *= lg;
    }
    f = Np / Ns[r];
    for (size_t j = 0; j <= m2; ++j) {
      M[r][m1 + 2 + j] = f;
      f *= lg;
    }
    b[r] = Ss[r];
  }
  return gauss_solve(std::move(M), std::move(b))[0];
}

// Coefficientwise tail extrapolation of partial-sum snapshots.
NS extrapolate_series(const std::vector<long>& Ns, const std::vector<NS>& snaps, unsigned a,
                      unsigned m1, unsigned m2) {
  NS out = snaps.back().shape_like();
  std::set<Key> keys;
  for (const NS& s : snaps)
    for (const auto& [k, v] : s.terms()) keys.insert(k);
  for (const Key& k : keys) {
    std::vector<BigReal> vals;
    for (const NS& s : snaps) vals.push_back(s.coeff(k));
    out.add(k, fit_tail2(Ns, vals, a, m1, m2));
  }
  return out;
}

std::vector<long> geometric_points(long base, unsigned count) {
  std::vector<long> Ns;
  for (unsigned i = 0; i < count; ++i) Ns.push_back(base << i);
  return Ns;
}

// Largest coefficient of lhs - rhs; fills detail with the offending exponent.
CheckResult compare_series(const NS& lhs, const NS& rhs, const BigReal& tol) {
  CheckResult res;
  res.err = 0;
  NS diff = lhs - rhs;
  Key worst;
  for (const auto& [k, v] : diff.terms())
    if (abs(v) > res.err) {
      res.err = abs(v);
      worst = k;
    }
  res.pass = res.err < tol;
  res.detail = diff.terms().empty() ? "all coefficients match"
                                    : "max discrepancy at exponent " + key_str(worst);
  return res;
}

bool is_nonpositive_int(const Rat& x) {
  return x <= 0 && boost::multiprecision::denominator(x) == 1;
}

}  // namespace

Rat rat_pochhammer(const Rat& x, unsigned n) {
  Rat acc = 1;
  for (unsigned j = 0; j < n; ++j) acc *= x + j;
  return acc;
}

BigReal loggamma1p_reduced(const BigReal& x) {
  if (abs(x) >= 1) throw std::invalid_argument("loggamma1p_reduced: |x| >= 1");
  if (x == 0) return 0;
  BigReal eps = pow(BigReal(10), -static_cast<long>(BigReal::default_precision()) - 5);
  BigReal acc = 0;
  BigReal xp = x * x;
  for (unsigned k = 2;; ++k) {
    BigReal t = zeta(k) * xp / k;
    acc += (k % 2 == 0) ? t : -t;
    xp *= x;
    // remaining terms are bounded by 2 |x|^{k+1} / (1 - |x|)
    if (2 * abs(xp) / (1 - abs(x)) < eps) break;
  }
  return acc;
}

TruncSeries<BigReal> loggamma1p_reduced(const TruncSeries<BigReal>& x) {
  if (x.has_constant_term())
    throw std::invalid_argument("loggamma1p_reduced: nonzero constant term");
  NS acc = x.shape_like();
  NS xp = x * x;
  for (unsigned k = 2; k <= x.cap(); ++k) {
    if (xp.terms().empty()) break;
    acc += xp * (zeta(k) / k * (k % 2 == 0 ? 1 : -1));
    xp = xp * x;
  }
  return acc;
}

TruncSeries<BigReal> psi1_series(const TruncSeries<BigReal>& x) {
  if (x.has_constant_term()) throw std::invalid_argument("psi1_series: nonzero constant term");
  NS acc = x.shape_like();
  NS xp = x;
  for (unsigned k = 2; k <= x.cap() + 1; ++k) {
    if (xp.terms().empty()) break;
    acc += xp * zeta(k);
    xp = xp * x;
  }
  return acc;
}

CheckResult verify_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, long N,
                           const BigReal& tol) {
  // gamma-argument offsets on both sides of the ratio; their sums agree
  // identically, which is what licenses dropping the Euler-Mascheroni term
  std::vector<Rat> num = {a - b, a - c, a - d, a - b - c - d};
  std::vector<Rat> den = {a, a - b - c, a - b - d, a - c - d};
  Rat snum = 0, sden = 0;
  for (const Rat& y : num) snum += y;
  for (const Rat& y : den) sden += y;
  if (snum != sden) throw std::logic_error("verify_dougall: argument sums differ");

  if (is_nonpositive_int(d)) {
    // terminating series: both sides are exact rationals
    long m = -static_cast<long>(boost::multiprecision::numerator(d).convert_to<long long>());
    unsigned mu = static_cast<unsigned>(m);
    std::vector<Rat> upper = {a, 1 + a / 2, b, c, d};
    std::vector<Rat> lower = {a / 2, 1 + a - b, 1 + a - c, 1 + a - d};
    Rat lhs = pFq_partial(upper, lower, Rat(1), m + 1, Rat(1));
    Rat rhs = rat_pochhammer(1 + a, mu) * rat_pochhammer(1 + a - b - c, mu) /
              (rat_pochhammer(1 + a - b, mu) * rat_pochhammer(1 + a - c, mu));
    CheckResult res;
    res.pass = (lhs == rhs);
    res.err = abs(BigReal(lhs - rhs));
    res.detail = "terminating, exact over Q";
    return res;
  }

  if (1 + a - b - c - d <= 0)
    throw std::invalid_argument("verify_dougall: divergent parameters");
  for (const Rat& y : num)
    if (abs(y) >= 1) throw std::invalid_argument("verify_dougall: gamma argument out of (0,2)");
  for (const Rat& y : den)
    if (abs(y) >= 1) throw std::invalid_argument("verify_dougall: gamma argument out of (0,2)");

  // left side: one pass to 2N, Richardson step with the exact tail exponent
  BigReal ab(a), bb(b), cb(c), db(d);
  BigReal term = 1, S1 = 1, S = 1;
  for (long n = 0; n < 2 * N; ++n) {
    term *= (ab + n) * (1 + ab / 2 + n) * (bb + n) * (cb + n) * (db + n);
    term /= (ab / 2 + n) * (1 + ab - bb + n) * (1 + ab - cb + n) * (1 + ab - db + n) * (n + 1);
    S += term;
    if (n + 1 == N) S1 = S;
  }
  BigReal sigma = 2 * (1 + ab - bb - cb - db);
  BigReal lhs = S + (S - S1) / (pow(BigReal(2), sigma) - 1);

  BigReal lg = 0;
  for (const Rat& y : num) lg += loggamma1p_reduced(BigReal(y));
  for (const Rat& y : den) lg -= loggamma1p_reduced(BigReal(y));
  BigReal rhs = exp(lg);

  CheckResult res;
  res.err = abs(lhs - rhs) / std::max(BigReal(1), abs(rhs));
  res.pass = res.err < tol;
  res.detail = "partial sum + tail vs gamma ratio";
  return res;
}

CheckResult verify_after_diff(unsigned D, const BigReal& tol) {
  if (D > 6) throw std::invalid_argument("verify_after_diff: D <= 6");
  // tail coefficients carry harmonic-number factors: up to ln^{D-2} at total
  // degree D (two powers are consumed by the mandatory b and c factors)
  const unsigned m1 = D >= 2 ? D - 2 : 0, m2 = 1;
  std::vector<long> Ns = geometric_points(125, m1 + m2 + 3);

  NS shape(3, D, BigReal(1));  // (a, b, c)
  NS a = shape.variable(0), b = shape.variable(1), c = shape.variable(2);
  NS Xab = a - b, Xac = a - c;

  NS P = shape.constant(BigReal(1));  // (b)_n (c)_n / ((1+a-b)_n (1+a-c)_n)
  NS sum = shape.shape_like();
  std::vector<NS> snaps;
  size_t next = 0;
  for (long n = 1; n <= Ns.back(); ++n) {
    P = P * BigReal(n - 1) + P * b;
    P = P * BigReal(n - 1) + P * c;
    P = div_shift(P, n, Xab);
    P = div_shift(P, n, Xac);
    NS term = P * BigReal(2 * n) + P * a;  // (2n + a) P
    term = term * BigReal(Rat(1, n));
    term = div_shift(term, n, a);
    sum += term;
    if (n == Ns[next]) {
      snaps.push_back(sum);
      ++next;
    }
  }
  NS lhs = extrapolate_series(Ns, snaps, 3, m1, m2);

  NS rhs = psi1_series(a * BigReal(-1)) + psi1_series(b + c - a) - psi1_series(b - a) -
           psi1_series(c - a);
  return compare_series(lhs, rhs, tol);
}

CheckResult verify_gauss_to_psi(unsigned D, const BigReal& tol) {
  if (D > 6) throw std::invalid_argument("verify_gauss_to_psi: D <= 6");
  // the a-expansion of (a)_n brings in ln^{D} factors at the top degree
  const unsigned m1 = D, m2 = 2;
  std::vector<long> Ns = geometric_points(100, m1 + m2 + 3);

  NS shape(2, D + 1, BigReal(1));  // (a, g) with c = 1 + g
  NS a = shape.variable(0), g = shape.variable(1);

  // a * LHS = sum_n (a)_n / (n (1+g)_n); every monomial carries a factor a
  NS Q = shape.constant(BigReal(1));  // (a)_n / (1+g)_n
  NS sum = shape.shape_like();
  std::vector<NS> snaps;
  size_t next = 0;
  for (long n = 1; n <= Ns.back(); ++n) {
    Q = Q * BigReal(n - 1) + Q * a;
    Q = div_shift(Q, n, g);
    sum += Q * BigReal(Rat(1, n));
    if (n == Ns[next]) {
      snaps.push_back(sum);
      ++next;
    }
  }
  NS lhsA = extrapolate_series(Ns, snaps, 2, m1, m2);
  NS rhsA = psi1_series(a - g) - psi1_series(g * BigReal(-1));

  // exact divisibility by a on the closed side; extrapolation noise on the
  // summed side is checked against the tolerance before being dropped
  NS lhs = shape.shape_like(), rhs = shape.shape_like();
  BigReal noise = 0;
  for (const auto& [k, v] : rhsA.terms())
    if (k[0] == 0) throw std::logic_error("verify_gauss_to_psi: right side not divisible by a");
  for (const auto& [k, v] : lhsA.terms()) {
    if (k[0] == 0) {
      noise = std::max(noise, abs(v));
      continue;
    }
    Key nk = k;
    --nk[0];
    lhs.add(nk, v);
  }
  for (const auto& [k, v] : rhsA.terms()) {
    Key nk = k;
    --nk[0];
    rhs.add(nk, v);
  }
  CheckResult res = compare_series(lhs, rhs, tol);
  res.err = std::max(res.err, noise);
  res.pass = res.err < tol;
  return res;
}

CheckResult chu_vandermonde_exact(const Rat& a, const Rat& b, unsigned N) {
  std::vector<Rat> upper = {Rat(-(long)N), a};
  std::vector<Rat> lower = {1 - b};
  Rat lhs = pFq_partial(upper, lower, Rat(1), N + 1, Rat(1));
  Rat rhs = rat_pochhammer(1 - b - a, N) / rat_pochhammer(1 - b, N);
  CheckResult res;
  res.pass = (lhs == rhs);
  res.err = abs(BigReal(lhs - rhs));
  res.detail = "exact over Q";
  return res;
}

PrintedChuCheck chu_vandermonde_printed(const Rat& a, const Rat& b, unsigned N) {
  PrintedChuCheck out;
  Rat term = 1;  // (a)_n (-N)_n / ((1-b)_n n!) at n, starting from n=0
  out.lhs = 0;
  for (unsigned n = 1; n <= N; ++n) {
    term *= (a + (n - 1)) * (Rat(-(long)N) + (n - 1));
    term /= (1 - b + (n - 1)) * n;
    out.lhs += term / n;
  }
  out.rhs = rat_pochhammer(1 - a - b, N) / rat_pochhammer(1 - a, N);
  out.equal = (out.lhs == out.rhs);
  return out;
}

}  // namespace mzvlab
