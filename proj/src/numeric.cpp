#include "mzvlab/numeric.hpp"

#include "mzvlab/words.hpp"

#include <map>

namespace mzvlab {

namespace {

BigReal inv_pow(long n, unsigned k) {
  BigReal r = BigReal(1) / n;
  BigReal acc = r;
  for (unsigned j = 1; j < k; ++j) acc *= r;
  return acc;
}

// blocks (exponents) of an iterated-integral word 0^{s_1}1 ... 0^{s_q}1,
// stored as c_i = s_i + 1
std::vector<unsigned> blocks_of(const std::vector<std::uint8_t>& w) {
  std::vector<unsigned> c;
  unsigned run = 0;
  for (std::uint8_t u : w) {
    if (u == 0) {
      ++run;
    } else {
      c.push_back(run + 1);
      run = 0;
    }
  }
  if (run != 0) throw std::invalid_argument("iterated_half: word must end with 1");
  return c;
}

long half_terms() {
  // 2^-N < 10^-(digits+guard), plus slack for the polynomial factor
  return static_cast<long>(3.33 * BigReal::default_precision()) + 40;
}

}  // namespace

BigReal iterated_half(const std::vector<std::uint8_t>& word) {
  if (word.empty()) return 1;
  auto c = blocks_of(word);
  long N = half_terms();
  size_t q = c.size();
  // chains n_1 > ... > n_q; F_i(n) = 1/n^{c_i} * sum_{m<n} F_{i+1}(m)
  std::vector<BigReal> F(static_cast<size_t>(N) + 1);
  for (size_t i = q; i-- > 0;) {
    std::vector<BigReal> next(static_cast<size_t>(N) + 1);
    BigReal below = 0;
    for (long n = 1; n <= N; ++n) {
      if (i + 1 < q) below += F[n - 1];
      next[n] = (i + 1 == q ? BigReal(1) : below) * inv_pow(n, c[i]);
    }
    F = std::move(next);
  }
  BigReal half = BigReal(1) / 2, pw = 1, acc = 0;
  for (long n = 1; n <= N; ++n) {
    pw *= half;
    acc += pw * F[n];
  }
  return acc;
}

BigReal mzv(const Index& k) {
  if (!k.admissible() && !k.empty()) throw std::invalid_argument("mzv: index not admissible");
  if (k.empty()) return 1;
  static std::map<Index, BigReal> cache;
  static unsigned cache_prec = 0;
  if (cache_prec != BigReal::default_precision()) {
    cache.clear();
    cache_prec = BigReal::default_precision();
  }
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  // Hoelder convolution: zeta(k) = It(a;1) with a = reverse of the word of k,
  // and It(a;1) = sum_j It(1-a_j,...,1-a_1; 1/2) * It(a_{j+1},...,a_n; 1/2)
  auto w = word_of_index(k).letters();
  std::vector<std::uint8_t> a(w.rbegin(), w.rend());
  size_t n = a.size();
  BigReal acc = 0;
  for (size_t j = 0; j <= n; ++j) {
    std::vector<std::uint8_t> left;
    for (size_t i = j; i-- > 0;) left.push_back(1 - a[i]);
    std::vector<std::uint8_t> right(a.begin() + j, a.end());
    acc += iterated_half(left) * iterated_half(right);
  }
  cache.emplace(k, acc);
  return acc;
}

BigReal zeta(unsigned k) { return mzv(Index{k}); }

OracleResult mzv_oracle(const Index& k, long N) {
  if (!k.admissible()) throw std::invalid_argument("mzv_oracle: index not admissible");
  OracleResult res;
  res.value = strict_mhs(k, N, BigReal(1));
  // tail <= sum_{n>N} (1+ln n)^{r-1} / n^{k_r}, bounded by one term plus the
  // integral I(m,kr,N), with I(m,k,N) = (1+lnN)^m N^{1-k}/(k-1) + m/(k-1)*I(m-1,k,N)
  unsigned m = static_cast<unsigned>(k.depth()) - 1;
  unsigned kr = k[k.depth() - 1];
  BigReal lnN1 = 1 + log(BigReal(N));
  BigReal integral = 0;
  BigReal coef = 1;
  // unrolled recursion: I(m) = sum_{j=0..m} [m!/(m-j)!] (1+lnN)^{m-j} N^{1-k} / (k-1)^{j+1}
  BigReal powln = 1;
  for (unsigned j = 0; j < m; ++j) powln *= lnN1;  // (1+lnN)^m
  BigReal Npow = pow(BigReal(N), 1 - static_cast<int>(kr));
  BigReal term = powln * Npow / (kr - 1);
  for (unsigned j = 0;; ++j) {
    integral += coef * term;
    if (j == m) break;
    coef *= BigReal(m - j) / (kr - 1);
    term /= lnN1;
  }
  BigReal first = 1;
  for (unsigned i = 0; i < m; ++i) first *= 1 + log(BigReal(N + 1));
  first *= inv_pow(N + 1, kr);
  res.bound = first + integral;
  return res;
}

BigReal zeta_t(const Index& k, const Rat& t) {
  if (!k.admissible() && !k.empty()) throw std::invalid_argument("zeta_t: index not admissible");
  BigReal acc = 0;
  for (const auto& [l, collapsed] : contractions(k)) {
    Rat tp = 1;
    for (unsigned j = 0; j < collapsed; ++j) tp *= t;
    acc += mzv(l) * BigReal(tp);
  }
  return acc;
}

std::vector<BigReal> psi1_coefficients(unsigned max_k) {
  if (max_k < 2) throw std::invalid_argument("psi1_coefficients: max_k >= 2");
  std::vector<BigReal> out;
  for (unsigned k = 2; k <= max_k; ++k) out.push_back(zeta(k));
  return out;
}

namespace {

// Solve the square system M x = b in place (partial pivoting).
std::vector<BigReal> solve_linear(std::vector<std::vector<BigReal>> M, std::vector<BigReal> b) {
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

}  // namespace

BigReal tail_extrapolate(const std::vector<long>& Ns, const std::vector<BigReal>& Ss, unsigned a,
                         unsigned m) {
  size_t n = m + 3;  // unknowns: S, c_0..c_m, d
  std::vector<std::vector<BigReal>> M(n, std::vector<BigReal>(n));
  std::vector<BigReal> b(n);
  for (size_t r = 0; r < n; ++r) {
    BigReal Np = pow(BigReal(Ns[r]), 1 - static_cast<int>(a));
    BigReal lg = log(BigReal(Ns[r]));
    M[r][0] = 1;
    BigReal f = Np;
    for (size_t j = 0; j <= m; ++j) {
      M[r][j + 1] = f;
      f *= lg;
    }
    M[r][m + 2] = Np / Ns[r];
    b[r] = Ss[r];
  }
  return solve_linear(std::move(M), std::move(b))[0];
}

AntihookResult antihook(const Index& k, const Index& l, unsigned a, const Rat& t, long N) {
  if (a < 2) throw std::invalid_argument("antihook: a must be >= 2 (divergent otherwise)");
  BigReal tb(t);
  unsigned m = std::min<unsigned>(static_cast<unsigned>(k.depth() + l.depth()), 3);
  std::vector<long> Ns;
  std::vector<BigReal> Ss;
  for (unsigned i = 0; i <= m + 2; ++i) {
    long Ni = N << i;
    Ns.push_back(Ni);
    Ss.push_back(antihook_leqN(k, l, a, Ni, tb, BigReal(1)));
  }
  AntihookResult res;
  res.value = tail_extrapolate(Ns, Ss, a, m);
  if (m > 0) {
    // drop one log power, fit on the top points; disagreement estimates the
    // model error
    std::vector<long> Ns2(Ns.end() - (m + 2), Ns.end());
    std::vector<BigReal> Ss2(Ss.end() - (m + 2), Ss.end());
    res.error = abs(res.value - tail_extrapolate(Ns2, Ss2, a, m - 1));
  } else {
    // compare against the plain Richardson value on the top points
    BigReal d = Ss[Ss.size() - 1] - Ss[Ss.size() - 2];
    res.error = abs(d) / ((1 << (a - 1)) - 1) / 4 + abs(res.value - Ss.back()) / 256;
  }
  return res;
}

}  // namespace mzvlab
