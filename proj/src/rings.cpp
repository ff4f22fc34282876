#include "mzvlab/rings.hpp"

#include <mutex>

namespace mzvlab {

namespace {
unsigned g_digits = 50;
constexpr unsigned kGuardDigits = 15;
}  // namespace

void set_precision_digits(unsigned digits) {
  if (digits < 15) throw std::invalid_argument("precision must be >= 15 digits");
  g_digits = digits;
  BigReal::default_precision(digits + kGuardDigits);
}

unsigned precision_digits() { return g_digits; }

BigReal big_pi() {
  static thread_local BigReal pi = 0;
  static thread_local unsigned pi_prec = 0;
  if (pi_prec != BigReal::default_precision()) {
    pi = atan(BigReal(1)) * 4;
    pi_prec = BigReal::default_precision();
  }
  return pi;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

Residue Residue::from_rat(const Rat& q, std::uint64_t p) {
  Int num = numerator(q) % Int(p);
  Int den = denominator(q) % Int(p);
  if (den == 0) throw std::domain_error("from_rat: denominator divisible by p");
  Residue n(static_cast<std::int64_t>(num), p);
  Residue d(static_cast<std::int64_t>(den), p);
  return n / d;
}

Residue Residue::inv() const {
  if (v_ == 0) throw std::domain_error("Residue: division by zero");
  // extended Euclid
  std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
  std::int64_t x0 = 0, x1 = 1, b = m;
  while (a > 1) {
    std::int64_t q = a / b;
    std::int64_t t = b; b = a % b; a = t;
    t = x0; x0 = x1 - q * x0; x1 = t;
  }
  return Residue(x1, p_);
}

Residue2 Residue2::from_rat(const Rat& q, std::uint64_t p) {
  Int m = Int(p) * p;
  Int num = numerator(q) % m;
  Int den = denominator(q) % m;
  Residue2 n(num, p), d(den, p);
  return n / d;
}

Residue2 Residue2::inv() const {
  if (p_ == 0 || v_ % p_ == 0) throw std::domain_error("Residue2: divisor not coprime to p");
  // lift the mod-p inverse with one Hensel step
  Residue r = project().inv();
  unsigned __int128 x = r.value();
  unsigned __int128 m = mod();
  unsigned __int128 vx = (static_cast<unsigned __int128>(v_) * x) % m;
  unsigned __int128 corr = (2 + m - vx) % m;
  return Residue2(Int(static_cast<std::uint64_t>((x * corr) % m)), p_);
}

const Rat& bernoulli_exact(unsigned n) {
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{m} C(m+1,j) B_j = 0
    Rat s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
    cache.push_back(-s / Rat(m + 1));
  }
  return cache[n];
}

std::vector<Residue> bernoulli_mod_p(std::uint64_t p, unsigned max) {
  if (max > p - 2) throw std::invalid_argument("bernoulli_mod_p: index too close to p");
  std::vector<Residue> b{Residue(1, p)};
  // binomial row maintained incrementally would be overkill here; p <= ~1000
  for (unsigned m = 1; m <= max; ++m) {
    Residue s(0, p);
    Residue c(1, p);  // C(m+1, j), j = 0
    for (unsigned j = 0; j < m; ++j) {
      s += c * b[j];
      c = c * Residue(static_cast<std::int64_t>(m + 1 - j), p) / Residue(static_cast<std::int64_t>(j + 1), p);
    }
    b.push_back(-s / Residue(static_cast<std::int64_t>(m + 1), p));
  }
  return b;
}

Residue zfrak_p(unsigned k, std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("zfrak_p: p must be a prime >= 5");
  if (k < 2 || k + 2 > p) throw std::invalid_argument("zfrak_p: requires 2 <= k <= p-2");
  auto tab = bernoulli_mod_p(p, static_cast<unsigned>(p - k));
  return tab[static_cast<unsigned>(p - k)] / Residue(static_cast<std::int64_t>(k), p);
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned j = 0; j < k; ++j) {
    r *= Int(n - j);
    r /= Int(j + 1);
  }
  return r;
}

Rat rat_binomial(const Rat& x, unsigned k) {
  Rat r = 1;
  for (unsigned j = 0; j < k; ++j) r *= (x - Rat(j)) / Rat(j + 1);
  return r;
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned j = 2; j <= n; ++j) r *= j;
  return r;
}

}  // namespace mzvlab
