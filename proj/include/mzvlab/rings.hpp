#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzvlab {

namespace bmp = boost::multiprecision;

using Int = bmp::mpz_int;
using Rat = bmp::mpq_rational;
using BigReal = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

// Working precision in decimal digits. Guard digits are added on top so that
// 1e-30 comparisons at the default 50-digit setting stay meaningful.
void set_precision_digits(unsigned digits);
unsigned precision_digits();

BigReal big_pi();

struct BigComplex {
  BigReal re{0};
  BigReal im{0};

  BigComplex() = default;
  BigComplex(BigReal r) : re(std::move(r)) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(int n) : re(n) {}

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o) {
    BigReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline BigReal abs2(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigReal cabs(const BigComplex& z) { return sqrt(abs2(z)); }

// --- prime residues ----------------------------------------------------------

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Element of Z/pZ, p prime. Division is defined for nonzero elements only.
// A default-constructed value is the zero of an as-yet-unknown modulus; it
// adopts the modulus of the first nontrivial operand it meets, which lets the
// generic polynomial/series containers use R{} as additive identity.
class Residue {
 public:
  Residue() = default;
  Residue(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r);
  }
  static Residue from_rat(const Rat& q, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Residue& operator+=(const Residue& o) {
    if (!merge(o)) return *this;
    v_ += o.v_; if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    if (!merge(o)) return *this;
    v_ += p_ - o.v_; if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    if (!merge(o)) { v_ = 0; return *this; }
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator-(const Residue& a) {
    if (a.p_ == 0) return a;
    return Residue(0, a.p_) - a;
  }
  friend bool operator==(const Residue& a, const Residue& b) {
    if (a.p_ == 0 || b.p_ == 0) return a.v_ == 0 && b.v_ == 0;
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

  Residue inv() const;
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inv(); }

 private:
  // returns false when the other operand is the universal zero
  bool merge(const Residue& o) {
    if (o.p_ == 0) return false;
    if (p_ == 0) p_ = o.p_;
    else if (p_ != o.p_) throw std::invalid_argument("Residue: modulus mismatch");
    return true;
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// Element of Z/p^2 Z. Division requires the divisor to be a unit (coprime to
// p); anything else is an error, never a silent wraparound.
class Residue2 {
 public:
  Residue2() = default;
  Residue2(const Int& v, std::uint64_t p) : p_(p) {
    Int m = Int(p) * p;
    Int r = v % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }
  static Residue2 from_rat(const Rat& q, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }
  Residue project() const { return Residue(static_cast<std::int64_t>(v_ % p_), p_); }

  Residue2& operator+=(const Residue2& o) {
    if (!merge(o)) return *this;
    v_ = (v_ + o.v_) % mod();
    return *this;
  }
  Residue2& operator-=(const Residue2& o) {
    if (!merge(o)) return *this;
    v_ = (v_ + mod() - o.v_) % mod();
    return *this;
  }
  Residue2& operator*=(const Residue2& o) {
    if (!merge(o)) { v_ = 0; return *this; }
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % mod());
    return *this;
  }
  friend Residue2 operator+(Residue2 a, const Residue2& b) { return a += b; }
  friend Residue2 operator-(Residue2 a, const Residue2& b) { return a -= b; }
  friend Residue2 operator*(Residue2 a, const Residue2& b) { return a *= b; }
  friend Residue2 operator-(const Residue2& a) {
    if (a.p_ == 0) return a;
    Residue2 z(0, a.p_);
    return z - a;
  }
  friend bool operator==(const Residue2& a, const Residue2& b) {
    if (a.p_ == 0 || b.p_ == 0) return a.v_ == 0 && b.v_ == 0;
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

  Residue2 inv() const;
  friend Residue2 operator/(const Residue2& a, const Residue2& b) { return a * b.inv(); }

 private:
  std::uint64_t mod() const { return p_ * p_; }
  bool merge(const Residue2& o) {
    if (o.p_ == 0) return false;
    if (p_ == 0) p_ = o.p_;
    else if (p_ != o.p_) throw std::invalid_argument("Residue2: modulus mismatch");
    return true;
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// --- Bernoulli numbers and binomials ----------------------------------------

// B_n for te^t/(e^t-1); B_1 = -1/2. Cached.
const Rat& bernoulli_exact(unsigned n);

// Table of B_0..B_max computed entirely inside Z/pZ. Requires max <= p-2.
std::vector<Residue> bernoulli_mod_p(std::uint64_t p, unsigned max);

// zfrak_p(k) = (B_{p-k}/k) mod p. Requires p >= 5 prime and 2 <= k <= p-2,
// which keeps B_{p-k} p-integral (von Staudt-Clausen) and inside the mod-p
// recurrence's range.
Residue zfrak_p(unsigned k, std::uint64_t p);

Int binomial(unsigned n, unsigned k);
Rat rat_binomial(const Rat& x, unsigned k);  // x(x-1)...(x-k+1)/k!
Int factorial(unsigned n);

}  // namespace mzvlab
