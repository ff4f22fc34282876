#pragma once

#include "mzvlab/series.hpp"

#include <string>
#include <vector>

namespace mzvlab {

// Outcome of a single identity verification.
struct CheckResult {
  bool pass = false;
  BigReal err;         // worst discrepancy observed
  std::string detail;  // short human-readable note ("exact", coefficient, ...)
};

// Partial sum of {r+1}F{r}(upper; lower; x): sum_{n=0}^{N} prod (a_i)_n /
// (prod (b_j)_n n!) x^n, over any coefficient ring. Stops early when a
// numerator Pochhammer hits zero (terminating series); throws if a
// denominator Pochhammer vanishes first.
template <class R>
R pFq_partial(const std::vector<R>& upper, const std::vector<R>& lower, const R& x, long N,
              const R& one) {
  R term = one;
  R acc = one;
  for (long n = 0; n < N; ++n) {
    for (const R& a : upper) term = term * (a + with_proto(one, Rat(n)));
    if (is_zero(term)) break;
    for (const R& b : lower) {
      R f = b + with_proto(one, Rat(n));
      if (is_zero(f)) throw std::invalid_argument("pFq_partial: lower Pochhammer vanishes");
      term = term * ring_inv(f);
    }
    term = term * x * with_proto(one, Rat(1, n + 1));
    acc += term;
  }
  return acc;
}

// (x)_n over Q.
Rat rat_pochhammer(const Rat& x, unsigned n);

// log Gamma(1+x) with the Euler-Mascheroni term dropped:
//   sum_{k>=2} (-1)^k zeta(k) x^k / k,  |x| < 1.
// Legitimate wherever the gamma-terms cancel between numerator and
// denominator (equal argument sums).
BigReal loggamma1p_reduced(const BigReal& x);
TruncSeries<BigReal> loggamma1p_reduced(const TruncSeries<BigReal>& x);

// psi_1(X) = sum_{k>=2} zeta(k) X^{k-1} for a series argument with zero
// constant term (exact through the truncation cap).
TruncSeries<BigReal> psi1_series(const TruncSeries<BigReal>& x);

// 5F4 two-balanced identity at x=1: the partial sum (tail-extrapolated, or
// exact when d is a non-positive integer) against the Gamma-ratio evaluated
// through loggamma1p_reduced. Asserts the argument-sum cancellation first.
CheckResult verify_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, long N,
                           const BigReal& tol);

// d-derivative of the identity at d=0, as a power-series identity in a,b,c:
//   sum_{n>=1} (2n+a)/(n(n+a)) (b)_n(c)_n/((1+a-b)_n(1+a-c)_n)
//     = -psi1(b-a) - psi1(c-a) + psi1(-a) + psi1(b+c-a),
// coefficientwise to total degree D.
CheckResult verify_after_diff(unsigned D, const BigReal& tol);

// b-derivative of the Gauss 2F1 summation at b=a, c=1+g:
//   a * sum_{n>=1} 1/(n(n+a)) (1+a)_n/(c)_n = sum_n (a)_n/(n (c)_n)
//     = psi1(a-g) - psi1(-g),
// verified coefficientwise to total degree D+1, then divided exactly by a
// (after checking divisibility) and compared to degree D.
CheckResult verify_gauss_to_psi(unsigned D, const BigReal& tol);

// Terminating Chu-Vandermonde, standard form:
//   sum_{n=0}^{N} (-N)_n (a)_n / ((1-b)_n n!) = (1-b-a)_N / (1-b)_N,
// exact over Q.
CheckResult chu_vandermonde_exact(const Rat& a, const Rat& b, unsigned N);

// The variant finite display sometimes quoted alongside it:
//   sum_{n=1}^{N} (a)_n (-N)_n / (n (1-b)_n n!)  vs  (1-a-b)_N / (1-a)_N.
// Returned as raw values so callers can report the (in)equality; it fails
// already at a=b=0 (left side 0, right side 1).
struct PrintedChuCheck {
  Rat lhs, rhs;
  bool equal = false;
};
PrintedChuCheck chu_vandermonde_printed(const Rat& a, const Rat& b, unsigned N);

}  // namespace mzvlab
