#pragma once

#include "mzvlab/hyper.hpp"

#include <cstdint>
#include <map>

namespace mzvlab {

// Ascending finite window of primes standing in for "all sufficiently large
// p": a congruence identity is accepted when it holds at every window prime
// above the identity's own lower bound.
struct PrimeWindow {
  std::vector<std::uint64_t> primes;

  PrimeWindow() = default;
  PrimeWindow(std::uint64_t lo, std::uint64_t hi);

  PrimeWindow above(std::uint64_t bound) const;  // keep only p > bound
  bool empty() const { return primes.empty(); }
};

// A finite-zeta style value over a window: one residue per prime. Equality is
// per-prime equality on the common window.
struct AValue {
  std::map<std::uint64_t, Residue> per_prime;
  friend bool operator==(const AValue&, const AValue&) = default;
};

// Interpolated truncated sum zeta^t_{<=p-1}(k) mod p, exact dynamic
// programming in Z/pZ (O(dep * p) ring operations). Requires prime p with
// p > wt(k) + 2.
Residue mhs_mod_p(const Index& k, const Residue& t, std::uint64_t p);

// Non-strict (star) variant zeta*_{<=p-1}(k) mod p: the t = 1 interpolation.
Residue mhs_star_mod_p(const Index& k, std::uint64_t p);

// Finite interpolated value over a window, computed per prime as the
// contraction sum  sum_{l <= k} zeta_{<=p-1}(l) t^{collapsed}  (independent
// of the direct interpolated recursion, which the tests compare against).
// Requires every window prime > wt(k) + 2 and t's denominator prime to it.
AValue zeta_A_t(const Index& k, const Rat& t, const PrimeWindow& window);

// Series lemma over Z/p^2: (1+a)_{p-1}/(p-1)! = 1 - p sum zfrak_p(n+1) a^n
// and its reciprocal with the opposite sign, coefficientwise to degree D,
// plus the mod-p collapse of both sides to 1. The quoted sum drops a
// (-1)^{n+1} factor, harmless below n = p-2 where zfrak_p vanishes at even
// arguments, but at n = p-2 the surviving B_1 makes the exact coefficient
// +p*zfrak_p(p-1) = p/2; we compare against that exact form. Requires
// p >= 5 and D <= p-2.
CheckResult verify_zc(std::uint64_t p, unsigned D);

// The mod-p 5F4 analogue, as series in a, b, c over Z/pZ to total degree D:
//   (a-b)(a-c) * sum_{n=1}^{p-1} (2n+a)/(n(n+a)) (b)_n(c)_n/((1+a-b)_n(1+a-c)_n)
//   = (a-b-c)psi(a) + a psi(a-b-c) + b psi(c) + c psi(b)
//     - (c-a)psi(b-a) - (b-a)psi(c-a),
// with psi(x) = sum_{m>=2} zfrak_p(m) x^m. Also asserts b <-> c symmetry of
// both sides. Requires p >= 11 and D <= 6.
CheckResult verify_dougall_A(std::uint64_t p, unsigned D);

// The weighted anti-hook generating function mod p against its psi form, in
// A, B, W to total degree D after clearing all four (1 -+ A/2)(1 -+ B/2)
// denominator factors (the quoted statement's prefactor and the signs of its
// last two psi terms do not survive the substitution that produces the
// closed form; see the implementation note for the form verified here). The
// left side is the closed Pochhammer-ratio sum
//   sum_{n=1}^{p-1} W^3(n-W)/(n(n-2W))
//     * (1-(1-A/2)W)_{n-1}/(1-(1+A/2)W)_n * (same in B).
// Also confirms the companion reduction step: the Pochhammer ratio
// (1-(1-B/2)W)_{p-1}/(1-(1+B/2)W)_{p-1} is = 1 mod p below degree p-1.
// Requires p >= 11 and D <= 8, D < p - 2.
CheckResult verify_G_to_psi(std::uint64_t p, unsigned D);

// Exact identity over Q[A,B][[W]] at truncation level N, degree cap D:
// the flattened weighted generating function F^{1/2}_{wtd,<=N}(A,B,W) equals
// the anti-hook one G^{1/2}_{wtd,<=N}(A,-B,W) times the Pochhammer ratio
// above; both generating functions are built from their definitions, and the
// closed Pochhammer-ratio form of G is checked against the definition too.
CheckResult verify_gf_fin(long N, unsigned D);

// Chu-Vandermonde mod-p consequence, as series in a, b over Z/pZ:
//   b * sum_{n=1}^{p-1} (a)_n/(n(1-b)_n) = psi(a+b) - psi(a) - psi(b).
// Requires p >= 11 and D <= p-2.
CheckResult verify_gen_A(std::uint64_t p, unsigned D);

// Weighted sum formula for the finite 1/2-interpolated values, per window
// prime: sum over wt k, dep r, k_i >= 2 of (2^{k_i-2}-1) zeta^{1/2}_{<=p-1}(k)
// against its stated rational multiple of zfrak_p(k); for i = r the
// 2^{k_r}-weighted variant is checked as well. Requires 1 <= i <= r < k and
// window primes > k + 2.
CheckResult verify_wtdSF2_A(unsigned i, unsigned r, unsigned k, const PrimeWindow& window);

// Exact and mod-p^2 comparison of zeta*_{<=p-1}({1}^n) with
// (-1)^n zeta_{<=p-1}({1}^n): the quoted intermediate step of the series
// lemma. Fails exactly for every n >= 1 and mod p^2 from n = 2 on, while the
// lemma's conclusion still holds; reported, not corrected.
struct OnesStarCheck {
  Rat star;   // zeta*_{<=p-1}({1}^n)
  Rat plain;  // zeta_{<=p-1}({1}^n)
  bool equal_exact = false;
  bool equal_mod_p2 = false;
};
OnesStarCheck check_ones_star(std::uint64_t p, unsigned n);

}  // namespace mzvlab
