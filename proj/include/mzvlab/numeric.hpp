#pragma once

#include "mzvlab/indices.hpp"
#include "mzvlab/poly.hpp"

namespace mzvlab {

struct OracleResult {
  BigReal value;
  BigReal bound;  // rigorous tail bound
};

// Strict truncated sum with an integral tail bound; slow but independent of
// the fast evaluator. Cross-check only.
OracleResult mzv_oracle(const Index& k, long N);

// Full-precision MZV via the Hoelder convolution at 1/2 (geometric
// convergence). Cached per precision.
BigReal mzv(const Index& k);
BigReal zeta(unsigned k);

// Multiple polylogarithm value It(word; 1/2) for an iterated-integral word
// ending in the letter 1 (blocks 0^{s}1). Exposed for tests.
BigReal iterated_half(const std::vector<std::uint8_t>& word);

// Interpolated value as a contraction sum with exact t-powers.
BigReal zeta_t(const Index& k, const Rat& t);

// [zeta(2), ..., zeta(max_k)]
std::vector<BigReal> psi1_coefficients(unsigned max_k);

struct AntihookResult {
  BigReal value;
  BigReal error;  // heuristic extrapolation error estimate
};

// Numeric limit of the anti-hook sum: truncations at N, 2N, 4N with a fitted
// power-law extrapolation.
AntihookResult antihook(const Index& k, const Index& l, unsigned a, const Rat& t, long N = 20000);

// Extrapolate S(infinity) from partial sums at the (geometric) points Ns,
// fitting S(N) = S + N^{1-a} (c_0 + c_1 ln N + ... + c_m ln^m N) + d N^{-a}.
// Requires Ns.size() == m + 3.
BigReal tail_extrapolate(const std::vector<long>& Ns, const std::vector<BigReal>& Ss, unsigned a,
                         unsigned m);

}  // namespace mzvlab
