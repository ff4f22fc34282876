#pragma once

#include "mzvlab/fmzv.hpp"
#include "mzvlab/rsmzv.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mzvlab {

// Configuration shared by every suite run. Zero / empty fields mean "use the
// suite's default"; the effective values are echoed into the report.
struct SuiteConfig {
  unsigned precision = 50;            // working decimal digits
  unsigned max_weight = 0;            // sweep bound on wt(k)
  std::uint64_t prime_lo = 0, prime_hi = 0;
  unsigned degree = 0;                // series truncation degree
  std::vector<Rat> t_values;          // interpolation samples
};

// One verified instance. lhs/rhs/discrepancy are textual renderings: decimal
// strings at working precision, exact rationals as "p/q", residues as
// "v mod p", or "exact" for identities over Q, Z/p, Z/p^2.
struct SuiteItem {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs, rhs, discrepancy;
  std::string status;  // PASS | FAIL | ERRATUM-CANDIDATE | SKIPPED
  std::string detail;
};

struct Report {
  std::string version;
  SuiteConfig config;
  std::vector<SuiteItem> results;

  bool all_pass() const;        // no FAIL status
  size_t erratum_count() const;
  std::string to_json() const;  // {version, config:{...}, results:[...]}
  std::string to_csv() const;
};

// Registered suite names, in the order list-suites prints them.
std::vector<std::string> suite_names();

// Runs every parameter instance of the named suite. Throws on unknown names.
// Results are emitted in a deterministic order for a fixed configuration.
Report run_suite(const std::string& name, const SuiteConfig& config);

// --- individual verifiers used by the suites --------------------------------

// 2^{k_r}-weighted sum formula for the 1/2-interpolated MZVs:
//   sum_{I_r(k,r)} 2^{k_r} zeta^{1/2}(k)
//   = (1/2^{r-2}) {2^{k-1} - 1 + sum_{n<r} C(k-1,n)} zeta(k).
// Requires 1 <= r < k.
CheckResult verify_wtdSF1(unsigned r, unsigned k, const BigReal& tol);

// Weighted sum formula for the 1/2-interpolated symmetric values, verified as
// the EXACT unreduced real identity: the A^{i-1} B^{r-i} W^k coefficient of
//   G(A,-B,W) Phi_B + G(B,-A,-W) Phi_A
// against sum_{I_i(k,r)} (2^{k_i-2}-1) zeta^{1/2,*}_S(k), where G is the
// weighted anti-hook generating function in its four-psi_1 closed form and
// Phi_x = sinc(pi(1-x/2)W)/sinc(pi(1+x/2)W) is the explicit correction whose
// pi^2-content carries the mod-zeta(2) reduction. Numeric membership of the
// correction in zeta(2)Z is a statement about a dense subgroup of R and is
// not decidable by evaluation; the unreduced identity is the checkable form.
// Requires 1 <= i <= r < k <= 7.
CheckResult verify_wtdSF2_S_unreduced(unsigned i, unsigned r, unsigned k, const BigReal& tol);

// Closed Pochhammer-ratio sum for the weighted anti-hook generating function
// against the four-psi_1 combination, coefficientwise to W-degree D
// (tail-extrapolated partial sums). Requires D <= 7.
CheckResult verify_prop_dougall_gen(const BigReal& tol, unsigned D);

// Desk-scale runs of the closing-remark sum formulas. Selectors:
//   "t-MZV-sum"              sum_{I_r(k,r)} zeta^t = binomial form * zeta(k)
//   "FMZV-i-adm"             per-prime exact, via the psi_A closed form
//   "t-FMZV-r-adm"           per-prime exact, via the psi_A closed form
//   "SMZV-i-adm-unreduced"   unreduced identity at t = 0
//   "t-SMZV-r-adm-unreduced" unreduced identity at the given t, i = r
//   "antihook-sum"           numeric anti-hook sums vs the Pochhammer
//                            generating-function coefficient
// i is ignored by the r-admissible selectors; window by the numeric ones.
CheckResult verify_remark_sum_formulas(const std::string& selector, unsigned i, unsigned r,
                                       unsigned k, const Rat& t, const PrimeWindow& window,
                                       const BigReal& tol);

}  // namespace mzvlab
