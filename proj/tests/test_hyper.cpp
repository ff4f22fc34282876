#include "doctest.h"

#include "mzvlab/hyper.hpp"
#include "mzvlab/numeric.hpp"

#include <random>

using namespace mzvlab;

namespace {

// strictly non-integral positive rationals (odd numerator over even
// denominator), so shifted Pochhammer denominators never vanish
Rat random_small_rat(std::mt19937& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(0, max_num), den(1, max_den);
  return Rat(2 * num(rng) + 1, 2 * den(rng));
}

}  // namespace

TEST_CASE("pFq partial sums") {
  // 2F1(-2, b; c; 1) terminates after three terms
  Rat b(1, 2), c(1, 3);
  Rat got = pFq_partial<Rat>({Rat(-2), b}, {c}, Rat(1), 100, Rat(1));
  Rat expect = 1 + Rat(-2) * b / c + rat_pochhammer(Rat(-2), 2) * rat_pochhammer(b, 2) /
                                         (rat_pochhammer(c, 2) * 2);
  CHECK(got == expect);
  // zero upper parameter kills everything past n=0
  CHECK(pFq_partial<Rat>({Rat(0), Rat(5)}, {Rat(7)}, Rat(1), 50, Rat(1)) == Rat(1));
  // lower Pochhammer hitting zero before termination is an error
  CHECK_THROWS(pFq_partial<Rat>({Rat(1), Rat(1)}, {Rat(-3)}, Rat(1), 10, Rat(1)));
}

TEST_CASE("reduced log-gamma") {
  set_precision_digits(40);
  CHECK(loggamma1p_reduced(BigReal(0)) == 0);
  // gamma cancels in Gamma(1+x)Gamma(1-x) = pi x / sin(pi x)
  BigReal x(Rat(1, 4));
  BigReal lhs = exp(loggamma1p_reduced(x) + loggamma1p_reduced(-x));
  BigReal pi = big_pi();
  CHECK(abs(lhs - (pi * x) / sin(pi * x)) < BigReal("1e-35"));
  CHECK_THROWS(loggamma1p_reduced(BigReal(1)));

  TruncSeries<BigReal> s(1, 4, BigReal(1));
  auto lg = loggamma1p_reduced(s.variable(0));
  CHECK(abs(lg.coeff({2}) - zeta(2) / 2) < BigReal("1e-35"));
  CHECK(abs(lg.coeff({3}) + zeta(3) / 3) < BigReal("1e-35"));
  CHECK(is_zero(lg.coeff({0})));
  CHECK(is_zero(lg.coeff({1})));
}

TEST_CASE("two-balanced 5F4 summation, numeric") {
  set_precision_digits(40);
  auto r = verify_dougall(Rat(1, 2), Rat(1, 5), Rat(1, 7), Rat(1, 11), 4000, BigReal("1e-6"));
  CHECK(r.pass);
  // b = 0: both sides collapse to 1
  auto r0 = verify_dougall(Rat(1, 2), Rat(0), Rat(1, 7), Rat(1, 11), 200, BigReal("1e-30"));
  CHECK(r0.pass);
  CHECK_THROWS(verify_dougall(Rat(1, 2), Rat(3, 4), Rat(3, 4), Rat(3, 4), 100, BigReal(1)));
}

TEST_CASE("two-balanced 5F4 summation, terminating") {
  auto r = verify_dougall(Rat(1, 2), Rat(1, 5), Rat(1, 7), Rat(-3), 0, BigReal(0));
  CHECK(r.pass);
  CHECK(r.err == 0);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    // coprime denominators keep 1+a-b and 1+a-c away from the non-positive
    // integers, so no lower Pochhammer can vanish before termination
    std::uniform_int_distribution<long> n2(0, 3), n3(0, 5), n5(0, 7), md(1, 4);
    Rat a(2 * n2(rng) + 1, 2);
    long kb = n3(rng);
    Rat b(kb + kb / 2 + 1, 3);  // numerator skips the multiples of 3
    long kc = n5(rng);
    Rat c(kc + kc / 4 + 1, 5);  // numerator skips the multiples of 5
    auto res = verify_dougall(a, b, c, Rat(-md(rng)), 0, BigReal(0));
    CHECK(res.pass);
  }
}

TEST_CASE("derivative of the 5F4 identity as a series in a,b,c") {
  set_precision_digits(30);
  auto r = verify_after_diff(6, BigReal("1e-6"));
  CHECK(r.pass);
  CHECK(r.err < BigReal("1e-6"));
}

TEST_CASE("derivative of the Gauss summation as a series in a and the c-shift") {
  set_precision_digits(30);
  auto r = verify_gauss_to_psi(5, BigReal("1e-6"));
  CHECK(r.pass);
}

TEST_CASE("terminating Chu-Vandermonde, standard form") {
  CHECK(chu_vandermonde_exact(Rat(0), Rat(0), 4).pass);
  CHECK(chu_vandermonde_exact(Rat(1, 2), Rat(1, 3), 2).pass);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Rat a = random_small_rat(rng, 4, 7), b = random_small_rat(rng, 4, 7);
    std::uniform_int_distribution<unsigned> Nd(1, 8);
    CHECK(chu_vandermonde_exact(a, b, Nd(rng)).pass);
  }
}

TEST_CASE("the quoted finite variant fails as printed") {
  auto c = chu_vandermonde_printed(Rat(0), Rat(0), 3);
  CHECK_FALSE(c.equal);
  CHECK(c.lhs == 0);
  CHECK(c.rhs == 1);
}
