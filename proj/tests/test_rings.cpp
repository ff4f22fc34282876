#include "doctest.h"

#include "mzvlab/poly.hpp"
#include "mzvlab/rings.hpp"

#include <random>

using namespace mzvlab;

TEST_CASE("bernoulli numbers, exact") {
  CHECK(bernoulli_exact(0) == Rat(1));
  CHECK(bernoulli_exact(1) == Rat(-1, 2));
  CHECK(bernoulli_exact(2) == Rat(1, 6));
  CHECK(bernoulli_exact(4) == Rat(-1, 30));
  CHECK(bernoulli_exact(12) == Rat(-691, 2730));
  for (unsigned n = 3; n <= 21; n += 2) CHECK(bernoulli_exact(n) == 0);
}

TEST_CASE("bernoulli mod p matches exact reduction") {
  for (std::uint64_t p : {11ull, 13ull, 97ull}) {
    auto tab = bernoulli_mod_p(p, static_cast<unsigned>(p - 2));
    for (unsigned n = 0; n + 2 <= p; ++n) CHECK(tab[n] == Residue::from_rat(bernoulli_exact(n), p));
  }
  CHECK_THROWS(bernoulli_mod_p(11, 10));
}

TEST_CASE("zfrak_p") {
  CHECK(zfrak_p(3, 7) == Residue(1, 7));
  CHECK(zfrak_p(4, 11) == Residue(0, 11));
  CHECK(zfrak_p(3, 5) == Residue(2, 5));
  CHECK_THROWS(zfrak_p(3, 4));    // not prime
  CHECK_THROWS(zfrak_p(10, 11));  // k > p-2
  CHECK_THROWS(zfrak_p(1, 11));
}

TEST_CASE("residue field arithmetic") {
  std::mt19937 rng(7);
  for (std::uint64_t p : {5ull, 101ull, 1009ull}) {
    std::uniform_int_distribution<std::int64_t> d(-5000, 5000);
    for (int i = 0; i < 50; ++i) {
      Residue a(d(rng), p), b(d(rng), p);
      CHECK(a + b - b == a);
      if (b.value() != 0) CHECK(a / b * b == a);
    }
    CHECK_THROWS(Residue(1, p) / Residue(0, p));
  }
  // universal zero adopts a modulus
  Residue z;
  CHECK(z + Residue(3, 7) == Residue(3, 7));
  CHECK(z * Residue(3, 7) == Residue(0, 7));
  CHECK_THROWS(Residue(1, 5) + Residue(1, 7));
}

TEST_CASE("residue mod p^2 and projection") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-100000, 100000);
  for (std::uint64_t p : {7ull, 97ull}) {
    for (int i = 0; i < 50; ++i) {
      Residue2 a(Int(d(rng)), p), b(Int(d(rng)), p);
      CHECK((a + b).project() == a.project() + b.project());
      CHECK((a * b).project() == a.project() * b.project());
      if (b.value() % p != 0) {
        CHECK(a / b * b == a);
        CHECK((a / b).project() == a.project() / b.project());
      }
    }
    CHECK_THROWS(Residue2(Int(p), p).inv());
  }
  // 1/(1+p) = 1 - p mod p^2
  CHECK(Residue2(Int(8), 7).inv() == Residue2(Int(1 - 7), 7));
}

TEST_CASE("rational embeddings") {
  CHECK(Residue::from_rat(Rat(-1, 30), 7) == Residue(3, 7));  // -1 * inv(2) = -4
  CHECK(Residue2::from_rat(Rat(1, 2), 5) == Residue2(Int(13), 5));
  CHECK_THROWS(Residue::from_rat(Rat(1, 7), 7));
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(rat_binomial(Rat(1, 2), 2) == Rat(-1, 8));
  CHECK(factorial(6) == 720);
}

TEST_CASE("primes") {
  CHECK(primes_in(11, 31) == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29, 31});
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(!is_prime(91));
}

TEST_CASE("big real precision and pi") {
  set_precision_digits(50);
  BigReal pi = big_pi();
  // first digits of pi
  CHECK(abs(pi - BigReal("3.14159265358979323846264338327950288419716939937510")) <
        BigReal("1e-45"));
  BigComplex i(BigReal(0), BigReal(1));
  CHECK(i * i == BigComplex(BigReal(-1)));
  CHECK(cabs(BigComplex(BigReal(3), BigReal(4))) == 5);
}

TEST_CASE("polynomials") {
  RatPoly t = RatPoly::monomial(Rat(1), 1);
  RatPoly p = (RatPoly(Rat(1)) - t) * (RatPoly(Rat(1)) + t);
  CHECK(p == RatPoly(Rat(1)) - t * t);
  CHECK(p.eval(Rat(1, 2)) == Rat(3, 4));
  CHECK(eval_ratpoly(p, Residue(3, 7), Residue(1, 7)) == Residue(-8, 7));
  CHECK(is_zero(p - p));
}
