#include "doctest.h"

#include "mzvlab/numeric.hpp"
#include "mzvlab/words.hpp"

using namespace mzvlab;

namespace {
BigReal tol(const char* s) { return BigReal(s); }
}

TEST_CASE("mzv basics") {
  set_precision_digits(50);
  BigReal pi = big_pi();
  CHECK(abs(mzv(Index{2}) - pi * pi / 6) < tol("1e-48"));
  CHECK(abs(mzv(Index{4}) - pi * pi * pi * pi / 90) < tol("1e-48"));
  // Euler: zeta(1,2) = zeta(3)
  CHECK(abs(mzv(Index{1, 2}) - mzv(Index{3})) < tol("1e-45"));
  CHECK(abs(zeta(3) - BigReal("1.2020569031595942853997381615114499907649862923405")) <
        tol("1e-45"));
  CHECK_THROWS(mzv(Index{2, 1}));
  CHECK(mzv(Index{}) == 1);
}

TEST_CASE("stuffle relation holds numerically") {
  // zeta(2) zeta(3) = zeta(2,3) + zeta(3,2) + zeta(5)
  BigReal lhs = mzv(Index{2}) * mzv(Index{3});
  BigReal rhs = mzv(Index{2, 3}) + mzv(Index{3, 2}) + mzv(Index{5});
  CHECK(abs(lhs - rhs) < tol("1e-45"));
}

TEST_CASE("mzv agrees with the slow oracle") {
  for (unsigned w = 2; w <= 6; ++w)
    for (const Index& k : all_indices_of_weight(w)) {
      if (!k.admissible()) continue;
      auto o = mzv_oracle(k, 2000);
      CHECK(abs(mzv(k) - o.value) <= o.bound);
    }
}

TEST_CASE("oracle bound magnitudes") {
  auto o2 = mzv_oracle(Index{2}, 100000);
  CHECK(o2.bound < tol("2e-5"));
  CHECK(abs(o2.value - mzv(Index{2})) < o2.bound);
  auto o3 = mzv_oracle(Index{3}, 1000);
  CHECK(o3.bound < tol("1e-5"));
}

TEST_CASE("zeta_t values") {
  // zeta^{1/2}(1,2) = zeta(1,2) + zeta(3)/2 = (3/2) zeta(3)
  CHECK(abs(zeta_t(Index{1, 2}, Rat(1, 2)) - BigReal(Rat(3, 2)) * zeta(3)) < tol("1e-45"));
  // t=1 gives the star value: zeta*(1,2) = 2 zeta(3)
  CHECK(abs(zeta_t(Index{1, 2}, Rat(1)) - 2 * zeta(3)) < tol("1e-45"));
  CHECK(abs(zeta_t(Index{5}, Rat(2, 3)) - zeta(5)) < tol("1e-48"));
  CHECK_THROWS(zeta_t(Index{2, 1}, Rat(1, 2)));
}

TEST_CASE("psi1 coefficients") {
  auto c = psi1_coefficients(5);
  REQUIRE(c.size() == 4);
  CHECK(abs(c[0] - big_pi() * big_pi() / 6) < tol("1e-45"));
  for (size_t i = 0; i + 1 < c.size(); ++i) CHECK(c[i] > c[i + 1]);
  CHECK(c.back() > 1);
}

TEST_CASE("anti-hook numeric limit") {
  // (empty/empty; 2) is just zeta(2)
  auto r = antihook(Index{}, Index{}, 2, Rat(1, 2), 4000);
  CHECK(abs(r.value - zeta(2)) < tol("1e-9"));
  // ((1)/empty; 2) at t agrees with zeta_t((1,2), t)
  auto r2 = antihook(Index{1}, Index{}, 2, Rat(1, 2), 4000);
  CHECK(abs(r2.value - zeta_t(Index{1, 2}, Rat(1, 2))) < tol("1e-7"));
  CHECK(abs(r2.value - zeta_t(Index{1, 2}, Rat(1, 2))) < r2.error + tol("1e-9"));
  CHECK_THROWS(antihook(Index{}, Index{}, 1, Rat(0)));
}
