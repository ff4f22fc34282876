#include "doctest.h"

#include "mzvlab/numeric.hpp"
#include "mzvlab/regularize.hpp"

#include <random>

using namespace mzvlab;

namespace {

WordPoly<Rat> wp(const Index& k) { return WordPoly<Rat>(word_of_index(k), Rat(1)); }

Word random_h1_word(std::mt19937& rng, size_t max_len) {
  std::uniform_int_distribution<size_t> ld(1, max_len);
  size_t n = ld(rng);
  std::vector<std::uint8_t> ls{1};
  for (size_t i = 1; i < n; ++i) ls.push_back(static_cast<std::uint8_t>(rng() & 1));
  return Word(std::move(ls));
}

}  // namespace

TEST_CASE("reg on small words") {
  for (Prod p : {Prod::stuffle, Prod::shuffle}) {
    auto d = reg(wp(Index{2}), p);
    CHECK(d.degree() == 0);
    CHECK(d.comp[0] == wp(Index{2}));

    auto d1 = reg(WordPoly<Rat>(Word({1}), Rat(1)), p);
    REQUIRE(d1.comp.size() == 2);
    CHECK(d1.comp[0].zero());
    CHECK(d1.comp[1] == WordPoly<Rat>::unit(Rat(1)));
  }
  // e_(2,1) under stuffle: {1: e_(2); 0: -e_(1,2) - e_(3)}
  auto d = reg(wp(Index{2, 1}), Prod::stuffle);
  REQUIRE(d.comp.size() == 2);
  CHECK(d.comp[1] == wp(Index{2}));
  CHECK(d.comp[0] == WordPoly<Rat>() - wp(Index{1, 2}) - wp(Index{3}));
}

TEST_CASE("reg components live in H^0 and reassemble exactly") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    Word w = random_h1_word(rng, 7);
    for (Prod p : {Prod::stuffle, Prod::shuffle}) {
      WordPoly<Rat> input(w, Rat(1));
      auto d = reg(input, p);
      for (const auto& comp : d.comp)
        for (const auto& [cw, c] : comp.terms()) CHECK(cw.in_h0());
      CHECK(reassemble(d, p) == input);
    }
  }
}

TEST_CASE("zeta_reg examples") {
  set_precision_digits(50);
  for (Prod p : {Prod::stuffle, Prod::shuffle}) {
    TPoly z2 = zeta_reg(Index{2}, p);
    CHECK(z2.degree() == 0);
    CHECK(abs(z2.coeff(0) - zeta(2)) < BigReal("1e-45"));

    TPoly z1 = zeta_reg(Index{1}, p);
    CHECK(z1.degree() == 1);
    CHECK(abs(z1.coeff(0)) < BigReal("1e-45"));
    CHECK(abs(z1.coeff(1) - 1) < BigReal("1e-45"));
  }
  // zeta^*(2,1; T) = zeta(2) T - 2 zeta(3)
  TPoly z = zeta_reg(Index{2, 1}, Prod::stuffle);
  CHECK(abs(z.coeff(1) - zeta(2)) < BigReal("1e-45"));
  CHECK(abs(z.coeff(0) + 2 * zeta(3)) < BigReal("1e-45"));
}

TEST_CASE("zeta_reg is multiplicative") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Word a = random_h1_word(rng, 5), b = random_h1_word(rng, 5);
    for (Prod p : {Prod::stuffle, Prod::shuffle}) {
      WordPoly<Rat> u(a, Rat(1)), v(b, Rat(1));
      TPoly lhs = zeta_reg_word(product(u, v, p), p);
      TPoly rhs = zeta_reg_word(u, p) * zeta_reg_word(v, p);
      REQUIRE(lhs.degree() <= rhs.degree() + 0);
      for (int i = 0; i <= std::max(lhs.degree(), rhs.degree()); ++i)
        CHECK(abs(lhs.coeff(static_cast<unsigned>(i)) - rhs.coeff(static_cast<unsigned>(i))) <
              BigReal("1e-30"));
    }
  }
}

TEST_CASE("regularized values agree on H^0") {
  for (unsigned w = 2; w <= 7; ++w)
    for (const Index& k : all_indices_of_weight(w)) {
      if (!k.admissible()) continue;
      TPoly a = zeta_reg(k, Prod::stuffle);
      TPoly b = zeta_reg(k, Prod::shuffle);
      CHECK(a.degree() == 0);
      CHECK(b.degree() == 0);
      CHECK(abs(a.coeff(0) - b.coeff(0)) < BigReal("1e-40"));
    }
}

TEST_CASE("zeta_t_reg") {
  // ((1,2), t=1/2) -> constant zeta(1,2) + zeta(3)/2
  TPoly z = zeta_t_reg(Index{1, 2}, Rat(1, 2), Prod::stuffle);
  CHECK(z.degree() == 0);
  CHECK(abs(z.coeff(0) - BigReal(Rat(3, 2)) * zeta(3)) < BigReal("1e-45"));
  TPoly z1 = zeta_t_reg(Index{1}, Rat(1, 3), Prod::shuffle);
  CHECK(z1.degree() == 1);
  CHECK(abs(z1.coeff(1) - 1) < BigReal("1e-45"));
}

TEST_CASE("symmetric values") {
  // (1): T - T = 0
  CHECK(abs(zeta_sym(Index{1}, Prod::stuffle, BigReal(Rat(7, 3)))) < BigReal("1e-40"));
  // (2): both end terms zeta(2)
  CHECK(abs(zeta_sym(Index{2}, Prod::stuffle, BigReal(0)) - 2 * zeta(2)) < BigReal("1e-45"));
  // T-independence across probes, weight <= 7
  for (unsigned w = 1; w <= 7; ++w)
    for (const Index& k : all_indices_of_weight(w)) {
      BigReal a = zeta_sym(k, Prod::stuffle, BigReal(0));
      BigReal b = zeta_sym(k, Prod::stuffle, BigReal(1));
      CHECK(abs(a - b) < BigReal("1e-30"));
    }
  // interpolated version, spot-checked T-independence
  for (const Index& k : {Index{2, 1}, Index{1, 3}, Index{2, 1, 2}}) {
    BigReal a = zeta_t_sym(k, Rat(1, 2), Prod::stuffle, BigReal(0));
    BigReal b = zeta_t_sym(k, Rat(1, 2), Prod::stuffle, BigReal(Rat(5, 7)));
    CHECK(abs(a - b) < BigReal("1e-30"));
  }
  // complex probe agrees with real probe on the real axis
  BigComplex c = zeta_t_sym_c(Index{2, 1}, Rat(1, 2), Prod::stuffle, BigComplex(BigReal(1)));
  BigReal r = zeta_t_sym(Index{2, 1}, Rat(1, 2), Prod::stuffle, BigReal(1));
  CHECK(abs(c.re - r) < BigReal("1e-40"));
  CHECK(abs(c.im) < BigReal("1e-40"));
}
