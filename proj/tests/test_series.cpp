#include "doctest.h"

#include "mzvlab/numeric.hpp"
#include "mzvlab/regularize.hpp"
#include "mzvlab/series.hpp"

using namespace mzvlab;

namespace {

using QS = TruncSeries<Rat>;
using WS = TruncSeries<StufflePoly>;
using PS = TruncSeries<RatPoly>;
using NS = TruncSeries<BigReal>;

StufflePoly sp_t() { return StufflePoly(WordPoly<RatPoly>(Word{}, tpoly_t())); }
StufflePoly sp_1mt() { return StufflePoly(WordPoly<RatPoly>(Word{}, tpoly_1mt())); }

}  // namespace

TEST_CASE("truncated arithmetic") {
  QS proto(1, 2, Rat(1));
  QS one = proto.constant(Rat(1));
  QS W = proto.variable(0);
  CHECK((one + W) * (one - W) == one - W * W);
  QS cube = (one + W) * (one + W) * (one + W);
  CHECK(cube.coeff({0}) == Rat(1));
  CHECK(cube.coeff({1}) == Rat(3));
  CHECK(cube.coeff({2}) == Rat(3));

  QS xy(2, 2, Rat(1));
  CHECK((xy.variable(0) * xy.variable(1)).coeff({1, 1}) == Rat(1));
  CHECK_THROWS(one + QS(1, 3, Rat(1)).constant(Rat(1)));
}

TEST_CASE("exp") {
  QS proto(1, 3, Rat(1));
  QS e = proto.variable(0).exp_series();
  CHECK(e.coeff({0}) == Rat(1));
  CHECK(e.coeff({1}) == Rat(1));
  CHECK(e.coeff({2}) == Rat(1, 2));
  CHECK(e.coeff({3}) == Rat(1, 6));
  CHECK(proto.shape_like().exp_series() == proto.constant(Rat(1)));
  CHECK_THROWS(proto.constant(Rat(1)).exp_series());
}

TEST_CASE("inverse") {
  QS proto(1, 4, Rat(1));
  QS one = proto.constant(Rat(1));
  QS g = (one - proto.variable(0)).inverse();
  for (unsigned j = 0; j <= 4; ++j) CHECK(g.coeff({j}) == Rat(1));
  CHECK((one - proto.variable(0)) * g == one);

  // unit criterion mod p^2: constant term must be prime to p
  Residue2 r1(1, 5);
  TruncSeries<Residue2> rp(1, 3, r1);
  TruncSeries<Residue2> a = rp.constant(r1) + rp.variable(0) * Residue2(5, 5);
  CHECK(a * a.inverse() == rp.constant(r1));
  TruncSeries<Residue2> b = rp.constant(Residue2(5, 5)) + rp.variable(0);
  CHECK_THROWS(b.inverse());
}

TEST_CASE("pochhammer") {
  QS proto(1, 3, Rat(1));
  QS x = proto.constant(Rat(1)) - proto.variable(0);
  QS p3 = ts_pochhammer(x, 3);
  CHECK(p3.coeff({0}) == Rat(6));
  CHECK(p3.coeff({1}) == Rat(-11));
  CHECK(p3.coeff({2}) == Rat(6));
  CHECK(p3.coeff({3}) == Rat(-1));
  CHECK(ts_pochhammer(x, 0) == proto.constant(Rat(1)));
  CHECK(ts_pochhammer(proto.constant(Rat(1)), 5) == proto.constant(Rat(120)));
}

TEST_CASE("stuffle exponential of the index generating function") {
  // exp_*(sum e_k W^k / k): the W^w coefficient collects e_k over all
  // compositions k of weight w
  WS shape(1, 4, StufflePoly::unit());
  WS g = gamma1_words(shape, 0);
  CHECK(g.coeff({0}) == StufflePoly::unit());
  CHECK(g.coeff({1}) == StufflePoly::word(word_of_index(Index{1})));
  // by hand at degree 2: e_2/2 + (e_1 * e_1)/2
  StufflePoly w2 = StufflePoly::word(word_of_index(Index{2}), RatPoly(Rat(1, 2))) +
                   StufflePoly::word(word_of_index(Index{1})) *
                       StufflePoly::word(word_of_index(Index{1}), RatPoly(Rat(1, 2)));
  CHECK(g.coeff({2}) == w2);
  for (unsigned w = 1; w <= 4; ++w) {
    StufflePoly expect;
    for (const Index& k : all_indices_of_weight(w))
      expect += StufflePoly::word(word_of_index(k));
    CHECK(g.coeff({w}) == expect);
  }
}

TEST_CASE("finite analogue equals N!/(1-W)_N") {
  QS proto(1, 6, Rat(1));
  QS g1 = gamma1_finite(proto, 0, 1);
  for (unsigned j = 0; j <= 6; ++j) CHECK(g1.coeff({j}) == Rat(1));
  for (long N : {2L, 3L, 7L}) {
    QS lhs = gamma1_finite(proto, 0, N);
    QS x = proto.constant(Rat(1)) - proto.variable(0);
    QS rhs = ts_pochhammer(x, static_cast<unsigned>(N)).inverse() * Rat(factorial(static_cast<unsigned>(N)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("depth-marked index generating function as a Gamma ratio") {
  // sum over all k of e_k A^{dep} W^{wt} = G(W) / G((1-A)W), exactly to wt 6
  const unsigned D = 6;
  WS shape({0, 1}, D, StufflePoly::unit());  // (A, W); A free
  WS lhs = shape.constant(StufflePoly::unit());
  for (unsigned w = 1; w <= D; ++w)
    for (const Index& k : all_indices_of_weight(w))
      lhs.add({static_cast<unsigned>(k.depth()), w}, StufflePoly::word(word_of_index(k)));

  WS g = gamma1_words(shape, 1);
  WS oneA = shape.constant(StufflePoly::unit()) - shape.variable(0);
  WS rhs = g * g.scale_var(1, oneA).inverse();
  CHECK(lhs == rhs);
}

TEST_CASE("interpolated S^t generating function as a Gamma ratio") {
  // sum over all k of S^t(e_k) A^{dep} W^{wt}
  //   = G((1+tA)W) / G((1-(1-t)A)W), exactly over Q[t] to wt 6
  // (refining an entry of l into j+1 parts contributes (tA)^j, so the
  // numerator argument is (1+tA)W; cf. the finite Pochhammer-ratio analogue)
  const unsigned D = 6;
  WS shape({0, 1}, D, StufflePoly::unit());
  WS lhs = shape.constant(StufflePoly::unit());
  for (unsigned w = 1; w <= D; ++w)
    for (const Index& k : all_indices_of_weight(w))
      lhs.add({static_cast<unsigned>(k.depth()), w},
              StufflePoly(S_t(k, tpoly_t(), RatPoly(Rat(1)))));

  WS g = gamma1_words(shape, 1);
  WS unit = shape.constant(StufflePoly::unit());
  WS num = g.scale_var(1, unit + shape.variable(0) * sp_t());
  WS den = g.scale_var(1, unit - shape.variable(0) * sp_1mt());
  CHECK(lhs == num * den.inverse());
}

TEST_CASE("finite interpolated generating function, exact over Q[t]") {
  // sum over all k of zeta^t_{<=N}(k) A^{dep} W^{wt}
  //   = (1-(1-(1-t)A)W)_N / (1-(1+tA)W)_N
  const unsigned D = 8;
  RatPoly one(Rat(1));
  PS shape({0, 1}, D, one);
  for (long N : {1L, 5L, 12L}) {
    PS lhs = shape.constant(one);
    for (unsigned w = 1; w <= D; ++w)
      for (const Index& k : all_indices_of_weight(w))
        lhs.add({static_cast<unsigned>(k.depth()), w}, interp_mhs(k, N, tpoly_t(), one));

    PS A = shape.variable(0), W = shape.variable(1), c1 = shape.constant(one);
    PS num = c1 - (c1 - A * tpoly_1mt()) * W;
    PS den = c1 - (c1 + A * tpoly_t()) * W;
    unsigned n = static_cast<unsigned>(N);
    PS rhs = ts_pochhammer(num, n) * ts_pochhammer(den, n).inverse();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("regularized interpolated generating function, numeric") {
  // sum over all k of zeta^{t,*}(k;T) A^{dep} W^{wt}
  //   = [G1((1+tA)W)/G1((1-(1-t)A)W)] exp(ATW), to D=7 at 1e-25
  set_precision_digits(50);
  const unsigned D = 7;
  BigReal one(1);
  NS shape({0, 1}, D, one);
  for (const Rat& t : {Rat(1, 3), Rat(1, 2)}) {
    std::map<Index, TPoly> regs;
    for (unsigned w = 1; w <= D; ++w)
      for (const Index& k : all_indices_of_weight(w))
        regs.emplace(k, zeta_t_reg(k, t, Prod::stuffle));
    for (const Rat& T : {Rat(0), Rat(2, 5)}) {
      BigReal Tb(T);
      NS lhs = shape.constant(one);
      for (const auto& [k, z] : regs)
        lhs.add({static_cast<unsigned>(k.depth()), static_cast<unsigned>(k.weight())},
                z.eval(Tb));

      NS A = shape.variable(0), c1 = shape.constant(one);
      NS up = c1 + A * BigReal(t);
      NS dn = c1 - A * BigReal(Rat(1) - t);
      // the T-dependent ratio carries the k=1 terms itself...
      NS g = gamma1_numeric(shape, 1, Tb);
      NS rhs = g.scale_var(1, up) * g.scale_var(1, dn).inverse();
      // ...equivalently: the T=0 ratio times exp(ATW)
      NS g0 = gamma1_numeric(shape, 1, BigReal(0));
      NS rhs0 = g0.scale_var(1, up) * g0.scale_var(1, dn).inverse() *
                (A * shape.variable(1) * Tb).exp_series();

      for (const NS& r : {rhs, rhs0}) {
        NS diff = lhs - r;
        for (const auto& [key, c] : diff.terms()) CHECK(abs(c) < BigReal("1e-25"));
      }
    }
  }
}

TEST_CASE("reflection: G1(W) G1(-W) = pi W / sin(pi W)") {
  set_precision_digits(50);
  NS shape(1, 4, BigReal(1));
  BigReal T(Rat(3, 7));
  NS g = gamma1_numeric(shape, 0, T);
  NS prod = g * g.scale_var_scalar(0, BigReal(-1));
  BigReal pi = big_pi();
  CHECK(abs(prod.coeff({0}) - 1) < BigReal("1e-45"));
  CHECK(abs(prod.coeff({1})) < BigReal("1e-45"));
  CHECK(abs(prod.coeff({2}) - pi * pi / 6) < BigReal("1e-44"));
  CHECK(abs(prod.coeff({3})) < BigReal("1e-45"));
  CHECK(abs(prod.coeff({4}) - 7 * pow(pi, 4) / 360) < BigReal("1e-43"));
}
