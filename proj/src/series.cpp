#include "mzvlab/series.hpp"

#include "mzvlab/numeric.hpp"

namespace mzvlab {

TruncSeries<StufflePoly> gamma1_words(const TruncSeries<StufflePoly>& shape, unsigned wvar) {
  TruncSeries<StufflePoly> lg = shape.shape_like();
  for (unsigned k = 1; k <= lg.cap(); ++k) {
    TruncSeries<StufflePoly>::Key key(lg.nvars(), 0);
    key[wvar] = k;
    lg.add(key, StufflePoly::word(word_of_index(Index{k}), RatPoly(Rat(1, k))));
  }
  return lg.exp_series();
}

namespace {

template <class S>
TruncSeries<S> gamma1_numeric_impl(const TruncSeries<S>& shape, unsigned wvar, const S& T_probe) {
  TruncSeries<S> lg = shape.shape_like();
  for (unsigned k = 1; k <= lg.cap(); ++k) {
    typename TruncSeries<S>::Key key(lg.nvars(), 0);
    key[wvar] = k;
    S c = (k == 1) ? T_probe : S(zeta(k)) * lg.rat(Rat(1, k));
    lg.add(key, c);
  }
  return lg.exp_series();
}

}  // namespace

TruncSeries<BigReal> gamma1_numeric(const TruncSeries<BigReal>& shape, unsigned wvar,
                                    const BigReal& T_probe) {
  return gamma1_numeric_impl<BigReal>(shape, wvar, T_probe);
}

TruncSeries<BigComplex> gamma1_numeric_c(const TruncSeries<BigComplex>& shape, unsigned wvar,
                                         const BigComplex& T_probe) {
  return gamma1_numeric_impl<BigComplex>(shape, wvar, T_probe);
}

}  // namespace mzvlab
