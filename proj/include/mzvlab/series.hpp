#pragma once

#include "mzvlab/words.hpp"

#include <map>
#include <string>

namespace mzvlab {

// Coefficient ring for generating functions over the stuffle algebra: words
// with Q[t] coefficients, multiplied by the harmonic product.
struct StufflePoly {
  WordPoly<RatPoly> v;

  StufflePoly() = default;
  explicit StufflePoly(WordPoly<RatPoly> w) : v(std::move(w)) {}
  static StufflePoly unit(Rat c = Rat(1)) {
    return StufflePoly(WordPoly<RatPoly>(Word{}, RatPoly(c)));
  }
  static StufflePoly word(const Word& w, RatPoly c = RatPoly(Rat(1))) {
    return StufflePoly(WordPoly<RatPoly>(w, std::move(c)));
  }

  StufflePoly& operator+=(const StufflePoly& o) { v += o.v; return *this; }
  StufflePoly& operator-=(const StufflePoly& o) { v -= o.v; return *this; }
  friend StufflePoly operator+(StufflePoly a, const StufflePoly& b) { return a += b; }
  friend StufflePoly operator-(StufflePoly a, const StufflePoly& b) { return a -= b; }
  friend StufflePoly operator-(const StufflePoly& a) { return StufflePoly(WordPoly<RatPoly>() - a.v); }
  friend StufflePoly operator*(const StufflePoly& a, const StufflePoly& b) {
    return StufflePoly(stuffle(a.v, b.v));
  }
  StufflePoly& operator*=(const StufflePoly& o) { return *this = *this * o; }
  friend bool operator==(const StufflePoly& a, const StufflePoly& b) { return a.v == b.v; }
};

inline bool is_zero(const StufflePoly& s) { return s.v.zero(); }
inline StufflePoly with_proto(const StufflePoly&, const Rat& q) { return StufflePoly::unit(q); }
inline StufflePoly ring_inv(const StufflePoly& s) {
  if (s.v.terms().size() != 1 || !s.v.terms().begin()->first.empty())
    throw std::invalid_argument("ring_inv: not a scalar multiple of the empty word");
  return StufflePoly(WordPoly<RatPoly>(Word{}, ring_inv(s.v.terms().begin()->second)));
}

// Multivariate power series truncated by weighted total degree; arithmetic is
// exact in the quotient ring. Variables are positional; callers fix a
// convention like (A, B, W) per identity. A truncation weight of 0 makes a
// variable "free" (it rides along without consuming degree budget — used for
// the depth-marking variables A, B, whose exponents are bounded by the
// W-exponent in every series the paper builds).
template <class R>
class TruncSeries {
 public:
  using Key = std::vector<unsigned>;

  TruncSeries(unsigned nvars, unsigned cap, R one)
      : wts_(nvars, 1), cap_(cap), one_(std::move(one)) {}
  TruncSeries(std::vector<unsigned> weights, unsigned cap, R one)
      : wts_(std::move(weights)), cap_(cap), one_(std::move(one)) {}

  TruncSeries shape_like() const { return TruncSeries(wts_, cap_, one_); }

  TruncSeries constant(const R& c) const {
    TruncSeries s = shape_like();
    s.add(Key(nvars(), 0), c);
    return s;
  }
  TruncSeries variable(unsigned i) const {
    TruncSeries s = shape_like();
    Key k(nvars(), 0);
    k[i] = 1;
    s.add(k, one_);
    return s;
  }
  static TruncSeries constant(unsigned nvars, unsigned cap, const R& one, const R& c) {
    return TruncSeries(nvars, cap, one).constant(c);
  }
  static TruncSeries variable(unsigned nvars, unsigned cap, const R& one, unsigned i) {
    return TruncSeries(nvars, cap, one).variable(i);
  }

  unsigned nvars() const { return static_cast<unsigned>(wts_.size()); }
  unsigned cap() const { return cap_; }
  const std::vector<unsigned>& weights() const { return wts_; }
  const R& one() const { return one_; }
  R rat(const Rat& q) const { return with_proto(one_, q); }
  const std::map<Key, R>& terms() const { return c_; }

  R coeff(const Key& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? R{} : it->second;
  }

  void add(const Key& k, const R& v) {
    if (k.size() != wts_.size()) throw std::invalid_argument("TruncSeries: bad exponent arity");
    if (total(k) > cap_ || is_zero(v)) return;
    auto [it, fresh] = c_.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (is_zero(it->second)) c_.erase(it);
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (const auto& [k, v] : o.c_) add(k, R{} - v);
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(const TruncSeries& a) {
    TruncSeries r = a.shape_like();
    for (const auto& [k, v] : a.c_) r.add(k, R{} - v);
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r = a.shape_like();
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_) {
        Key k = ka;
        for (unsigned i = 0; i < a.nvars(); ++i) k[i] += kb[i];
        if (a.total(k) > a.cap_) continue;
        r.add(k, va * vb);
      }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries operator*(const R& s) const {
    TruncSeries r = shape_like();
    for (const auto& [k, v] : c_) r.add(k, v * s);
    return r;
  }
  TruncSeries scaled(const Rat& q) const { return *this * rat(q); }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.wts_ == b.wts_ && a.cap_ == b.cap_ && a.c_ == b.c_;
  }

  R constant_term() const { return coeff(Key(nvars(), 0)); }

  bool has_constant_term() const { return !is_zero(constant_term()); }

  // multiplicative inverse; constant term must be a unit
  TruncSeries inverse() const {
    R c0 = constant_term();
    R r0 = ring_inv(c0);  // throws/errors on non-units
    TruncSeries u = *this * r0;
    u.add(Key(nvars(), 0), R{} - one_);  // u = s/c0 - 1, no constant term
    u.require_positive_degree("inverse");
    TruncSeries acc = constant(one_);
    TruncSeries pw = constant(one_);
    for (unsigned n = 1; n <= cap_; ++n) {
      pw = pw * u;
      if (pw.c_.empty()) break;
      if (n % 2) acc -= pw;
      else acc += pw;
    }
    return acc * r0;
  }

  // exp of a series without constant term
  TruncSeries exp_series() const {
    if (has_constant_term()) throw std::invalid_argument("exp: nonzero constant term");
    require_positive_degree("exp");
    TruncSeries acc = constant(one_);
    TruncSeries pw = acc;
    Rat inv_fact = 1;
    for (unsigned n = 1; n <= cap_; ++n) {
      pw = pw * *this;
      if (pw.c_.empty()) break;
      inv_fact /= n;
      acc += pw.scaled(inv_fact);
    }
    return acc;
  }

  // substitute x_i -> mult * x_i (mult an arbitrary series)
  TruncSeries scale_var(unsigned i, const TruncSeries& mult) const {
    check(mult);
    // group by exponent of x_i and multiply by mult^e
    TruncSeries r = shape_like();
    std::map<unsigned, TruncSeries> groups;
    for (const auto& [k, v] : c_) {
      auto [it, _] = groups.try_emplace(k[i], shape_like());
      it->second.add(k, v);
    }
    TruncSeries mp = constant(one_);
    unsigned cur = 0;
    for (auto& [e, part] : groups) {
      while (cur < e) {
        mp = mp * mult;
        ++cur;
      }
      r += part * mp;
    }
    return r;
  }

  // substitute x_i -> c * x_i for a scalar c
  TruncSeries scale_var_scalar(unsigned i, const R& c) const {
    TruncSeries r = shape_like();
    for (const auto& [k, v] : c_) {
      R f = v;
      for (unsigned j = 0; j < k[i]; ++j) f = f * c;
      r.add(k, f);
    }
    return r;
  }

  TruncSeries swap_vars(unsigned i, unsigned j) const {
    TruncSeries r = shape_like();
    for (const auto& [k, v] : c_) {
      Key nk = k;
      std::swap(nk[i], nk[j]);
      r.add(nk, v);
    }
    return r;
  }

  template <class S, class F>
  TruncSeries<S> map_coeffs(const S& new_one, F&& f) const {
    TruncSeries<S> r(wts_, cap_, new_one);
    for (const auto& [k, v] : c_) r.add(k, f(v));
    return r;
  }

 private:
  unsigned total(const Key& k) const {
    unsigned t = 0;
    for (size_t i = 0; i < k.size(); ++i) t += wts_[i] * k[i];
    return t;
  }
  // exp/inverse converge in cap steps only if every term carries weighted
  // degree >= 1
  void require_positive_degree(const char* who) const {
    for (const auto& [k, v] : c_)
      if (total(k) == 0)
        throw std::invalid_argument(std::string(who) + ": term of weighted degree 0");
  }
  void check(const TruncSeries& o) const {
    if (o.wts_ != wts_ || o.cap_ != cap_)
      throw std::invalid_argument("TruncSeries: mismatched shape");
  }

  std::vector<unsigned> wts_;
  unsigned cap_;
  R one_;
  std::map<Key, R> c_;
};

// (X)_N = X(X+1)...(X+N-1) for a series X; (X)_0 = 1.
template <class R>
TruncSeries<R> ts_pochhammer(const TruncSeries<R>& x, unsigned N) {
  TruncSeries<R> acc = x.shape_like().constant(x.one());
  for (unsigned j = 0; j < N; ++j) {
    TruncSeries<R> cur = x;
    if (j > 0) cur += x.shape_like().constant(x.rat(Rat(j)));
    acc = acc * cur;
  }
  return acc;
}

// Gamma_{1,I}(W) over the stuffle algebra: exp_*(sum_k e_k W^k / k), with W
// at position wvar; the shape argument fixes variables/weights/cap.
TruncSeries<StufflePoly> gamma1_words(const TruncSeries<StufflePoly>& shape, unsigned wvar);

// Numeric Gamma_1(W) = exp(sum_k zeta^*(k;T) W^k / k) with T evaluated at a
// probe value (zeta^*(1;T) = T, zeta^*(k;T) = zeta(k) for k >= 2).
TruncSeries<BigReal> gamma1_numeric(const TruncSeries<BigReal>& shape, unsigned wvar,
                                    const BigReal& T_probe);
TruncSeries<BigComplex> gamma1_numeric_c(const TruncSeries<BigComplex>& shape, unsigned wvar,
                                         const BigComplex& T_probe);

// Finite analogue: exp(sum_k zeta_{<=N}(k) W^k / k) = N!/(1-W)_N, over any
// ring reachable from Rat through the prototype.
template <class R>
TruncSeries<R> gamma1_finite(const TruncSeries<R>& shape, unsigned wvar, long N) {
  TruncSeries<R> lg = shape.shape_like();
  for (unsigned k = 1; k <= lg.cap(); ++k) {
    typename TruncSeries<R>::Key key(lg.nvars(), 0);
    key[wvar] = k;
    lg.add(key, strict_mhs(Index{k}, N, lg.one()) * lg.rat(Rat(1, k)));
  }
  return lg.exp_series();
}

}  // namespace mzvlab
