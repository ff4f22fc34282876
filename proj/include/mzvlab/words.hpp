#pragma once

#include "mzvlab/indices.hpp"
#include "mzvlab/poly.hpp"

#include <map>
#include <stdexcept>

namespace mzvlab {

// Word over {e0, e1}; letter 0 is e0, letter 1 is e1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> ls) : l_(std::move(ls)) {}

  const std::vector<std::uint8_t>& letters() const { return l_; }
  size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  bool in_h1() const { return l_.empty() || l_.front() == 1; }
  bool in_h0() const { return l_.empty() || (l_.front() == 1 && l_.back() == 0); }

  Word dropped_last() const {
    auto v = l_;
    v.pop_back();
    return Word(std::move(v));
  }
  Word appended(std::uint8_t u) const {
    auto v = l_;
    v.push_back(u);
    return Word(std::move(v));
  }
  size_t trailing_e1() const {
    size_t n = 0;
    while (n < l_.size() && l_[l_.size() - 1 - n] == 1) ++n;
    return n;
  }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> l_;
};

Word word_of_index(const Index& k);
Index index_of_word(const Word& w);  // rejects words outside H^1

// Finite formal R-linear combination of words; zero coefficients are never
// stored. R is any commutative coefficient ring from poly.hpp.
template <class R>
class WordPoly {
 public:
  WordPoly() = default;
  explicit WordPoly(const Word& w, R c = R{}) {
    if (!is_zero(c)) m_.emplace(w, std::move(c));
  }

  static WordPoly unit(R one) { return WordPoly(Word{}, std::move(one)); }

  const std::map<Word, R>& terms() const { return m_; }
  bool zero() const { return m_.empty(); }
  R coeff(const Word& w) const {
    auto it = m_.find(w);
    return it == m_.end() ? R{} : it->second;
  }

  void add_term(const Word& w, const R& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = m_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) m_.erase(it);
    }
  }

  WordPoly& operator+=(const WordPoly& o) {
    for (const auto& [w, c] : o.m_) add_term(w, c);
    return *this;
  }
  WordPoly& operator-=(const WordPoly& o) {
    for (const auto& [w, c] : o.m_) add_term(w, R{} - c);
    return *this;
  }
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  WordPoly operator*(const R& s) const {
    WordPoly r;
    for (const auto& [w, c] : m_) r.add_term(w, c * s);
    return r;
  }
  friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.m_ == b.m_; }

  bool supported_in_h1() const {
    for (const auto& [w, c] : m_)
      if (!w.in_h1()) return false;
    return true;
  }

  template <class S, class F>
  WordPoly<S> map_coeffs(F&& f) const {
    WordPoly<S> r;
    for (const auto& [w, c] : m_) r.add_term(w, f(c));
    return r;
  }

 private:
  std::map<Word, R> m_;
};

template <class R>
bool is_zero(const WordPoly<R>& p) { return p.zero(); }

// Structure constants of the two products on basis words, memoized once with
// exact rational (in fact integer) coefficients.
const WordPoly<Rat>& shuffle_words(const Word& a, const Word& b);
const WordPoly<Rat>& stuffle_words(const Word& a, const Word& b);  // H^1 only

template <class R>
WordPoly<R> bilinear(const WordPoly<R>& u, const WordPoly<R>& v,
                     const WordPoly<Rat>& (*prod)(const Word&, const Word&)) {
  WordPoly<R> out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) {
      R c = cu * cv;
      for (const auto& [w, q] : prod(wu, wv).terms()) out.add_term(w, c * with_proto(c, q));
    }
  return out;
}

template <class R>
WordPoly<R> shuffle(const WordPoly<R>& u, const WordPoly<R>& v) {
  return bilinear(u, v, &shuffle_words);
}

template <class R>
WordPoly<R> stuffle(const WordPoly<R>& u, const WordPoly<R>& v) {
  if (!u.supported_in_h1() || !v.supported_in_h1())
    throw std::invalid_argument("stuffle: support must lie in H^1");
  return bilinear(u, v, &stuffle_words);
}

// S^t on a basis word, with an arbitrary ring element standing for t:
// e_k -> sum over contractions of e_l * t^{collapsed}.
template <class R>
WordPoly<R> S_t(const Index& k, const R& t, const R& one) {
  WordPoly<R> out;
  for (const auto& [l, collapsed] : contractions(k)) {
    R c = one;
    for (unsigned j = 0; j < collapsed; ++j) c = c * t;
    out.add_term(word_of_index(l), c);
  }
  return out;
}

template <class R>
WordPoly<R> S_t(const WordPoly<R>& w, const R& t, const R& one) {
  if (!w.supported_in_h1()) throw std::invalid_argument("S_t: support must lie in H^1");
  WordPoly<R> out;
  for (const auto& [word, c] : w.terms()) {
    WordPoly<R> s = S_t(index_of_word(word), t, one);
    for (const auto& [sw, sc] : s.terms()) out.add_term(sw, c * sc);
  }
  return out;
}

inline RatPoly tpoly_t() { return RatPoly::monomial(Rat(1), 1); }
inline RatPoly tpoly_1mt() { return RatPoly(Rat(1)) - tpoly_t(); }

// K^t(k over l; a) in H^1[t], built from the closed alternating-sum form
//   K^t(k/l;a) = sum_j (-1)^j S^t(e_{k,a,l_s..l_{s-j+1}}) * S^{1-t}(e_{l_1..l_{s-j}}).
// The defining recursion is checked as a property in the tests instead.
WordPoly<RatPoly> K_t(const Index& k, const Index& l, unsigned a);

// --- truncated evaluation ----------------------------------------------------

// Strict multiple harmonic sum zeta_{<=N}(k) = sum_{n_1<...<n_r<=N} 1/prod n^k,
// computed in an arbitrary ring via its rational embedding; O(r N) operations.
template <class R>
R strict_mhs(const Index& k, long N, const R& one) {
  if (N < 1) throw std::invalid_argument("strict_mhs: N must be >= 1");
  if (k.empty()) return one;
  size_t r = k.depth();
  // P[n] = sum over chains ending at values <= n
  std::vector<R> prev(static_cast<size_t>(N) + 1, one);  // depth 0 prefix: 1
  std::vector<R> cur(static_cast<size_t>(N) + 1);
  for (size_t j = 0; j < r; ++j) {
    cur[0] = R{};
    for (long n = 1; n <= N; ++n) {
      Rat inc(1);
      for (unsigned e = 0; e < k[j]; ++e) inc /= n;
      cur[n] = cur[n - 1] + prev[n - 1] * with_proto(one, inc);
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<size_t>(N)];
}

// Z_{<=N} extended linearly over a word polynomial supported in H^1.
template <class R>
R Z_leqN(const WordPoly<R>& w, long N) {
  R acc{};
  for (const auto& [word, c] : w.terms()) {
    Index k = index_of_word(word);
    acc += c * strict_mhs(k, N, with_proto(c, Rat(1)));
  }
  return acc;
}

// Interpolated truncated sum zeta^t_{<=N}(k) by the defining non-strict sum,
// tracking coincidences directly (independent of the contraction route).
// Returns the table A[n] = contribution of chains n_1<=...<=n_r whose top
// value is exactly n, each coincidence weighted by t; the truncated sum is the
// total of the table. A[0] holds the unit for the empty index.
template <class R>
std::vector<R> interp_mhs_table(const Index& k, long N, const R& t, const R& one) {
  if (N < 0) throw std::invalid_argument("interp_mhs_table: N must be >= 0");
  std::vector<R> prev(static_cast<size_t>(N) + 1);
  prev[0] = one;
  for (size_t j = 0; j < k.depth(); ++j) {
    std::vector<R> next(static_cast<size_t>(N) + 1);
    R below{};  // sum of prev[m] for m < n
    for (long n = 1; n <= N; ++n) {
      below += prev[n - 1];
      Rat inc(1);
      for (unsigned e = 0; e < k[j]; ++e) inc /= n;
      next[n] = (below + t * prev[n]) * with_proto(one, inc);
    }
    prev = std::move(next);
    prev[0] = R{};
  }
  return prev;
}

template <class R>
R interp_mhs(const Index& k, long N, const R& t, const R& one) {
  R acc{};
  for (const R& a : interp_mhs_table(k, N, t, one)) acc += a;
  return acc;
}

// Anti-hook truncated value zeta^t_{<=N}(k over l; a): both chains share the
// top variable q, the k-chain carries t per coincidence (q included), the
// l-chain carries 1-t. Direct bidirectional sum, independent of K_t.
template <class R>
R antihook_leqN(const Index& k, const Index& l, unsigned a, long N, const R& t, const R& one) {
  if (N < 1) throw std::invalid_argument("antihook_leqN: N must be >= 1");
  R omt = one - t;
  auto ta = interp_mhs_table(k, N, t, one);
  auto tb = interp_mhs_table(l, N, omt, one);
  R acc{}, belowA{}, belowB{};
  belowA += ta[0];
  belowB += tb[0];
  for (long q = 1; q <= N; ++q) {
    R sideA = belowA + t * ta[q];
    R sideB = belowB + omt * tb[q];
    Rat qa(1);
    for (unsigned e = 0; e < a; ++e) qa /= q;
    acc += sideA * sideB * with_proto(one, qa);
    belowA += ta[q];
    belowB += tb[q];
  }
  return acc;
}

}  // namespace mzvlab
