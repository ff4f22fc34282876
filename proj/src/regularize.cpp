#include "mzvlab/regularize.hpp"

#include "mzvlab/numeric.hpp"

#include <map>

namespace mzvlab {

WordPoly<Rat> product(const WordPoly<Rat>& u, const WordPoly<Rat>& v, Prod p) {
  return p == Prod::stuffle ? stuffle(u, v) : shuffle(u, v);
}

namespace {

// i-fold product e1^{*i} (or shuffle power), cached per product
const WordPoly<Rat>& e1_power(size_t i, Prod p) {
  static std::vector<WordPoly<Rat>> pows[2];
  auto& tab = pows[p == Prod::shuffle];
  if (tab.empty()) tab.push_back(WordPoly<Rat>::unit(Rat(1)));
  WordPoly<Rat> e1(Word({1}), Rat(1));
  while (tab.size() <= i) tab.push_back(product(tab.back(), e1, p));
  return tab[i];
}

size_t max_trailing(const WordPoly<Rat>& w) {
  size_t m = 0;
  for (const auto& [word, c] : w.terms()) m = std::max(m, word.trailing_e1());
  return m;
}

}  // namespace

RegDecomposition reg(const WordPoly<Rat>& w, Prod p) {
  if (!w.supported_in_h1()) throw std::invalid_argument("reg: support must lie in H^1");
  RegDecomposition d;
  d.comp.resize(max_trailing(w) + 1);
  WordPoly<Rat> rest = w;
  for (size_t m = d.comp.size() - 1; m >= 1; --m) {
    // words with exactly m trailing e1 letters; handling them can only create
    // words with fewer
    std::vector<std::pair<Word, Rat>> level;
    for (const auto& [word, c] : rest.terms())
      if (word.trailing_e1() == m) level.emplace_back(word, c);
    for (const auto& [word, c] : level) {
      Word u = word;
      for (size_t j = 0; j < m; ++j) u = u.dropped_last();
      // word = (u * e1^{*m})/m! - R/m! with R supported on smaller trailing
      // runs; q contains m!*word, so this removes the term and pushes the
      // remainder down a level
      WordPoly<Rat> q = product(WordPoly<Rat>(u, Rat(1)), e1_power(m, p), p);
      Rat inv_mf = Rat(1) / Rat(factorial(static_cast<unsigned>(m)));
      d.comp[m].add_term(u, c);
      rest -= q * (c * inv_mf);
    }
  }
  d.comp[0] = rest;
  return d;
}

WordPoly<Rat> reassemble(const RegDecomposition& d, Prod p) {
  WordPoly<Rat> out;
  for (size_t i = 0; i < d.comp.size(); ++i) {
    Rat inv_if = Rat(1) / Rat(factorial(static_cast<unsigned>(i)));
    out += product(d.comp[i] * inv_if, e1_power(i, p), p);
  }
  return out;
}

TPoly zeta_reg_word(const WordPoly<Rat>& w, Prod p) {
  RegDecomposition d = reg(w, p);
  TPoly out;
  Rat fact = 1;
  for (size_t i = 0; i < d.comp.size(); ++i) {
    if (i > 0) fact *= Rat(static_cast<unsigned>(i));
    BigReal z = 0;
    for (const auto& [word, c] : d.comp[i].terms()) z += BigReal(c) * mzv(index_of_word(word));
    out += TPoly::monomial(z / BigReal(fact), static_cast<unsigned>(i));
  }
  return out;
}

TPoly zeta_reg(const Index& k, Prod p) {
  return zeta_reg_word(WordPoly<Rat>(word_of_index(k), Rat(1)), p);
}

TPoly zeta_t_reg(const Index& k, const Rat& t, Prod p) {
  return zeta_reg_word(S_t(k, t, Rat(1)), p);
}

namespace {

template <class S, class F>
S sym_convolution(const Index& k, const S& T_probe, F&& regpoly) {
  size_t r = k.depth();
  S acc{};
  for (size_t i = 0; i <= r; ++i) {
    unsigned tail_wt = 0;
    for (size_t j = i; j < r; ++j) tail_wt += k[j];
    TPoly left = regpoly(k.prefix(i));
    TPoly right = regpoly(k.suffix(i).reversed());
    S v = left.template eval<S>(T_probe) * right.template eval<S>(T_probe);
    if (tail_wt % 2) acc -= v;
    else acc += v;
  }
  return acc;
}

}  // namespace

BigReal zeta_sym(const Index& k, Prod p, const BigReal& T_probe) {
  return sym_convolution<BigReal>(k, T_probe, [p](const Index& i) { return zeta_reg(i, p); });
}

BigReal zeta_t_sym(const Index& k, const Rat& t, Prod p, const BigReal& T_probe) {
  return sym_convolution<BigReal>(k, T_probe,
                                  [p, &t](const Index& i) { return zeta_t_reg(i, t, p); });
}

BigComplex zeta_t_sym_c(const Index& k, const Rat& t, Prod p, const BigComplex& T_probe) {
  return sym_convolution<BigComplex>(k, T_probe,
                                     [p, &t](const Index& i) { return zeta_t_reg(i, t, p); });
}

}  // namespace mzvlab
