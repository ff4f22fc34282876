#pragma once

#include "mzvlab/words.hpp"

namespace mzvlab {

enum class Prod { stuffle, shuffle };

// w = sum_i (comp[i]/i!) * e1^{*i} under the chosen product; every comp[i] is
// supported on H^0 words.
struct RegDecomposition {
  std::vector<WordPoly<Rat>> comp;

  const WordPoly<Rat>& level(size_t i) const {
    static const WordPoly<Rat> empty;
    return i < comp.size() ? comp[i] : empty;
  }
  size_t degree() const { return comp.empty() ? 0 : comp.size() - 1; }
};

WordPoly<Rat> product(const WordPoly<Rat>& u, const WordPoly<Rat>& v, Prod p);

RegDecomposition reg(const WordPoly<Rat>& w, Prod p);

// exact inverse of reg, for the reassembly property
WordPoly<Rat> reassemble(const RegDecomposition& d, Prod p);

// zeta^bullet(k; T) and friends: T-polynomials with numeric coefficients.
TPoly zeta_reg_word(const WordPoly<Rat>& w, Prod p);
TPoly zeta_reg(const Index& k, Prod p);
TPoly zeta_t_reg(const Index& k, const Rat& t, Prod p);

// Symmetric values: bilinear convolution of regularized polynomials evaluated
// at a probe T; the result is T-independent (checked by callers/tests via a
// second probe). t-interpolated version uses the same t in both factors.
BigReal zeta_sym(const Index& k, Prod p, const BigReal& T_probe);
BigReal zeta_t_sym(const Index& k, const Rat& t, Prod p, const BigReal& T_probe);

// Same convolution with a complex probe (needed at T = -+ pi i / 2).
BigComplex zeta_t_sym_c(const Index& k, const Rat& t, Prod p, const BigComplex& T_probe);

}  // namespace mzvlab
