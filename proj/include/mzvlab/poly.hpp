#pragma once

#include "mzvlab/rings.hpp"

#include <vector>

namespace mzvlab {

// Ring helpers used by the generic containers. Each coefficient ring supplies
// is_zero plus conversion from an exact rational "through" a prototype element
// (the prototype carries the modulus for residue rings).

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const Int& x) { return x == 0; }
inline bool is_zero(const BigReal& x) { return x == 0; }
inline bool is_zero(const BigComplex& x) { return x.re == 0 && x.im == 0; }
inline bool is_zero(const Residue& x) { return x.value() == 0; }
inline bool is_zero(const Residue2& x) { return x.value() == 0; }

inline Rat with_proto(const Rat&, const Rat& q) { return q; }
inline BigReal with_proto(const BigReal&, const Rat& q) { return BigReal(q); }
inline BigComplex with_proto(const BigComplex&, const Rat& q) { return BigComplex(BigReal(q)); }
inline Residue with_proto(const Residue& proto, const Rat& q) {
  return Residue::from_rat(q, proto.modulus());
}
inline Residue2 with_proto(const Residue2& proto, const Rat& q) {
  return Residue2::from_rat(q, proto.prime());
}

inline Rat ring_inv(const Rat& x) { return Rat(1) / x; }
inline BigReal ring_inv(const BigReal& x) { return 1 / x; }
inline BigComplex ring_inv(const BigComplex& x) { return BigComplex(BigReal(1)) / x; }
inline Residue ring_inv(const Residue& x) { return x.inv(); }
inline Residue2 ring_inv(const Residue2& x) { return x.inv(); }

// Dense univariate polynomial over R. Used for Q[t] and for the regularized
// T-polynomials with numeric coefficients.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(R c) { c_.push_back(std::move(c)); trim(); }
  static Poly monomial(R c, unsigned deg) {
    Poly p;
    p.c_.assign(deg + 1, R{});
    p.c_[deg] = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  R coeff(unsigned i) const { return i < c_.size() ? c_[i] : R{}; }
  const std::vector<R>& coeffs() const { return c_; }
  bool zero() const { return c_.empty(); }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R{});
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R{});
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = R{} - c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, R{});
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  template <class S>
  S eval(const S& x) const {
    S acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
Poly<R> ring_inv(const Poly<R>& p) {
  if (p.degree() != 0) throw std::invalid_argument("ring_inv: polynomial of positive degree");
  return Poly<R>(ring_inv(p.coeff(0)));
}

using RatPoly = Poly<Rat>;  // exact polynomials in the interpolation variable t
using TPoly = Poly<BigReal>;
using TPolyC = Poly<BigComplex>;

template <class R>
bool is_zero(const Poly<R>& p) { return p.zero(); }

template <class R>
Poly<R> with_proto(const Poly<R>& proto, const Rat& q) {
  R inner = proto.zero() ? R{} : proto.coeff(0);
  return Poly<R>(with_proto(inner, q));
}

// Evaluate an exact Q[t] polynomial in any ring, routing the rational
// coefficients through with_proto (needed for residue-valued t).
template <class S>
S eval_ratpoly(const RatPoly& p, const S& x, const S& one) {
  S acc{};
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + with_proto(one, p.coeff(static_cast<unsigned>(i)));
  return acc;
}

}  // namespace mzvlab
