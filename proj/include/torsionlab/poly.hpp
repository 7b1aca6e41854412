#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torsionlab/errors.hpp"
#include "torsionlab/field_traits.hpp"

namespace torsionlab {

// Dense univariate polynomial, coefficients low to high. A zero element of the
// coefficient field is carried along so constants can be built without context.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F zero) : zero_(std::move(zero)) {}
  Poly(std::vector<F> c, F zero) : c_(std::move(c)), zero_(std::move(zero)) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}, from_int(c, 0)); }
  static Poly x(const F& like) { return Poly(std::vector<F>{from_int(like, 0), from_int(like, 1)}, from_int(like, 0)); }
  static Poly monomial(const F& c, int deg) {
    std::vector<F> v(deg + 1, from_int(c, 0));
    v[deg] = c;
    return Poly(std::move(v), from_int(c, 0));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& zero() const { return zero_; }
  F operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : zero_; }
  const F& lead() const { return c_.back(); }

  F eval(const F& x) const {
    F r = zero_;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (torsionlab::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r), a.zero_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(const F& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
  }

  // Euclidean division over a field.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly r = *this;
    int dq = degree() - d.degree();
    if (dq < 0) return {Poly(zero_), r};
    std::vector<F> q(dq + 1, zero_);
    F inv = from_int(d.lead(), 1) / d.lead();
    for (int i = degree(); i >= d.degree(); --i) {
      if (i >= static_cast<int>(r.c_.size()) || torsionlab::is_zero(r.c_[i])) continue;
      F t = r.c_[i] * inv;
      q[i - d.degree()] = t;
      for (int j = 0; j <= d.degree(); ++j) r.c_[i - d.degree() + j] -= t * d.c_[j];
    }
    r.trim();
    return {Poly(std::move(q), zero_), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  Poly derivative() const {
    if (degree() <= 0) return Poly(zero_);
    std::vector<F> r;
    for (int i = 1; i <= degree(); ++i) r.push_back(c_[i] * from_int(c_[i], i));
    return Poly(std::move(r), zero_);
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scale(from_int(lead(), 1) / lead());
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(c_ == o.c_); }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (torsionlab::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      std::string cs = to_string(c_[i]);
      bool paren = cs.find_first_of("+ ") != std::string::npos;
      if (paren) cs = "(" + cs + ")";
      if (i == 0)
        s += cs;
      else {
        if (cs != "1") s += cs + "*";
        s += i == 1 ? var : var + "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && torsionlab::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
  F zero_{};
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& z = a.zero();
  Poly<F> r0 = a, r1 = b, s0 = Poly<F>::constant(from_int(z, 1)), s1(z), t0(z), t1 = Poly<F>::constant(from_int(z, 1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = from_int(z, 1) / r0.lead();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
  if (f.degree() <= 0) return f.monic();
  return (f / poly_gcd(f, f.derivative())).monic();
}

template <class F>
Poly<F> poly_pow(Poly<F> b, int e) {
  Poly<F> r = Poly<F>::constant(from_int(b.zero(), 1));
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace torsionlab
