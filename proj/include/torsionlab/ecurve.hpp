#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/errors.hpp"
#include "torsionlab/field_traits.hpp"
#include "torsionlab/poly.hpp"

namespace torsionlab {

template <class F>
struct Point {
  bool inf = true;
  F x{}, y{};

  static Point infinity(const F& like) {
    Point P;
    P.x = from_int(like, 0);
    P.y = P.x;
    return P;
  }
  static Point affine(F x, F y) {
    Point P;
    P.inf = false;
    P.x = std::move(x);
    P.y = std::move(y);
    return P;
  }
  bool operator==(const Point& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }
  std::string str() const {
    if (inf) return "O";
    return "(" + to_string(x) + ", " + to_string(y) + ")";
  }
};

// Canonical print order: infinity first, then by printed x, then printed y.
template <class F>
bool point_print_less(const Point<F>& a, const Point<F>& b) {
  if (a.inf != b.inf) return a.inf;
  if (a.inf) return false;
  std::string ax = to_string(a.x), bx = to_string(b.x);
  if (ax != bx) return ax < bx;
  return to_string(a.y) < to_string(b.y);
}

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
// Curves built by alpha_beta remember (alpha, beta) of y^2 = x(x+alpha)(x+beta).
template <class F>
class Curve {
 public:
  Curve() = default;

  static Curve alpha_beta(F alpha, F beta) {
    F zero = from_int(alpha, 0);
    if (is_zero(alpha) || is_zero(beta) || alpha == beta)
      throw SingularCurve("E(" + to_string(alpha) + ", " + to_string(beta) + ") is singular");
    Curve E;
    E.a1_ = zero;
    E.a3_ = zero;
    E.a6_ = zero;
    E.a2_ = alpha + beta;
    E.a4_ = alpha * beta;
    E.alpha_ = std::move(alpha);
    E.beta_ = std::move(beta);
    E.ab_ = true;
    return E;
  }

  static Curve weierstrass(F a1, F a2, F a3, F a4, F a6) {
    Curve E;
    E.a1_ = std::move(a1);
    E.a2_ = std::move(a2);
    E.a3_ = std::move(a3);
    E.a4_ = std::move(a4);
    E.a6_ = std::move(a6);
    if (is_zero(E.discriminant())) throw SingularCurve("discriminant vanishes");
    return E;
  }

  bool is_ab() const { return ab_; }
  const F& alpha() const { return alpha_; }
  const F& beta() const { return beta_; }
  const F& a1() const { return a1_; }
  const F& a2() const { return a2_; }
  const F& a3() const { return a3_; }
  const F& a4() const { return a4_; }
  const F& a6() const { return a6_; }
  F zero() const { return from_int(a2_, 0); }
  F one() const { return from_int(a2_, 1); }
  F c(long n) const { return from_int(a2_, n); }

  F b2() const { return a1_ * a1_ + c(4) * a2_; }
  F b4() const { return c(2) * a4_ + a1_ * a3_; }
  F b6() const { return a3_ * a3_ + c(4) * a6_; }
  F b8() const {
    return a1_ * a1_ * a6_ + c(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  }
  F discriminant() const {
    F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - c(8) * B4 * B4 * B4 - c(27) * B6 * B6 + c(9) * B2 * B4 * B6;
  }

  // Right-hand side minus left-hand side at (x, y).
  F residual(const F& x, const F& y) const {
    return x * x * x + a2_ * x * x + a4_ * x + a6_ - y * y - a1_ * x * y - a3_ * y;
  }
  bool contains(const Point<F>& P) const { return P.inf || is_zero(residual(P.x, P.y)); }
  void require(const Point<F>& P) const {
    if (!contains(P)) throw PointNotOnCurve(P.str() + " is not on " + str());
  }

  // 4x^3 + b2 x^2 + 2 b4 x + b6 = (2y + a1 x + a3)^2.
  Poly<F> two_division() const {
    return Poly<F>({b6(), c(2) * b4(), b2(), c(4)}, zero());
  }

  // y-values above x (0, 1 or 2 of them).
  std::vector<F> ys_over(const F& x) const {
    F lin = a1_ * x + a3_;
    F disc = lin * lin + c(4) * (x * x * x + a2_ * x * x + a4_ * x + a6_);
    auto s = field_sqrt(disc);
    if (!s) return {};
    F two = c(2);
    F y1 = (-lin + *s) / two, y2 = (-lin - *s) / two;
    if (y1 == y2) return {y1};
    return {y1, y2};
  }

  std::string str() const {
    if (ab_) return "E(" + to_string(alpha_) + ", " + to_string(beta_) + ")";
    return "[" + to_string(a1_) + ", " + to_string(a2_) + ", " + to_string(a3_) + ", " + to_string(a4_) + ", " +
           to_string(a6_) + "]";
  }

 private:
  F a1_{}, a2_{}, a3_{}, a4_{}, a6_{};
  F alpha_{}, beta_{};
  bool ab_ = false;
};

template <class F>
Point<F> point_neg(const Point<F>& P, const Curve<F>& E) {
  if (P.inf) return P;
  return Point<F>::affine(P.x, -P.y - E.a1() * P.x - E.a3());
}

template <class F>
Point<F> point_add(const Point<F>& P, const Point<F>& Q, const Curve<F>& E) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  F lambda, nu;
  if (P.x == Q.x) {
    F den = P.y + Q.y + E.a1() * Q.x + E.a3();
    if (is_zero(den)) return Point<F>::infinity(P.x);
    // doubling (P == Q since the x agree and P != -Q)
    F d = E.c(2) * P.y + E.a1() * P.x + E.a3();
    lambda = (E.c(3) * P.x * P.x + E.c(2) * E.a2() * P.x + E.a4() - E.a1() * P.y) / d;
    nu = (-P.x * P.x * P.x + E.a4() * P.x + E.c(2) * E.a6() - E.a3() * P.y) / d;
  } else {
    F dx = Q.x - P.x;
    lambda = (Q.y - P.y) / dx;
    nu = (P.y * Q.x - Q.y * P.x) / dx;
  }
  F x3 = lambda * lambda + E.a1() * lambda - E.a2() - P.x - Q.x;
  F y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return Point<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
Point<F> point_sub(const Point<F>& P, const Point<F>& Q, const Curve<F>& E) {
  return point_add(P, point_neg(Q, E), E);
}

template <class F>
Point<F> point_mul(long n, const Point<F>& P, const Curve<F>& E) {
  if (n < 0) return point_mul(-n, point_neg(P, E), E);
  Point<F> R = Point<F>::infinity(E.zero()), B = P;
  while (n > 0) {
    if (n & 1) R = point_add(R, B, E);
    n >>= 1;
    if (n) B = point_add(B, B, E);
  }
  return R;
}

template <class F>
std::optional<long> order_of_point(const Point<F>& P, const Curve<F>& E, long cap) {
  Point<F> Q = P;
  for (long k = 1; k <= cap; ++k) {
    if (Q.inf) return k;
    Q = point_add(Q, P, E);
  }
  return std::nullopt;
}

template <class F>
std::vector<Point<F>> two_torsion(const Curve<F>& E) {
  if (!E.is_ab()) throw Error("UnsupportedModel", "two_torsion needs y^2 = x(x+alpha)(x+beta)");
  F z = E.zero();
  return {Point<F>::infinity(z), Point<F>::affine(z, z), Point<F>::affine(-E.alpha(), z),
          Point<F>::affine(-E.beta(), z)};
}

// All Q with 2Q = P, built from sqrt(x), sqrt(x+alpha), sqrt(x+beta).
template <class F>
std::vector<Point<F>> halve_point(const Point<F>& P, const Curve<F>& E) {
  if (!E.is_ab()) throw Error("UnsupportedModel", "halving needs y^2 = x(x+alpha)(x+beta)");
  std::vector<Point<F>> out;
  if (P.inf) return out;
  auto r1 = field_sqrt(P.x);
  if (!r1) return out;
  auto r2 = field_sqrt(P.x + E.alpha());
  if (!r2) return out;
  auto r3 = field_sqrt(P.x + E.beta());
  if (!r3) return out;
  std::vector<F> xs;
  for (int s2 : {1, -1})
    for (int s3 : {1, -1}) {
      F a = *r1, b = s2 > 0 ? *r2 : -*r2, c = s3 > 0 ? *r3 : -*r3;
      F xq = P.x + a * b + a * c + b * c;
      if (std::find(xs.begin(), xs.end(), xq) == xs.end()) xs.push_back(xq);
    }
  for (const F& xq : xs)
    for (const F& yq : E.ys_over(xq)) {
      Point<F> Q = Point<F>::affine(xq, yq);
      if (point_add(Q, Q, E) == P) out.push_back(Q);
    }
  std::sort(out.begin(), out.end(), point_print_less<F>);
  return out;
}

// Division polynomials f_n in x: f_n = psi_n for odd n, psi_n / psi_2 for even n.
template <class F>
Poly<F> division_poly_x(const Curve<F>& E, int n) {
  F z = E.zero();
  F b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
  Poly<F> Fsq = E.two_division();
  Fsq = Fsq * Fsq;
  std::vector<Poly<F>> f;
  f.push_back(Poly<F>(z));
  f.push_back(Poly<F>::constant(E.one()));
  f.push_back(Poly<F>::constant(E.one()));
  f.push_back(Poly<F>({b8, E.c(3) * b6, E.c(3) * b4, b2, E.c(3)}, z));
  f.push_back(Poly<F>({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, E.c(10) * b8, E.c(10) * b6, E.c(5) * b4, b2, E.c(2)}, z));
  for (int k = 5; k <= n; ++k) {
    int m = k / 2;
    if (k % 2) {
      if (m % 2 == 0)
        f.push_back(Fsq * f[m + 2] * poly_pow(f[m], 3) - f[m - 1] * poly_pow(f[m + 1], 3));
      else
        f.push_back(f[m + 2] * poly_pow(f[m], 3) - Fsq * f[m - 1] * poly_pow(f[m + 1], 3));
    } else {
      f.push_back(f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]));
    }
  }
  return f[n];
}

// Curves over a finite field: count points via the quadratic character.
long count_points(const Curve<FFElem>& E);

}  // namespace torsionlab
