#pragma once

#include <array>
#include <map>
#include <string>

#include "torsionlab/qfield.hpp"

namespace torsionlab {

// Polynomial in x, y, z over K.
class MPoly {
 public:
  using Mono = std::array<int, 3>;

  MPoly() = default;
  static MPoly constant(const QuadElem& c);
  static MPoly var(int i);  // 0: x, 1: y, 2: z
  // Integer-coefficient text such as "2*x^2*y - 3*y*z^2 + 1" (implicit * also allowed: "2x^2y").
  static MPoly parse(const std::string& text);

  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, QuadElem>& terms() const { return t_; }
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;

  QuadElem eval(const QuadElem& x, const QuadElem& y, const QuadElem& z) const;
  // Substitute polynomials for x, y, z.
  MPoly compose(const MPoly& X, const MPoly& Y, const MPoly& Z) const;
  // Coefficient of var^k as a polynomial in the other variables.
  MPoly coeff(int var, int k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly pow(int e) const;
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void add_term(const Mono& m, const QuadElem& c);
  std::map<Mono, QuadElem> t_;
};

}  // namespace torsionlab
