#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torsionlab {

// GF(p^k) with elements encoded as integers sum c_i p^i (c_i the coefficient of x^i).
// Instances are interned and never destroyed, so raw pointers to them stay valid.
class FiniteField {
 public:
  using Rep = std::uint32_t;

  static const FiniteField& prime(long p);
  // F_p[x]/(x^2 - D), D a non-residue mod p.
  static const FiniteField& quadratic(long p, long D);
  // Degree-k extension with the first irreducible monic modulus in search order.
  static const FiniteField& extension(long p, int k);

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  Rep from_int(long n) const;
  Rep from_digits(const std::vector<long>& c) const;
  std::vector<long> digits(Rep a) const;

  Rep add(Rep a, Rep b) const;
  Rep sub(Rep a, Rep b) const;
  Rep neg(Rep a) const;
  Rep mul(Rep a, Rep b) const;
  Rep inv(Rep a) const;
  Rep pow(Rep a, long e) const;
  // Quadratic character: 0, 1 or -1.
  int chi(Rep a) const;
  std::optional<Rep> sqrt(Rep a) const;

  std::string str(Rep a) const;
  std::string name() const;

  FiniteField(long p, std::vector<long> modulus);

 private:
  Rep poly_mul_slow(Rep a, Rep b) const;

  long p_;
  int k_;
  long q_;
  std::vector<long> modulus_;
  std::vector<std::int32_t> log_, exp_;
  std::vector<std::uint16_t> add_;
  std::vector<std::int32_t> root_;
};

class FFElem {
 public:
  FFElem() = default;
  FFElem(const FiniteField& F, FiniteField::Rep v) : F_(&F), v_(v) {}
  static FFElem from_int(const FiniteField& F, long n) { return FFElem(F, F.from_int(n)); }

  const FiniteField& field() const { return *F_; }
  FiniteField::Rep rep() const { return v_; }
  // Coordinates in F_p[x]/(m): c0 + c1 x + ...
  long coord(int i) const;
  bool is_zero() const { return v_ == 0; }

  FFElem operator-() const { return FFElem(*F_, F_->neg(v_)); }
  FFElem& operator+=(const FFElem& o);
  FFElem& operator-=(const FFElem& o);
  FFElem& operator*=(const FFElem& o);
  FFElem& operator/=(const FFElem& o);
  friend FFElem operator+(FFElem x, const FFElem& y) { return x += y; }
  friend FFElem operator-(FFElem x, const FFElem& y) { return x -= y; }
  friend FFElem operator*(FFElem x, const FFElem& y) { return x *= y; }
  friend FFElem operator/(FFElem x, const FFElem& y) { return x /= y; }
  bool operator==(const FFElem& o) const { return F_ == o.F_ && v_ == o.v_; }
  bool operator!=(const FFElem& o) const { return !(*this == o); }
  bool operator<(const FFElem& o) const { return v_ < o.v_; }

  std::string str() const { return F_->str(v_); }

 private:
  void check(const FFElem& o) const;
  const FiniteField* F_ = nullptr;
  FiniteField::Rep v_ = 0;
};

std::string to_string(const FFElem& x);

}  // namespace torsionlab
