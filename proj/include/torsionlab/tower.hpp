#pragma once

#include <memory>
#include <optional>
#include <string>

#include "torsionlab/qfield.hpp"

namespace torsionlab {

// L = K(sqrt d). Rational d is reduced to its square-free part.
class TowerTag {
 public:
  TowerTag(FieldTag base, const QuadElem& d);  // throws SquareTwistParameter
  FieldTag base() const { return base_; }
  const QuadElem& d() const { return d_; }
  bool operator==(const TowerTag& o) const { return base_ == o.base_ && d_ == o.d_; }
  std::string str() const;

 private:
  FieldTag base_;
  QuadElem d_;
};

QuadElem normalize_twist_parameter(const QuadElem& d);

class TowerElem {
 public:
  TowerElem() = default;
  TowerElem(std::shared_ptr<const TowerTag> tag, QuadElem u, QuadElem v = QuadElem());
  static TowerElem lift(std::shared_ptr<const TowerTag> tag, const QuadElem& u) { return TowerElem(std::move(tag), u); }
  static TowerElem sqrt_d(std::shared_ptr<const TowerTag> tag);

  const QuadElem& u() const { return u_; }
  const QuadElem& v() const { return v_; }
  const std::shared_ptr<const TowerTag>& tag() const { return tag_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool in_base() const { return v_.is_zero(); }

  TowerElem sigma() const;
  QuadElem norm() const;  // relative norm to K
  TowerElem inverse() const;

  TowerElem operator-() const { return TowerElem(tag_, -u_, -v_); }
  TowerElem& operator+=(const TowerElem& o);
  TowerElem& operator-=(const TowerElem& o);
  TowerElem& operator*=(const TowerElem& o);
  TowerElem& operator/=(const TowerElem& o);
  friend TowerElem operator+(TowerElem x, const TowerElem& y) { return x += y; }
  friend TowerElem operator-(TowerElem x, const TowerElem& y) { return x -= y; }
  friend TowerElem operator*(TowerElem x, const TowerElem& y) { return x *= y; }
  friend TowerElem operator/(TowerElem x, const TowerElem& y) { return x /= y; }
  bool operator==(const TowerElem& o) const { return u_ == o.u_ && v_ == o.v_; }
  bool operator!=(const TowerElem& o) const { return !(*this == o); }
  bool operator<(const TowerElem& o) const;

  // "u + v*s" with s = sqrt(d).
  std::string str() const;

 private:
  void check(const TowerElem& o) const;
  std::shared_ptr<const TowerTag> tag_;
  QuadElem u_, v_;
};

inline TowerElem galois_sigma(const TowerElem& x) { return x.sigma(); }
std::optional<TowerElem> sqrt_in_L(const TowerElem& x);
bool contains_sqrt(const QuadElem& c, const std::shared_ptr<const TowerTag>& tag);
std::string to_string(const TowerElem& x);

}  // namespace torsionlab
