#pragma once

#include <optional>
#include <string>
#include <utility>

#include "torsionlab/arith.hpp"

namespace torsionlab {

// Q(sqrt D). D = 0 denotes Q itself; such elements mix freely with any field.
class FieldTag {
 public:
  FieldTag() = default;
  // Enforces D in the nine class-number-one values (or 0 for Q).
  explicit FieldTag(long D);
  // Any square-free D != 1, used for auxiliary fields like Q(sqrt 5).
  static FieldTag quadratic(long D);
  static FieldTag rationals() { return FieldTag(); }

  long D() const { return D_; }
  bool is_rational() const { return D_ == 0; }
  bool in_S() const;            // class number one, excluding D = -1, -3
  bool is_class_number_one() const;
  bool omega_is_half() const;   // D = 1 mod 4, omega = (1 + sqrt D)/2
  long discriminant() const;

  bool operator==(const FieldTag& o) const { return D_ == o.D_; }
  bool operator!=(const FieldTag& o) const { return D_ != o.D_; }

  static const long kNine[9];
  static const long kS[7];

 private:
  long D_ = 0;
};

class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long n) : a_(n) {}  // NOLINT: rational constants mix with any field
  QuadElem(Rat a) : a_(std::move(a)) {}  // NOLINT
  QuadElem(Rat a, Rat b, FieldTag tag);

  static QuadElem sqrtD(FieldTag tag) { return QuadElem(0, 1, tag); }
  static QuadElem omega(FieldTag tag);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  FieldTag tag() const { return tag_; }
  long D() const { return tag_.D(); }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadElem conj() const;
  Rat norm() const;
  Rat trace() const;
  QuadElem inverse() const;
  // Coordinates with respect to (1, omega).
  std::pair<Rat, Rat> omega_coords() const;

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  bool operator==(const QuadElem& o) const;
  bool operator!=(const QuadElem& o) const { return !(*this == o); }
  // Lexicographic on (a, b); used only for deterministic ordering.
  bool operator<(const QuadElem& o) const;

  // Canonical text "a + b*w".
  std::string str() const;
  // Same element with the given field (requires compatible tags).
  QuadElem with_tag(FieldTag t) const;

 private:
  Rat a_, b_;
  FieldTag tag_;
};

FieldTag merge_tags(FieldTag x, FieldTag y);

bool is_integral(const QuadElem& x);
// Least positive integer c with c*x in Z[omega].
Int integral_denominator(const QuadElem& x);
std::optional<QuadElem> sqrt_in_K(const QuadElem& x);
bool is_square_in_K(const QuadElem& x);
QuadElem pow(const QuadElem& x, long e);

std::string to_string(const QuadElem& x);

enum class SplitKind { split, inert, ramified };
const char* to_string(SplitKind k);

struct PrimeIdealRep {
  long p = 0;
  SplitKind kind = SplitKind::inert;
  long r = 0;  // r^2 = D mod p for split/ramified
  FieldTag tag;
  std::string str() const;
};

PrimeIdealRep splitting_type(long p, FieldTag tag);
// The conjugate prime above a split p (r -> -r).
PrimeIdealRep conjugate_prime(const PrimeIdealRep& P);

class FFElem;
FFElem reduce_mod(const QuadElem& x, const PrimeIdealRep& P);

// Finds a + b*omega congruent to c modulo p^k under the embedding omega -> omega_image,
// with max(|a|,|b|) <= bound.
std::optional<QuadElem> reconstruct_from_residue(const Int& c, const Int& pk, FieldTag tag,
                                                 const Int& omega_image, const Int& bound);
// Convenience form: p^k = P.p^k, omega image computed by lifting P.r.
std::optional<QuadElem> reconstruct_from_residue(const Int& c, long p, int k,
                                                 const PrimeIdealRep& P, const Int& bound);
// Image of x in Z/p^k for the split prime with sqrt(D) -> sqrtD_image.
Int residue_mod(const QuadElem& x, const Int& pk, const Int& sqrtD_image);
// Hensel lift of P.r to a square root of D modulo p^k.
Int lift_sqrt_D(const PrimeIdealRep& P, int k);

QuadElem parse_elem(const std::string& text, FieldTag tag);

}  // namespace torsionlab
