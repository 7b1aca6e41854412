#include "torsionlab/qfield.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "torsionlab/errors.hpp"
#include "torsionlab/finite_field.hpp"

namespace torsionlab {

const long FieldTag::kNine[9] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
const long FieldTag::kS[7] = {-2, -7, -11, -19, -43, -67, -163};

FieldTag::FieldTag(long D) : D_(D) {
  if (D == 0) return;
  if (std::find(std::begin(kNine), std::end(kNine), D) == std::end(kNine))
    throw UnsupportedField("D=" + std::to_string(D) + " is not one of the nine class-number-one fields");
}

FieldTag FieldTag::quadratic(long D) {
  FieldTag t;
  if (D == 0) return t;
  if (D == 1 || !is_squarefree(D)) throw UnsupportedField("D=" + std::to_string(D) + " is not square-free");
  t.D_ = D;
  return t;
}

bool FieldTag::in_S() const { return std::find(std::begin(kS), std::end(kS), D_) != std::end(kS); }

bool FieldTag::is_class_number_one() const {
  return std::find(std::begin(kNine), std::end(kNine), D_) != std::end(kNine);
}

bool FieldTag::omega_is_half() const { return D_ != 0 && mod_norm(D_, 4) == 1; }

long FieldTag::discriminant() const {
  if (D_ == 0) return 1;
  return omega_is_half() ? D_ : 4 * D_;
}

FieldTag merge_tags(FieldTag x, FieldTag y) {
  if (x == y || y.is_rational()) return x;
  if (x.is_rational()) return y;
  throw MixedFields("Q(sqrt " + std::to_string(x.D()) + ") and Q(sqrt " + std::to_string(y.D()) + ")");
}

QuadElem::QuadElem(Rat a, Rat b, FieldTag tag) : a_(std::move(a)), b_(std::move(b)), tag_(tag) {
  a_.canonicalize();
  b_.canonicalize();
  if (tag_.is_rational() && sgn(b_) != 0) throw MixedFields("irrational coordinate on a rational element");
}

QuadElem QuadElem::omega(FieldTag tag) {
  if (tag.omega_is_half()) return QuadElem(Rat(1, 2), Rat(1, 2), tag);
  return QuadElem(0, 1, tag);
}

QuadElem QuadElem::conj() const { return QuadElem(a_, -b_, tag_); }

Rat QuadElem::norm() const { return a_ * a_ - Rat(tag_.D()) * b_ * b_; }

Rat QuadElem::trace() const { return 2 * a_; }

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of 0");
  Rat n = norm();
  return QuadElem(a_ / n, -b_ / n, tag_);
}

std::pair<Rat, Rat> QuadElem::omega_coords() const {
  if (tag_.omega_is_half()) return {Rat(a_ - b_), Rat(2 * b_)};
  return {a_, b_};
}

QuadElem QuadElem::operator-() const {
  QuadElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  tag_ = merge_tags(tag_, o.tag_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  tag_ = merge_tags(tag_, o.tag_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  tag_ = merge_tags(tag_, o.tag_);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rat na = a_ * o.a_ + Rat(tag_.D()) * b_ * o.b_;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  if (o.is_zero()) throw DivisionByZero("division by 0");
  if (sgn(o.b_) == 0) {
    tag_ = merge_tags(tag_, o.tag_);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool QuadElem::operator==(const QuadElem& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  return sgn(b_) == 0 || tag_ == o.tag_;
}

bool QuadElem::operator<(const QuadElem& o) const {
  if (a_ != o.a_) return a_ < o.a_;
  return b_ < o.b_;
}

QuadElem QuadElem::with_tag(FieldTag t) const {
  return QuadElem(a_, b_, merge_tags(t, tag_));
}

std::string QuadElem::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  auto coef = [](const Rat& c) -> std::string {
    if (c == 1) return "w";
    return c.get_str() + "*w";
  };
  if (sgn(a_) == 0) return sgn(b_) < 0 ? "-" + coef(-b_) : coef(b_);
  return a_.get_str() + (sgn(b_) > 0 ? " + " : " - ") + coef(abs(b_));
}

std::string to_string(const QuadElem& x) { return x.str(); }

bool is_integral(const QuadElem& x) {
  auto [A, B] = x.omega_coords();
  return A.get_den() == 1 && B.get_den() == 1;
}

Int integral_denominator(const QuadElem& x) {
  auto [A, B] = x.omega_coords();
  return lcm(A.get_den(), B.get_den());
}

namespace {

QuadElem canonical_sign(QuadElem y) {
  if (sgn(y.a()) < 0 || (sgn(y.a()) == 0 && sgn(y.b()) < 0)) return -y;
  return y;
}

}  // namespace

std::optional<QuadElem> sqrt_in_K(const QuadElem& x) {
  const FieldTag tag = x.tag();
  const Rat& a = x.a();
  const Rat& b = x.b();
  if (sgn(b) == 0) {
    if (auto r = rat_sqrt_exact(a)) return QuadElem(*r, 0, tag);
    if (tag.is_rational()) return std::nullopt;
    Rat t = a / Rat(tag.D());
    if (auto r = rat_sqrt_exact(t)) return QuadElem(0, *r, tag);
    return std::nullopt;
  }
  auto n = rat_sqrt_exact(x.norm());
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    Rat p2 = (a + s * *n) / 2;
    auto p = rat_sqrt_exact(p2);
    if (!p || sgn(*p) == 0) continue;
    QuadElem y(*p, b / (2 * *p), tag);
    if (y * y == x) return canonical_sign(y);
  }
  return std::nullopt;
}

bool is_square_in_K(const QuadElem& x) { return sqrt_in_K(x).has_value(); }

QuadElem pow(const QuadElem& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  QuadElem r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r.with_tag(x.tag());
}

const char* to_string(SplitKind k) {
  switch (k) {
    case SplitKind::split: return "split";
    case SplitKind::inert: return "inert";
    case SplitKind::ramified: return "ramified";
  }
  return "?";
}

std::string PrimeIdealRep::str() const {
  std::string s = "(" + std::to_string(p) + ", " + to_string(kind);
  if (kind != SplitKind::inert) s += ", r=" + std::to_string(r);
  return s + ")";
}

PrimeIdealRep splitting_type(long p, FieldTag tag) {
  if (!is_prime_small(p)) throw Error("NotPrime", std::to_string(p));
  PrimeIdealRep P;
  P.p = p;
  P.tag = tag;
  long D = tag.D();
  if (tag.is_rational()) {
    P.kind = SplitKind::split;
    P.r = 0;
    return P;
  }
  if (p == 2) {
    long m8 = mod_norm(D, 8);
    if (mod_norm(D, 4) != 1) {
      P.kind = SplitKind::ramified;
      P.r = mod_norm(D, 2);
    } else if (m8 == 1) {
      P.kind = SplitKind::split;
      P.r = 1;
    } else {
      P.kind = SplitKind::inert;
    }
    return P;
  }
  int l = legendre(D, p);
  if (l == 0) {
    P.kind = SplitKind::ramified;
    P.r = 0;
  } else if (l == 1) {
    P.kind = SplitKind::split;
    P.r = *sqrt_mod_prime(D, p);
  } else {
    P.kind = SplitKind::inert;
  }
  return P;
}

PrimeIdealRep conjugate_prime(const PrimeIdealRep& P) {
  PrimeIdealRep Q = P;
  Q.r = mod_norm(-P.r, P.p);
  return Q;
}

FFElem reduce_mod(const QuadElem& x, const PrimeIdealRep& P) {
  if (P.p == 2) throw NotSplitPrime("reduction at 2 is not supported");
  Int p(P.p);
  auto red = [&](const Rat& c) -> long {
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), P.p))
      throw DenominatorDivisibleByP(x.str() + " has " + std::to_string(P.p) + " in a denominator");
    return rat_mod(c, p).get_si();
  };
  long a = red(x.a()), b = red(x.b());
  if (P.kind == SplitKind::inert) {
    const FiniteField& F = FiniteField::quadratic(P.p, x.tag().is_rational() ? P.tag.D() : x.D());
    return FFElem(F, F.from_digits({a, b}));
  }
  const FiniteField& F = FiniteField::prime(P.p);
  return FFElem::from_int(F, a + b * P.r);
}

Int lift_sqrt_D(const PrimeIdealRep& P, int k) {
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), P.p, k);
  Int D(P.tag.D());
  Int s(P.r);
  if (P.tag.is_rational()) return 0;
  if (P.kind != SplitKind::split) throw NotSplitPrime(P.str());
  for (int guard = 0; guard < 64; ++guard) {
    Int e = mod_floor(s * s - D, pk);
    if (e == 0) return mod_floor(s, pk);
    Int inv, two_s = mod_floor(2 * s, pk);
    mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), pk.get_mpz_t());
    s = mod_floor(s - e * inv, pk);
  }
  throw PrecisionExhausted("Hensel lift of sqrt(D) did not converge");
}

Int residue_mod(const QuadElem& x, const Int& pk, const Int& sqrtD_image) {
  return mod_floor(rat_mod(x.a(), pk) + rat_mod(x.b(), pk) * sqrtD_image, pk);
}

namespace {

// Rounds a rational to the nearest integer (ties toward +inf).
Int round_rat(const Rat& q) {
  Rat h = q + Rat(1, 2);
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
  return r;
}

}  // namespace

std::optional<QuadElem> reconstruct_from_residue(const Int& c, const Int& pk, FieldTag tag,
                                                 const Int& omega_image, const Int& bound) {
  Int t = mod_floor(c, pk);
  if (tag.is_rational()) {
    Int a = t;
    if (2 * a > pk) a -= pk;
    if (abs(a) <= bound) return QuadElem(Rat(a));
    return std::nullopt;
  }
  // Lattice {(A,B): A + B*w = 0 mod pk}; Gauss reduction of its basis.
  std::array<Int, 2> b1 = {pk, 0}, b2 = {mod_floor(-omega_image, pk), 1};
  auto dot = [](const std::array<Int, 2>& u, const std::array<Int, 2>& v) -> Int {
    return u[0] * v[0] + u[1] * v[1];
  };
  if (dot(b1, b1) < dot(b2, b2)) std::swap(b1, b2);
  while (true) {
    // b2 is the shorter vector here
    Int n2 = dot(b2, b2);
    Int mu = round_rat(Rat(dot(b1, b2), n2));
    b1 = {Int(b1[0] - mu * b2[0]), Int(b1[1] - mu * b2[1])};
    if (dot(b1, b1) >= n2) break;
    std::swap(b1, b2);
  }
  // Solve (t, 0) = x1*b1 + x2*b2.
  Int det = b1[0] * b2[1] - b1[1] * b2[0];
  Rat x1(t * b2[1], det), x2(-t * b1[1], det);
  x1.canonicalize();
  x2.canonicalize();
  Int r1 = round_rat(x1), r2 = round_rat(x2);
  std::optional<std::pair<Int, Int>> best;
  Int best_norm;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      Int k1 = r1 + i, k2 = r2 + j;
      Int A = t - k1 * b1[0] - k2 * b2[0];
      Int B = -k1 * b1[1] - k2 * b2[1];
      Int m = std::max(abs(A), abs(B));
      if (m > bound) continue;
      if (!best || m < best_norm || (m == best_norm && std::make_pair(A, B) < *best)) {
        best = std::make_pair(A, B);
        best_norm = m;
      }
    }
  if (!best) return std::nullopt;
  const auto& [A, B] = *best;
  if (tag.omega_is_half()) return QuadElem(Rat(A) + Rat(B, 2), Rat(B, 2), tag);
  return QuadElem(Rat(A), Rat(B), tag);
}

std::optional<QuadElem> reconstruct_from_residue(const Int& c, long p, int k, const PrimeIdealRep& P,
                                                 const Int& bound) {
  if (P.kind != SplitKind::split || P.p != p) throw NotSplitPrime(P.str());
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  Int s = lift_sqrt_D(P, k);
  Int w = s;
  if (P.tag.omega_is_half()) w = rat_mod(Rat(1, 2), pk) * (1 + s);
  return reconstruct_from_residue(c, pk, P.tag, mod_floor(w, pk), bound);
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, FieldTag tag) : s_(s), tag_(tag) {}

  QuadElem parse() {
    QuadElem v = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  QuadElem expr() {
    QuadElem v = term();
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  QuadElem term() {
    QuadElem v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        QuadElem d = unary();
        if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
        v /= d;
      } else {
        return v;
      }
    }
  }
  QuadElem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }
  QuadElem primary() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QuadElem v = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return v;
    }
    if (c == 'w') {
      ++pos_;
      if (tag_.is_rational()) throw SyntaxError("'w' is not defined over Q", pos_ - 1);
      return QuadElem::sqrtD(tag_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QuadElem(Rat(Int(s_.substr(start, pos_ - start))));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  FieldTag tag_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadElem parse_elem(const std::string& text, FieldTag tag) {
  QuadElem v = Parser(text, tag).parse();
  return v.with_tag(tag);
}

}  // namespace torsionlab
