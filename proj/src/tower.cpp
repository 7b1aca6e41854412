#include "torsionlab/tower.hpp"

#include "torsionlab/errors.hpp"

namespace torsionlab {

QuadElem normalize_twist_parameter(const QuadElem& d) {
  if (!d.is_rational()) return d;
  const Rat& q = d.a();
  if (sgn(q) == 0) throw SquareTwistParameter("d = 0");
  Int s = squarefree_part(Int(q.get_num() * q.get_den()));
  return QuadElem(Rat(s), 0, d.tag());
}

TowerTag::TowerTag(FieldTag base, const QuadElem& d) : base_(base), d_(normalize_twist_parameter(d.with_tag(base))) {
  if (d_.is_zero() || sqrt_in_K(d_)) throw SquareTwistParameter(d.str() + " is a square in K");
}

std::string TowerTag::str() const {
  return "K(sqrt(" + d_.str() + ")), D=" + std::to_string(base_.D());
}

TowerElem::TowerElem(std::shared_ptr<const TowerTag> tag, QuadElem u, QuadElem v)
    : tag_(std::move(tag)), u_(std::move(u)), v_(std::move(v)) {
  u_ = u_.with_tag(tag_->base());
  v_ = v_.with_tag(tag_->base());
}

TowerElem TowerElem::sqrt_d(std::shared_ptr<const TowerTag> tag) { return TowerElem(std::move(tag), 0, 1); }

void TowerElem::check(const TowerElem& o) const {
  if (tag_ != o.tag_ && !(*tag_ == *o.tag_)) throw MixedFields(tag_->str() + " vs " + o.tag_->str());
}

TowerElem TowerElem::sigma() const { return TowerElem(tag_, u_, -v_); }

QuadElem TowerElem::norm() const { return u_ * u_ - tag_->d() * v_ * v_; }

TowerElem TowerElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of 0 in L");
  QuadElem n = norm();
  return TowerElem(tag_, u_ / n, -v_ / n);
}

TowerElem& TowerElem::operator+=(const TowerElem& o) {
  check(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& o) {
  check(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

TowerElem& TowerElem::operator*=(const TowerElem& o) {
  check(o);
  if (v_.is_zero() && o.v_.is_zero()) {
    u_ *= o.u_;
    return *this;
  }
  QuadElem nu = u_ * o.u_ + tag_->d() * v_ * o.v_;
  QuadElem nv = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(nu);
  v_ = std::move(nv);
  return *this;
}

TowerElem& TowerElem::operator/=(const TowerElem& o) {
  check(o);
  if (o.is_zero()) throw DivisionByZero("division by 0 in L");
  if (o.v_.is_zero()) {
    u_ /= o.u_;
    v_ /= o.u_;
    return *this;
  }
  return *this *= o.inverse();
}

bool TowerElem::operator<(const TowerElem& o) const {
  if (u_ != o.u_) return u_ < o.u_;
  return v_ < o.v_;
}

std::string TowerElem::str() const {
  if (v_.is_zero()) return u_.str();
  std::string vs = v_ == QuadElem(1) ? "s" : "(" + v_.str() + ")*s";
  if (u_.is_zero()) return vs;
  return u_.str() + " + " + vs;
}

std::string to_string(const TowerElem& x) { return x.str(); }

namespace {

TowerElem canonical_sign(const TowerElem& y) {
  for (const Rat* c : {&y.u().a(), &y.u().b(), &y.v().a(), &y.v().b()}) {
    if (sgn(*c) > 0) return y;
    if (sgn(*c) < 0) return -y;
  }
  return y;
}

}  // namespace

std::optional<TowerElem> sqrt_in_L(const TowerElem& x) {
  const auto& tag = x.tag();
  const QuadElem& d = tag->d();
  if (x.v().is_zero()) {
    if (auto r = sqrt_in_K(x.u())) return canonical_sign(TowerElem(tag, *r));
    if (auto r = sqrt_in_K(x.u() / d)) return canonical_sign(TowerElem(tag, 0, *r));
    return std::nullopt;
  }
  auto delta = sqrt_in_K(x.norm());
  if (!delta) return std::nullopt;
  for (int s : {1, -1}) {
    QuadElem p2 = (x.u() + QuadElem(s) * *delta) / QuadElem(2);
    auto p = sqrt_in_K(p2);
    if (!p || p->is_zero()) continue;
    TowerElem y(tag, *p, x.v() / (QuadElem(2) * *p));
    if (y * y == x) return canonical_sign(y);
  }
  return std::nullopt;
}

bool contains_sqrt(const QuadElem& c, const std::shared_ptr<const TowerTag>& tag) {
  return sqrt_in_L(TowerElem(tag, c)).has_value();
}

}  // namespace torsionlab
