#include "torsionlab/modcurve.hpp"

#include <algorithm>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

Poly<Rat> rp(std::vector<long> c) {
  std::vector<Rat> r;
  for (long v : c) r.emplace_back(v);
  return Poly<Rat>(r, Rat(0));
}

QuadElem eval_rat_poly(const Poly<Rat>& p, const QuadElem& x) {
  QuadElem r = x * 0;
  for (int i = p.degree(); i >= 0; --i) r = r * x + QuadElem(p[i]);
  return r;
}

int sign_changes(const std::vector<int>& s) {
  int n = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++n;
    last = v;
  }
  return n;
}

}  // namespace

HyperModel hyper_model(int N) {
  HyperModel M;
  M.N = N;
  switch (N) {
    case 30:
      M.g = rp({0, 0, -1, -1, -1});
      M.h = rp({4, 28, 79, 121, 110, 60, 19, 3});
      M.f = rp({16, 112, 316, 484, 441, 242, 79, 14, 1});
      M.infinity = {"inf+ = [1,1,0]", "inf- = [1,0,0]"};
      break;
    case 40:
      M.f = rp({1, 0, 8, 0, -2, 0, 8, 0, 1});
      break;
    case 48:
      M.f = rp({1, 0, 0, 0, 14, 0, 0, 0, 1});
      break;
    default:
      throw UnknownName("no model for X0(" + std::to_string(N) + ")");
  }
  return M;
}

QuadElem model_eval(int N, ModelForm form, const QuadElem& x, const QuadElem& y) {
  HyperModel M = hyper_model(N);
  if (form == ModelForm::Long) {
    if (!M.g) throw UnsupportedField("X0(" + std::to_string(N) + ") has no long model here");
    return eval_rat_poly(*M.h, x) - y * y - eval_rat_poly(*M.g, x) * y;
  }
  return eval_rat_poly(M.f, x) - y * y;
}

bool long_short_identity() {
  HyperModel M = hyper_model(30);
  return *M.g * *M.g + rp({4}) * *M.h == M.f;
}

std::pair<QuadElem, QuadElem> long_to_short(const QuadElem& x, const QuadElem& y) {
  if (!model_eval(30, ModelForm::Long, x, y).is_zero())
    throw PointNotOnModel("(" + x.str() + ", " + y.str() + ") is not on the long X0(30) model");
  HyperModel M = hyper_model(30);
  QuadElem Y = QuadElem(2) * y + eval_rat_poly(*M.g, x);
  if (!model_eval(30, ModelForm::Short, x, Y).is_zero()) throw ConsistencyFailure("long_to_short image off y^2 = f30");
  return {x, Y};
}

std::vector<Rat> long_model_infinity_Y() {
  HyperModel M = hyper_model(30);
  // Y^2 + g4 Y - h8 = 0 with deg g = 4, deg h < 8.
  Rat g4 = (*M.g)[4], h8 = (*M.h)[8];
  Rat disc = g4 * g4 + 4 * h8;
  auto s = rat_sqrt_exact(disc);
  if (!s) return {};
  std::vector<Rat> r = {(-g4 - *s) / 2, (-g4 + *s) / 2};
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

int sturm_real_roots(const Poly<Rat>& f0) {
  if (f0.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  Poly<Rat> f = squarefree_part(f0);
  if (f.degree() <= 0) return 0;
  std::vector<Poly<Rat>> chain = {f, f.derivative()};
  while (chain.back().degree() > 0) {
    Poly<Rat> r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  std::vector<int> at_pos, at_neg;
  for (auto& p : chain) {
    int s = sgn(p.lead());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool QuadPointAudit::ok() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const QuadPointAuditRow& r) { return r.ok(); });
}

QuadPointAudit quad_point_audit(int N, const std::vector<QuadPointRecord>& records, bool strict) {
  QuadPointAudit A;
  A.N = N;
  HyperModel M = hyper_model(N);
  for (auto& rec : records) {
    if (rec.N != N) continue;
    QuadPointAuditRow row;
    row.rec = rec;
    FieldTag tag = rec.D == 0 ? FieldTag() : FieldTag::quadratic(rec.D);
    QuadElem x = parse_elem(rec.x, tag), y = parse_elem(rec.y, tag);
    QuadElem rs = model_eval(N, ModelForm::Short, x, y);
    row.on_short = rs.is_zero();
    QuadElem rl(1);
    if (M.g) {
      rl = model_eval(N, ModelForm::Long, x, y);
      row.on_long = rl.is_zero();
    }
    bool want_long = rec.model == "long";
    row.on_stated = want_long ? row.on_long : row.on_short;
    row.residual = (want_long ? rl : rs).str();
    // The coordinates must generate the stated field.
    row.field_ok = rec.D == 0 ? (x.is_rational() && y.is_rational()) : (!x.is_rational() || !y.is_rational());
    if (strict && !row.ok())
      throw RecordMismatch("X0(" + std::to_string(N) + ") point (" + rec.x + ", " + rec.y + ") residual " + row.residual);
    A.rows.push_back(row);
  }
  return A;
}

}  // namespace torsionlab
