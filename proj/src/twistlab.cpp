#include "torsionlab/twistlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

namespace torsionlab {

namespace {

ShapeSet shapes(std::initializer_list<const char*> names) {
  ShapeSet s;
  for (auto* n : names) s.insert(GroupShape::parse(n));
  return s;
}

// D = 0 in a key means "every other field of the classified set".
struct Branch {
  long n;  // G = Z/2 x Z/2n
  std::vector<long> Ds;
  ShapeSet twists;
  bool upper = false;
};

const std::vector<Branch>& twist_branches() {
  static const std::vector<Branch> t = {
      {6, {}, shapes({"2x2", "2x4"})},
      {5, {}, shapes({"2x2"})},
      {4, {-7}, shapes({"2x2", "2x4", "2x8"})},
      {4, {}, shapes({"2x2"})},
      {3, {-2}, shapes({"2x2"})},
      {3, {-7, -11}, shapes({"2x2", "2x6"})},
      {3, {}, shapes({"2x2", "2x4", "2x6"})},
      {2, {-2, -11}, shapes({"2x2", "2x4"})},
      {2, {-7}, shapes({"2x2", "2x4", "2x8"})},
      {2, {}, shapes({"2x2", "2x4", "2x6"})},
      {1, {}, shapes({"2x2", "2x4", "2x6", "2x8", "2x10", "2x12"}), true},
  };
  return t;
}

const std::vector<Branch>& growth_branches() {
  static const std::vector<Branch> t = {
      {6, {}, shapes({"2x12"})},
      {5, {}, shapes({"2x10"})},
      {4, {-7}, shapes({"2x8", "4x8", "2x16"})},
      {4, {}, shapes({"2x8"})},
      {3, {-2}, shapes({"2x6", "2x12"})},
      {3, {}, shapes({"2x6", "2x12", "6x6"})},
      {1, {}, shapes({"2x2", "2x4", "2x6", "2x8", "2x10", "2x12", "2x16", "4x4"}), true},
  };
  return t;
}

// Z/2xZ/4: criterion branch and its complement.
const ShapeSet& growth_2x4(bool criterion, long D) {
  static const ShapeSet yes = shapes({"4x4"}), yes7 = shapes({"4x4", "4x8"});
  static const ShapeSet no_small = shapes({"2x4", "2x8"}), no_big = shapes({"2x4", "2x8", "2x12"});
  if (criterion) return D == -7 ? yes7 : yes;
  return (D == -2 || D == -7 || D == -11) ? no_small : no_big;
}

long family_index(const GroupShape& G) {
  if (G.m != 2 || G.n % 2 != 0 || G.n < 2 || G.n > 12) throw UnsupportedGroup(G.str() + " is not Z/2 x Z/2n, n <= 6");
  return G.n / 2;
}

void require_S(FieldTag tag) {
  if (!tag.in_S()) throw UnsupportedField("no classification for D = " + std::to_string(tag.D()));
}

const Branch& find_branch(const std::vector<Branch>& table, long n, long D) {
  for (auto& b : table)
    if (b.n == n && (b.Ds.empty() || std::find(b.Ds.begin(), b.Ds.end(), D) != b.Ds.end())) return b;
  throw UnsupportedGroup("no branch");
}

std::string branch_name(long n, long D) {
  return "G=Z/2xZ/" + std::to_string(2 * n) + ",D=" + std::to_string(D);
}

}  // namespace

ShapeSet predicted_twist_groups(FieldTag tag, const GroupShape& G) {
  long n = family_index(G);
  require_S(tag);
  return find_branch(twist_branches(), n, tag.D()).twists;
}

ClassificationTable classification_table(FieldTag tag, const GroupShape& G) {
  long n = family_index(G);
  require_S(tag);
  ClassificationTable t;
  t.field = tag;
  t.G = G;
  auto& tb = find_branch(twist_branches(), n, tag.D());
  t.predicted_twists = tb.twists;
  t.twists_upper_bound = tb.upper;
  if (n == 2) {
    t.curve_dependent = true;
    for (bool c : {true, false})
      for (auto& s : growth_2x4(c, tag.D())) t.predicted_growth.insert(s);
  } else {
    auto& gb = find_branch(growth_branches(), n, tag.D());
    t.predicted_growth = gb.twists;
    t.growth_upper_bound = gb.upper;
  }
  return t;
}

std::optional<QuadElem> four_by_four_witness(const CurveK& E) {
  auto models = shifted_models(E.alpha(), E.beta());
  auto c4 = order_criteria(E, 4);
  std::vector<std::pair<QuadElem, QuadElem>> use;
  if (c4.holds)
    use.push_back(models[c4.model]);
  else
    use = models;
  for (auto& [a, b] : use) {
    if (auto z = sqrt_in_K(a - b)) return z;
    if (auto z = sqrt_in_K(b - a)) return z;
  }
  return std::nullopt;
}

GrowthPrediction predict_growth(const CurveK& E, const GroupShape& G) {
  long n = family_index(G);
  FieldTag tag = merge_tags(E.alpha().tag(), E.beta().tag());
  require_S(tag);
  GrowthPrediction p;
  p.branch = branch_name(n, tag.D());
  if (n == 2) {
    bool c = four_by_four_witness(E).has_value();
    p.criterion = c;
    p.groups = growth_2x4(c, tag.D());
    p.branch += c ? ",criterion" : ",no-criterion";
    return p;
  }
  auto& gb = find_branch(growth_branches(), n, tag.D());
  p.groups = gb.twists;
  p.upper_bound = gb.upper;
  return p;
}

ShapeSet predicted_growth_groups(const CurveK& E, const GroupShape& G) { return predict_growth(E, G).groups; }

// ---------------------------------------------------------------- injection

InjectionReport injection_report(const CurveK& E, const QuadElem& d) {
  InjectionReport r;
  ExtTorsion X = torsion_subgroup_ext(E, d);
  r.base = X.base.shape;
  r.twist = X.twist.shape;
  r.ext = X.group.shape;
  const QuadElem& dd = X.L->d();
  CurveK Ed = twist_curve(E, dd);
  CurveL EL = lift_curve(E, X.L);

  long q = r.ext.order() / r.base.order();
  bool ok = r.ext.order() % r.base.order() == 0 && r.twist.order() % q == 0;
  if (!ok) r.notes.push_back("order divisibility fails");

  // Lemma 2.5: odd parts multiply.
  auto odd = [](long v) {
    while (v % 2 == 0) v /= 2;
    return v;
  };
  if (odd(r.ext.order()) != odd(r.base.order()) * odd(r.twist.order())) {
    ok = false;
    r.notes.push_back("odd part of E(L) is not the product of the odd parts");
  }

  std::vector<PointK> images;
  for (auto& P : X.group.gens) {
    if (!EL.contains(P)) {
      ok = false;
      r.notes.push_back("generator off the curve: " + P.str());
      continue;
    }
    PointL Q = point_sub(P, sigma_point(P), EL);
    if (Q.inf) {
      images.push_back(PointK::infinity(QuadElem(0)));
      continue;
    }
    if (!Q.x.in_base() || !Q.y.u().is_zero()) {
      ok = false;
      r.notes.push_back("P - sigma(P) is not in the twist image for " + P.str());
      continue;
    }
    PointK T = PointK::affine(dd * Q.x.u(), dd * dd * Q.y.v());
    if (!Ed.contains(T)) {
      ok = false;
      r.notes.push_back("preimage not on E^d: " + T.str());
      continue;
    }
    auto o = order_of_point(T, Ed, 64);
    if (!o || r.twist.n % *o != 0) {
      ok = false;
      r.notes.push_back("image order incompatible with E^d(K)_tor: " + T.str());
    }
    images.push_back(T);
  }

  // Size of the image subgroup must equal |E(L)| / |E(K)|.
  std::vector<PointK> H{PointK::infinity(QuadElem(0))};
  for (size_t i = 0; i < H.size() && H.size() <= 4096; ++i)
    for (auto& g : images) {
      PointK S = point_add(H[i], g, Ed);
      if (std::find(H.begin(), H.end(), S) == H.end()) H.push_back(S);
    }
  r.image_order = static_cast<long>(H.size());
  if (r.image_order != q) {
    ok = false;
    r.notes.push_back("image has order " + std::to_string(r.image_order) + ", expected " + std::to_string(q));
  }
  r.ok = ok;
  return r;
}

bool check_injection(const CurveK& E, const QuadElem& d) { return injection_report(E, d).ok; }

// ---------------------------------------------------------------- twist lists

bool same_square_class(const QuadElem& d1, const QuadElem& d2) {
  Rat n = d1.norm() * d2.norm();
  if (sgn(n) < 0) return false;
  if (!rat_sqrt_exact(n)) return false;
  return is_square_in_K(d1 * d2);
}

void sort_twist_list(std::vector<QuadElem>& ds) {
  std::vector<std::pair<std::pair<Rat, std::string>, QuadElem>> keyed;
  for (auto& d : ds) {
    Rat n = d.norm();
    keyed.push_back({{abs(n), d.str()}, d});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ds.clear();
  for (auto& k : keyed) ds.push_back(k.second);
}

std::vector<QuadElem> paper_twist_values(FieldTag) { return {QuadElem(-1), QuadElem(-3), QuadElem(-5), QuadElem(-15), QuadElem(21)}; }

std::vector<QuadElem> default_twist_list(FieldTag tag, long rational_bound, long norm_bound,
                                         const std::vector<QuadElem>& extras) {
  std::vector<QuadElem> cand;
  for (long d = -rational_bound; d <= rational_bound; ++d)
    if (d != 0 && d != 1 && is_squarefree(d)) cand.push_back(QuadElem(d).with_tag(tag));
  if (!tag.is_rational() && norm_bound > 0) {
    QuadElem w = QuadElem::omega(tag);
    // N(a + b w) >= |D| b^2 / 4, so |b| <= 2 sqrt(norm / |D|).
    long bmax = 1;
    while (std::labs(tag.D()) * (bmax + 1) * (bmax + 1) <= 4 * norm_bound) ++bmax;
    long amax = 2 * (bmax + 1) + static_cast<long>(std::ceil(std::sqrt(static_cast<double>(norm_bound)))) + 2;
    for (long b = -bmax; b <= bmax; ++b) {
      if (b == 0) continue;
      for (long a = -amax; a <= amax; ++a) {
        QuadElem x = QuadElem(a) + QuadElem(b) * w;
        if (x.norm() <= norm_bound) cand.push_back(x);
      }
    }
  }
  for (auto& e : extras) cand.push_back(e.with_tag(tag));
  sort_twist_list(cand);
  std::vector<QuadElem> out;
  for (auto& d : cand) {
    if (d.is_zero() || is_square_in_K(d)) continue;
    bool dup = false;
    for (auto& e : out)
      if (same_square_class(d, e)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------- scan

int worker_count() {
  if (const char* s = std::getenv("TORSIONLAB_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) return n;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(std::min(h, 16u));
}

namespace {

void check_row(ScanRow& row, const CurveK& E, const GroupShape& G, FieldTag tag, bool predictions,
               const ShapeSet& twist_pred, const GrowthPrediction& growth) {
  InjectionReport ir = injection_report(E, row.d);
  row.twist = ir.twist;
  row.ext = ir.ext;
  auto& v = row.violations;
  if (!ir.ok)
    for (auto& n : ir.notes) v.push_back("injection: " + n);
  if (ir.base != G) v.push_back("base group changed: " + ir.base.str());
  if (predictions) {
    if (!twist_pred.count(ir.twist)) v.push_back("twist " + ir.twist.str() + " not in " + to_string(twist_pred));
    if (!growth.groups.count(ir.ext) && ir.ext != G)
      v.push_back("extension " + ir.ext.str() + " not in " + to_string(growth.groups) + " + {G}");
  }
  auto L = std::make_shared<const TowerTag>(tag, row.d);
  if (ir.ext.contains(GroupShape(4, 4))) {
    if (!four_by_four_witness(E)) v.push_back("Z/4xZ/4 without alpha - beta = +-z^2");
    if (!same_square_class(L->d(), QuadElem(-1).with_tag(tag))) v.push_back("Z/4xZ/4 with d not -1 mod squares");
  }
  if (ir.ext.m % 4 == 0 && !contains_sqrt(QuadElem(-1), L)) v.push_back("Z/4 x Z/4 inside E(L) but i not in L");
  if (ir.ext.m % 3 == 0 && !contains_sqrt(QuadElem(-3), L)) v.push_back("Z/3 x Z/3 inside E(L) but sqrt(-3) not in L");
}

}  // namespace

ScanReport scan(const CurveK& E, const std::vector<QuadElem>& d_list, const std::string& curve_id) {
  ScanReport rep;
  rep.curve_id = curve_id.empty() ? E.str() : curve_id;
  rep.field = merge_tags(E.alpha().tag(), E.beta().tag());
  rep.base = torsion_subgroup(E).shape;
  ShapeSet twist_pred;
  GrowthPrediction growth;
  rep.predictions = rep.field.in_S();
  if (rep.predictions) {
    try {
      twist_pred = predicted_twist_groups(rep.field, rep.base);
      growth = predict_growth(E, rep.base);
    } catch (const UnsupportedGroup& e) {
      rep.predictions = false;
      rep.violations.push_back(std::string("base group: ") + e.what());
    }
  }
  rep.rows.resize(d_list.size());
  for (size_t i = 0; i < d_list.size(); ++i) rep.rows[i].d = d_list[i];

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < rep.rows.size();) {
      ScanRow& row = rep.rows[i];
      try {
        check_row(row, E, rep.base, rep.field, rep.predictions, twist_pred, growth);
      } catch (const Error& e) {
        row.error = std::string(e.kind()) + ": " + e.what();
      }
    }
  };
  int nw = std::min<int>(worker_count(), static_cast<int>(rep.rows.size()));
  if (nw <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& row : rep.rows)
    for (auto& v : row.violations) rep.violations.push_back("d=" + row.d.str() + ": " + v);
  return rep;
}

}  // namespace torsionlab
