#include "torsionlab/torsion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "torsionlab/roots.hpp"

namespace torsionlab {

GroupShape::GroupShape(long m_, long n_) : m(m_), n(n_) {
  if (m < 1 || n < 1 || n % m != 0) throw Error("InvalidShape", std::to_string(m) + "x" + std::to_string(n));
}

std::string GroupShape::str() const {
  if (n == 1) return "0";
  if (m == 1) return "Z/" + std::to_string(n);
  return "Z/" + std::to_string(m) + "xZ/" + std::to_string(n);
}

GroupShape GroupShape::parse(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != ' ') s += c;
  if (s == "0" || s == "1") return GroupShape(1, 1);
  auto strip = [](std::string t) {
    if (t.rfind("Z/", 0) == 0) t = t.substr(2);
    return t;
  };
  auto num = [&](const std::string& t) -> long {
    std::string u = strip(t);
    if (u.empty() || u.find_first_not_of("0123456789") != std::string::npos)
      throw Error("InvalidShape", "cannot parse group '" + s0 + "'");
    return std::stol(u);
  };
  auto x = s.find('x');
  if (x == std::string::npos) x = s.find('+');
  if (x == std::string::npos) return GroupShape(1, num(s));
  return GroupShape(num(s.substr(0, x)), num(s.substr(x + 1)));
}

bool GroupShape::contains(const GroupShape& o) const {
  // Z/a + Z/b embeds in Z/m + Z/n (a|b, m|n) iff a | m and b | n.
  return m % o.m == 0 && n % o.n == 0;
}

std::string to_string(const ShapeSet& s) {
  std::string r = "{";
  for (const auto& g : s) {
    if (r.size() > 1) r += ", ";
    r += g.str();
  }
  return r + "}";
}

// ---------------------------------------------------------------- models

CurveK make_curve(const QuadElem& alpha, const QuadElem& beta) {
  FieldTag t = merge_tags(alpha.tag(), beta.tag());
  return CurveK::alpha_beta(alpha.with_tag(t), beta.with_tag(t));
}

CurveK scale_curve(const CurveK& E, const QuadElem& z) {
  QuadElem z2 = z * z;
  if (E.is_ab()) return make_curve(z2 * E.alpha(), z2 * E.beta());
  QuadElem z3 = z2 * z, z4 = z2 * z2, z6 = z3 * z3;
  return CurveK::weierstrass(z * E.a1(), z2 * E.a2(), z3 * E.a3(), z4 * E.a4(), z6 * E.a6());
}

PointK scale_point(const PointK& P, const QuadElem& z) {
  if (P.inf) return P;
  return PointK::affine(z * z * P.x, z * z * z * P.y);
}

NormalizedCurve integral_model(const CurveK& E) {
  Int z = 1;
  if (E.is_ab()) {
    // need z^2 alpha, z^2 beta integral; z = lcm of denominators suffices
    z = lcm(integral_denominator(E.alpha()), integral_denominator(E.beta()));
  } else {
    for (const QuadElem* c : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()}) z = lcm(z, integral_denominator(*c));
  }
  if (z == 1) return {E, QuadElem(1)};
  QuadElem zq{Rat(z)};
  return {scale_curve(E, zq), zq};
}

NormalizedCurve normalize_curve(const CurveK& E) {
  if (!E.is_ab()) return {E, QuadElem(1)};
  // Rational content of the omega-coordinates; strip its largest square factor.
  Int g = 0;
  Rat content_den = 1;
  for (const QuadElem* c : {&E.alpha(), &E.beta()}) {
    auto [A, B] = c->omega_coords();
    for (const Rat* r : {&A, &B}) {
      if (sgn(*r) == 0) continue;
      if (r->get_den() != 1) return {E, QuadElem(1)};
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r->get_num().get_mpz_t());
    }
  }
  (void)content_den;
  if (g <= 1) return {E, QuadElem(1)};
  Int z = 1;
  std::vector<std::pair<Int, int>> fac;
  try {
    fac = factor_integer(g);
  } catch (const FactorizationExhausted&) {
    return {E, QuadElem(1)};
  }
  for (auto& [p, e] : fac)
    for (int i = 0; i < e / 2; ++i) z *= p;
  if (z == 1) return {E, QuadElem(1)};
  QuadElem zq{Rat(z)};
  return {scale_curve(E, QuadElem(1) / zq), zq};
}

std::vector<std::pair<QuadElem, QuadElem>> shifted_models(const QuadElem& alpha, const QuadElem& beta) {
  return {{alpha, beta}, {-alpha, beta - alpha}, {-beta, alpha - beta}};
}

bool isomorphic_over_K(const CurveK& E1, const CurveK& E2) {
  for (auto [a, b] : shifted_models(E1.alpha(), E1.beta())) {
    for (int swap = 0; swap < 2; ++swap) {
      if (swap) std::swap(a, b);
      QuadElem c = E2.alpha() / a;
      if (E2.beta() == c * b && sqrt_in_K(c)) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- reduction

std::optional<Curve<FFElem>> reduce_curve(const CurveK& E, const PrimeIdealRep& P) {
  try {
    if (E.is_ab()) return Curve<FFElem>::alpha_beta(reduce_mod(E.alpha(), P), reduce_mod(E.beta(), P));
    return Curve<FFElem>::weierstrass(reduce_mod(E.a1(), P), reduce_mod(E.a2(), P), reduce_mod(E.a3(), P),
                                      reduce_mod(E.a4(), P), reduce_mod(E.a6(), P));
  } catch (const DenominatorDivisibleByP& e) {
    throw NonIntegralAtP(e.what());
  } catch (const SingularCurve&) {
    return std::nullopt;
  }
}

TorsionBound torsion_bound(const CurveK& E) {
  FieldTag tag = E.a2().tag();
  if (E.is_ab()) tag = merge_tags(E.alpha().tag(), E.beta().tag());
  TorsionBound B;
  std::set<long> chars;
  for (long p = 3; p < 10000; p = next_prime(p)) {
    if (B.counts.size() >= 6 && chars.size() >= 3) break;
    PrimeIdealRep P = splitting_type(p, tag);
    if (P.kind != SplitKind::split) continue;
    std::vector<PrimeIdealRep> ideals = {P};
    if (!tag.is_rational() && P.r != 0) ideals.push_back(conjugate_prime(P));
    for (const auto& Q : ideals) {
      std::optional<Curve<FFElem>> R;
      try {
        R = reduce_curve(E, Q);
      } catch (const NonIntegralAtP&) {
        continue;
      }
      if (!R) continue;
      B.counts.push_back({Q, count_points(*R)});
      chars.insert(p);
    }
  }
  if (chars.size() < 2) throw NoGoodPrimeFound("fewer than two good primes below 10^4 for " + E.str());
  std::set<long> ells;
  for (const auto& rc : B.counts)
    for (auto& [q, e] : factor_integer(Int(rc.count))) ells.insert(q.get_si());
  for (long ell : ells) {
    int v = 1 << 20;
    for (const auto& rc : B.counts)
      if (rc.P.p != ell) v = std::min(v, valuation(Int(rc.count), ell));
    if (v == (1 << 20) || v == 0) continue;
    B.valuations[ell] = v;
    for (int i = 0; i < v; ++i) B.value *= ell;
  }
  return B;
}

Poly<QuadElem> division_poly(const CurveK& E, int ell) {
  if (ell % 2 == 0 || ell < 3) throw Error("InvalidArgument", "division_poly expects an odd prime");
  return division_poly_x(E, ell);
}

// ---------------------------------------------------------------- Sylow assembly

namespace {

template <class F>
int ell_order_exponent(const Point<F>& P, long ell, const Curve<F>& E) {
  Point<F> Q = P;
  int k = 0;
  while (!Q.inf) {
    Q = point_mul(ell, Q, E);
    if (++k > 40) throw ConsistencyFailure("point " + P.str() + " has no finite " + std::to_string(ell) + "-power order");
  }
  return k;
}

template <class F>
long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

template <class F>
SylowPart<F> sylow_from_elements(long ell, std::vector<Point<F>> S, const Curve<F>& E) {
  std::sort(S.begin(), S.end(), point_print_less<F>);
  SylowPart<F> part;
  part.ell = ell;
  part.g1 = Point<F>::infinity(E.zero());
  part.g2 = part.g1;
  long size = static_cast<long>(S.size());
  int total = 0;
  for (long t = size; t > 1; t /= ell) {
    if (t % ell != 0) throw ConsistencyFailure(std::to_string(size) + " points is not a power of " + std::to_string(ell));
    ++total;
  }
  std::vector<int> ord(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) ord[i] = ell_order_exponent(S[i], ell, E);
  int a2 = 0;
  for (int o : ord) a2 = std::max(a2, o);
  int a1 = total - a2;
  if (a1 > a2 || a1 < 0) throw ConsistencyFailure("impossible " + std::to_string(ell) + "-primary structure");
  part.a1 = a1;
  part.a2 = a2;
  if (a2 == 0) return part;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (ord[i] == a2) {
      part.g2 = S[i];
      break;
    }
  if (a1 == 0) return part;
  Point<F> h = point_mul(ipow<F>(ell, a2 - 1), part.g2, E);
  std::vector<Point<F>> line;
  for (long k = 1; k < ell; ++k) line.push_back(point_mul(k, h, E));
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (ord[i] != a1) continue;
    Point<F> t = point_mul(ipow<F>(ell, a1 - 1), S[i], E);
    if (std::find(line.begin(), line.end(), t) == line.end()) {
      part.g1 = S[i];
      return part;
    }
  }
  throw ConsistencyFailure("no complementary generator found");
}

template <class F>
TorsionGroup<F> assemble(const std::vector<SylowPart<F>>& parts, const Curve<F>& E) {
  long m = 1, n = 1;
  Point<F> gm = Point<F>::infinity(E.zero()), gn = gm;
  for (const auto& pt : parts) {
    m *= ipow<F>(pt.ell, pt.a1);
    n *= ipow<F>(pt.ell, pt.a2);
    if (pt.a1 > 0) gm = point_add(gm, pt.g1, E);
    if (pt.a2 > 0) gn = point_add(gn, pt.g2, E);
  }
  TorsionGroup<F> G;
  G.shape = GroupShape(m, n);
  if (m > 1) G.gens.push_back(gm);
  if (n > 1) G.gens.push_back(gn);
  for (std::size_t i = 0; i < G.gens.size(); ++i) {
    long want = (G.gens.size() == 2 && i == 0) ? m : n;
    auto o = order_of_point(G.gens[i], E, want);
    if (!E.contains(G.gens[i]) || !o || *o != want) throw ConsistencyFailure("generator order check failed");
  }
  return G;
}

template <class F>
std::vector<Point<F>> two_power_points(const Curve<F>& E, long cap) {
  std::vector<Point<F>> S = two_torsion(E);
  std::vector<Point<F>> queue(S.begin() + 1, S.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Point<F> P = queue[head];
    for (auto& Q : halve_point(P, E)) {
      if (std::find(S.begin(), S.end(), Q) != S.end()) continue;
      S.push_back(Q);
      queue.push_back(Q);
      if (static_cast<long>(S.size()) > cap)
        throw ConsistencyFailure("2-power torsion exceeds the bound " + std::to_string(cap));
    }
  }
  return S;
}

template <class F>
std::vector<SylowPart<F>> parts_of(const TorsionGroup<F>& G, const Curve<F>& E) {
  // Recover per-prime cyclic generators from invariant-factor generators.
  std::vector<SylowPart<F>> parts;
  long m = G.shape.m, n = G.shape.n;
  Point<F> gm = m > 1 ? G.gens[0] : Point<F>::infinity(E.zero());
  Point<F> gn = n > 1 ? G.gens.back() : Point<F>::infinity(E.zero());
  for (auto& [pz, e] : factor_integer(Int(n))) {
    long ell = pz.get_si();
    SylowPart<F> pt;
    pt.ell = ell;
    pt.a2 = e;
    pt.a1 = valuation(Int(m), ell);
    long ln = ipow<F>(ell, pt.a2), lm = ipow<F>(ell, pt.a1);
    pt.g2 = point_mul(n / ln, gn, E);
    pt.g1 = pt.a1 > 0 ? point_mul(m / lm, gm, E) : Point<F>::infinity(E.zero());
    parts.push_back(pt);
  }
  return parts;
}

void record_bound(const TorsionBound& B, EngineInfo* info) {
  if (!info) return;
  info->bound = B.value;
  info->primes.clear();
  for (const auto& rc : B.counts) info->primes.push_back(rc.P.str() + ":" + std::to_string(rc.count));
}

PointK scale_back(const PointK& P, const QuadElem& z) { return scale_point(P, QuadElem(1) / z); }

template <class F>
TorsionGroup<F> map_group(const TorsionGroup<F>& G, const std::function<Point<F>(const Point<F>&)>& f) {
  TorsionGroup<F> H = G;
  for (auto& g : H.gens) g = f(g);
  return H;
}

}  // namespace

// ---------------------------------------------------------------- torsion over K

std::vector<PointK> ell_power_torsion_points(const CurveK& E, long ell, int max_k, EngineInfo* info) {
  FieldTag tag = E.a2().tag();
  if (E.is_ab()) tag = merge_tags(E.alpha().tag(), E.beta().tag());
  std::vector<PointK> prev = {PointK::infinity(E.zero())};
  long lk = 1;
  for (int k = 1; k <= max_k; ++k) {
    lk *= ell;
    std::vector<PointK> S = {PointK::infinity(E.zero())};
    auto add_x = [&](const QuadElem& x) {
      for (const auto& y : E.ys_over(x)) {
        PointK P = PointK::affine(x, y);
        if (std::find(S.begin(), S.end(), P) == S.end() && point_mul(lk, P, E).inf) S.push_back(P);
      }
    };
    RootSearchInfo ri;
    for (const auto& x : roots_in_K(division_poly_x(E, static_cast<int>(lk)), tag, &ri)) add_x(x);
    if (info && ri.digits > info->precision_digits) {
      info->precision_digits = ri.digits;
      info->hensel_prime = ri.prime;
    }
    if (ell == 2)
      for (const auto& x : roots_in_K(E.two_division(), tag)) add_x(x);
    if (S.size() == prev.size()) break;
    prev = std::move(S);
  }
  std::sort(prev.begin(), prev.end(), point_print_less<QuadElem>);
  return prev;
}

TorsionGroup<QuadElem> odd_torsion(const CurveK& E, EngineInfo* info) {
  auto norm = integral_model(E);
  const CurveK& Ei = norm.curve;
  TorsionBound B = torsion_bound(Ei);
  record_bound(B, info);
  std::vector<SylowPart<QuadElem>> parts;
  for (auto [ell, v] : B.valuations) {
    if (ell == 2) continue;
    auto S = ell_power_torsion_points(Ei, ell, v, info);
    parts.push_back(sylow_from_elements(ell, S, Ei));
  }
  auto G = assemble(parts, Ei);
  return map_group<QuadElem>(G, [&](const PointK& P) { return scale_back(P, norm.z); });
}

TorsionGroup<QuadElem> two_primary_torsion(const CurveK& E, EngineInfo* info) {
  auto norm = integral_model(E);
  TorsionBound B = torsion_bound(norm.curve);
  record_bound(B, info);
  long cap = 1L << std::min(B.v(2), 20);
  auto S = two_power_points(norm.curve, cap);
  auto G = assemble(std::vector<SylowPart<QuadElem>>{sylow_from_elements(2, S, norm.curve)}, norm.curve);
  return map_group<QuadElem>(G, [&](const PointK& P) { return scale_back(P, norm.z); });
}

TorsionGroup<TowerElem> two_primary_torsion(const CurveL& E, long cap) {
  auto S = two_power_points(E, cap);
  return assemble(std::vector<SylowPart<TowerElem>>{sylow_from_elements(2, S, E)}, E);
}

TorsionGroup<QuadElem> torsion_subgroup(const CurveK& E, EngineInfo* info) {
  if (!E.is_ab()) return torsion_subgroup_generic(E, info);
  auto norm = integral_model(E);
  const CurveK& Ei = norm.curve;
  TorsionBound B = torsion_bound(Ei);
  record_bound(B, info);
  std::vector<SylowPart<QuadElem>> parts;
  long cap = 1L << std::min(B.v(2), 20);
  parts.push_back(sylow_from_elements(2, two_power_points(Ei, cap), Ei));
  for (auto [ell, v] : B.valuations) {
    if (ell == 2) continue;
    parts.push_back(sylow_from_elements(ell, ell_power_torsion_points(Ei, ell, v, info), Ei));
  }
  auto G = assemble(parts, Ei);
  if (B.value % G.shape.order() != 0) throw ConsistencyFailure("torsion order does not divide the bound");
  return map_group<QuadElem>(G, [&](const PointK& P) { return scale_back(P, norm.z); });
}

std::vector<PointK> torsion_points_generic(const CurveK& E, EngineInfo* info) {
  auto norm = integral_model(E);
  const CurveK& Ei = norm.curve;
  TorsionBound B = torsion_bound(Ei);
  record_bound(B, info);
  // Every torsion point is a sum of its Sylow components; enumerate the products.
  std::vector<PointK> all = {PointK::infinity(Ei.zero())};
  for (auto [ell, v] : B.valuations) {
    auto S = ell_power_torsion_points(Ei, ell, v, info);
    std::vector<PointK> next;
    for (const auto& a : all)
      for (const auto& s : S) next.push_back(point_add(a, s, Ei));
    all = std::move(next);
  }
  for (auto& P : all) P = scale_back(P, norm.z);
  std::sort(all.begin(), all.end(), point_print_less<QuadElem>);
  return all;
}

TorsionGroup<QuadElem> torsion_subgroup_generic(const CurveK& E, EngineInfo* info) {
  auto norm = integral_model(E);
  const CurveK& Ei = norm.curve;
  TorsionBound B = torsion_bound(Ei);
  record_bound(B, info);
  std::vector<SylowPart<QuadElem>> parts;
  for (auto [ell, v] : B.valuations)
    parts.push_back(sylow_from_elements(ell, ell_power_torsion_points(Ei, ell, v, info), Ei));
  auto G = assemble(parts, Ei);
  return map_group<QuadElem>(G, [&](const PointK& P) { return scale_back(P, norm.z); });
}

// ---------------------------------------------------------------- twists and L

CurveK twist_curve(const CurveK& E, const QuadElem& d0) {
  if (!E.is_ab()) throw Error("UnsupportedModel", "twists are defined for E(alpha, beta)");
  FieldTag tag = merge_tags(E.alpha().tag(), E.beta().tag());
  QuadElem d = normalize_twist_parameter(d0.with_tag(tag));
  if (d.is_zero() || sqrt_in_K(d)) throw SquareTwistParameter(d0.str() + " is a square in K");
  return make_curve(d * E.alpha(), d * E.beta());
}

CurveL lift_curve(const CurveK& E, const std::shared_ptr<const TowerTag>& L) {
  auto lift = [&](const QuadElem& c) { return TowerElem(L, c); };
  if (E.is_ab()) return CurveL::alpha_beta(lift(E.alpha()), lift(E.beta()));
  return CurveL::weierstrass(lift(E.a1()), lift(E.a2()), lift(E.a3()), lift(E.a4()), lift(E.a6()));
}

PointL lift_point(const PointK& P, const std::shared_ptr<const TowerTag>& L) {
  if (P.inf) return PointL::infinity(TowerElem(L, 0));
  return PointL::affine(TowerElem(L, P.x), TowerElem(L, P.y));
}

PointL twist_map(const PointK& Q, const std::shared_ptr<const TowerTag>& L) {
  if (Q.inf) return PointL::infinity(TowerElem(L, 0));
  const QuadElem& d = L->d();
  return PointL::affine(TowerElem(L, Q.x / d), TowerElem(L, 0, Q.y / (d * d)));
}

PointL sigma_point(const PointL& P) {
  if (P.inf) return P;
  return PointL::affine(P.x.sigma(), P.y.sigma());
}

ExtTorsion torsion_subgroup_ext(const CurveK& E, const QuadElem& d) {
  FieldTag tag = merge_tags(E.alpha().tag(), E.beta().tag());
  ExtTorsion R;
  R.L = std::make_shared<const TowerTag>(tag, d);
  CurveK Ed = twist_curve(E, R.L->d());
  R.base = torsion_subgroup(E);
  R.twist = torsion_subgroup(Ed);
  CurveL EL = lift_curve(E, R.L);

  int v2 = valuation(Int(R.base.shape.order()), 2) + valuation(Int(R.twist.shape.order()), 2);
  long cap = 1L << std::min(v2, 6);
  std::vector<SylowPart<TowerElem>> parts;
  {
    auto S = two_power_points(EL, cap);
    parts.push_back(sylow_from_elements(2, S, EL));
  }
  // Odd part: E(K)[n] + tau(E^d(K)[n]).
  auto base_parts = parts_of(R.base, E);
  auto twist_parts = parts_of(R.twist, Ed);
  std::set<long> ells;
  for (auto& p : base_parts) ells.insert(p.ell);
  for (auto& p : twist_parts) ells.insert(p.ell);
  for (long ell : ells) {
    if (ell == 2) continue;
    std::vector<std::pair<int, PointL>> cyc;
    for (auto& p : base_parts)
      if (p.ell == ell) {
        if (p.a1 > 0) cyc.emplace_back(p.a1, lift_point(p.g1, R.L));
        if (p.a2 > 0) cyc.emplace_back(p.a2, lift_point(p.g2, R.L));
      }
    for (auto& p : twist_parts)
      if (p.ell == ell) {
        if (p.a1 > 0) cyc.emplace_back(p.a1, twist_map(p.g1, R.L));
        if (p.a2 > 0) cyc.emplace_back(p.a2, twist_map(p.g2, R.L));
      }
    if (cyc.size() > 2) throw ConsistencyFailure("odd part of rank > 2 over L");
    std::sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SylowPart<TowerElem> sp;
    sp.ell = ell;
    sp.g1 = PointL::infinity(TowerElem(R.L, 0));
    sp.g2 = sp.g1;
    if (cyc.size() == 1) {
      sp.a2 = cyc[0].first;
      sp.g2 = cyc[0].second;
    } else if (cyc.size() == 2) {
      sp.a1 = cyc[0].first;
      sp.g1 = cyc[0].second;
      sp.a2 = cyc[1].first;
      sp.g2 = cyc[1].second;
    }
    if (!EL.contains(sp.g1) || !EL.contains(sp.g2)) throw ConsistencyFailure("odd generator not on E over L");
    parts.push_back(sp);
  }
  R.group = assemble(parts, EL);
  long ol = R.group.shape.order(), ok = R.base.shape.order(), od = R.twist.shape.order();
  if (ol % ok != 0 || (ol / ok) == 0 || od % (ol / ok) != 0)
    throw ConsistencyFailure("|E(L)|/|E(K)| does not divide |E^d(K)|");
  return R;
}

// ---------------------------------------------------------------- criteria

std::string CriterionResult::str() const {
  std::ostringstream os;
  os << (holds ? "true" : "false");
  if (holds) {
    os << " model=" << model;
    for (auto& [k, v] : witness) os << " " << k << "=" << v.str();
  }
  return os.str();
}

CriterionResult order_criteria(const CurveK& E, int n) {
  if (!E.is_ab()) throw Error("UnsupportedModel", "criteria need E(alpha, beta)");
  if (!is_integral(E.alpha()) || !is_integral(E.beta()))
    throw NonIntegralInput("alpha and beta must be integral");
  CriterionResult res;
  auto models = shifted_models(E.alpha(), E.beta());
  if (n == 4) {
    for (int i = 0; i < 3; ++i) {
      auto s = sqrt_in_K(models[i].first), t = sqrt_in_K(models[i].second);
      if (s && t) {
        res.holds = true;
        res.model = i;
        res.witness = {{"s", *s}, {"t", *t}};
        return res;
      }
    }
    return res;
  }
  if (n == 8) {
    // alpha = z^2 u^4, beta = z^2 v^4, u^2 + v^2 = w^2; scaling lets v = 1.
    for (int i = 0; i < 3; ++i) {
      const auto& [a, b] = models[i];
      auto z = sqrt_in_K(b);
      if (!z) continue;
      auto s = sqrt_in_K(a / b);
      if (!s) continue;
      for (const QuadElem& t2 : {*s, -*s}) {
        auto u = sqrt_in_K(t2);
        if (!u) continue;
        auto w = sqrt_in_K(t2 + QuadElem(1));
        if (!w) continue;
        QuadElem u4 = t2 * t2;
        if (*z * *z * u4 != a || *z * *z != b) continue;
        res.holds = true;
        res.model = i;
        res.witness = {{"z", *z}, {"u", *u}, {"v", QuadElem(1).with_tag(a.tag())}, {"w", *w}};
        return res;
      }
    }
    return res;
  }
  if (n == 3) {
    auto S = ell_power_torsion_points(E, 3, 1);
    const QuadElem& al = E.alpha();
    const QuadElem& be = E.beta();
    for (const auto& P : S) {
      if (P.inf) continue;
      res.holds = true;
      auto s0 = sqrt_in_K(P.x), s1 = sqrt_in_K(P.x + al);
      if (!s0 || !s1 || s0->is_zero()) continue;
      for (int sg : {1, -1}) {
        QuadElem k = QuadElem(sg) * *s1 / *s0 - QuadElem(1);
        bool excluded = false;
        for (const Rat& r : {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1)})
          if (k == QuadElem(r)) excluded = true;
        if (excluded) continue;
        QuadElem den = k * k * k * (k + QuadElem(2));
        auto z = sqrt_in_K(al / den);
        if (!z) continue;
        if ((QuadElem(2) * k + QuadElem(1)) * *z * *z != be) continue;
        res.model = 0;
        res.witness = {{"a", k.with_tag(al.tag())}, {"b", QuadElem(1).with_tag(al.tag())}, {"z", *z}};
        return res;
      }
    }
    return res;
  }
  throw Error("InvalidArgument", "order_criteria supports n in {3, 4, 8}");
}

std::set<long> galois_square_units(long n) {
  if (n < 2) throw Error("InvalidArgument", "n must be at least 2");
  std::set<long> r;
  for (long a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1 && (a * a) % n == 1) r.insert(a);
  return r;
}

StableSubgroupReport verify_stable_subgroup(const CurveK& E, const QuadElem& d, const std::vector<PointL>& C) {
  FieldTag tag = merge_tags(E.alpha().tag(), E.beta().tag());
  auto L = C.empty() ? std::make_shared<const TowerTag>(tag, d) : C.front().x.tag();
  if (!L) L = std::make_shared<const TowerTag>(tag, d);
  CurveL EL = lift_curve(E, L);
  for (const auto& P : C) EL.require(P);
  std::vector<PointL> H = {PointL::infinity(TowerElem(L, 0))};
  for (std::size_t i = 0; i < H.size(); ++i) {
    for (const auto& g : C) {
      PointL s = point_add(H[i], g, EL);
      if (std::find(H.begin(), H.end(), s) == H.end()) {
        H.push_back(s);
        if (H.size() > 100000) throw ConsistencyFailure("generated subgroup too large");
      }
    }
  }
  StableSubgroupReport rep;
  rep.order = static_cast<long>(H.size());
  rep.stable = true;
  for (const auto& g : C)
    if (std::find(H.begin(), H.end(), sigma_point(g)) == H.end()) rep.stable = false;
  for (const auto& P : H) {
    auto o = order_of_point(P, EL, rep.order);
    if (o && *o == rep.order) {
      rep.cyclic = true;
      break;
    }
  }
  return rep;
}

ShapeSet allowed_torsion(FieldTag tag) {
  ShapeSet s;
  for (long n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) s.insert(GroupShape(1, n));
  for (long n : {2, 4, 6, 8}) s.insert(GroupShape(2, n));
  switch (tag.D()) {
    case 0: break;
    case -2: s.insert({GroupShape(1, 11), GroupShape(2, 10)}); break;
    case -7: s.insert({GroupShape(1, 11), GroupShape(1, 14), GroupShape(1, 15)}); break;
    case -11: s.insert({GroupShape(1, 14), GroupShape(1, 15), GroupShape(2, 10)}); break;
    case -19: s.insert({GroupShape(1, 11), GroupShape(2, 10), GroupShape(2, 12)}); break;
    case -43: s.insert({GroupShape(1, 11), GroupShape(1, 14), GroupShape(1, 15), GroupShape(2, 12)}); break;
    case -67:
    case -163: s.insert({GroupShape(1, 14), GroupShape(1, 15), GroupShape(2, 12)}); break;
    default: throw UnsupportedField("no torsion list for D=" + std::to_string(tag.D()));
  }
  return s;
}

}  // namespace torsionlab
