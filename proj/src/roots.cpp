#include "torsionlab/roots.hpp"

#include <algorithm>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

constexpr long kMaxDigits = 4096;

struct ModPoly {
  std::vector<Int> c;  // monic integral polynomial reduced mod pk
  Int pk;
  Int eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = mod_floor(r * x + c[i], pk);
    return r;
  }
  Int eval_deriv(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c.size(); i-- > 1;) r = mod_floor(r * x + c[i] * Int(static_cast<long>(i)), pk);
    return r;
  }
};

ModPoly reduce_poly(const std::vector<QuadElem>& h, const Int& pk, const Int& s) {
  ModPoly m;
  m.pk = pk;
  for (const auto& c : h) m.c.push_back(residue_mod(c, pk, s));
  return m;
}

Int int_root_ceil(const Int& n, unsigned long k) {
  if (n <= 0) return 0;
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  Int t;
  mpz_pow_ui(t.get_mpz_t(), r.get_mpz_t(), k);
  if (t < n) r += 1;
  return r;
}

}  // namespace

std::vector<QuadElem> roots_in_K(const Poly<QuadElem>& f_in, FieldTag tag, RootSearchInfo* info) {
  if (tag.D() > 0) throw UnsupportedField("root finding is implemented for imaginary fields and Q");
  if (f_in.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  std::vector<QuadElem> out;
  Poly<QuadElem> g = squarefree_part(f_in);
  int n = g.degree();
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back((-g[0] / g[1]).with_tag(tag));
    return out;
  }
  // X = delta * x turns g into a monic polynomial h with coefficients in Z[omega].
  Int delta = 1;
  for (const auto& c : g.coeffs()) delta = lcm(delta, integral_denominator(c));
  std::vector<QuadElem> h(n + 1);
  {
    QuadElem pw(1);
    for (int i = n; i >= 0; --i) {
      h[i] = (g[i] * pw).with_tag(tag);
      pw *= QuadElem(Rat(delta));
    }
  }
  // Root size bound (Fujiwara) and the induced bound on omega-coordinates.
  Int R = 0;
  for (int i = 1; i <= n; ++i) {
    Rat N = h[n - i].norm();
    Int Ni = N.get_num();  // integral
    R = std::max(R, int_root_ceil(Ni, 2 * i));
  }
  R = 2 * R + 1;
  Int H = tag.is_rational() ? R : Int(2 * R);
  Int target = Int(2 + std::abs(tag.D())) * 4 * H * H;

  // Pick a split prime where h has only simple roots; prefer few roots.
  long best_p = 0;
  std::vector<long> best_roots;
  PrimeIdealRep bestP;
  int good_seen = 0;
  for (long p = 3; p < 20000 && good_seen < 5; p = next_prime(p)) {
    PrimeIdealRep P = splitting_type(p, tag);
    if (P.kind != SplitKind::split) continue;
    Int s = tag.is_rational() ? Int(0) : Int(P.r);
    ModPoly m = reduce_poly(h, Int(p), s);
    // degree must survive reduction (monic, so it does)
    std::vector<long> roots;
    bool simple = true;
    for (long x = 0; x < p && simple; ++x) {
      if (m.eval(Int(x)) == 0) {
        if (m.eval_deriv(Int(x)) == 0) simple = false;
        roots.push_back(x);
      }
    }
    if (!simple) continue;
    ++good_seen;
    if (best_p == 0 || roots.size() < best_roots.size()) {
      best_p = p;
      best_roots = roots;
      bestP = P;
    }
    if (roots.empty()) break;
  }
  if (best_p == 0) throw NoGoodPrimeFound("no split prime with simple roots");
  if (info) {
    info->prime = best_p;
    info->candidates = static_cast<long>(best_roots.size());
  }
  if (best_roots.empty()) return out;

  const long p = best_p;
  int k = 1;
  {
    Int pk = p;
    while (pk <= Int("1000000000000")) {
      pk *= p;
      ++k;
    }
  }
  std::vector<bool> resolved(best_roots.size(), false);
  while (true) {
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    long digits = static_cast<long>(mpz_sizeinbase(pk.get_mpz_t(), 10));
    if (digits > kMaxDigits) throw PrecisionExhausted("root reconstruction needs more than 4096 digits");
    if (info) info->digits = digits;
    Int s = lift_sqrt_D(bestP, k);
    Int w = tag.omega_is_half() ? mod_floor(rat_mod(Rat(1, 2), pk) * (1 + s), pk) : s;
    ModPoly m = reduce_poly(h, pk, s);
    for (std::size_t i = 0; i < best_roots.size(); ++i) {
      if (resolved[i]) continue;
      Int x = best_roots[i];
      for (int it = 0; it < 80; ++it) {
        Int fx = m.eval(x);
        if (fx == 0) break;
        Int d = m.eval_deriv(x), inv;
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pk.get_mpz_t()) == 0)
          throw ConsistencyFailure("Hensel derivative not invertible");
        x = mod_floor(x - fx * inv, pk);
      }
      auto X = reconstruct_from_residue(x, pk, tag, w, H);
      if (!X) continue;
      QuadElem x0 = (*X / QuadElem(Rat(delta))).with_tag(tag);
      if (g.eval(x0).is_zero()) {
        resolved[i] = true;
        if (std::find(out.begin(), out.end(), x0) == out.end()) out.push_back(x0);
      }
    }
    bool all = std::all_of(resolved.begin(), resolved.end(), [](bool b) { return b; });
    if (all || pk > target) break;
    k *= 2;
  }
  std::sort(out.begin(), out.end(), [](const QuadElem& a, const QuadElem& b) { return a.str() < b.str(); });
  return out;
}

}  // namespace torsionlab
