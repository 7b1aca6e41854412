#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torsionlab/ecurve.hpp"
#include "torsionlab/qfield.hpp"
#include "torsionlab/tower.hpp"

namespace torsionlab {

// Z/m + Z/n with m | n.
struct GroupShape {
  long m = 1, n = 1;
  GroupShape() = default;
  GroupShape(long m_, long n_);
  long order() const { return m * n; }
  std::string str() const;  // "Z/2xZ/6", "Z/4", "0"
  static GroupShape parse(const std::string& s);  // accepts "Z/2xZ/6", "2x6", "Z/4", "4"
  bool operator==(const GroupShape& o) const { return m == o.m && n == o.n; }
  bool operator!=(const GroupShape& o) const { return !(*this == o); }
  bool operator<(const GroupShape& o) const { return order() != o.order() ? order() < o.order() : m < o.m; }
  bool contains(const GroupShape& o) const;  // o embeds as a subgroup
};

using ShapeSet = std::set<GroupShape>;
std::string to_string(const ShapeSet& s);

template <class F>
struct TorsionGroup {
  GroupShape shape;
  std::vector<Point<F>> gens;  // orders m (when m > 1) and n
};

struct EngineInfo {
  std::vector<std::string> primes;  // reduction primes used for the bound
  Int bound = 0;
  long hensel_prime = 0;
  long precision_digits = 0;
};

using CurveK = Curve<QuadElem>;
using PointK = Point<QuadElem>;
using CurveL = Curve<TowerElem>;
using PointL = Point<TowerElem>;

// Build E(alpha, beta) over K; with normalize, a common square factor z^2 is removed.
CurveK make_curve(const QuadElem& alpha, const QuadElem& beta);
struct NormalizedCurve {
  CurveK curve;
  QuadElem z;  // original = z^2 * normalized
};
NormalizedCurve normalize_curve(const CurveK& E);
// Scale by z^2 (z a positive integer) so that alpha, beta are integral.
NormalizedCurve integral_model(const CurveK& E);
// Returns E(z^2 alpha, z^2 beta) with point maps (x,y) -> (z^2 x, z^3 y).
CurveK scale_curve(const CurveK& E, const QuadElem& z);
PointK scale_point(const PointK& P, const QuadElem& z);
bool isomorphic_over_K(const CurveK& E1, const CurveK& E2);

std::optional<Curve<FFElem>> reduce_curve(const CurveK& E, const PrimeIdealRep& P);

struct ReductionCount {
  PrimeIdealRep P;
  long count;
};
struct TorsionBound {
  Int value = 1;
  std::map<long, int> valuations;
  std::vector<ReductionCount> counts;
  int v(long ell) const {
    auto it = valuations.find(ell);
    return it == valuations.end() ? 0 : it->second;
  }
};
TorsionBound torsion_bound(const CurveK& E);

Poly<QuadElem> division_poly(const CurveK& E, int ell);

template <class F>
struct SylowPart {
  long ell = 2;
  int a1 = 0, a2 = 0;
  Point<F> g1, g2;
};

// Full list of points of E(K)[ell^k] for the largest k allowed by the bound.
std::vector<PointK> ell_power_torsion_points(const CurveK& E, long ell, int max_k, EngineInfo* info = nullptr);

TorsionGroup<QuadElem> odd_torsion(const CurveK& E, EngineInfo* info = nullptr);
TorsionGroup<QuadElem> two_primary_torsion(const CurveK& E, EngineInfo* info = nullptr);
TorsionGroup<TowerElem> two_primary_torsion(const CurveL& E, long cap);
TorsionGroup<QuadElem> torsion_subgroup(const CurveK& E, EngineInfo* info = nullptr);
// Any Weierstrass model over K, via division-polynomial roots up to the bound.
TorsionGroup<QuadElem> torsion_subgroup_generic(const CurveK& E, EngineInfo* info = nullptr);
std::vector<PointK> torsion_points_generic(const CurveK& E, EngineInfo* info = nullptr);

CurveK twist_curve(const CurveK& E, const QuadElem& d);
CurveL lift_curve(const CurveK& E, const std::shared_ptr<const TowerTag>& L);
PointL lift_point(const PointK& P, const std::shared_ptr<const TowerTag>& L);
// tau: E^d(K) -> E(L), (X, Y) -> (X/d, Y sqrt(d)/d^2).
PointL twist_map(const PointK& Q, const std::shared_ptr<const TowerTag>& L);
PointL sigma_point(const PointL& P);

struct ExtTorsion {
  TorsionGroup<TowerElem> group;
  TorsionGroup<QuadElem> base, twist;
  std::shared_ptr<const TowerTag> L;
};
ExtTorsion torsion_subgroup_ext(const CurveK& E, const QuadElem& d);

struct CriterionResult {
  bool holds = false;
  int model = -1;  // 0: (alpha,beta), 1: (-alpha, beta-alpha), 2: (-beta, alpha-beta)
  std::map<std::string, QuadElem> witness;
  std::string str() const;
};
CriterionResult order_criteria(const CurveK& E, int n);
// The three full-2-torsion models obtained by moving each 2-torsion point to 0.
std::vector<std::pair<QuadElem, QuadElem>> shifted_models(const QuadElem& alpha, const QuadElem& beta);

std::set<long> galois_square_units(long n);

struct StableSubgroupReport {
  bool stable = false;
  long order = 0;
  bool cyclic = false;
};
StableSubgroupReport verify_stable_subgroup(const CurveK& E, const QuadElem& d, const std::vector<PointL>& C);

// Torsion structures allowed over K (class number one, D != -1, -3) or over Q.
ShapeSet allowed_torsion(FieldTag tag);

}  // namespace torsionlab
