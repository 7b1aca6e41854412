#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torsionlab/finite_field.hpp"
#include "torsionlab/mpoly.hpp"
#include "torsionlab/poly.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

// ---------------------------------------------------------------- plane curves and maps

struct ProjPoint {
  QuadElem x, y, z;
  ProjPoint() = default;
  ProjPoint(QuadElem x_, QuadElem y_, QuadElem z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  // Scaled so the last nonzero coordinate is 1.
  ProjPoint normalized() const;
  bool same(const ProjPoint& o) const;
  std::string str() const;  // "[x, y, z]"
  // "[a, b, c]" with field elements in w = sqrt(D).
  static ProjPoint parse(const std::string& text, FieldTag tag);
};

struct PlaneCurve {
  std::string name;
  MPoly F;  // homogeneous in x, y, z
  bool contains(const ProjPoint& P) const { return F.eval(P.x, P.y, P.z).is_zero(); }
};

struct RationalMap {
  std::string name;
  std::array<MPoly, 3> p;
  PlaneCurve source, target;
  std::vector<ProjPoint> stated_non_regular;
};

MPoly lemma_pC();           // affine p_C(x, y)
PlaneCurve curve_Cbar();    // projective closure of p_C = 0
PlaneCurve curve_EC();      // y^2 z + 2xyz + 2yz^2 = x^3 - x^2 z - 2xz^2
RationalMap phi_map();      // Cbar -> E_C
RationalMap psi_map();      // E_C -> Cbar
// Printed p1 of phi, including its repeated x^2 z^2 term.
MPoly phi_p1_printed();

// Image when the three coordinates do not vanish together; the image is checked on the target.
std::optional<ProjPoint> apply_map(const RationalMap& M, const ProjPoint& P);

struct BaseLocus {
  std::vector<ProjPoint> rational;   // sorted by print
  std::vector<ProjPoint> algebraic;  // over a quadratic field
  int irrational_degree = 0;         // degree of candidates left unresolved
};
// Common zeros of the source equation and the three map coordinates.
BaseLocus base_locus(const RationalMap& M);
struct BaseLocusCheck {
  BaseLocus computed;
  std::vector<ProjPoint> missing;  // stated but not a base point
  std::vector<ProjPoint> extra;    // base point but not stated
  bool matches() const { return missing.empty() && extra.empty(); }
};
BaseLocusCheck check_base_locus(const RationalMap& M);

struct FactorizationCheck {
  MPoly product;       // (x - y) * p_C
  MPoly derived;       // y^3 (y+2)(2x+1) - x^3 (x+2)(2y+1)
  MPoly printed;       // the expansion as printed
  bool printed_equal = false;
  bool derived_equal = false;   // product == derived
  bool derived_negated = false; // product == -derived
};
FactorizationCheck factorization_identity();

// ---------------------------------------------------------------- phi preimage table

struct PhiRow {
  long D = 0;  // field of the row; 0 for Q
  std::string point;
  std::string printed;    // "" for the empty set
  std::string corrected;  // differs from printed only for rows with a known misprint
  bool not_on_affine = false;  // printed with "not in C(K)"
};
const std::vector<PhiRow>& phi_table();
constexpr int kPhiRows = 15;

struct PhiRowResult {
  int index = 0;
  std::string status;  // "pass", "pass-with-erratum", "fail"
  bool lemma_solution = false;  // preimage gives x, y outside the excluded set
  long torsion_order = 0;       // order of the point on E_C, 0 if not torsion within the cap
  std::string detail;
};
struct PhiTableReport {
  std::vector<PhiRowResult> rows;
  int stated_rows = kPhiRows;
  bool all_rows_pass() const;
};
// strict: throw RowMismatch at the first failing row.
PhiTableReport verify_phi_inverse_table(bool strict = false);

bool lem3_excluded(const QuadElem& r);  // r in {-2, -1, -1/2, 0, 1}
bool lem3_solution_check(const QuadElem& a, const QuadElem& b, const QuadElem& a0, const QuadElem& b0,
                         const QuadElem& c0, const QuadElem& d);

// ---------------------------------------------------------------- parametrizations, C' and C''

std::array<QuadElem, 3> pythag_param(const QuadElem& t);

struct CPrimeCurve {
  std::string name;
  Poly<Rat> rhs;      // s^2 = rhs(t)
  Poly<Rat> working;  // y^2 = working(t)
  Poly<Rat> scale_poly;  // s = scale_poly(t) * y
  std::string target;
};
CPrimeCurve cprime_curves(const std::string& which);  // "C'" or "C''"
// rhs == scale_poly^2 * working, as polynomials.
bool cprime_identity(const CPrimeCurve& C);
bool squarefree_over_Q(const Poly<Rat>& f);
bool smooth_mod(const Poly<Rat>& f, long p);

// ---------------------------------------------------------------- genus 2 Jacobians

struct Mumford {
  Poly<FFElem> u, v;
  bool operator==(const Mumford& o) const { return u == o.u && v == o.v; }
  std::string str() const;
};

Mumford mumford_identity(const FiniteField& F);
bool mumford_valid(const Mumford& D, const Poly<FFElem>& f);
Mumford mumford_neg(const Mumford& D);
Mumford cantor_add(const Mumford& D1, const Mumford& D2, const Poly<FFElem>& f);

struct JacobianReport {
  long q = 0;
  long N1 = 0, N2 = 0;
  long zeta_order = 0;
  long enumerated = 0;
  std::vector<long> invariants;  // d1 | d2 | ...
  bool agree() const { return enumerated > 0 && zeta_order == enumerated; }
  std::string structure() const;  // "Z/2xZ/10"
};
// f with integer coefficients (ascending), deg 5; q a prime power with good reduction.
// Without enumerate only N1, N2 and the zeta order are filled in.
JacobianReport jacobian_group(const std::vector<long>& f, long q, bool enumerate = true);
std::vector<long> c2_working_model();  // t^5 + 2t^4 + 2t^2 - t

struct JacReduction {
  long order = 0;
  long characteristic = 0;
  std::string label;
};
struct GcdBound {
  long value = 1;
  std::set<long> uncontrolled;  // primes seen only at their own characteristic
};
// For each prime l: min over reductions of characteristic != l; caps bound v_l from above.
GcdBound torsion_gcd_bound(const std::vector<JacReduction>& red, const std::map<long, long>& caps = {});

// ---------------------------------------------------------------- auxiliary elliptic curves

struct AuxCurve {
  std::string name;
  CurveK curve;
  std::string model;
};
// E0: y^2 = x(x+4)(x+1); E1: y^2 = x^3 + 4x; E2: y^2 = x^3 - x; EC: y^2 + 2xy + 2y = x^3 - x^2 - 2x.
AuxCurve aux_curve(const std::string& name, FieldTag tag = FieldTag());
std::vector<std::string> aux_curve_names();

}  // namespace torsionlab
