#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/torsion.hpp"

namespace torsionlab {

struct ClassificationTable {
  FieldTag field;
  GroupShape G;
  ShapeSet predicted_twists;
  ShapeSet predicted_growth;  // for Z/2xZ/4 the union of both branches
  bool twists_upper_bound = false;
  bool growth_upper_bound = false;
  bool curve_dependent = false;
};

ClassificationTable classification_table(FieldTag tag, const GroupShape& G);
ShapeSet predicted_twist_groups(FieldTag tag, const GroupShape& G);

struct GrowthPrediction {
  ShapeSet groups;
  bool upper_bound = false;
  std::optional<bool> criterion;  // Z/2xZ/4 only: alpha - beta = +-z^2 on the square model
  std::string branch;
};
GrowthPrediction predict_growth(const CurveK& E, const GroupShape& G);
ShapeSet predicted_growth_groups(const CurveK& E, const GroupShape& G);
// alpha - beta = +-z^2 after moving to the model where alpha, beta are squares.
std::optional<QuadElem> four_by_four_witness(const CurveK& E);

struct InjectionReport {
  bool ok = false;
  GroupShape base, twist, ext;
  long image_order = 0;
  std::vector<std::string> notes;
};
InjectionReport injection_report(const CurveK& E, const QuadElem& d);
bool check_injection(const CurveK& E, const QuadElem& d);

// d values equal modulo squares of K.
bool same_square_class(const QuadElem& d1, const QuadElem& d2);
// Square-free rationals with |d| <= rational_bound, then elements of O_K of norm <= norm_bound,
// then extras; squares dropped, deduplicated by square class, sorted by norm then print.
std::vector<QuadElem> default_twist_list(FieldTag tag, long rational_bound = 30, long norm_bound = 50,
                                         const std::vector<QuadElem>& extras = {});
std::vector<QuadElem> paper_twist_values(FieldTag tag);
void sort_twist_list(std::vector<QuadElem>& ds);

struct ScanRow {
  QuadElem d;
  std::optional<GroupShape> twist, ext;
  std::string error;
  std::vector<std::string> violations;
};

struct ScanReport {
  std::string curve_id;
  FieldTag field;
  GroupShape base;
  bool predictions = false;  // false when the field lies outside the classified set
  std::vector<ScanRow> rows;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Workers from TORSIONLAB_THREADS (default: hardware concurrency); rows keep d order.
ScanReport scan(const CurveK& E, const std::vector<QuadElem>& d_list, const std::string& curve_id = "");
int worker_count();

}  // namespace torsionlab
