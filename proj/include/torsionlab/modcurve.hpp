#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/poly.hpp"
#include "torsionlab/qfield.hpp"

namespace torsionlab {

struct HyperModel {
  int N = 0;
  std::optional<Poly<Rat>> g, h;  // long form y^2 + g y = h
  Poly<Rat> f;                    // short form y^2 = f
  std::vector<std::string> infinity;  // labelled points at infinity
};
HyperModel hyper_model(int N);  // N in {30, 40, 48}

enum class ModelForm { Long, Short };
// Long form residual: h(x) - y^2 - g(x) y; short form: f(x) - y^2.
QuadElem model_eval(int N, ModelForm form, const QuadElem& x, const QuadElem& y);

// g^2 + 4h == f_30.
bool long_short_identity();
// (x, y) -> (x, 2y + g(x)).
std::pair<QuadElem, QuadElem> long_to_short(const QuadElem& x, const QuadElem& y);
// Points at infinity of the long model in weighted coordinates [1, Y, 0] with Y^2 + g4 Y - h8 = 0.
std::vector<Rat> long_model_infinity_Y();

// Number of distinct real roots (squarefree part first).
int sturm_real_roots(const Poly<Rat>& f);

struct QuadPointRecord {
  int N = 0;
  long D = 0;  // field of definition, 0 for Q
  std::string x, y;
  std::string model;  // "long" or "short"
  std::string source;
  std::string annotation;
};

struct QuadPointAuditRow {
  QuadPointRecord rec;
  bool on_long = false, on_short = false;
  bool on_stated = false;
  bool field_ok = false;
  std::string residual;
  bool ok() const { return on_stated && field_ok; }
};
struct QuadPointAudit {
  int N = 0;
  std::vector<QuadPointAuditRow> rows;
  bool ok() const;
};
// strict: throw RecordMismatch on the first failing record.
QuadPointAudit quad_point_audit(int N, const std::vector<QuadPointRecord>& records, bool strict = false);

}  // namespace torsionlab
