#pragma once

#include <optional>
#include <string>

#include "torsionlab/finite_field.hpp"
#include "torsionlab/qfield.hpp"
#include "torsionlab/tower.hpp"

namespace torsionlab {

// Uniform helpers used by the generic polynomial and curve templates.

inline Rat from_int(const Rat&, long n) { return Rat(n); }
inline QuadElem from_int(const QuadElem& like, long n) { return QuadElem(n).with_tag(like.tag()); }
inline TowerElem from_int(const TowerElem& like, long n) { return TowerElem(like.tag(), QuadElem(n)); }
inline FFElem from_int(const FFElem& like, long n) { return FFElem::from_int(like.field(), n); }

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline bool is_zero(const TowerElem& x) { return x.is_zero(); }
inline bool is_zero(const FFElem& x) { return x.is_zero(); }

inline std::optional<Rat> field_sqrt(const Rat& x) { return rat_sqrt_exact(x); }
inline std::optional<QuadElem> field_sqrt(const QuadElem& x) { return sqrt_in_K(x); }
inline std::optional<TowerElem> field_sqrt(const TowerElem& x) { return sqrt_in_L(x); }
inline std::optional<FFElem> field_sqrt(const FFElem& x) {
  auto r = x.field().sqrt(x.rep());
  if (!r) return std::nullopt;
  return FFElem(x.field(), *r);
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace torsionlab
