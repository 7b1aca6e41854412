#pragma once

#include <vector>

#include "torsionlab/poly.hpp"
#include "torsionlab/qfield.hpp"

namespace torsionlab {

struct RootSearchInfo {
  long prime = 0;      // split prime used for lifting (0 if none needed)
  long digits = 0;     // decimal digits of the final p-adic precision
  long candidates = 0; // simple roots modulo the prime
};

// All roots in K of f (K given by tag; D <= 0). Roots are found modulo a split
// prime, Hensel-lifted, reconstructed by lattice reduction and verified exactly.
std::vector<QuadElem> roots_in_K(const Poly<QuadElem>& f, FieldTag tag, RootSearchInfo* info = nullptr);

}  // namespace torsionlab
