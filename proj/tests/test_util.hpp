#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "torsionlab/torsion.hpp"

namespace tl_test {

using namespace torsionlab;

inline FieldTag field(long D) { return D == 0 ? FieldTag() : FieldTag(D); }
inline QuadElem el(const std::string& s, long D = 0) { return parse_elem(s, field(D)); }
inline CurveK curve(long D, const std::string& a, const std::string& b) { return make_curve(el(a, D), el(b, D)); }
inline GroupShape shape(const std::string& s) { return GroupShape::parse(s); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tl_test
