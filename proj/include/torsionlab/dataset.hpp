#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/modcurve.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

struct TwistExpectation {
  std::string d;
  GroupShape twist, ext;
};

struct DatasetEntry {
  std::string id;
  long D = 0;
  std::string alpha, beta;
  GroupShape base;
  std::string source;
  bool slow = false;
  bool dual_purpose = false;
  std::optional<GroupShape> caption_group;
  std::vector<TwistExpectation> rows;

  FieldTag field() const;
  CurveK curve() const;
  QuadElem twist_param(const TwistExpectation& t) const;
};

struct Dataset {
  std::vector<DatasetEntry> curves;
  std::vector<QuadPointRecord> quad_points;
  std::vector<std::pair<std::string, std::string>> citations;
};

// Throws SyntaxError on malformed documents.
Dataset parse_dataset(const std::string& json_text);
Dataset load_dataset_file(const std::string& path);
const std::string& embedded_dataset_text();
const Dataset& embedded_dataset();

}  // namespace torsionlab
