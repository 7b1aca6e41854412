#include "torsionlab/dataset.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace torsionlab {

FieldTag DatasetEntry::field() const { return D == 0 ? FieldTag() : FieldTag(D); }

CurveK DatasetEntry::curve() const {
  FieldTag K = field();
  return make_curve(parse_elem(alpha, K), parse_elem(beta, K));
}

QuadElem DatasetEntry::twist_param(const TwistExpectation& t) const { return parse_elem(t.d, field()).with_tag(field()); }

Dataset parse_dataset(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("dataset: ") + e.what(), e.byte);
  }
  Dataset ds;
  try {
    for (auto& c : doc.at("curves")) {
      DatasetEntry e;
      e.id = c.at("id").get<std::string>();
      e.D = c.at("field").get<long>();
      e.alpha = c.at("alpha").get<std::string>();
      e.beta = c.at("beta").get<std::string>();
      e.base = GroupShape::parse(c.at("base").get<std::string>());
      e.source = c.value("source", "");
      e.slow = c.value("slow", false);
      e.dual_purpose = c.value("dual_purpose", false);
      if (c.contains("caption_group")) e.caption_group = GroupShape::parse(c.at("caption_group").get<std::string>());
      for (auto& t : c.at("twists"))
        e.rows.push_back({t.at("d").get<std::string>(), GroupShape::parse(t.at("twist").get<std::string>()),
                          GroupShape::parse(t.at("ext").get<std::string>())});
      try {
        e.field();
        parse_elem(e.alpha, e.field());
        parse_elem(e.beta, e.field());
        for (const auto& r : e.rows) parse_elem(r.d, e.field());
      } catch (const SyntaxError&) {
        throw;
      } catch (const Error& ex) {
        throw SyntaxError("dataset entry " + e.id + ": " + ex.what(), 0);
      }
      ds.curves.push_back(std::move(e));
    }
    if (doc.contains("quad_points"))
      for (auto& q : doc.at("quad_points")) {
        QuadPointRecord r;
        r.N = q.at("N").get<int>();
        r.D = q.at("field").get<long>();
        r.x = q.at("x").get<std::string>();
        r.y = q.at("y").get<std::string>();
        r.model = q.value("model", "short");
        r.source = q.value("source", "");
        r.annotation = q.value("annotation", "");
        ds.quad_points.push_back(std::move(r));
      }
    if (doc.contains("citations"))
      for (auto& [k, v] : doc.at("citations").items()) ds.citations.emplace_back(k, v.get<std::string>());
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("dataset: ") + e.what(), 0);
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw SyntaxError(std::string("dataset: ") + e.what(), 0);
  }
  return ds;
}

Dataset load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot read dataset " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dataset(ss.str());
}

const Dataset& embedded_dataset() {
  static const Dataset ds = parse_dataset(embedded_dataset_text());
  return ds;
}

}  // namespace torsionlab
