#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsionlab/dataset.hpp"
#include "torsionlab/harness.hpp"
#include "torsionlab/twistlab.hpp"

using namespace torsionlab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;

struct Common {
  std::string format = "text";
  bool timings = false;
  bool json() const { return format == "json-lines"; }
};

struct CurveArgs {
  long D = 0;
  std::string curve;
  std::string d;
};

// Errors raised while reading user input, tagged with the stage that failed.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldTag field_of(long D) {
  try {
    return D == 0 ? FieldTag() : FieldTag(D);
  } catch (const Error& e) {
    throw InputError(std::string("field: ") + e.what());
  }
}

// "alpha;beta" or "[a1,a2,a3,a4,a6]".
CurveK parse_curve(const std::string& text, FieldTag K) {
  try {
    if (!text.empty() && text.front() == '[') {
      if (text.back() != ']') throw SyntaxError("missing ]", text.size());
      std::vector<QuadElem> a;
      std::stringstream ss(text.substr(1, text.size() - 2));
      std::string part;
      while (std::getline(ss, part, ',')) a.push_back(parse_elem(part, K));
      if (a.size() != 5) throw SyntaxError("expected five coefficients", 0);
      return CurveK::weierstrass(a[0], a[1], a[2], a[3], a[4]);
    }
    auto semi = text.find(';');
    if (semi == std::string::npos) throw SyntaxError("expected \"alpha;beta\"", text.size());
    return make_curve(parse_elem(text.substr(0, semi), K), parse_elem(text.substr(semi + 1), K));
  } catch (const SyntaxError& e) {
    throw InputError(std::string("curve: ") + e.what());
  }
}

QuadElem parse_d(const std::string& text, FieldTag K) {
  try {
    return parse_elem(text, K);
  } catch (const SyntaxError& e) {
    throw InputError(std::string("twist parameter: ") + e.what());
  }
}

std::string field_name(FieldTag K) { return K.is_rational() ? "Q" : "Q(sqrt " + std::to_string(K.D()) + ")"; }

template <class F>
Json group_json(const TorsionGroup<F>& G, const Curve<F>& E) {
  Json j;
  j["group"] = G.shape.str();
  Json gens = Json::array();
  for (const auto& P : G.gens) {
    auto o = order_of_point(P, E, G.shape.order());
    gens.push_back({{"point", P.str()}, {"order", o ? *o : 0}});
  }
  j["generators"] = gens;
  return j;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.json())
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string gens_text(const Json& j) {
  std::string s;
  for (const auto& g : j["generators"])
    s += "  " + g["point"].get<std::string>() + "  order " + std::to_string(g["order"].get<long>()) + "\n";
  return s;
}

// ---------------------------------------------------------------- torsion

int cmd_torsion(const Common& c, const CurveArgs& a, bool ext, bool twist) {
  FieldTag K = field_of(a.D);
  CurveK E = parse_curve(a.curve, K);
  auto t0 = std::chrono::steady_clock::now();
  EngineInfo info;
  Json j;
  j["command"] = "torsion";
  j["kind"] = "base";
  j["field"] = a.D;
  j["curve"] = E.str();
  Json g;
  if (E.is_ab()) {
    auto G = torsion_subgroup(E, &info);
    g = group_json(G, E);
  } else {
    auto G = torsion_subgroup_generic(E, &info);
    g = group_json(G, E);
  }
  j.update(g);
  Json eng;
  eng["primes"] = info.primes;
  eng["bound"] = info.bound.get_str();
  if (info.hensel_prime) eng["hensel_prime"] = info.hensel_prime;
  if (info.precision_digits) eng["precision"] = info.precision_digits;
  j["engine"] = eng;
  if (c.timings)
    j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(c, j,
       E.str() + " over " + field_name(K) + "\nE(K)_tor = " + g["group"].get<std::string>() + "\n" + gens_text(g));

  if (a.d.empty()) return 0;
  if (!E.is_ab()) throw InputError("twist parameter: twists need a curve given as \"alpha;beta\"");
  QuadElem d = parse_d(a.d, K);
  if (!ext && !twist) ext = twist = true;
  auto X = torsion_subgroup_ext(E, d);
  if (twist) {
    CurveK Ed = twist_curve(E, d);
    Json t = group_json(X.twist, Ed);
    Json r = {{"command", "torsion"}, {"kind", "twist"}, {"field", a.D}, {"d", d.str()}, {"curve", Ed.str()}};
    r.update(t);
    emit(c, r, "E^d(K)_tor = " + t["group"].get<std::string>() + "  (d = " + d.str() + ")\n" + gens_text(t));
  }
  if (ext) {
    CurveL EL = lift_curve(E, X.L);
    Json t = group_json(X.group, EL);
    Json r = {{"command", "torsion"}, {"kind", "ext"}, {"field", a.D}, {"d", d.str()}, {"curve", E.str()}};
    r.update(t);
    emit(c, r, "E(K(sqrt d))_tor = " + t["group"].get<std::string>() + "  (d = " + d.str() + ", s = sqrt d)\n" + gens_text(t));
  }
  return 0;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Common& c, const CurveArgs& a) {
  FieldTag K = field_of(a.D);
  CurveK E = parse_curve(a.curve, K);
  if (!E.is_ab()) throw InputError("curve: classify needs \"alpha;beta\"");
  GroupShape G = torsion_subgroup(E).shape;
  auto tab = classification_table(K, G);
  auto P = predict_growth(E, G);
  Json j;
  j["command"] = "classify";
  j["field"] = a.D;
  j["curve"] = E.str();
  j["group"] = G.str();
  Json tw = Json::array(), gr = Json::array();
  for (const auto& s : tab.predicted_twists) tw.push_back(s.str());
  for (const auto& s : P.groups) gr.push_back(s.str());
  j["twists"] = tw;
  j["twists_upper_bound"] = tab.twists_upper_bound;
  j["growth"] = gr;
  j["growth_upper_bound"] = P.upper_bound;
  j["branch"] = P.branch;
  std::ostringstream os;
  os << E.str() << " over " << field_name(K) << "\n"
     << "G = " << G.str() << "\n"
     << "T_K(G) " << (tab.twists_upper_bound ? "within " : "= ") << to_string(tab.predicted_twists) << "\n"
     << "Phi_K(2,G) " << (P.upper_bound ? "within " : "= ") << to_string(P.groups) << "\n";
  if (!P.branch.empty()) os << "branch: " << P.branch << "\n";
  if (P.criterion) {
    j["criterion"] = *P.criterion;
    os << "criterion alpha - beta = +-z^2: " << (*P.criterion ? "true" : "false");
    if (auto z = four_by_four_witness(E)) {
      j["z"] = z->str();
      os << ", z = " << z->str();
    }
    os << "\n";
  }
  emit(c, j, os.str());
  return 0;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify(const Common& c, const std::vector<std::string>& tables, bool slow, const std::string& path) {
  HarnessOptions opt;
  opt.slow = slow;
  for (const auto& t : tables)
    if (t != "all") opt.tables.insert(t);
  for (const auto& t : opt.tables)
    if (std::find(harness_tables().begin(), harness_tables().end(), t) == harness_tables().end())
      throw InputError("table: unknown selector " + t);
  Dataset file;
  if (!path.empty()) {
    try {
      file = load_dataset_file(path);
    } catch (const SyntaxError& e) {
      throw InputError(std::string("dataset: ") + e.what());
    }
    opt.dataset = &file;
  }
  auto checks = verify_paper(opt);
  auto s = summarize(checks);
  for (const auto& ch : checks) {
    if (c.json()) {
      Json j;
      j["id"] = ch.id;
      j["table"] = ch.table;
      j["status"] = ch.status;
      if (!ch.reason.empty()) j["reason"] = ch.reason;
      j["detail"] = ch.detail;
      if (!ch.meta.empty()) j["engine"] = ch.meta;
      if (c.timings) j["seconds"] = ch.seconds;
      std::cout << j.dump() << "\n";
    } else {
      std::string st = ch.status == "skip" ? "skip(" + ch.reason + ")" : ch.status;
      std::cout << std::left << std::setw(12) << st << " " << ch.id;
      if (c.timings) std::cout << "  [" << std::fixed << std::setprecision(3) << ch.seconds << " s]";
      if (!ch.detail.empty()) std::cout << "\n             " << ch.detail;
      std::cout << "\n";
    }
  }
  if (c.json()) {
    std::cout << Json{{"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}}}}.dump() << "\n";
  } else {
    std::cout << "pass " << s.pass << "  fail " << s.fail << "  skip " << s.skip << "\n";
  }
  return s.fail ? kExitFail : 0;
}

// ---------------------------------------------------------------- scan

int cmd_scan(const Common& c, const CurveArgs& a, long bound) {
  FieldTag K = field_of(a.D);
  CurveK E = parse_curve(a.curve, K);
  if (!E.is_ab()) throw InputError("curve: scan needs \"alpha;beta\"");
  std::vector<QuadElem> ds;
  if (bound > 0) {
    long norm_bound = (5 * bound + 2) / 3;
    ds = default_twist_list(K, bound, norm_bound, K.in_S() ? paper_twist_values(K) : std::vector<QuadElem>{});
  }
  auto t0 = std::chrono::steady_clock::now();
  auto R = scan(E, ds, a.curve);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.json()) {
    for (const auto& r : R.rows) {
      Json j;
      j["command"] = "scan";
      j["field"] = a.D;
      j["curve"] = E.str();
      j["d"] = r.d.str();
      j["twist"] = r.twist ? r.twist->str() : "";
      j["ext"] = r.ext ? r.ext->str() : "";
      if (!r.error.empty()) j["error"] = r.error;
      j["violations"] = r.violations;
      std::cout << j.dump() << "\n";
    }
    Json s = {{"summary", {{"curve", E.str()}, {"base", R.base.str()}, {"rows", R.rows.size()},
                           {"violations", R.violations.size()}, {"classified", R.predictions}}}};
    if (c.timings) s["seconds"] = secs;
    std::cout << s.dump() << "\n";
  } else {
    std::cout << E.str() << " over " << field_name(K) << ", E(K)_tor = " << R.base.str() << "\n";
    if (!R.predictions) std::cout << "field outside the classified set: no predictions\n";
    for (const auto& r : R.rows) {
      std::cout << (r.violations.empty() && r.error.empty() ? "   " : "!! ") << std::left << std::setw(16)
                << r.d.str() << std::setw(12) << (r.twist ? r.twist->str() : "-") << (r.ext ? r.ext->str() : "-");
      if (!r.error.empty()) std::cout << "  error: " << r.error;
      for (const auto& v : r.violations) std::cout << "  " << v;
      std::cout << "\n";
    }
    std::cout << R.rows.size() << " rows, " << R.violations.size() << " violations";
    if (c.timings) std::cout << ", " << std::fixed << std::setprecision(2) << secs << " s";
    std::cout << "\n";
  }
  return R.ok() ? 0 : kExitFail;
}

void add_curve_opts(CLI::App* sub, CurveArgs& a, bool with_d) {
  sub->add_option("-D,--field", a.D, "discriminant parameter D (0 for Q)")->required();
  sub->add_option("-c,--curve", a.curve, "\"alpha;beta\" or \"[a1,a2,a3,a4,a6]\", w = sqrt(D)")->required();
  if (with_d) sub->add_option("-d,--twist-param", a.d, "twist parameter d, not a square in K");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
  sub->add_flag("--timings", c.timings, "include wall-clock timings");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of elliptic curves with full 2-torsion over quadratic fields"};
  app.require_subcommand(1);
  Common common;
  CurveArgs ca;
  bool ext = false, twist = false, slow = false;
  std::vector<std::string> tables = {"all"};
  std::string dataset_path;
  long bound = 30;

  auto* t = app.add_subcommand("torsion", "torsion subgroup over K, of E^d or over K(sqrt d)");
  add_curve_opts(t, ca, true);
  t->add_flag("--ext", ext, "print E(K(sqrt d))_tor");
  t->add_flag("--twist", twist, "print E^d(K)_tor");
  add_common(t, common);

  auto* cl = app.add_subcommand("classify", "predicted twists and growth");
  add_curve_opts(cl, ca, false);
  add_common(cl, common);

  auto* v = app.add_subcommand("verify-paper", "reproduce the published tables and computations");
  v->add_option("--table", tables, "all, tables, aux, lemma, jacobians, modcurve, units")->delimiter(',');
  v->add_flag("--slow", slow, "include the large-coefficient rows and full F_25 enumeration");
  v->add_option("--dataset", dataset_path, "dataset file overriding the embedded one");
  add_common(v, common);

  auto* s = app.add_subcommand("scan", "growth over K(sqrt d) for a default list of d");
  add_curve_opts(s, ca, false);
  s->add_option("--bound", bound, "bound on |d| for rational d (norm bound ceil(5B/3))")->check(CLI::NonNegativeNumber);
  add_common(s, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }
  try {
    if (*t) return cmd_torsion(common, ca, ext, twist);
    if (*cl) return cmd_classify(common, ca);
    if (*v) return cmd_verify(common, tables, slow, dataset_path);
    if (*s) return cmd_scan(common, ca, bound);
  } catch (const InputError& e) {
    std::cerr << "input error in " << e.what() << "\n";
    return kExitParse;
  } catch (const SyntaxError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "math engine error: " << e.what() << "\n";
    return kExitMath;
  }
  return 0;
}
