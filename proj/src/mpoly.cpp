#include "torsionlab/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "torsionlab/errors.hpp"

namespace torsionlab {

void MPoly::add_term(const Mono& m, const QuadElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

MPoly MPoly::constant(const QuadElem& c) {
  MPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

MPoly MPoly::var(int i) {
  MPoly p;
  Mono m{0, 0, 0};
  m[i] = 1;
  p.add_term(m, QuadElem(1));
  return p;
}

MPoly MPoly::parse(const std::string& s) {
  MPoly out;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto number = [&]() -> long {
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) throw SyntaxError("expected a number", st);
    return std::stol(s.substr(st, i - st));
  };
  skip();
  if (i == s.size()) throw SyntaxError("empty polynomial", 0);
  bool first = true;
  while (true) {
    skip();
    if (i == s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw SyntaxError("expected + or -", i);
    }
    first = false;
    long c = 1;
    Mono m{0, 0, 0};
    bool any = false;
    while (i < s.size()) {
      skip();
      if (i == s.size()) break;
      char ch = s[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
        any = true;
      } else if (ch == 'x' || ch == 'y' || ch == 'z') {
        ++i;
        int e = 1;
        skip();
        if (i < s.size() && s[i] == '^') {
          ++i;
          skip();
          e = static_cast<int>(number());
        }
        m[ch - 'x'] += e;
        any = true;
      } else if (ch == '*') {
        ++i;
      } else {
        break;
      }
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) break;
    }
    if (!any) throw SyntaxError("empty term", i);
    out.add_term(m, QuadElem(sign * c));
  }
  return out;
}

int MPoly::total_degree() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

int MPoly::degree_in(int v) const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m[v]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = total_degree();
  for (auto& [m, c] : t_)
    if (m[0] + m[1] + m[2] != d) return false;
  return true;
}

QuadElem MPoly::eval(const QuadElem& x, const QuadElem& y, const QuadElem& z) const {
  QuadElem r(0);
  const QuadElem* v[3] = {&x, &y, &z};
  for (auto& [m, c] : t_) {
    QuadElem t = c;
    for (int k = 0; k < 3; ++k)
      if (m[k]) t *= torsionlab::pow(*v[k], m[k]);
    r += t;
  }
  return r;
}

MPoly MPoly::compose(const MPoly& X, const MPoly& Y, const MPoly& Z) const {
  MPoly r;
  const MPoly* v[3] = {&X, &Y, &Z};
  std::map<std::pair<int, int>, MPoly> cache;
  auto pw = [&](int k, int e) -> const MPoly& {
    auto key = std::make_pair(k, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, v[k]->pow(e)).first;
    return it->second;
  };
  for (auto& [m, c] : t_) {
    MPoly t = constant(c);
    for (int k = 0; k < 3; ++k)
      if (m[k]) t = t * pw(k, m[k]);
    r += t;
  }
  return r;
}

MPoly MPoly::coeff(int v, int k) const {
  MPoly r;
  for (auto& [m, c] : t_)
    if (m[v] == k) {
      Mono mm = m;
      mm[v] = 0;
      r.add_term(mm, c);
    }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

MPoly MPoly::pow(int e) const {
  MPoly r = constant(QuadElem(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  static const char* names[3] = {"x", "y", "z"};
  // Highest total degree first, then lexicographic in (x, y, z) descending.
  std::vector<std::pair<Mono, QuadElem>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (auto& [m, c] : v) {
    std::string mono;
    for (int k = 0; k < 3; ++k) {
      if (!m[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    std::string cs = c.str();
    bool neg = !c.is_rational() ? false : sgn(c.a()) < 0;
    if (neg) cs = (-c).str();
    if (!c.is_rational()) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += neg ? " - " + term : " + " + term;
  }
  return out;
}

}  // namespace torsionlab
