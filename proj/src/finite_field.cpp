#include "torsionlab/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "torsionlab/arith.hpp"
#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

std::mutex g_registry_mutex;
std::map<std::pair<long, std::vector<long>>, std::unique_ptr<FiniteField>>& registry() {
  static std::map<std::pair<long, std::vector<long>>, std::unique_ptr<FiniteField>> r;
  return r;
}

const FiniteField& intern(long p, std::vector<long> modulus) {
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, modulus);
  auto& slot = registry()[key];
  if (!slot) slot = std::make_unique<FiniteField>(p, std::move(modulus));
  return *slot;
}

// Irreducibility of a monic polynomial over F_p by trial division with all monic
// polynomials of degree <= k/2 (only small fields are ever requested).
bool is_irreducible(long p, const std::vector<long>& m) {
  int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<long> g(d + 1);
      long t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      std::vector<long> r = m;
      for (int i = k; i >= d; --i) {
        long c = r[i];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) r[i - d + j] = mod_norm(r[i - d + j] - c * g[j], p);
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

const FiniteField& FiniteField::prime(long p) {
  if (!is_prime_small(p)) throw Error("InvalidField", std::to_string(p) + " is not prime");
  return intern(p, {0, 1});
}

const FiniteField& FiniteField::quadratic(long p, long D) {
  if (!is_prime_small(p) || p == 2) throw Error("InvalidField", "need odd prime");
  if (legendre(D, p) != -1)
    throw Error("InvalidField", "x^2 - " + std::to_string(D) + " is reducible mod " + std::to_string(p));
  return intern(p, {mod_norm(-D, p), 0, 1});
}

const FiniteField& FiniteField::extension(long p, int k) {
  if (k == 1) return prime(p);
  if (!is_prime_small(p)) throw Error("InvalidField", std::to_string(p) + " is not prime");
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<long> m(k + 1);
    long t = idx;
    for (int i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (m[0] != 0 && is_irreducible(p, m)) return intern(p, m);
  }
  throw Error("InvalidField", "no irreducible polynomial found");
}

FiniteField::FiniteField(long p, std::vector<long> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k_; ++i) q_ *= p_;
  if (q_ > (1L << 22)) throw Error("InvalidField", "field too large for table arithmetic");
  if (k_ > 1) {
    if (q_ <= 1024) {
      add_.resize(static_cast<std::size_t>(q_ * q_));
      for (long a = 0; a < q_; ++a)
        for (long b = 0; b < q_; ++b) {
          long r = 0, pw = 1, x = a, y = b;
          for (int i = 0; i < k_; ++i) {
            r += ((x % p_ + y % p_) % p_) * pw;
            x /= p_;
            y /= p_;
            pw *= p_;
          }
          add_[a * q_ + b] = static_cast<std::uint16_t>(r);
        }
    }
    log_.assign(q_, -1);
    exp_.assign(q_ - 1, 0);
    for (long g = 2; g < q_; ++g) {
      Rep cur = 1;
      long order = 0;
      do {
        cur = poly_mul_slow(cur, static_cast<Rep>(g));
        ++order;
      } while (cur != 1 && order < q_);
      if (order != q_ - 1) continue;
      cur = 1;
      for (long e = 0; e < q_ - 1; ++e) {
        exp_[e] = static_cast<std::int32_t>(cur);
        log_[cur] = static_cast<std::int32_t>(e);
        cur = poly_mul_slow(cur, static_cast<Rep>(g));
      }
      break;
    }
    if (log_[1] != 0) throw Error("InvalidField", "modulus is not irreducible");
  }
  root_.assign(q_, -1);
  for (long x = 0; x < q_; ++x) {
    Rep s = mul(static_cast<Rep>(x), static_cast<Rep>(x));
    if (root_[s] < 0) root_[s] = static_cast<std::int32_t>(x);
  }
}

FiniteField::Rep FiniteField::poly_mul_slow(Rep a, Rep b) const {
  auto da = digits(a), db = digits(b);
  std::vector<long> prod(2 * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (int i = 2 * k_ - 1; i >= k_; --i) {
    long c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j <= k_; ++j) prod[i - k_ + j] = mod_norm(prod[i - k_ + j] - c * modulus_[j], p_);
  }
  prod.resize(k_);
  return from_digits(prod);
}

FiniteField::Rep FiniteField::from_int(long n) const { return static_cast<Rep>(mod_norm(n, p_)); }

FiniteField::Rep FiniteField::from_digits(const std::vector<long>& c) const {
  long r = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    long ci = i < static_cast<int>(c.size()) ? mod_norm(c[i], p_) : 0;
    r += ci * pw;
    pw *= p_;
  }
  return static_cast<Rep>(r);
}

std::vector<long> FiniteField::digits(Rep a) const {
  std::vector<long> d(k_);
  long t = a;
  for (int i = 0; i < k_; ++i) {
    d[i] = t % p_;
    t /= p_;
  }
  return d;
}

FiniteField::Rep FiniteField::add(Rep a, Rep b) const {
  if (k_ == 1) {
    long r = static_cast<long>(a) + b;
    return static_cast<Rep>(r >= p_ ? r - p_ : r);
  }
  if (!add_.empty()) return add_[a * q_ + b];
  long r = 0, pw = 1, x = a, y = b;
  for (int i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * pw;
    x /= p_;
    y /= p_;
    pw *= p_;
  }
  return static_cast<Rep>(r);
}

FiniteField::Rep FiniteField::neg(Rep a) const {
  if (k_ == 1) return a == 0 ? 0 : static_cast<Rep>(p_ - a);
  long r = 0, pw = 1, x = a;
  for (int i = 0; i < k_; ++i) {
    long c = x % p_;
    r += (c == 0 ? 0 : p_ - c) * pw;
    x /= p_;
    pw *= p_;
  }
  return static_cast<Rep>(r);
}

FiniteField::Rep FiniteField::sub(Rep a, Rep b) const { return add(a, neg(b)); }

FiniteField::Rep FiniteField::mul(Rep a, Rep b) const {
  if (k_ == 1) return static_cast<Rep>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  if (exp_.empty()) return poly_mul_slow(a, b);
  long e = static_cast<long>(log_[a]) + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return static_cast<Rep>(exp_[e]);
}

FiniteField::Rep FiniteField::inv(Rep a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in " + name());
  if (k_ == 1) return static_cast<Rep>(mod_inv(a, p_));
  long e = log_[a] == 0 ? 0 : (q_ - 1) - log_[a];
  return static_cast<Rep>(exp_[e]);
}

FiniteField::Rep FiniteField::pow(Rep a, long e) const {
  Rep r = 1, x = a;
  if (e < 0) {
    x = inv(a);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

int FiniteField::chi(Rep a) const {
  if (a == 0) return 0;
  return root_[a] >= 0 ? 1 : -1;
}

std::optional<FiniteField::Rep> FiniteField::sqrt(Rep a) const {
  if (root_[a] < 0) return std::nullopt;
  return static_cast<Rep>(root_[a]);
}

std::string FiniteField::str(Rep a) const {
  if (k_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0)
      s += std::to_string(d[i]);
    else {
      if (d[i] != 1) s += std::to_string(d[i]) + "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string FiniteField::name() const {
  return "GF(" + std::to_string(p_) + (k_ > 1 ? "^" + std::to_string(k_) : "") + ")";
}

long FFElem::coord(int i) const {
  auto d = F_->digits(v_);
  return i < static_cast<int>(d.size()) ? d[i] : 0;
}

void FFElem::check(const FFElem& o) const {
  if (F_ != o.F_) throw MixedFields("finite field elements from " + F_->name() + " and " + o.F_->name());
}

FFElem& FFElem::operator+=(const FFElem& o) {
  check(o);
  v_ = F_->add(v_, o.v_);
  return *this;
}
FFElem& FFElem::operator-=(const FFElem& o) {
  check(o);
  v_ = F_->sub(v_, o.v_);
  return *this;
}
FFElem& FFElem::operator*=(const FFElem& o) {
  check(o);
  v_ = F_->mul(v_, o.v_);
  return *this;
}
FFElem& FFElem::operator/=(const FFElem& o) {
  check(o);
  v_ = F_->mul(v_, F_->inv(o.v_));
  return *this;
}

std::string to_string(const FFElem& x) { return x.str(); }

}  // namespace torsionlab
