#include "torsionlab/arith.hpp"

#include <algorithm>

#include "torsionlab/errors.hpp"

namespace torsionlab {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Int> int_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto n = int_sqrt_exact(q.get_num());
  if (!n) return std::nullopt;
  auto d = int_sqrt_exact(q.get_den());
  if (!d) return std::nullopt;
  return make_rat(*n, *d);
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime_small(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

long next_prime(long n) {
  long c = n + 1;
  while (!is_prime_small(c)) ++c;
  return c;
}

namespace {

std::optional<Int> pollard_brent(const Int& n, unsigned long seed) {
  Int y = 2 + seed, c = 1 + seed, m = 128, g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Int& v) { return Int((v * v + c) % n); };
  long budget = 4000000;
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = f(y);
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      Int lim = std::min(m, Int(r - k));
      for (Int i = 0; i < lim; ++i) {
        y = f(y);
        Int t = abs(x - y);
        q = (q * t) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      budget -= lim.get_si();
      if (budget < 0) return std::nullopt;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Int t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void factor_rec(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  if (auto s = int_sqrt_exact(n)) {
    factor_rec(*s, out);
    factor_rec(*s, out);
    return;
  }
  for (unsigned long seed = 1; seed < 12; ++seed) {
    if (auto g = pollard_brent(n, seed)) {
      factor_rec(*g, out);
      factor_rec(n / *g, out);
      return;
    }
  }
  throw FactorizationExhausted("could not factor " + n.get_str());
}

}  // namespace

std::vector<std::pair<Int, int>> factor_integer(Int n) {
  std::vector<std::pair<Int, int>> res;
  if (n < 0) n = -n;
  if (n == 0) return res;
  auto push = [&](const Int& p) {
    if (!res.empty() && res.back().first == p)
      ++res.back().second;
    else
      res.emplace_back(p, 1);
  };
  for (unsigned long p = 2; p < 1000000; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      push(Int(p));
      n /= p;
    }
  }
  if (n > 1) {
    std::vector<Int> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (auto& p : rest) push(p);
  }
  return res;
}

Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  Int s = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(n))
    if (e % 2) s *= p;
  return s;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  for (auto& [p, e] : factor_integer(Int(n)))
    if (e > 1) return false;
  return true;
}

long mod_norm(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mod_pow(long b, long e, long m) {
  __int128 r = 1, x = mod_norm(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<long>(r);
}

long mod_inv(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = mod_norm(a, m);
  while (a1 != 0) {
    long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw DivisionByZero("not invertible mod " + std::to_string(m));
  return mod_norm(x, m);
}

int legendre(long a, long p) {
  a = mod_norm(a, p);
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<long> sqrt_mod_prime(long a, long p) {
  a = mod_norm(a, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  long q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  long z = 2;
  while (legendre(z, p) != -1) ++z;
  long m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0, t2 = t;
    while (t2 != 1) {
      t2 = static_cast<long>((__int128)t2 * t2 % p);
      ++i;
    }
    long b = mod_pow(c, 1L << (m - i - 1), p);
    m = i;
    c = static_cast<long>((__int128)b * b % p);
    t = static_cast<long>((__int128)t * c % p);
    r = static_cast<long>((__int128)r * b % p);
  }
  return std::min(r, p - r);
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int rat_mod(const Rat& x, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw DenominatorDivisibleByP("denominator " + x.get_den().get_str() + " not invertible");
  return mod_floor(x.get_num() * inv, m);
}

int valuation(Int n, long p) {
  if (n == 0) return 1 << 20;
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  return v;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace torsionlab
