#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace torsionlab {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

std::optional<Int> int_sqrt_exact(const Int& n);
std::optional<Rat> rat_sqrt_exact(const Rat& q);

bool is_probable_prime(const Int& n);
bool is_prime_small(long n);
long next_prime(long n);

// Factorization by trial division to 10^6 and Pollard-Brent.
// Throws FactorizationExhausted when a composite cofactor resists.
std::vector<std::pair<Int, int>> factor_integer(Int n);

// Signed square-free part: n = s * k^2 with s square-free.
Int squarefree_part(const Int& n);
bool is_squarefree(long n);

int legendre(long a, long p);
long mod_pow(long b, long e, long m);
long mod_inv(long a, long m);
long mod_norm(long a, long m);
std::optional<long> sqrt_mod_prime(long a, long p);

Int mod_floor(const Int& a, const Int& m);
Int rat_mod(const Rat& x, const Int& m);  // x mod m; denominator must be a unit mod m

int valuation(Int n, long p);
Int lcm(const Int& a, const Int& b);

}  // namespace torsionlab
