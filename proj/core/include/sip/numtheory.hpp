#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace sip::nt {

bool is_prime(long n);
// Distinct prime divisors in increasing order.
std::vector<long> prime_factors(long n);
// All positive divisors in increasing order.
std::vector<long> divisors(long n);
long euler_phi(long n);
int mobius(long n);
// Modular exponentiation with a 64-bit intermediate; requires mod < 2^31.
long pow_mod(long base, long exp, long mod);
long inv_mod(long a, long mod);
// Returns (p, k) with n = p^k, or (0, 0) if n is not a prime power (n >= 2).
std::pair<long, int> prime_power(long n);
inline bool is_prime_power(long n) { return n >= 2 && prime_power(n).first != 0; }
inline long lcm(long a, long b) { return a / std::gcd(a, b) * b; }
// Q(zeta_n) = Q(zeta_{n/2}) when n = 2 mod 4; this picks the smaller index.
inline long normalize_conductor(long n) { return (n % 4 == 2) ? n / 2 : n; }
// Non-negative residue of a modulo n.
inline long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace sip::nt
