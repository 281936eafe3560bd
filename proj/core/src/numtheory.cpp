#include "sip/numtheory.hpp"

#include "sip/error.hpp"

namespace sip::nt {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> low, high;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

int mobius(long n) {
  int s = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      s = -s;
    }
  }
  if (n > 1) s = -s;
  return s;
}

long pow_mod(long base, long exp, long m) {
  if (m == 1) return 0;
  long long b = mod(base, m), r = 1;
  while (exp > 0) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<long>(r);
}

long inv_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    long q = g / a1;
    long t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw InvalidArgument("inv_mod: not invertible");
  return mod(x, m);
}

std::pair<long, int> prime_power(long n) {
  if (n < 2) return {0, 0};
  auto ps = prime_factors(n);
  if (ps.size() != 1) return {0, 0};
  int k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return {ps[0], k};
}

}  // namespace sip::nt
