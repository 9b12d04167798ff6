#include "ckdim/numbers.hpp"

#include <algorithm>

namespace ckdim {

std::vector<long> divisors(long n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(long n) {
  if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

long squarefree_part(long n) {
  if (n < 0) throw std::invalid_argument("squarefree_part: n must be nonnegative");
  if (n == 0) return 0;
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) result *= p;
  }
  return result * n;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

Int rat_floor(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

int rat_sign(const Rat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

}  // namespace ckdim
