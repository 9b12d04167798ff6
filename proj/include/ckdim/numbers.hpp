#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace ckdim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Divisors of n in increasing order. Trial division; degrees stay small.
std::vector<long> divisors(long n);

// Moebius function via trial factorization.
int mobius(long n);

// Largest squarefree e with n = e * s^2. squarefree_part(0) = 0.
long squarefree_part(long n);

Int int_pow(const Int& base, unsigned long exp);

Int binomial(long n, long k);

Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

// -1, 0, +1
int rat_sign(const Rat& x);

}  // namespace ckdim
