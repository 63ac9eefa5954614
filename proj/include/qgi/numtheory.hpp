#pragma once

#include <vector>

namespace qgi {

// Moebius function: mu(1)=1, mu(n)=0 when a square divides n,
// (-1)^r when n is a product of r distinct primes. Throws InputError for n < 1.
int mobius(long n);

long euler_phi(long n);

std::vector<long> divisors(long n);  // ascending, includes 1 and n

bool is_prime(long n);

long power_mod(long base, long exp, long mod);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace qgi
