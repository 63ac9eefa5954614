#include "qgi/numtheory.hpp"

#include <numeric>

#include "qgi/errors.hpp"

namespace qgi {

int mobius(long n) {
    if (n < 1) throw InputError("mobius: argument must be >= 1");
    int r = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;  // square factor
            ++r;
        }
    }
    if (n > 1) ++r;
    return (r % 2 == 0) ? 1 : -1;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long n) {
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

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long power_mod(long base, long exp, long mod) {
    unsigned long long r = 1, b = static_cast<unsigned long long>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) r = r * b % static_cast<unsigned long long>(mod);
        b = b * b % static_cast<unsigned long long>(mod);
        exp >>= 1;
    }
    return static_cast<long>(r);
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace qgi
