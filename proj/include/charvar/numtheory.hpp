#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace charvar {

using i64 = std::int64_t;

struct NotPrime : std::runtime_error {
    explicit NotPrime(i64 p);
};

bool is_prime(i64 n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

// Distinct prime divisors, ascending.
std::vector<i64> prime_divisors(i64 n);

// All divisors of n, ascending.
std::vector<i64> divisors(i64 n);

i64 mobius(i64 n);

// Largest k with p^k | n. Throws NotPrime if p is not prime.
int p_valuation(i64 p, i64 n);

i64 euler_phi(i64 n);

i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);

i64 ipow(i64 b, int e);

// Multiplicative order of a modulo m, gcd(a, m) = 1.
i64 mult_order(i64 a, i64 m);

i64 pow_mod(i64 b, i64 e, i64 m);

} // namespace charvar
