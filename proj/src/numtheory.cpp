#include "charvar/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace charvar {

NotPrime::NotPrime(i64 p) : std::runtime_error("NotPrime: " + std::to_string(p)) {}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<i64> divisors(i64 n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<i64> out{1};
    for (auto& [p, e] : factorize(n)) {
        std::size_t base = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 mobius(i64 n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    i64 m = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

int p_valuation(i64 p, i64 n) {
    if (!is_prime(p)) throw NotPrime(p);
    if (n < 1) throw std::invalid_argument("p_valuation: n must be positive");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }
i64 lcm_i64(i64 a, i64 b) { return std::lcm(a, b); }

i64 ipow(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

i64 pow_mod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

i64 mult_order(i64 a, i64 m) {
    if (std::gcd(a, m) != 1) throw std::invalid_argument("mult_order: gcd(a,m) != 1");
    i64 ord = euler_phi(m);
    for (auto& [p, e] : factorize(ord)) {
        for (int i = 0; i < e && pow_mod(a, ord / p, m) == 1; ++i) ord /= p;
    }
    return ord;
}

} // namespace charvar
