#include "charvar/phi.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "charvar/cyclotomic.hpp"

namespace charvar {

namespace {

mpq_class mpq_pow(const mpq_class& b, i64 e) {
    mpq_class r = 1;
    for (i64 i = 0; i < e; ++i) r *= b;
    return r;
}

mpz_class mpz_pow_i(i64 b, i64 e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

void check_phi_pre(i64 n, i64 d, i64 s, i64 K, i64 g) {
    if (n < 1 || d < 1 || s < 1 || K < 1 || g < 1)
        throw std::invalid_argument("phi: arguments must be positive");
    if (n % d != 0 || n % s != 0) throw std::invalid_argument("phi: need d|n and s|n");
}

} // namespace

int phi_exponent(i64 p, i64 n, i64 d, i64 s, i64 K) {
    if (!is_prime(p)) throw NotPrime(p);
    int vs = p_valuation(p, s);
    int vn = p_valuation(p, n);
    int vd = p_valuation(p, d);
    int vK = p_valuation(p, K);
    return std::min({vs, vn - vd, vd, vn - vs, vK});
}

mpq_class phi_g_closed(i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    mpq_class r = 1;
    for (i64 p : prime_divisors(n)) {
        int phi = phi_exponent(p, n, d, s, K);
        // ((p - p^{1-2g}) p^phi + p^{1-2g} - 1) / (p - 1), cleared by p^{2g-1}:
        // ((p^{2g} - 1) p^phi + 1 - p^{2g-1}) / (p^{2g-1} (p - 1))
        mpz_class p2g1 = mpz_pow_i(p, 2 * g - 1);
        mpz_class num = (p2g1 * p - 1) * mpz_pow_i(p, phi) + 1 - p2g1;
        mpq_class f(num, p2g1 * (p - 1));
        f.canonicalize();
        r *= f;
    }
    return r;
}

mpq_class phi_g_sum(i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    mpq_class r = 0;
    i64 gds = gcd_i64(s, d);
    for (i64 A : divisors(gds)) {
        if ((K * d / A) % gcd_i64(d, n / s) != 0) continue;
        for (i64 d1 : divisors(A)) {
            i64 mu = mobius(d1);
            if (mu == 0) continue;
            mpz_class num = A * mpz_pow_i(gcd_i64(d, n * A / s), 2 * g - 1) * gcd_i64(d, n / s);
            mpq_class t(mu * num, mpz_pow_i(d, 2 * g) * mpz_pow_i(d1, 2 * g));
            t.canonicalize();
            r += t;
        }
    }
    return r;
}

mpq_class phi_g_def(i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    mpq_class r = 0;
    for (i64 A : divisors(gcd_i64(s, d))) {
        mpq_class cnt(count_order_elements(d, 2 * g, A));
        r += cnt * phi_st_closed(A, n, d, s, K, g);
    }
    return r;
}

mpq_class phi_st_closed(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (d % A != 0 || s % A != 0) throw std::invalid_argument("phi_st: need A|d and A|s");
    if ((K * d / A) % gcd_i64(d, n / s) != 0) return 0;
    mpq_class r = mpq_pow(mpq_class(gcd_i64(d, n * A / s), d * A), 2 * g - 1);
    r *= mpq_class(gcd_i64(d, n / s), d);
    r.canonicalize();
    return r;
}

mpq_class phi_st_sum(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (d % A != 0 || s % A != 0) throw std::invalid_argument("phi_st: need A|d and A|s");
    mpq_class r = 0;
    for (i64 B : divisors(gcd_i64(n * A / s, d))) {
        for (i64 d2 : divisors(B)) {
            i64 mu = mobius(d2);
            if (mu == 0) continue;
            i64 gcd_term = gcd_i64(A, n * A * d2 / (B * s));
            if ((K * d / B * gcd_i64(A, d2)) % gcd_term != 0) continue;
            mpq_class t(mu * mpz_pow_i(B, 2 * g) * gcd_term,
                        mpz_pow_i(d, 2 * g) * mpz_pow_i(A, 2 * g) * mpz_pow_i(d2, 2 * g));
            t.canonicalize();
            r += t;
        }
    }
    return r;
}

namespace {

// Inner term of the lattice sums: given the order B of b and the reduced
// symplectic residue, decide membership in F_{a,s} (e_A convention).
bool lattice_condition(i64 A, i64 n, i64 s, i64 B, i64 delta_hat_mod_gab) {
    if ((n * A / s) % B != 0) return false;
    i64 eA = A / gcd_i64(A, n * A / (B * s));
    return delta_hat_mod_gab % eA == 0;
}

} // namespace

mpq_class phi_st_lattice(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (d % A != 0 || s % A != 0) throw std::invalid_argument("phi_st: need A|d and A|s");
    // a = (d/A, 0, 0, ..., 0); the reduced coordinates a' = (1, 0, ..., 0).
    // DP over the g coordinate pairs of b, tracking
    //   G = gcd(d, entries so far) and t = a'-weighted symplectic sum,
    // t kept modulo A*d (fine enough for both the character value mod A and
    // the reduced pairing t/G modulo gcd(A, B)).
    i64 mod_t = A * d;
    std::map<std::pair<i64, i64>, mpz_class> state;
    state[{d, 0}] = 1;
    for (i64 pair = 0; pair < g; ++pair) {
        std::map<std::pair<i64, i64>, mpz_class> next;
        for (auto& [st, cnt] : state) {
            auto [G, t] = st;
            for (i64 b1 = 0; b1 < d; ++b1) {
                for (i64 b2 = 0; b2 < d; ++b2) {
                    i64 G2 = gcd_i64(G, gcd_i64(b1, b2));
                    i64 t2 = pair == 0 ? (t + b2) % mod_t : t; // a' = (1,0) on the first pair
                    next[{G2, t2}] += cnt;
                }
            }
        }
        state = std::move(next);
    }
    std::vector<mpz_class> zeta_coeffs(A, mpz_class(0));
    for (auto& [st, cnt] : state) {
        auto [G, t] = st;
        i64 B = d / G;
        i64 gab = gcd_i64(A, B);
        i64 delta_hat = (t / G) % gab;
        if (!lattice_condition(A, n, s, B, delta_hat)) continue;
        zeta_coeffs[(K % A) * (t % A) % A] += cnt;
    }
    Cyc total(A);
    for (i64 k = 0; k < A; ++k) total = total + Cyc::zeta(A, k) * zeta_coeffs[k];
    mpq_class r(total.integer_value(), mpz_pow_i(d, 2 * g) * mpz_pow_i(A, 2 * g - 1));
    r.canonicalize();
    return r;
}

mpq_class phi_st_lattice_bruteforce(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    std::vector<i64> avec(2 * g, 0);
    avec[0] = d / A;
    TorusVector a(d, avec);
    std::vector<i64> b(2 * g, 0);
    Cyc total(d);
    while (true) {
        TorusVector bv(d, b);
        i64 B = bv.order();
        if ((n * A / s) % B == 0) {
            i64 gab = gcd_i64(A, B);
            i64 dh = 0;
            if (B > 1 || A > 1) {
                // reduced symplectic pairing mod gcd(A,B)
                i64 ssum = 0;
                for (i64 i = 0; i + 1 < 2 * g; i += 2) {
                    i64 a1 = a.entries()[i] / (d / A);
                    i64 a2 = a.entries()[i + 1] / (d / A);
                    i64 b1 = bv.entries()[i] / (d / B);
                    i64 b2 = bv.entries()[i + 1] / (d / B);
                    ssum += a1 * b2 - a2 * b1;
                }
                dh = ssum % gab;
                if (dh < 0) dh += gab;
            }
            if (lattice_condition(A, n, s, B, dh)) {
                i64 e = K * symplectic_sum(a, bv) % d;
                total = total + Cyc::zeta(d, e);
            }
        }
        // advance odometer
        i64 i = 0;
        for (; i < 2 * g; ++i) {
            if (++b[i] < d) break;
            b[i] = 0;
        }
        if (i == 2 * g) break;
    }
    mpq_class r(total.integer_value(), mpz_pow_i(d, 2 * g) * mpz_pow_i(A, 2 * g - 1));
    r.canonicalize();
    return r;
}

mpq_class phi_check(i64 B, i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (B < 1 || n % B != 0) throw std::invalid_argument("phi_check: need B|n");
    if ((d * n / s) % B != 0) return 0;
    mpq_class r = 0;
    for (i64 d1 : divisors(gcd_i64(d, s))) {
        i64 mu = mobius(d1);
        if (mu == 0) continue;
        i64 arg = gcd_i64(gcd_i64(s / d1, n / B), gcd_i64(d / d1, d * n / (B * s)));
        mpz_class sigma = 0;
        for (i64 d3 : divisors(arg)) sigma += d3;
        mpq_class t(mu * sigma, mpz_pow_i(d, 2 * g) * mpz_pow_i(d1, 2 * g - 1));
        t.canonicalize();
        r += t;
    }
    return r;
}

mpq_class phi_check_plocal(i64 B, i64 n, i64 d, i64 s, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (B < 1 || n % B != 0) throw std::invalid_argument("phi_check: need B|n");
    mpq_class r = 1;
    for (i64 p : prime_divisors(n)) {
        int m = p_valuation(p, n);
        int b = p_valuation(p, s);
        int c = p_valuation(p, d);
        int j = p_valuation(p, B);
        if (j > m + c - b) return 0;
        auto geo = [&](int top) { // 1 + p + ... + p^top, zero when top < 0
            mpq_class acc = 0;
            mpz_class pk = 1;
            for (int i = 0; i <= top; ++i) {
                acc += mpq_class(pk);
                pk *= p;
            }
            return acc;
        };
        int m1 = std::min({b, m - j, c, m + c - b - j});
        int m2 = std::min({b - 1, m - j, c - 1, m + c - b - j});
        mpq_class factor = geo(m1) - mpq_class(1, mpz_pow_i(p, 2 * g - 1)) * geo(m2);
        factor *= mpq_class(1, mpz_pow_i(p, 2 * g * c));
        r *= factor;
    }
    return r;
}

mpq_class phi_stp_sum(i64 B0, i64 n, i64 s, i64 d, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (B0 < 1 || (n / d) % B0 != 0)
        throw std::invalid_argument("phi_stp: need B0 | n/d");
    mpq_class r = 0;
    for (i64 B : divisors(n)) {
        mpq_class chk = phi_check(B, n, d, s, K, g);
        if (chk == 0) continue;
        for (i64 d2 : divisors(B)) {
            i64 mu = mobius(d2);
            if (mu == 0) continue;
            if ((n * gcd_i64(B0, d2)) % (B * B0) != 0) continue;
            mpq_class t(mpz_pow_i(d, 2 * g) * mpz_pow_i(B, 2 * g),
                        mpz_pow_i(n, 2 * g) * mpz_pow_i(d2, 2 * g));
            t.canonicalize();
            r += t * mu * chk;
        }
    }
    return r;
}

mpq_class phi_stp_lattice(i64 B0, i64 n, i64 s, i64 d, i64 K, i64 g) {
    check_phi_pre(n, d, s, K, g);
    if (B0 < 1 || (n / d) % B0 != 0)
        throw std::invalid_argument("phi_stp: need B0 | n/d");
    // b0 = ((n/d)/B0, 0, ..., 0) in F_{n/d}^{2g}
    std::vector<i64> b0(2 * g, 0);
    b0[0] = (n / d) / B0;

    CycQ total(Cyc(n));
    std::vector<i64> a(2 * g, 0), b(2 * g, 0);
    auto advance = [&](std::vector<i64>& v, i64 mod) {
        i64 i = 0;
        for (; i < 2 * g; ++i) {
            if (++v[i] < mod) break;
            v[i] = 0;
        }
        return i < 2 * g;
    };
    do {
        TorusVector av(d, a);
        TorusVector a_emb = av.embed(n);
        i64 A = av.order();
        if (s % A != 0) continue;
        b.assign(2 * g, 0);
        Cyc inner(n);
        do {
            TorusVector bv(n, b);
            i64 B = bv.order();
            if ((n * A / s) % B != 0) continue;
            i64 gab = gcd_i64(A, B);
            i64 ssum = 0;
            for (i64 i = 0; i + 1 < 2 * g; i += 2) {
                i64 a1 = a_emb.entries()[i] / (n / A);
                i64 a2 = a_emb.entries()[i + 1] / (n / A);
                i64 b1 = bv.entries()[i] / (n / B);
                i64 b2 = bv.entries()[i + 1] / (n / B);
                ssum += a1 * b2 - a2 * b1;
            }
            i64 dh = gab == 0 ? 0 : ((ssum % gab) + gab) % gab;
            if (!lattice_condition(A, n, s, B, dh)) continue;
            i64 e = K * symplectic_sum(a_emb, bv) % n;
            for (i64 i = 0; i < 2 * g; ++i) e = (e + d * b0[i] % n * b[i]) % n;
            inner = inner + Cyc::zeta(n, e);
        } while (advance(b, n));
        total = total + CycQ(inner, mpz_pow_i(A, 2 * g - 1));
    } while (advance(a, d));

    mpq_class r = total.rational_value() / mpq_class(mpz_pow_i(n, 2 * g));
    r.canonicalize();
    return r;
}

} // namespace charvar
