#include "charvar/torus.hpp"

namespace charvar {

TorusVector::TorusVector(i64 modulus, std::vector<i64> entries)
    : d_(modulus), e_(std::move(entries)) {
    if (d_ < 1) throw std::invalid_argument("TorusVector: modulus must be positive");
    if (e_.empty() || e_.size() % 2 != 0)
        throw LengthMismatch("TorusVector: entry count must be positive and even");
    for (auto& x : e_) {
        x %= d_;
        if (x < 0) x += d_;
    }
}

i64 TorusVector::order() const {
    i64 g = d_;
    for (i64 x : e_) g = gcd_i64(g, x);
    return d_ / g;
}

TorusVector TorusVector::embed(i64 m) const {
    if (m % d_ != 0) throw ModulusMismatch("TorusVector::embed: target not a multiple");
    std::vector<i64> v(e_);
    for (auto& x : v) x *= m / d_;
    return TorusVector(m, std::move(v));
}

i64 symplectic_sum(const TorusVector& a, const TorusVector& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch("symplectic_sum: moduli differ");
    if (a.entries().size() != b.entries().size())
        throw LengthMismatch("symplectic_sum: lengths differ");
    i64 d = a.modulus();
    i64 s = 0;
    for (std::size_t i = 0; i + 1 < a.entries().size(); i += 2) {
        s += a.entries()[i] * b.entries()[i + 1] % d - a.entries()[i + 1] * b.entries()[i] % d;
        s %= d;
    }
    if (s < 0) s += d;
    return s;
}

i64 delta_pair(const TorusVector& a, const TorusVector& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch("delta_pair: moduli differ");
    if (a.entries().size() != b.entries().size()) throw LengthMismatch("delta_pair: lengths differ");
    i64 d = a.modulus();
    i64 A = a.order();
    i64 B = b.order();
    i64 gab = gcd_i64(A, B);
    // entries are multiples of d/A resp. d/B; divide them out and take the
    // symplectic sum mod gcd(A, B)
    i64 s = 0;
    for (std::size_t i = 0; i + 1 < a.entries().size(); i += 2) {
        i64 a1 = a.entries()[i] / (d / A);
        i64 a2 = a.entries()[i + 1] / (d / A);
        i64 b1 = b.entries()[i] / (d / B);
        i64 b2 = b.entries()[i + 1] / (d / B);
        s = (s + a1 * b2 - a2 * b1) % gab;
    }
    if (s < 0) s += gab;
    return gcd_i64(gab, s == 0 ? gab : s);
}

mpz_class count_order_elements(i64 d, i64 m, i64 A) {
    if (d % A != 0) throw std::invalid_argument("count_order_elements: A must divide d");
    mpz_class r = 0;
    for (i64 e : divisors(A)) {
        i64 mu = mobius(A / e);
        if (mu == 0) continue;
        mpz_class ep;
        mpz_ui_pow_ui(ep.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(m));
        r += mu * ep;
    }
    return r;
}

} // namespace charvar
