#include "charvar/epoly.hpp"

#include <sstream>

namespace charvar {

i64 fermionic_shift(i64 n, i64 g, i64 A) {
    if (A < 1 || n % A != 0) throw std::invalid_argument("fermionic_shift: A must divide n");
    i64 num = n * n * (2 * g - 1) * (A - 1);
    if (num % (2 * A) != 0) throw std::logic_error("fermionic_shift: non-integer value");
    return num / (2 * A);
}

namespace {

mpz_class mpz_pow_i(i64 b, i64 e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

i64 reduce_K(i64 K, i64 d) {
    i64 r = K % d;
    return r == 0 ? d : r;
}

// numerator / (q-1)^pw with exactness, then undo the scale factor
IntPolynomial divide_out(const RationalPoly& acc, i64 pw, const char* who) {
    auto [num, den] = acc.to_scaled();
    IntPolynomial qm1({-1, 1});
    IntPolynomial quo;
    try {
        quo = exact_divide(num, qm1.pow(static_cast<int>(pw)));
    } catch (const NonzeroRemainder&) {
        throw NonPolynomial(std::string(who) + ": (q-1) power does not divide the numerator");
    }
    std::vector<mpz_class> v;
    v.reserve(quo.coeffs().size());
    for (const auto& c : quo.coeffs()) {
        if (c % den != 0)
            throw NonPolynomial(std::string(who) + ": rational coefficients do not cancel");
        v.push_back(c / den);
    }
    return IntPolynomial(std::move(v));
}

bool s_admissible(SRange conv, i64 n, i64 A, i64 B, i64 s, i64 delta) {
    // s | n/B assumed by the caller
    if (conv == SRange::eA) {
        i64 e = A * s / gcd_i64(A * s, n / B);
        return delta % e == 0;
    }
    return (delta * gcd_i64(A, n / (B * s))) % A == 0;
}

} // namespace

IntPolynomial point_count_poly(i64 n, i64 g, const TorusVector& a, const TorusVector& b,
                               SRange convention) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch("point_count_poly: moduli differ");
    if (n % a.modulus() != 0)
        throw std::invalid_argument("point_count_poly: modulus must divide n");
    if (a.genus() != b.genus()) throw LengthMismatch("point_count_poly: genus differs");
    if (g != a.genus()) throw LengthMismatch("point_count_poly: genus does not match vectors");

    i64 A = a.order();
    i64 B = b.order();
    i64 delta = delta_pair(a, b);

    RationalPoly acc;
    for (const PartitionType& tau : enumerate_types(n / A)) {
        mpq_class w = 0;
        for (i64 s : divisors(n / B)) {
            if (!s_admissible(convention, n, A, B, s, delta)) continue;
            mpq_class c = c_const(s, A, tau);
            if (c == 0) continue;
            w += mpq_class(mpz_pow_i(s, 2 * g)) * c;
        }
        if (w == 0) continue;
        IntPolynomial Q = dim_quotient_poly(tau);
        acc.add_scaled(Q.pow(static_cast<int>(A * (2 * g - 1))), w * A);
    }
    if (acc.is_zero()) return IntPolynomial();
    return divide_out(acc, 2 * g - 1 + n - 1, "point_count_poly");
}

EPolyResult sector_epoly(i64 n, i64 d, i64 g, i64 K, i64 A) {
    if (d < 1 || n % d != 0) throw std::invalid_argument("sector_epoly: need d | n");
    if (A < 1 || d % A != 0) throw std::invalid_argument("sector_epoly: need A | d");
    if (g < 1 || K < 1) throw std::invalid_argument("sector_epoly: need g, K >= 1");
    i64 Kred = reduce_K(K, d);

    RationalPoly acc;
    for (const PartitionType& tau : enumerate_types(n)) {
        mpq_class w = 0;
        for (i64 s : divisors(n)) {
            if (s % A != 0) continue;
            if ((Kred * s / A) % gcd_i64(s, n / d) != 0) continue;
            mpq_class c = c_const(s, 1, tau);
            if (c == 0) continue;
            w += c * mpz_pow_i(gcd_i64(s / A, n / d), 2 * g - 1) * gcd_i64(s, n / d);
        }
        if (w == 0) continue;
        acc.add_scaled(dim_quotient_poly(tau).pow(static_cast<int>(2 * g - 1)), w);
    }
    EPolyResult r;
    r.poly = acc.is_zero() ? IntPolynomial() : divide_out(acc, 2 * g - 2 + n, "sector_epoly");
    r.n = n;
    r.d = d;
    r.g = g;
    r.K_raw = K;
    r.K = Kred;
    r.variant = "sector";
    r.A = A;
    r.shift = fermionic_shift(n, g, A);
    return r;
}

EPolyResult stringy_epoly(i64 n, i64 d, i64 g, i64 K) {
    if (d < 1 || n % d != 0) throw std::invalid_argument("stringy_epoly: need d | n");
    if (g < 1 || K < 1) throw std::invalid_argument("stringy_epoly: need g, K >= 1");
    i64 Kred = reduce_K(K, d);

    RationalPoly acc;
    for (const PartitionType& tau : enumerate_types(n)) {
        mpq_class w = 0;
        for (i64 s : divisors(n)) {
            mpq_class c = c_const(s, 1, tau);
            if (c == 0) continue;
            w += mpq_class(mpz_pow_i(s, 2 * g)) * c * phi_g_closed(n, d, s, Kred, g);
        }
        if (w == 0) continue;
        acc.add_scaled(dim_quotient_poly(tau).pow(static_cast<int>(2 * g - 1)), w);
    }
    EPolyResult r;
    r.poly = acc.is_zero() ? IntPolynomial() : divide_out(acc, 2 * g - 2 + n, "stringy_epoly");
    r.n = n;
    r.d = d;
    r.g = g;
    r.K_raw = K;
    r.K = Kred;
    r.variant = "stringy";
    r.A = 1;
    r.shift = 0;
    return r;
}

EPolyResult isotypic_epoly(i64 n, i64 d, i64 g, i64 K, i64 xi_order) {
    if (d < 1 || n % d != 0) throw std::invalid_argument("isotypic_epoly: need d | n");
    if (xi_order < 1 || (n / d) % xi_order != 0)
        throw std::invalid_argument("isotypic_epoly: need xi_order | n/d");

    // divisor-sum route
    RationalPoly acc;
    for (const PartitionType& tau : enumerate_types(n)) {
        mpq_class w = 0;
        for (i64 s : divisors(n)) {
            mpq_class c = c_const(s, 1, tau);
            if (c == 0) continue;
            w += mpq_class(mpz_pow_i(s, 2 * g)) * c * phi_stp_sum(xi_order, n, s, d, K, g);
        }
        if (w == 0) continue;
        acc.add_scaled(dim_quotient_poly(tau).pow(static_cast<int>(2 * g - 1)), w);
    }
    IntPolynomial via_stp =
        acc.is_zero() ? IntPolynomial() : divide_out(acc, 2 * g - 2 + n, "isotypic_epoly");

    // Mirror sector route: the order-xi_order sector of the F_{n/d} quotient
    // with the restricted torsion K*d.
    EPolyResult sec = sector_epoly(n, n / d, g, reduce_K(K * d, n / d), xi_order);
    if (via_stp != sec.poly)
        throw RouteDisagreement("isotypic_epoly: divisor-sum route [" + via_stp.str() +
                                "] != sector route [" + sec.poly.str() + "]");

    EPolyResult r;
    r.poly = via_stp;
    r.n = n;
    r.d = d;
    r.g = g;
    r.K_raw = K;
    r.K = reduce_K(K, n);
    r.variant = "isotypic";
    r.A = xi_order;
    r.shift = fermionic_shift(n, g, xi_order);
    return r;
}

bool StructuralReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

StructuralReport structural_checks(i64 n, i64 d, i64 g, i64 K) {
    StructuralReport rep{n, d, g, K, {}};
    EPolyResult st = stringy_epoly(n, d, g, K);

    {
        mpz_class e1 = st.poly.eval(1);
        bool expect_zero = n > 1 && g > 1;
        bool pass = expect_zero ? (e1 == 0) : true;
        if (n == 1) pass = (e1 == 1);
        std::ostringstream os;
        os << "E_st(1) = " << e1.get_str();
        rep.entries.push_back({"euler_characteristic", pass, os.str()});
    }
    {
        i64 want_deg = (2 * g - 1) * (n * n - 1) - n + 1;
        bool pass = st.poly.degree() == want_deg && st.poly.leading() == 1;
        std::ostringstream os;
        os << "deg = " << st.poly.degree() << " (want " << want_deg
           << "), lead = " << st.poly.leading().get_str();
        rep.entries.push_back({"degree_leading", pass, os.str()});
    }
    {
        EPolyResult mirror = stringy_epoly(n, n / d, g, K);
        bool pass = st.poly == mirror.poly;
        std::string detail = pass ? "equal" : ("lhs " + st.poly.str() + " rhs " + mirror.poly.str());
        rep.entries.push_back({"mirror_symmetry", pass, detail});
    }
    {
        RationalPoly sum;
        for (i64 A : divisors(d)) {
            EPolyResult sec = sector_epoly(n, d, g, K, A);
            mpq_class cnt(count_order_elements(d, 2 * g, A));
            sum.add_scaled(sec.poly, cnt);
        }
        IntPolynomial total = sum.to_int_poly();
        bool pass = total == st.poly;
        std::string detail =
            pass ? "equal" : ("sum " + total.str() + " stringy " + st.poly.str());
        rep.entries.push_back({"sector_sum", pass, detail});
    }
    return rep;
}

} // namespace charvar
