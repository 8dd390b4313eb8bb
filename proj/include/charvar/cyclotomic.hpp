#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/numtheory.hpp"
#include "charvar/poly.hpp"

namespace charvar {

struct OrderMismatch : std::runtime_error {
    explicit OrderMismatch(const std::string& what) : std::runtime_error(what) {}
};

// e-th cyclotomic polynomial, memoized.
const IntPolynomial& cyclotomic_polynomial(i64 e);

// Element of Z[zeta_e] in the power basis 1, zeta, ..., zeta^{phi(e)-1},
// reduced modulo the e-th cyclotomic polynomial. Equality is
// coefficient-wise on the reduced form. Binary operations require equal
// orders; embed into a common order (lcm) first.
class Cyc {
public:
    Cyc() : e_(1) {}
    explicit Cyc(i64 order) : e_(order) { check_order(); }
    Cyc(i64 order, std::vector<mpz_class> coeffs);

    static Cyc zeta(i64 order, i64 power);
    static Cyc integer(i64 order, mpz_class v);

    i64 order() const { return e_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator*(const mpz_class& s) const;
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Galois action zeta -> zeta^t, gcd(t, e) = 1.
    Cyc galois(i64 t) const;
    // Complex conjugation, zeta -> zeta^{e-1}.
    Cyc conj() const;

    // Re-express in Z[zeta_m] for a multiple m of the order.
    Cyc embed(i64 m) const;

    bool is_integer() const;
    // Throws if the value is not a rational integer.
    mpz_class integer_value() const;

    std::string str() const;

private:
    void check_order() const;
    void reduce(std::vector<mpz_class> raw);
    i64 e_;
    std::vector<mpz_class> c_; // reduced, no trailing zeros
};

// Brings both values to the lcm of their orders.
std::pair<Cyc, Cyc> to_common_order(const Cyc& x, const Cyc& y);

// Cyclotomic value with an explicit positive integer denominator, kept
// normalized (gcd of content and denominator is 1). Intermediate values
// in character formulas live here; the end results are integers.
class CycQ {
public:
    CycQ() : num_(1), den_(1) {}
    CycQ(Cyc num, mpz_class den);
    explicit CycQ(const Cyc& num) : num_(num), den_(1) {}

    const Cyc& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    CycQ operator+(const CycQ& o) const;
    CycQ operator-(const CycQ& o) const;
    CycQ operator*(const CycQ& o) const;
    CycQ operator*(const mpq_class& s) const;
    bool operator==(const CycQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    CycQ conj() const { return CycQ(num_.conj(), den_); }

    bool is_rational() const;
    mpq_class rational_value() const;

    std::string str() const;

private:
    void normalize();
    Cyc num_;
    mpz_class den_;
};

} // namespace charvar
