#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/numtheory.hpp"

namespace charvar {

struct NonzeroRemainder : std::runtime_error {
    explicit NonzeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

// Dense univariate polynomial in q with exact integer coefficients,
// ascending degree, canonical (no trailing zeros). The zero polynomial
// has an empty coefficient vector and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(mpz_class c, int deg);
    // q^1
    static IntPolynomial q();

    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(i64 k) const;
    mpz_class leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& s) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial pow(int e) const;
    mpz_class eval(const mpz_class& x) const;

    std::string str(const std::string& var = "q") const;

private:
    void canonicalize();
    std::vector<mpz_class> c_;
};

// Exact quotient num/den; throws NonzeroRemainder unless den divides num.
IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den);

// Largest k with (q-1)^k | p (valuation at q = 1); the zero polynomial
// is reported with valuation -1.
i64 valuation_at_one(const IntPolynomial& p);

// Polynomial with exact rational coefficients; used while assembling
// E-polynomials where the combinatorial constants are rationals. The
// final results convert back to IntPolynomial, which asserts that all
// denominators cancelled.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(const IntPolynomial& p);

    void add_scaled(const IntPolynomial& p, const mpq_class& s);
    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator*(const mpq_class& s) const;

    bool is_zero() const;
    // Throws NonzeroRemainder if some coefficient is not an integer.
    IntPolynomial to_int_poly() const;
    // (P, den) with *this == P/den, den the lcm of coefficient denominators.
    std::pair<IntPolynomial, mpz_class> to_scaled() const;

private:
    void canonicalize();
    std::vector<mpq_class> c_;
};

} // namespace charvar
