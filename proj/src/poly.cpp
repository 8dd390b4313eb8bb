#include "charvar/poly.hpp"

#include <sstream>

namespace charvar {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    canonicalize();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
    return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::monomial(mpz_class c, int deg) {
    std::vector<mpz_class> v(deg + 1, mpz_class(0));
    v[deg] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q() { return monomial(1, 1); }

void IntPolynomial::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(i64 k) const {
    static const mpz_class zero(0);
    if (k < 0 || k >= static_cast<i64>(c_.size())) return zero;
    return c_[k];
}

mpz_class IntPolynomial::leading() const {
    return c_.empty() ? mpz_class(0) : c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x = -x;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& s) const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x *= s;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(int e) const {
    IntPolynomial r = constant(1);
    IntPolynomial b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (i64 k = degree(); k >= 0; --k) {
        const mpz_class& a = c_[k];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        mpz_class mag = abs(a);
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree() < den.degree())
        throw NonzeroRemainder("exact_divide: degree(num) < degree(den)");
    std::vector<mpz_class> rem(num.coeffs());
    std::vector<mpz_class> quo(num.degree() - den.degree() + 1, mpz_class(0));
    const mpz_class& lead = den.coeffs().back();
    for (i64 k = num.degree() - den.degree(); k >= 0; --k) {
        mpz_class& top = rem[k + den.degree()];
        if (top == 0) continue;
        if (top % lead != 0)
            throw NonzeroRemainder("exact_divide: leading coefficient does not divide");
        mpz_class f = top / lead;
        quo[k] = f;
        for (i64 j = 0; j <= den.degree(); ++j) rem[k + j] -= f * den.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw NonzeroRemainder("exact_divide: nonzero remainder");
    return IntPolynomial(std::move(quo));
}

i64 valuation_at_one(const IntPolynomial& p) {
    if (p.is_zero()) return -1;
    IntPolynomial qm1({-1, 1});
    IntPolynomial cur = p;
    i64 v = 0;
    while (cur.eval(1) == 0) {
        cur = exact_divide(cur, qm1);
        ++v;
    }
    return v;
}

RationalPoly::RationalPoly(const IntPolynomial& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c_.emplace_back(a);
}

void RationalPoly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void RationalPoly::add_scaled(const IntPolynomial& p, const mpq_class& s) {
    if (s == 0 || p.is_zero()) return;
    if (c_.size() < p.coeffs().size()) c_.resize(p.coeffs().size(), mpq_class(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c_[i] += s * mpq_class(p.coeffs()[i]);
    canonicalize();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r = *this;
    if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.canonicalize();
    return r;
}

RationalPoly RationalPoly::operator*(const mpq_class& s) const {
    RationalPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.canonicalize();
    return r;
}

bool RationalPoly::is_zero() const { return c_.empty(); }

std::pair<IntPolynomial, mpz_class> RationalPoly::to_scaled() const {
    mpz_class den = 1;
    for (const auto& x : c_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        den = l;
    }
    std::vector<mpz_class> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x.get_num() * (den / x.get_den()));
    return {IntPolynomial(std::move(v)), den};
}

IntPolynomial RationalPoly::to_int_poly() const {
    std::vector<mpz_class> v;
    v.reserve(c_.size());
    for (const auto& x : c_) {
        if (x.get_den() != 1)
            throw NonzeroRemainder("RationalPoly: non-integer coefficient " + x.get_str());
        v.push_back(x.get_num());
    }
    return IntPolynomial(std::move(v));
}

} // namespace charvar
