#include "charvar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace charvar {

const IntPolynomial& cyclotomic_polynomial(i64 e) {
    static std::map<i64, IntPolynomial> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    // x^e - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<mpz_class> xe(e + 1, mpz_class(0));
    xe[0] = -1;
    xe[e] = 1;
    IntPolynomial num(std::move(xe));
    for (i64 d : divisors(e)) {
        if (d == e) continue;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            // fill recursively; divisors are ascending so smaller ones exist
            std::vector<mpz_class> xd(d + 1, mpz_class(0));
            xd[0] = -1;
            xd[d] = 1;
            IntPolynomial nd(std::move(xd));
            for (i64 dd : divisors(d))
                if (dd != d) nd = exact_divide(nd, cache.at(dd));
            jt = cache.emplace(d, std::move(nd)).first;
        }
        num = exact_divide(num, jt->second);
    }
    return cache.emplace(e, std::move(num)).first->second;
}

void Cyc::check_order() const {
    if (e_ < 1) throw std::invalid_argument("Cyc: order must be positive");
}

Cyc::Cyc(i64 order, std::vector<mpz_class> coeffs) : e_(order) {
    check_order();
    reduce(std::move(coeffs));
}

void Cyc::reduce(std::vector<mpz_class> raw) {
    const IntPolynomial& phi = cyclotomic_polynomial(e_);
    const i64 deg = phi.degree();
    // monic remainder
    for (i64 k = static_cast<i64>(raw.size()) - 1; k >= deg; --k) {
        if (raw[k] == 0) continue;
        mpz_class f = raw[k];
        for (i64 j = 0; j <= deg; ++j) raw[k - deg + j] -= f * phi.coeff(j);
    }
    raw.resize(std::min<std::size_t>(raw.size(), deg));
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    c_ = std::move(raw);
}

Cyc Cyc::zeta(i64 order, i64 power) {
    power %= order;
    if (power < 0) power += order;
    std::vector<mpz_class> v(power + 1, mpz_class(0));
    v[power] = 1;
    return Cyc(order, std::move(v));
}

Cyc Cyc::integer(i64 order, mpz_class v) { return Cyc(order, {std::move(v)}); }

Cyc Cyc::operator+(const Cyc& o) const {
    if (e_ != o.e_) throw OrderMismatch("Cyc+: orders differ");
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Cyc(e_, std::move(v));
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x = -x;
    Cyc r(e_);
    r.c_ = std::move(v);
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    if (e_ != o.e_) throw OrderMismatch("Cyc*: orders differ");
    if (is_zero() || o.is_zero()) return Cyc(e_);
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Cyc(e_, std::move(v));
}

Cyc Cyc::operator*(const mpz_class& s) const {
    if (s == 0) return Cyc(e_);
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x *= s;
    Cyc r(e_);
    r.c_ = std::move(v);
    return r;
}

bool Cyc::operator==(const Cyc& o) const { return e_ == o.e_ && c_ == o.c_; }

Cyc Cyc::galois(i64 t) const {
    t %= e_;
    if (t < 0) t += e_;
    if (gcd_i64(t, e_) != 1) throw std::invalid_argument("Cyc::galois: t not coprime to order");
    std::vector<mpz_class> v(e_, mpz_class(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        v[(k * t) % e_] += c_[k];
    }
    return Cyc(e_, std::move(v));
}

Cyc Cyc::conj() const { return e_ == 1 ? *this : galois(e_ - 1); }

Cyc Cyc::embed(i64 m) const {
    if (m % e_ != 0) throw OrderMismatch("Cyc::embed: target order not a multiple");
    if (m == e_) return *this;
    i64 step = m / e_;
    std::vector<mpz_class> v;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::size_t idx = k * step;
        if (v.size() <= idx) v.resize(idx + 1, mpz_class(0));
        v[idx] += c_[k];
    }
    return Cyc(m, std::move(v));
}

bool Cyc::is_integer() const { return c_.size() <= 1; }

mpz_class Cyc::integer_value() const {
    if (c_.empty()) return 0;
    if (c_.size() == 1) return c_[0];
    throw std::runtime_error("Cyc: value is not a rational integer: " + str());
}

std::string Cyc::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) os << " + ";
        os << c_[k].get_str();
        if (k) os << "*z" << e_ << "^" << k;
    }
    os << ")";
    return os.str();
}

std::pair<Cyc, Cyc> to_common_order(const Cyc& x, const Cyc& y) {
    i64 m = lcm_i64(x.order(), y.order());
    return {x.embed(m), y.embed(m)};
}

CycQ::CycQ(Cyc num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("CycQ: zero denominator");
    normalize();
}

void CycQ::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    mpz_class g = den_;
    for (const auto& a : num_.coeffs()) {
        mpz_class ga;
        mpz_gcd(ga.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        g = ga;
        if (g == 1) break;
    }
    if (g > 1) {
        std::vector<mpz_class> v(num_.coeffs());
        for (auto& a : v) a /= g;
        num_ = Cyc(num_.order(), std::move(v));
        den_ /= g;
    }
}

CycQ CycQ::operator+(const CycQ& o) const {
    auto [a, b] = to_common_order(num_, o.num_);
    return CycQ(a * o.den_ + b * den_, den_ * o.den_);
}

CycQ CycQ::operator-(const CycQ& o) const {
    auto [a, b] = to_common_order(num_, o.num_);
    return CycQ(a * o.den_ - b * den_, den_ * o.den_);
}

CycQ CycQ::operator*(const CycQ& o) const {
    auto [a, b] = to_common_order(num_, o.num_);
    return CycQ(a * b, den_ * o.den_);
}

CycQ CycQ::operator*(const mpq_class& s) const {
    return CycQ(num_ * s.get_num(), den_ * s.get_den());
}

bool CycQ::is_rational() const { return num_.is_integer(); }

mpq_class CycQ::rational_value() const {
    mpq_class r(num_.integer_value(), den_);
    r.canonicalize();
    return r;
}

std::string CycQ::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
}

} // namespace charvar
