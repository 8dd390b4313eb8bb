#include "charvar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace charvar {

Partition::Partition(std::vector<i64> parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i && p_[i] > p_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

i64 Partition::size() const { return std::accumulate(p_.begin(), p_.end(), i64(0)); }

Partition Partition::transpose() const {
    if (p_.empty()) return Partition();
    std::vector<i64> t(p_[0], 0);
    for (i64 part : p_)
        for (i64 j = 0; j < part; ++j) ++t[j];
    return Partition(std::move(t));
}

std::vector<i64> Partition::hooks() const {
    Partition tr = transpose();
    std::vector<i64> h;
    for (std::size_t i = 0; i < p_.size(); ++i)
        for (i64 j = 0; j < p_[i]; ++j)
            h.push_back(p_[i] - j + tr.parts()[j] - static_cast<i64>(i) - 1);
    return h;
}

i64 Partition::n_stat() const {
    i64 s = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) s += static_cast<i64>(i) * p_[i];
    return s;
}

mpz_class Partition::sym_dim() const {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(size()));
    mpz_class den = 1;
    for (i64 h : hooks()) den *= h;
    return num / den; // exact by the hook length formula
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (i) os << ",";
        os << p_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void gen_partitions(i64 n, i64 maxpart, std::vector<i64>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (i64 k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(i64 n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<i64> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
}

PartitionType::PartitionType(Map entries) : m_(std::move(entries)) {
    for (auto& [p, m] : m_) {
        if (m <= 0) throw std::invalid_argument("PartitionType: multiplicities must be >= 1");
        if (p.empty()) throw std::invalid_argument("PartitionType: empty partition not allowed");
    }
}

i64 PartitionType::size() const {
    i64 s = 0;
    for (auto& [p, m] : m_) s += m * p.size();
    return s;
}

i64 PartitionType::sharp() const {
    i64 s = 0;
    for (auto& [p, m] : m_) s += m;
    return s;
}

bool PartitionType::operator<(const PartitionType& o) const {
    return std::lexicographical_compare(
        m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), [](const auto& a, const auto& b) {
            PartitionOrder ord;
            if (ord(a.first, b.first)) return true;
            if (ord(b.first, a.first)) return false;
            return a.second < b.second;
        });
}

std::string PartitionType::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [p, m] : m_) {
        if (!first) os << ",";
        os << p.str() << ":" << m;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

// Assign multiplicities to partitions in PartitionOrder; every multiset of
// partitions with total weight n appears exactly once.
void gen_types(const std::vector<Partition>& pool, std::size_t idx, i64 remaining,
               PartitionType::Map& cur, std::vector<PartitionType>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (idx >= pool.size()) return;
    const Partition& p = pool[idx];
    i64 w = p.size();
    gen_types(pool, idx + 1, remaining, cur, out);
    for (i64 m = 1; m * w <= remaining; ++m) {
        cur[p] = m;
        gen_types(pool, idx + 1, remaining - m * w, cur, out);
    }
    cur.erase(p);
}

} // namespace

std::vector<PartitionType> enumerate_types(i64 n) {
    if (n < 1) throw std::invalid_argument("enumerate_types: n must be >= 1");
    std::vector<Partition> pool;
    for (i64 k = n; k >= 1; --k)
        for (const Partition& p : enumerate_partitions(k)) pool.push_back(p);
    std::sort(pool.begin(), pool.end(), [](const Partition& a, const Partition& b) {
        return PartitionOrder()(a, b);
    });
    std::vector<PartitionType> out;
    PartitionType::Map cur;
    gen_types(pool, 0, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class chi_dim(const Partition& lambda) { return lambda.sym_dim(); }

mpz_class d_tau(const PartitionType& tau) {
    mpz_class d = 1;
    for (auto& [p, m] : tau.entries()) {
        mpz_class c = chi_dim(p);
        for (i64 i = 0; i < m; ++i) d *= c;
    }
    return d;
}

PartitionType dual_type(const PartitionType& tau) {
    PartitionType::Map m;
    for (auto& [p, mult] : tau.entries()) m[p.transpose()] += mult;
    return PartitionType(std::move(m));
}

PartitionType scale_type(i64 A, const PartitionType& tau) {
    if (A < 1) throw std::invalid_argument("scale_type: A must be >= 1");
    PartitionType::Map m;
    for (auto& [p, mult] : tau.entries()) m[p] = mult * A;
    return PartitionType(std::move(m));
}

IntPolynomial dim_quotient_poly(const PartitionType& tau) {
    i64 n = tau.size();
    if (n < 1) throw std::invalid_argument("dim_quotient_poly: empty type");
    i64 shift = n * (n - 1) / 2;
    IntPolynomial prod = IntPolynomial::constant(1);
    for (auto& [p, m] : tau.entries()) {
        shift -= m * p.n_stat();
        IntPolynomial hp = IntPolynomial::constant(1);
        for (i64 h : p.hooks()) {
            // q^h - 1
            std::vector<mpz_class> v(h + 1, mpz_class(0));
            v[0] = -1;
            v[h] = 1;
            hp = hp * IntPolynomial(std::move(v));
        }
        prod = prod * hp.pow(static_cast<int>(m));
    }
    return prod * IntPolynomial::monomial(1, static_cast<int>(shift));
}

IntPolynomial type_degree_poly(const PartitionType& tau) {
    i64 n = tau.size();
    IntPolynomial gl = IntPolynomial::monomial(1, static_cast<int>(n * (n - 1) / 2));
    for (i64 i = 1; i <= n; ++i) {
        std::vector<mpz_class> v(i + 1, mpz_class(0));
        v[0] = -1;
        v[i] = 1;
        gl = gl * IntPolynomial(std::move(v));
    }
    return exact_divide(gl, dim_quotient_poly(tau));
}

} // namespace charvar
