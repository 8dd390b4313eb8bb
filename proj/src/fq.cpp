#include "charvar/fq.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace charvar {

namespace {

// multiply two polynomials over F_p modulo a monic modulus
std::vector<i64> polymul_mod(const std::vector<i64>& a, const std::vector<i64>& b, i64 p,
                             const std::vector<i64>& mod) {
    i64 k = static_cast<i64>(mod.size()) - 1;
    std::vector<i64> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (i64 d = static_cast<i64>(prod.size()) - 1; d >= k; --d) {
        i64 c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (i64 j = 0; j < k; ++j) prod[d - k + j] = ((prod[d - k + j] - c * mod[j]) % p + p) % p;
    }
    prod.resize(k);
    return prod;
}

bool poly_is_zero(const std::vector<i64>& a) {
    for (i64 c : a)
        if (c) return false;
    return true;
}

// remainder of a monic-led division a mod b over F_p (b monic)
std::vector<i64> polyrem(std::vector<i64> a, const std::vector<i64>& b, i64 p) {
    i64 db = static_cast<i64>(b.size()) - 1;
    for (i64 d = static_cast<i64>(a.size()) - 1; d >= db; --d) {
        i64 c = a[d] % p;
        if (c == 0) continue;
        for (i64 j = 0; j <= db; ++j) a[d - db + j] = ((a[d - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(db);
    return a;
}

} // namespace

FqField::FqField(i64 p, i64 k) : p_(p), k_(k) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k < 1) throw std::invalid_argument("FqField: degree must be positive");
    q_ = 1;
    for (i64 i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > 1000000) throw TooLarge("FqField: p^k > 10^6");
    }

    // lexicographically least monic irreducible, constant term first
    if (k == 1) {
        mod_ = {0, 1}; // x; elements are residues mod p
    } else {
        std::vector<i64> cand(k + 1, 0);
        cand[k] = 1;
        bool found = false;
        std::vector<i64> idx(k, 0); // coefficients c_0 .. c_{k-1}
        while (!found) {
            for (i64 i = 0; i < k; ++i) cand[i] = idx[i];
            // irreducible iff no monic divisor of degree 1..k/2
            bool irred = cand[0] != 0; // x | cand otherwise
            for (i64 deg = 1; irred && deg <= k / 2; ++deg) {
                std::vector<i64> div(deg + 1, 0);
                div[deg] = 1;
                std::vector<i64> didx(deg, 0);
                while (true) {
                    for (i64 i = 0; i < deg; ++i) div[i] = didx[i];
                    if (poly_is_zero(polyrem(cand, div, p))) {
                        irred = false;
                        break;
                    }
                    i64 i = 0;
                    for (; i < deg; ++i) {
                        if (++didx[i] < p) break;
                        didx[i] = 0;
                    }
                    if (i == deg) break;
                }
            }
            if (irred) {
                mod_ = cand;
                found = true;
                break;
            }
            i64 i = 0;
            for (; i < k; ++i) {
                if (++idx[i] < p) break;
                idx[i] = 0;
            }
            if (i == k) throw std::logic_error("FqField: no irreducible found");
        }
    }

    // least primitive element by packed index
    auto mul_raw = [&](FqElem a, FqElem b) {
        return pack(polymul_mod(unpack(a), unpack(b), p_, mod_));
    };
    auto order_of = [&](FqElem a) {
        i64 ord = q_ - 1;
        for (auto& [pr, e] : factorize(q_ - 1)) {
            for (int i = 0; i < e; ++i) {
                i64 t = ord / pr;
                FqElem x = 1;
                i64 ee = t;
                FqElem base = a;
                while (ee) {
                    if (ee & 1) x = mul_raw(x, base);
                    base = mul_raw(base, base);
                    ee >>= 1;
                }
                if (x == 1)
                    ord = t;
                else
                    break;
            }
        }
        return ord;
    };
    for (FqElem a = 1; a < q_; ++a) {
        if (order_of(a) == q_ - 1) {
            gen_ = a;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("FqField: no primitive element");

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    FqElem cur = 1;
    for (i64 i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_raw(cur, gen_);
    }
    if (cur != 1) throw std::logic_error("FqField: generator order mismatch");
}

std::vector<i64> FqField::unpack(FqElem a) const {
    std::vector<i64> v(k_);
    for (i64 i = 0; i < k_; ++i) {
        v[i] = a % p_;
        a /= static_cast<FqElem>(p_);
    }
    return v;
}

FqElem FqField::pack(const std::vector<i64>& v) const {
    FqElem a = 0;
    for (i64 i = k_ - 1; i >= 0; --i) a = static_cast<FqElem>(a * p_ + v[i]);
    return a;
}

FqElem FqField::raw_mul(FqElem a, FqElem b) const {
    return pack(polymul_mod(unpack(a), unpack(b), p_, mod_));
}

FqElem FqField::add(FqElem a, FqElem b) const {
    FqElem r = 0, mult = 1;
    for (i64 i = 0; i < k_; ++i) {
        i64 da = a % p_, db = b % p_;
        r += static_cast<FqElem>((da + db) % p_) * mult;
        a /= static_cast<FqElem>(p_);
        b /= static_cast<FqElem>(p_);
        mult *= static_cast<FqElem>(p_);
    }
    return r;
}

FqElem FqField::neg(FqElem a) const {
    FqElem r = 0, mult = 1;
    for (i64 i = 0; i < k_; ++i) {
        i64 da = a % p_;
        r += static_cast<FqElem>((p_ - da) % p_) * mult;
        a /= static_cast<FqElem>(p_);
        mult *= static_cast<FqElem>(p_);
    }
    return r;
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::mul(FqElem a, FqElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FqElem FqField::inv(FqElem a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqElem FqField::pow(FqElem a, i64 e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("FqField: 0^e with e <= 0");
        return 0;
    }
    i64 m = (log_[a] * (e % (q_ - 1)) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
    return exp_[m];
}

FqElem FqField::pow_frob(FqElem a, i64 m) const {
    if (a == 0) return 0;
    i64 pm = 1;
    for (i64 i = 0; i < m % k_; ++i) pm = pm * p_ % (q_ - 1);
    return exp_[log_[a] * pm % (q_ - 1)];
}

i64 FqField::dlog(FqElem a) const {
    if (a == 0) throw std::domain_error("FqField: dlog of zero");
    return log_[a];
}

FqElem FqField::exp(i64 e) const {
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    return exp_[e];
}

i64 FqField::elem_order(FqElem a) const {
    if (a == 0) throw std::domain_error("FqField: order of zero");
    return (q_ - 1) / gcd_i64(q_ - 1, log_[a]);
}

FqElem FqField::from_int(i64 r) const {
    r %= p_;
    if (r < 0) r += p_;
    return static_cast<FqElem>(r);
}

bool FqField::in_subfield(FqElem a, i64 m) const {
    if (k_ % m != 0) throw std::invalid_argument("FqField: not a subfield degree");
    return pow_frob(a, m) == a;
}

FqElem FqField::root_of_unity(i64 e) const {
    if ((q_ - 1) % e != 0) throw std::invalid_argument("FqField: no root of unity of that order");
    return exp_[(q_ - 1) / e];
}

std::string FqField::str(FqElem a) const {
    if (k_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << "[";
    auto v = unpack(a);
    for (i64 i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

std::shared_ptr<const FqField> make_field(i64 p, i64 k) {
    static std::map<std::pair<i64, i64>, std::shared_ptr<const FqField>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<FqField>(p, k)).first;
    return it->second;
}

} // namespace charvar
