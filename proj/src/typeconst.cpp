#include "charvar/typeconst.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "charvar/numtheory.hpp"

namespace charvar {

namespace {

mpz_class factorial(i64 n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// permutations of S_m with all cycles of length exactly s
mpz_class cycles_exactly(i64 m, i64 s) {
    if (m % s != 0) return 0;
    mpz_class r = factorial(m);
    mpz_class den = 1;
    for (i64 i = 0; i < m / s; ++i) den *= s;
    den *= factorial(m / s);
    return r / den;
}

} // namespace

mpz_class nu(const PartitionType& tau, i64 s) {
    if (s < 1) throw std::invalid_argument("nu: s must be >= 1");
    mpz_class r = 1;
    for (auto& [p, m] : tau.entries()) {
        mpz_class c = cycles_exactly(m, s);
        if (c == 0) return 0;
        r *= c;
    }
    return r;
}

mpz_class nu_enumerate(const PartitionType& tau, i64 s) {
    mpz_class r = 1;
    for (auto& [p, m] : tau.entries()) {
        // walk S_m, count permutations whose cycles all have length s
        std::vector<int> perm(m);
        for (i64 i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
        i64 cnt = 0;
        do {
            std::vector<bool> seen(m, false);
            bool ok = true;
            for (i64 i = 0; i < m && ok; ++i) {
                if (seen[i]) continue;
                i64 len = 0;
                for (i64 j = i; !seen[j]; j = perm[j]) {
                    seen[j] = true;
                    ++len;
                }
                ok = (len == s);
            }
            if (ok) ++cnt;
        } while (std::next_permutation(perm.begin(), perm.end()));
        r *= cnt;
        if (r == 0) break;
    }
    return r;
}

mpz_class theta_count_enumerate(const PartitionType& tau, i64 n, i64 A) {
    if (A * tau.size() != n) throw SizeMismatch("theta_count: A*size(tau) != n");
    if (n > 20) throw CapExceeded("theta_count_enumerate: n too large");
    // slots in canonical order, one per multiplicity unit
    std::vector<Partition> slots;
    for (auto& [p, m] : tau.entries())
        for (i64 i = 0; i < m; ++i) slots.push_back(p);

    mpz_class count = 0;
    // state: per recursion level pick A disjoint subsets for the slot
    struct Ctx {
        const std::vector<Partition>& slots;
        i64 n, A;
        mpz_class& count;
        void slot(std::size_t si, unsigned pool, int prev_min) {
            if (si == slots.size()) {
                ++count;
                return;
            }
            bool same = si > 0 && slots[si - 1] == slots[si];
            block(si, pool, 0, same ? prev_min : -1, -1);
        }
        void block(std::size_t si, unsigned pool, i64 bi, int lower, int slot_min) {
            if (bi == A) {
                slot(si + 1, pool, slot_min);
                return;
            }
            i64 sz = slots[si].size();
            std::vector<int> elems;
            for (i64 i = 0; i < n; ++i)
                if (pool & (1u << i)) elems.push_back(static_cast<int>(i));
            std::vector<int> pick;
            choose(elems, 0, sz, pick, si, pool, bi, lower, slot_min);
        }
        void choose(const std::vector<int>& elems, std::size_t from, i64 need,
                    std::vector<int>& pick, std::size_t si, unsigned pool, i64 bi, int lower,
                    int slot_min) {
            if (need == 0) {
                int new_min = slot_min;
                if (bi == 0) {
                    new_min = pick[0];
                    if (new_min <= lower) return; // canonical order among equal slots
                }
                unsigned mask = 0;
                for (int e : pick) mask |= 1u << e;
                block(si, pool & ~mask, bi + 1, lower, new_min);
                return;
            }
            for (std::size_t i = from; i + need <= elems.size(); ++i) {
                pick.push_back(elems[i]);
                choose(elems, i + 1, need - 1, pick, si, pool, bi, lower, slot_min);
                pick.pop_back();
            }
        }
    } ctx{slots, n, A, count};
    ctx.slot(0, n == 32 ? ~0u : ((1u << n) - 1u), -1);
    return count;
}

namespace {

mpz_class theta_closed_form(const PartitionType& tau, i64 n, i64 A) {
    mpz_class num = factorial(n);
    mpz_class den = 1;
    for (auto& [p, m] : tau.entries()) {
        mpz_class f = factorial(p.size());
        for (i64 i = 0; i < m * A; ++i) den *= f;
        den *= factorial(m);
    }
    return num / den;
}

// Validate the closed form against enumeration on every family with n <= 8.
void validate_theta_closed_form() {
    for (i64 n = 1; n <= 8; ++n) {
        for (i64 A : divisors(n)) {
            for (const PartitionType& tau : enumerate_types(n / A)) {
                mpz_class closed = theta_closed_form(tau, n, A);
                mpz_class enumd = theta_count_enumerate(tau, n, A);
                if (closed != enumd)
                    throw std::logic_error("theta_count: closed form " + closed.get_str() +
                                           " disagrees with enumeration " + enumd.get_str() +
                                           " at tau=" + tau.str() + " n=" + std::to_string(n) +
                                           " A=" + std::to_string(A));
            }
        }
    }
}

} // namespace

mpz_class theta_count(const PartitionType& tau, i64 n, i64 A) {
    if (A < 1 || A * tau.size() != n) throw SizeMismatch("theta_count: A*size(tau) != n");
    if (n <= 8) {
        static std::map<std::pair<std::string, i64>, mpz_class> memo;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(tau.str(), A);
        auto it = memo.find(key);
        if (it == memo.end()) {
            mpz_class v = theta_count_enumerate(tau, n, A);
            if (v != theta_closed_form(tau, n, A))
                throw std::logic_error("theta_count: closed form disagrees with enumeration at " +
                                       tau.str());
            it = memo.emplace(key, std::move(v)).first;
        }
        return it->second;
    }
    static std::once_flag validated;
    std::call_once(validated, validate_theta_closed_form);
    return theta_closed_form(tau, n, A);
}

mpq_class c_check(i64 s, i64 A, const PartitionType& tau) {
    if (s < 1 || A < 1) throw std::invalid_argument("c_check: s, A must be >= 1");
    mpz_class nus = nu(tau, s);
    if (nus == 0) return 0;
    i64 n = A * tau.size();
    i64 sharp = tau.sharp();
    // s divides every multiplicity here, hence s | #tau
    mpz_class dA = 1;
    mpz_class dt = d_tau(tau);
    for (i64 i = 0; i < A; ++i) dA *= dt;
    mpz_class sign_pow = 1; // (-s)^{#tau/s}
    for (i64 i = 0; i < sharp / s; ++i) sign_pow *= -s;
    mpz_class val = -dA * sign_pow * factorial(sharp / s - 1) * nus * theta_count(tau, n, A);
    mpq_class r(val, mpz_class(A) * s);
    r.canonicalize();
    return r;
}

mpq_class c_const(i64 s, i64 A, const PartitionType& tau) {
    mpq_class r = 0;
    i64 m = tau.size();
    if (m % s != 0) return 0;
    for (i64 j : divisors(m)) {
        if (j % s != 0) continue;
        i64 mu = mobius(j / s);
        if (mu == 0) continue;
        r += mpq_class(mu) * c_check(j, A, tau);
    }
    return r;
}

std::vector<GradingClass> grading_classes(i64 n, i64 A) {
    if (A < 1 || n % A != 0) throw std::invalid_argument("grading_classes: A must divide n");
    i64 bs = n / A;
    // cap on the number of ordered equipartitions
    mpz_class total = factorial(n);
    for (i64 i = 0; i < A; ++i) total /= factorial(bs);
    if (total > 2000000) throw CapExceeded("grading_classes: too many equipartitions");

    std::vector<GradingClass> out;
    std::vector<std::vector<i64>> blocks(A);
    // assign elements in order; each ordered tuple of blocks appears once
    struct Rec {
        i64 n, A, bs;
        std::vector<std::vector<i64>>& blocks;
        std::vector<GradingClass>& out;
        void go(i64 elem) {
            if (elem == n) {
                if (canonical()) out.push_back({n, A, blocks});
                return;
            }
            for (i64 b = 0; b < A; ++b) {
                if (static_cast<i64>(blocks[b].size()) == bs) continue;
                blocks[b].push_back(elem);
                go(elem + 1);
                blocks[b].pop_back();
            }
        }
        bool canonical() const {
            // least among cyclic shifts (blocks are ascending by construction)
            for (i64 sh = 1; sh < A; ++sh) {
                for (i64 b = 0; b < A; ++b) {
                    const auto& x = blocks[(b + sh) % A];
                    const auto& y = blocks[b];
                    if (x < y) return false;
                    if (y < x) break;
                }
            }
            return true;
        }
    } rec{n, A, bs, blocks, out};
    rec.go(0);
    return out;
}

mpz_class grading_class_count(i64 n, i64 A) {
    // Burnside over the cyclic shift group: a shift by 0 < k < A fixes no
    // ordered equipartition (blocks are disjoint), so only the identity
    // contributes.
    i64 bs = n / A;
    mpz_class fixed = factorial(n);
    for (i64 i = 0; i < A; ++i) fixed /= factorial(bs);
    return fixed / A;
}

} // namespace charvar
