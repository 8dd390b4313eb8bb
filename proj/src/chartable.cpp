#include "charvar/chartable.hpp"

#include <algorithm>
#include <cmath>

namespace charvar {

namespace {

using u64 = std::uint64_t;

u64 mod_pow(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % m;
        b = (__uint128_t)b * b % m;
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 m) { return mod_pow(a, m - 2, m); }

// dense matrix over F_l, row-major
struct ModMat {
    i64 rows = 0, cols = 0;
    u64 l = 0;
    std::vector<u64> e;
    ModMat() = default;
    ModMat(i64 r, i64 c, u64 mod) : rows(r), cols(c), l(mod), e(r * c, 0) {}
    u64& at(i64 r, i64 c) { return e[r * cols + c]; }
    u64 at(i64 r, i64 c) const { return e[r * cols + c]; }
};

// solve B x = v where B (k x d) has full column rank; returns x (length d)
std::vector<u64> solve_full_rank(const ModMat& B, std::vector<u64> v) {
    i64 k = B.rows, d = B.cols;
    u64 l = B.l;
    ModMat aug(k, d + 1, l);
    for (i64 r = 0; r < k; ++r) {
        for (i64 c = 0; c < d; ++c) aug.at(r, c) = B.at(r, c);
        aug.at(r, d) = v[r];
    }
    i64 row = 0;
    std::vector<i64> pivot_col(d, -1);
    for (i64 c = 0; c < d; ++c) {
        i64 piv = -1;
        for (i64 r = row; r < k; ++r)
            if (aug.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("solve_full_rank: rank deficiency");
        for (i64 j = 0; j <= d; ++j) std::swap(aug.e[piv * (d + 1) + j], aug.e[row * (d + 1) + j]);
        u64 s = mod_inv(aug.at(row, c), l);
        for (i64 j = 0; j <= d; ++j) aug.at(row, j) = (__uint128_t)aug.at(row, j) * s % l;
        for (i64 r = 0; r < k; ++r) {
            if (r == row || !aug.at(r, c)) continue;
            u64 f = aug.at(r, c);
            for (i64 j = 0; j <= d; ++j)
                aug.at(r, j) = (aug.at(r, j) + (l - (__uint128_t)f * aug.at(row, j) % l)) % l;
        }
        pivot_col[c] = row;
        ++row;
    }
    std::vector<u64> x(d, 0);
    for (i64 c = 0; c < d; ++c) x[c] = aug.at(pivot_col[c], d);
    // consistency
    for (i64 r = row; r < k; ++r)
        if (aug.at(r, d)) throw std::logic_error("solve_full_rank: inconsistent system");
    return x;
}

} // namespace

void CharacterTable::validate(const GroupTable& G) const {
    mpz_class sq = 0;
    for (const auto& d : degrees) sq += d * d;
    if (sq != group_order)
        throw std::logic_error("character table: sum of squared degrees != |G|");
    i64 k = class_count();
    for (i64 a = 0; a < irr_count(); ++a) {
        for (i64 b = 0; b < irr_count(); ++b) {
            Cyc s(exponent);
            for (i64 c = 0; c < k; ++c)
                s = s + rows[a][c] * rows[b][inv_class[c]] * mpz_class(class_size[c]);
            mpz_class want = a == b ? group_order : 0;
            if (s != Cyc::integer(exponent, want))
                throw std::logic_error("character table: row orthogonality fails");
        }
    }
    // column orthogonality at the identity column doubles as the degree check
    (void)G;
}

CharacterTable character_table(const GroupTable& G) {
    if (G.size() > 2500) throw CapExceeded("character_table: |G| <= 2500 required");
    G.build_tables();
    const auto& cls = G.conjugacy_classes();
    i64 k = cls.count();
    if (k > 600) throw CapExceeded("character_table: too many classes");
    i64 N = G.size();

    CharacterTable T;
    T.group_order = N;
    T.exponent = G.exponent();
    T.class_rep = cls.rep;
    T.class_size = cls.size;
    T.class_of = cls.class_of;
    T.inv_class.resize(k);
    for (i64 c = 0; c < k; ++c) T.inv_class[c] = cls.class_of[G.inv(cls.rep[c])];

    i64 e = T.exponent;
    // prime l = 1 mod e with l^2 > 4 |G|
    u64 l = static_cast<u64>(e) + 1;
    while (!(is_prime(static_cast<i64>(l)) && static_cast<i64>(l * l) > 4 * N)) l += e;

    // structure constants: M_i[j][k] = #{(x,y) in C_i x C_j : xy = z_k} for
    // fixed z_k, obtained as class-pair counts divided by |C_k|
    std::vector<ModMat> M(k);
    for (i64 i = 0; i < k; ++i) {
        std::vector<std::vector<i64>> cnt(k, std::vector<i64>(k, 0));
        for (i64 x : cls.members[i])
            for (i64 y = 0; y < N; ++y) ++cnt[cls.class_of[y]][cls.class_of[G.mul(x, y)]];
        M[i] = ModMat(k, k, l);
        for (i64 j = 0; j < k; ++j)
            for (i64 c = 0; c < k; ++c) {
                if (cnt[j][c] % cls.size[c] != 0)
                    throw std::logic_error("character_table: structure constants not integral");
                M[i].at(j, c) = static_cast<u64>(cnt[j][c] / cls.size[c]) % l;
            }
    }

    // simultaneous eigenvectors of all M_i over F_l
    std::vector<ModMat> spaces;
    {
        ModMat full(k, k, l);
        for (i64 i = 0; i < k; ++i) full.at(i, i) = 1;
        spaces.push_back(full);
    }
    for (i64 i = 1; i < k; ++i) {
        bool all_one = true;
        for (auto& s : spaces) all_one = all_one && s.cols == 1;
        if (all_one) break;
        std::vector<ModMat> next;
        for (auto& S : spaces) {
            i64 d = S.cols;
            if (d == 1) {
                next.push_back(S);
                continue;
            }
            // action T of M_i on the subspace: M_i * S = S * T
            ModMat MiS(k, d, l);
            for (i64 r = 0; r < k; ++r)
                for (i64 c = 0; c < d; ++c) {
                    u64 acc = 0;
                    for (i64 t = 0; t < k; ++t)
                        acc = (acc + (__uint128_t)M[i].at(r, t) * S.at(t, c)) % l;
                    MiS.at(r, c) = acc;
                }
            ModMat Tm(d, d, l);
            for (i64 c = 0; c < d; ++c) {
                std::vector<u64> rhs(k);
                for (i64 r = 0; r < k; ++r) rhs[r] = MiS.at(r, c);
                std::vector<u64> x = solve_full_rank(S, std::move(rhs));
                for (i64 r = 0; r < d; ++r) Tm.at(r, c) = x[r];
            }
            // characteristic polynomial by Hessenberg reduction
            ModMat H = Tm;
            for (i64 c = 0; c + 2 < d; ++c) {
                i64 piv = -1;
                for (i64 r = c + 1; r < d; ++r)
                    if (H.at(r, c)) {
                        piv = r;
                        break;
                    }
                if (piv < 0) continue;
                if (piv != c + 1) {
                    for (i64 j = 0; j < d; ++j) std::swap(H.e[piv * d + j], H.e[(c + 1) * d + j]);
                    for (i64 r = 0; r < d; ++r) std::swap(H.e[r * d + piv], H.e[r * d + c + 1]);
                }
                u64 ip = mod_inv(H.at(c + 1, c), l);
                for (i64 r = c + 2; r < d; ++r) {
                    if (!H.at(r, c)) continue;
                    u64 f = (__uint128_t)H.at(r, c) * ip % l;
                    for (i64 j = 0; j < d; ++j)
                        H.at(r, j) = (H.at(r, j) + (l - (__uint128_t)f * H.at(c + 1, j) % l)) % l;
                    for (i64 rr = 0; rr < d; ++rr)
                        H.at(rr, c + 1) = (H.at(rr, c + 1) + (__uint128_t)f * H.at(rr, r) % l) % l;
                }
            }
            // p_m recurrence for Hessenberg matrices
            std::vector<std::vector<u64>> pp(d + 1);
            pp[0] = {1};
            for (i64 m = 1; m <= d; ++m) {
                // (x - H[m-1][m-1]) * pp[m-1]
                std::vector<u64> cur(m + 1, 0);
                u64 hm = H.at(m - 1, m - 1);
                for (std::size_t t = 0; t < pp[m - 1].size(); ++t) {
                    cur[t + 1] = (cur[t + 1] + pp[m - 1][t]) % l;
                    cur[t] = (cur[t] + (l - (__uint128_t)hm * pp[m - 1][t] % l)) % l;
                }
                u64 beta = 1;
                for (i64 i2 = m - 1; i2 >= 1; --i2) {
                    beta = (__uint128_t)beta * H.at(i2, i2 - 1) % l;
                    u64 coef = (__uint128_t)H.at(i2 - 1, m - 1) * beta % l;
                    for (std::size_t t = 0; t < pp[i2 - 1].size(); ++t)
                        cur[t] = (cur[t] + (l - (__uint128_t)coef * pp[i2 - 1][t] % l)) % l;
                }
                pp[m] = std::move(cur);
            }
            const std::vector<u64>& charpoly = pp[d];
            // scan F_l for roots, ascending
            for (u64 lam = 0; lam < l; ++lam) {
                u64 val = 0;
                for (i64 t = d; t >= 0; --t) val = ((__uint128_t)val * lam + charpoly[t]) % l;
                if (val) continue;
                // eigenspace of Tm for lam
                ModMat A(d, d, l);
                for (i64 r = 0; r < d; ++r)
                    for (i64 c = 0; c < d; ++c)
                        A.at(r, c) = r == c ? (Tm.at(r, c) + l - lam) % l : Tm.at(r, c);
                // null space of A
                std::vector<i64> pivots;
                i64 row = 0;
                for (i64 c = 0; c < d && row < d; ++c) {
                    i64 piv = -1;
                    for (i64 r = row; r < d; ++r)
                        if (A.at(r, c)) {
                            piv = r;
                            break;
                        }
                    if (piv < 0) continue;
                    for (i64 j = 0; j < d; ++j) std::swap(A.e[piv * d + j], A.e[row * d + j]);
                    u64 s = mod_inv(A.at(row, c), l);
                    for (i64 j = 0; j < d; ++j) A.at(row, j) = (__uint128_t)A.at(row, j) * s % l;
                    for (i64 r = 0; r < d; ++r) {
                        if (r == row || !A.at(r, c)) continue;
                        u64 f = A.at(r, c);
                        for (i64 j = 0; j < d; ++j)
                            A.at(r, j) = (A.at(r, j) + (l - (__uint128_t)f * A.at(row, j) % l)) % l;
                    }
                    pivots.push_back(c);
                    ++row;
                }
                std::vector<bool> is_pivot(d, false);
                for (i64 c : pivots) is_pivot[c] = true;
                std::vector<std::vector<u64>> null_basis;
                for (i64 c = 0; c < d; ++c) {
                    if (is_pivot[c]) continue;
                    std::vector<u64> v(d, 0);
                    v[c] = 1;
                    for (std::size_t r = 0; r < pivots.size(); ++r)
                        v[pivots[r]] = (l - A.at(static_cast<i64>(r), c)) % l;
                    null_basis.push_back(std::move(v));
                }
                if (null_basis.empty()) continue;
                // new subspace: S * null_basis
                ModMat NS(k, static_cast<i64>(null_basis.size()), l);
                for (i64 r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < null_basis.size(); ++c) {
                        u64 acc = 0;
                        for (i64 t = 0; t < d; ++t)
                            acc = (acc + (__uint128_t)S.at(r, t) * null_basis[c][t]) % l;
                        NS.at(r, static_cast<i64>(c)) = acc;
                    }
                next.push_back(std::move(NS));
            }
        }
        spaces = std::move(next);
    }

    std::vector<std::vector<u64>> omega; // one normalized eigenvector per irreducible
    for (auto& S : spaces) {
        if (S.cols != 1)
            throw std::logic_error("character_table: eigenspaces did not fully split");
        std::vector<u64> v(k);
        if (S.at(0, 0) == 0) throw std::logic_error("character_table: eigenvector zero at identity");
        u64 s = mod_inv(S.at(0, 0), l);
        for (i64 r = 0; r < k; ++r) v[r] = (__uint128_t)S.at(r, 0) * s % l;
        omega.push_back(std::move(v));
    }
    if (static_cast<i64>(omega.size()) != k)
        throw std::logic_error("character_table: wrong number of eigenvectors");

    // degrees: chi(1)^2 = |G| / sum_c omega_c omega_{c'} / |C_c|
    std::vector<u64> deg_mod(k);
    std::vector<mpz_class> degrees(k);
    for (i64 t = 0; t < k; ++t) {
        u64 s = 0;
        for (i64 c = 0; c < k; ++c) {
            u64 term = (__uint128_t)omega[t][c] * omega[t][T.inv_class[c]] % l;
            s = (s + (__uint128_t)term * mod_inv(static_cast<u64>(T.class_size[c]) % l, l)) % l;
        }
        u64 t2 = (__uint128_t)(static_cast<u64>(N) % l) * mod_inv(s, l) % l;
        i64 dfound = -1;
        for (i64 dd = 1; dd * dd <= N; ++dd)
            if ((__uint128_t)dd * dd % l == t2) {
                dfound = dd;
                break;
            }
        if (dfound < 0) throw std::logic_error("character_table: degree not identified");
        deg_mod[t] = static_cast<u64>(dfound) % l;
        degrees[t] = dfound;
    }

    // power maps: class of rep^j
    std::vector<std::vector<i64>> pm(k, std::vector<i64>(e));
    for (i64 c = 0; c < k; ++c) {
        i64 cur = 0; // identity
        for (i64 j = 0; j < e; ++j) {
            pm[c][j] = cls.class_of[cur];
            cur = G.mul(cur, cls.rep[c]);
        }
    }

    // theta: element of order e in F_l (least primitive root powered up)
    u64 w = 0;
    for (u64 cand = 2; cand < l; ++cand) {
        bool prim = true;
        for (i64 pr : prime_divisors(static_cast<i64>(l - 1)))
            if (mod_pow(cand, (l - 1) / pr, l) == 1) {
                prim = false;
                break;
            }
        if (prim) {
            w = cand;
            break;
        }
    }
    u64 theta = mod_pow(w, (l - 1) / e, l);
    std::vector<u64> theta_pow(e);
    theta_pow[0] = 1;
    for (i64 j = 1; j < e; ++j) theta_pow[j] = (__uint128_t)theta_pow[j - 1] * theta % l;
    u64 e_inv = mod_inv(static_cast<u64>(e) % l, l);

    // chi_mod[t][c] = chi_t(rep_c) mod l
    std::vector<std::vector<u64>> chi_mod(k, std::vector<u64>(k));
    for (i64 t = 0; t < k; ++t)
        for (i64 c = 0; c < k; ++c)
            chi_mod[t][c] = (__uint128_t)deg_mod[t] * omega[t][c] % l *
                            mod_inv(static_cast<u64>(T.class_size[c]) % l, l) % l;

    // lift chi(g) = sum_m c_m zeta^m with
    // c_m = e^{-1} sum_j chi(g^j) theta^{-jm}
    T.rows.assign(k, std::vector<Cyc>());
    for (i64 t = 0; t < k; ++t) {
        std::vector<Cyc> row;
        row.reserve(k);
        for (i64 c = 0; c < k; ++c) {
            std::vector<mpz_class> coeffs(e, 0);
            for (i64 m = 0; m < e; ++m) {
                u64 acc = 0;
                for (i64 j = 0; j < e; ++j) {
                    u64 tp = theta_pow[(e - (j * m) % e) % e];
                    acc = (acc + (__uint128_t)chi_mod[t][pm[c][j]] * tp) % l;
                }
                u64 cm = (__uint128_t)acc * e_inv % l;
                if (cm > static_cast<u64>(N)) // multiplicities are <= chi(1)
                    throw std::logic_error("character_table: lift out of range");
                coeffs[m] = static_cast<long>(cm);
            }
            row.emplace_back(e, std::move(coeffs));
        }
        T.rows[t] = std::move(row);
    }
    T.degrees = degrees;

    // deterministic order: by degree, then by reduced coefficients
    std::vector<i64> order(k);
    for (i64 i = 0; i < k; ++i) order[i] = i;
    auto row_key = [&](i64 t) {
        std::vector<std::vector<mpz_class>> key;
        for (i64 c = 0; c < k; ++c) key.push_back(T.rows[t][c].coeffs());
        return key;
    };
    std::sort(order.begin(), order.end(), [&](i64 a, i64 b) {
        if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
        return row_key(a) < row_key(b);
    });
    std::vector<std::vector<Cyc>> rows2;
    std::vector<mpz_class> deg2;
    for (i64 i : order) {
        rows2.push_back(std::move(T.rows[i]));
        deg2.push_back(T.degrees[i]);
    }
    T.rows = std::move(rows2);
    T.degrees = std::move(deg2);

    T.validate(G);
    return T;
}

} // namespace charvar
