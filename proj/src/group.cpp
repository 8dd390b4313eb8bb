#include "charvar/group.hpp"

#include <deque>
#include <sstream>

namespace charvar {

FqMatrix::FqMatrix(std::shared_ptr<const FqField> field, i64 dim)
    : F(std::move(field)), n(dim), e(dim * dim, 0) {}

FqMatrix FqMatrix::identity(std::shared_ptr<const FqField> field, i64 dim) {
    FqMatrix m(std::move(field), dim);
    for (i64 i = 0; i < dim; ++i) m.at(i, i) = m.F->one();
    return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
    FqMatrix r(F, n);
    for (i64 i = 0; i < n; ++i) {
        for (i64 k = 0; k < n; ++k) {
            FqElem a = at(i, k);
            if (a == 0) continue;
            for (i64 j = 0; j < n; ++j) {
                FqElem b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) = F->add(r.at(i, j), F->mul(a, b));
            }
        }
    }
    return r;
}

FqMatrix FqMatrix::inverse() const {
    FqMatrix a = *this;
    FqMatrix b = identity(F, n);
    for (i64 col = 0; col < n; ++col) {
        i64 piv = -1;
        for (i64 r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("FqMatrix: singular");
        if (piv != col) {
            for (i64 j = 0; j < n; ++j) {
                std::swap(a.e[piv * n + j], a.e[col * n + j]);
                std::swap(b.e[piv * n + j], b.e[col * n + j]);
            }
        }
        FqElem s = F->inv(a.at(col, col));
        for (i64 j = 0; j < n; ++j) {
            a.at(col, j) = F->mul(a.at(col, j), s);
            b.at(col, j) = F->mul(b.at(col, j), s);
        }
        for (i64 r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            FqElem f = a.at(r, col);
            for (i64 j = 0; j < n; ++j) {
                a.at(r, j) = F->sub(a.at(r, j), F->mul(f, a.at(col, j)));
                b.at(r, j) = F->sub(b.at(r, j), F->mul(f, b.at(col, j)));
            }
        }
    }
    return b;
}

FqElem FqMatrix::det() const {
    FqMatrix a = *this;
    FqElem d = F->one();
    for (i64 col = 0; col < n; ++col) {
        i64 piv = -1;
        for (i64 r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (i64 j = 0; j < n; ++j) std::swap(a.e[piv * n + j], a.e[col * n + j]);
            d = F->neg(d);
        }
        d = F->mul(d, a.at(col, col));
        FqElem s = F->inv(a.at(col, col));
        for (i64 r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            FqElem f = F->mul(a.at(r, col), s);
            for (i64 j = col; j < n; ++j) a.at(r, j) = F->sub(a.at(r, j), F->mul(f, a.at(col, j)));
        }
    }
    return d;
}

FqMatrix FqMatrix::frobenius() const {
    FqMatrix r = *this;
    for (auto& x : r.e) x = F->frobenius(x);
    return r;
}

std::string FqMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (i64 i = 0; i < n; ++i) {
        if (i) os << "; ";
        for (i64 j = 0; j < n; ++j) {
            if (j) os << ",";
            os << F->str(at(i, j));
        }
    }
    os << "]";
    return os.str();
}

GroupTable::GroupTable(std::vector<FqMatrix> generators, i64 cap) {
    if (generators.empty()) throw std::invalid_argument("GroupTable: no generators");
    const auto& F = generators[0].F;
    i64 n = generators[0].n;
    for (auto& g : generators) {
        if (g.F != F || g.n != n) throw std::invalid_argument("GroupTable: mixed generators");
        if (g.det() == 0) throw std::domain_error("GroupTable: singular generator");
    }
    FqMatrix id = FqMatrix::identity(F, n);
    elems_.push_back(id);
    index_[id.e] = 0;
    std::deque<i64> queue{0};
    while (!queue.empty()) {
        i64 cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            FqMatrix prod = elems_[cur].mul(g);
            auto it = index_.find(prod.e);
            if (it == index_.end()) {
                if (size() >= cap) throw CapExceeded("GroupTable: closure exceeds cap");
                i64 idx = size();
                index_[prod.e] = idx;
                elems_.push_back(std::move(prod));
                queue.push_back(idx);
            }
        }
    }
    for (const auto& g : generators) gen_idx_.push_back(index_.at(g.e));
}

i64 GroupTable::index_of(const FqMatrix& m) const {
    auto it = index_.find(m.e);
    return it == index_.end() ? -1 : it->second;
}

void GroupTable::build_tables() const {
    if (!prod_.empty()) return;
    if (size() > 2500) throw CapExceeded("GroupTable: product table needs |G| <= 2500");
    i64 N = size();
    prod_.assign(N * N, -1);
    for (i64 a = 0; a < N; ++a)
        for (i64 b = 0; b < N; ++b) {
            i64 r = index_of(elems_[a].mul(elems_[b]));
            if (r < 0) throw std::logic_error("GroupTable: not closed");
            prod_[a * N + b] = r;
        }
    inv_.assign(N, -1);
    for (i64 a = 0; a < N; ++a)
        for (i64 b = 0; b < N; ++b)
            if (prod_[a * N + b] == 0) {
                inv_[a] = b;
                break;
            }
}

i64 GroupTable::mul(i64 a, i64 b) const {
    if (!prod_.empty()) return prod_[a * size() + b];
    i64 r = index_of(elems_[a].mul(elems_[b]));
    if (r < 0) throw std::logic_error("GroupTable: not closed under product");
    return r;
}

i64 GroupTable::inv(i64 a) const {
    if (!inv_.empty()) return inv_[a];
    return index_of(elems_[a].inverse());
}

i64 GroupTable::conj(i64 g, i64 x) const { return mul(mul(g, x), inv(g)); }

i64 GroupTable::pow(i64 a, i64 e) const {
    i64 r = 0;
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

i64 GroupTable::elem_order(i64 a) const {
    i64 ord = 1;
    i64 cur = a;
    while (cur != 0) {
        cur = mul(cur, a);
        ++ord;
    }
    return ord;
}

i64 GroupTable::exponent() const {
    i64 e = 1;
    for (i64 a = 0; a < size(); ++a) e = lcm_i64(e, elem_order(a));
    return e;
}

const GroupTable::Classes& GroupTable::conjugacy_classes() const {
    if (classes_built_) return classes_;
    i64 N = size();
    classes_.class_of.assign(N, -1);
    for (i64 x = 0; x < N; ++x) {
        if (classes_.class_of[x] >= 0) continue;
        i64 cls = classes_.count();
        classes_.rep.push_back(x);
        classes_.size.push_back(0);
        // orbit of x under conjugation
        std::deque<i64> queue{x};
        classes_.class_of[x] = cls;
        while (!queue.empty()) {
            i64 cur = queue.front();
            queue.pop_front();
            ++classes_.size[cls];
            for (i64 g : gen_idx_) {
                i64 y = conj(g, cur);
                if (classes_.class_of[y] < 0) {
                    classes_.class_of[y] = cls;
                    queue.push_back(y);
                }
            }
        }
    }
    classes_.members.resize(classes_.count());
    for (i64 x = 0; x < N; ++x) classes_.members[classes_.class_of[x]].push_back(x);
    classes_built_ = true;
    return classes_;
}

bool GroupTable::contains_all(const std::vector<FqMatrix>& gens) const {
    for (const auto& g : gens)
        if (index_of(g) < 0) return false;
    return true;
}

GroupTable generate_group(std::vector<FqMatrix> generators, i64 cap) {
    return GroupTable(std::move(generators), cap);
}

std::vector<FqMatrix> gl_generators(std::shared_ptr<const FqField> F, i64 n) {
    std::vector<FqMatrix> gens = sl_generators(F, n);
    FqMatrix d = FqMatrix::identity(F, n);
    d.at(0, 0) = F->generator();
    gens.push_back(d);
    return gens;
}

std::vector<FqMatrix> sl_generators(std::shared_ptr<const FqField> F, i64 n) {
    std::vector<FqMatrix> gens;
    if (n == 1) {
        gens.push_back(FqMatrix::identity(F, 1));
        return gens;
    }
    // elementary transvections E_{i,i+1} and E_{n,1} generate SL_n over F_p;
    // add diag(t, t^{-1}, 1, ..) to cover non-prime fields and keep BFS short
    for (i64 i = 0; i < n; ++i) {
        FqMatrix t = FqMatrix::identity(F, n);
        t.at(i, (i + 1) % n) = F->one();
        gens.push_back(t);
    }
    FqMatrix d = FqMatrix::identity(F, n);
    d.at(0, 0) = F->generator();
    d.at(1, 1) = F->inv(F->generator());
    gens.push_back(d);
    return gens;
}

} // namespace charvar
