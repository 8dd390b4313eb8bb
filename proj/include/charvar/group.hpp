#pragma once

#include <map>
#include <memory>
#include <vector>

#include "charvar/fq.hpp"
#include "charvar/typeconst.hpp" // CapExceeded

namespace charvar {

// Small dense matrix over a shared field.
struct FqMatrix {
    std::shared_ptr<const FqField> F;
    i64 n = 0;
    std::vector<FqElem> e; // row-major

    FqMatrix() = default;
    FqMatrix(std::shared_ptr<const FqField> field, i64 dim);
    static FqMatrix identity(std::shared_ptr<const FqField> field, i64 dim);

    FqElem& at(i64 r, i64 c) { return e[r * n + c]; }
    FqElem at(i64 r, i64 c) const { return e[r * n + c]; }

    FqMatrix mul(const FqMatrix& o) const;
    FqMatrix inverse() const;
    FqElem det() const;
    FqMatrix frobenius() const; // entry-wise x -> x^p

    bool operator==(const FqMatrix& o) const { return n == o.n && e == o.e; }
    bool operator<(const FqMatrix& o) const { return e < o.e; } // same field/dim assumed

    std::string str() const;
};

// Enumerated matrix group with deterministic BFS element order (identity
// first). Product/inverse tables are materialized lazily for groups small
// enough to take character tables.
class GroupTable {
public:
    static constexpr i64 kDefaultCap = 20000;

    GroupTable(std::vector<FqMatrix> generators, i64 cap = kDefaultCap);

    i64 size() const { return static_cast<i64>(elems_.size()); }
    const FqMatrix& elem(i64 i) const { return elems_[i]; }
    const std::vector<FqMatrix>& elements() const { return elems_; }
    i64 index_of(const FqMatrix& m) const; // -1 if absent
    i64 identity() const { return 0; }

    i64 mul(i64 a, i64 b) const;
    i64 inv(i64 a) const;
    i64 conj(i64 g, i64 x) const; // g x g^{-1}
    i64 pow(i64 a, i64 e) const;
    i64 elem_order(i64 a) const;
    i64 exponent() const;

    const std::vector<i64>& generator_indices() const { return gen_idx_; }

    void build_tables() const; // |G|^2 product table; requires |G| <= 2500

    struct Classes {
        std::vector<i64> rep;                  // representative index per class
        std::vector<i64> size;                 // class sizes
        std::vector<i64> class_of;             // element -> class
        std::vector<std::vector<i64>> members; // elements per class, ascending
        i64 count() const { return static_cast<i64>(rep.size()); }
    };
    const Classes& conjugacy_classes() const;

    bool contains_all(const std::vector<FqMatrix>& gens) const;

private:
    std::vector<FqMatrix> elems_;
    std::map<std::vector<FqElem>, i64> index_;
    std::vector<i64> gen_idx_;
    mutable std::vector<i64> prod_;  // flattened product table when built
    mutable std::vector<i64> inv_;
    mutable Classes classes_;
    mutable bool classes_built_ = false;
};

GroupTable generate_group(std::vector<FqMatrix> generators, i64 cap = GroupTable::kDefaultCap);

// Standard generating sets.
std::vector<FqMatrix> gl_generators(std::shared_ptr<const FqField> F, i64 n);
std::vector<FqMatrix> sl_generators(std::shared_ptr<const FqField> F, i64 n);

} // namespace charvar
