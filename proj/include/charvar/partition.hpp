#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "charvar/poly.hpp"

namespace charvar {

// Integer partition, parts weakly decreasing, no zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<i64> parts);

    const std::vector<i64>& parts() const { return p_; }
    i64 size() const; // sum of parts
    bool empty() const { return p_.empty(); }

    Partition transpose() const;

    // Hook lengths of all cells, row by row.
    std::vector<i64> hooks() const;
    // n(lambda) = sum_i (i-1) * lambda_i
    i64 n_stat() const;
    // Number of standard Young tableaux (hook length formula);
    // the dimension of the S_{|lambda|} character of shape lambda.
    mpz_class sym_dim() const;

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return p_ != o.p_; }

    std::string str() const;

private:
    std::vector<i64> p_;
};

// All partitions of n; first part descending, recursively.
std::vector<Partition> enumerate_partitions(i64 n);

// Order used for PartitionType keys: larger size first, then parts
// lexicographically larger first. Deterministic iteration everywhere.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// Multiset of partitions: the type of a multi-partition. Keys iterate in
// PartitionOrder.
class PartitionType {
public:
    using Map = std::map<Partition, i64, PartitionOrder>;

    PartitionType() = default;
    explicit PartitionType(Map entries);

    const Map& entries() const { return m_; }
    i64 size() const;  // sum of m_lambda * |lambda|
    i64 sharp() const; // sum of multiplicities (#tau)

    bool operator==(const PartitionType& o) const { return m_ == o.m_; }
    bool operator!=(const PartitionType& o) const { return m_ != o.m_; }
    bool operator<(const PartitionType& o) const;

    std::string str() const;

private:
    Map m_;
};

// All types of total size n, deterministic order.
std::vector<PartitionType> enumerate_types(i64 n);

// chi^lambda(1): number of standard Young tableaux of shape lambda.
mpz_class chi_dim(const Partition& lambda);

// d_tau = prod_lambda chi_dim(lambda)^{m_lambda}
mpz_class d_tau(const PartitionType& tau);

// Each partition transposed, multiplicities kept. An involution.
PartitionType dual_type(const PartitionType& tau);

// Multiplicities scaled by A.
PartitionType scale_type(i64 A, const PartitionType& tau);

// Q_tau(q) = |GL_n(F_q)| / tau(1) for every prime power q, where tau(1)
// is the dimension of any GL_n(F_q)-character of type tau and n is the
// size of tau. Computed as q^{n(n-1)/2 - sum m_lambda n(lambda)} times
// prod_lambda prod_cells (q^{hook} - 1)^{m_lambda}; positive for q >= 2.
IntPolynomial dim_quotient_poly(const PartitionType& tau);

// tau(1) itself (the generic character degree of type tau).
IntPolynomial type_degree_poly(const PartitionType& tau);

} // namespace charvar
