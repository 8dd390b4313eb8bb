#pragma once

#include <gmpxx.h>

#include <vector>

#include "charvar/partition.hpp"

namespace charvar {

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Number of elements of prod_lambda S_{m_lambda} all of whose cycles have
// length exactly s: prod_lambda m!/(s^{m/s} (m/s)!), zero unless s | m.
mpz_class nu(const PartitionType& tau, i64 s);

// Count of set families {(lambda, I_1, ..., I_A)} on {1,...,n} with the
// I's disjoint of size |lambda| each, jointly exhaustive, inducing type
// tau; n = A * size(tau). The closed multinomial form is validated
// against direct enumeration on every family with n <= 8 before use.
mpz_class theta_count(const PartitionType& tau, i64 n, i64 A);

// Direct enumeration of the families above (test oracle, n small).
mpz_class theta_count_enumerate(const PartitionType& tau, i64 n, i64 A);

// Brute-force cycle-structure count behind nu (test oracle, m <= 8).
mpz_class nu_enumerate(const PartitionType& tau, i64 s);

// C-check constant: -(d_tau^A/(A s)) (-s)^{#tau/s} (#tau/s - 1)! nu(tau,s) theta(tau,n)
// with n = A * size(tau); zero when nu vanishes.
mpq_class c_check(i64 s, i64 A, const PartitionType& tau);

// Moebius-inverted constant C_{s,A,tau} = sum_{s|j|size(tau)} mu(j/s) C-check_{j,A,tau}.
mpq_class c_const(i64 s, i64 A, const PartitionType& tau);

// One class of ordered A-block equipartitions of {1,...,n} modulo cyclic
// shift; the representative is the lexicographically least shift, blocks
// sorted ascending, elements 0-based.
struct GradingClass {
    i64 n = 0;
    i64 A = 1;
    std::vector<std::vector<i64>> blocks;
};

std::vector<GradingClass> grading_classes(i64 n, i64 A);

// |Upsilon_A| by Burnside over the shift group (test oracle).
mpz_class grading_class_count(i64 n, i64 A);

} // namespace charvar
