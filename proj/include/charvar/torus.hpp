#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "charvar/numtheory.hpp"

namespace charvar {

struct ModulusMismatch : std::runtime_error {
    explicit ModulusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Element of (Z/d)^{2g}: residues canonical in [0, d).
class TorusVector {
public:
    TorusVector(i64 modulus, std::vector<i64> entries);

    i64 modulus() const { return d_; }
    i64 genus() const { return static_cast<i64>(e_.size()) / 2; }
    const std::vector<i64>& entries() const { return e_; }

    // lcm of entry orders: d / gcd(d, entries)
    i64 order() const;

    // Same residues in (Z/m)^{2g} for d | m.
    TorusVector embed(i64 m) const;

    bool operator==(const TorusVector& o) const { return d_ == o.d_ && e_ == o.e_; }

private:
    i64 d_;
    std::vector<i64> e_;
};

// Delta(a,b) = gcd(A, B, (AB/d^2) * sum(a_{2i-1} b_{2i} - a_{2i} b_{2i-1})),
// the symplectic sum taken in residues.
i64 delta_pair(const TorusVector& a, const TorusVector& b);

// Symplectic pairing sum(a_{2i-1} b_{2i} - a_{2i} b_{2i-1}) mod d.
i64 symplectic_sum(const TorusVector& a, const TorusVector& b);

// |{v in (Z/d)^m : order(v) = A}| = sum_{e|A} mu(A/e) e^m for A | d.
mpz_class count_order_elements(i64 d, i64 m, i64 A);

struct SectorParams {
    i64 n = 1;
    i64 d = 1;
    i64 g = 1;
    i64 K = 1;
};

} // namespace charvar
