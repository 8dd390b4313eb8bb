#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/partition.hpp"
#include "charvar/phi.hpp"
#include "charvar/poly.hpp"
#include "charvar/torus.hpp"
#include "charvar/typeconst.hpp"

namespace charvar {

struct NonPolynomial : std::runtime_error {
    explicit NonPolynomial(const std::string& what) : std::runtime_error(what) {}
};

struct RouteDisagreement : std::runtime_error {
    explicit RouteDisagreement(const std::string& what) : std::runtime_error(what) {}
};

// Convention for the s-range condition in the twisted point count; the two
// agree on every tested input, the e_A form is the derivation's own shape.
enum class SRange { eA, theorem };

// Fermionic shift (n^2/2)(2g-1)(1 - 1/A); always an integer for A | n.
i64 fermionic_shift(i64 n, i64 g, i64 A);

struct EPolyResult {
    IntPolynomial poly;
    i64 n = 1, d = 1, g = 1;
    i64 K_raw = 1, K = 1; // K reduced modulo d
    std::string variant;  // "stringy" | "sector" | "isotypic"
    i64 A = 1;            // sector order / isotypic character order
    i64 shift = 0;        // Fermionic shift folded into the polynomial
};

// S_{a,b}: the twisted-sector point count as a polynomial in q.
IntPolynomial point_count_poly(i64 n, i64 g, const TorusVector& a, const TorusVector& b,
                               SRange convention = SRange::eA);

// E(M^a/F_d^{2g}, L)(uv)^{F(a)} for a of order A: the sector contribution
// with the Fermionic shift folded in.
EPolyResult sector_epoly(i64 n, i64 d, i64 g, i64 K, i64 A);

// The full stringy E-polynomial in q = uv.
EPolyResult stringy_epoly(i64 n, i64 d, i64 g, i64 K);

// Isotypic contribution for a character of order xi_order of F_{n/d},
// computed through the divisor-sum route and through the mirror sector
// route; throws RouteDisagreement if the two differ.
EPolyResult isotypic_epoly(i64 n, i64 d, i64 g, i64 K, i64 xi_order);

struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct StructuralReport {
    i64 n, d, g, K;
    std::vector<CheckEntry> entries;
    bool all_pass() const;
};

// Euler characteristic at q = 1, degree and leading coefficient, the
// mirror comparison against (n/d), and the sector-sum identity.
StructuralReport structural_checks(i64 n, i64 d, i64 g, i64 K);

} // namespace charvar
