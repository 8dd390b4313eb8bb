#pragma once

#include <gmpxx.h>

#include "charvar/numtheory.hpp"
#include "charvar/torus.hpp"

namespace charvar {

// min(v_p(s), v_p(n)-v_p(d), v_p(d), v_p(n)-v_p(s), v_p(K)) for p | n.
int phi_exponent(i64 p, i64 n, i64 d, i64 s, i64 K);

// Product over primes p | n of ((p - p^{1-2g}) p^{phi} + p^{1-2g} - 1)/(p-1).
mpq_class phi_g_closed(i64 n, i64 d, i64 s, i64 K, i64 g);

// Divisor-sum form; equals phi_g_closed on every input.
mpq_class phi_g_sum(i64 n, i64 d, i64 s, i64 K, i64 g);

// Definitional form: sum over a in F_d^{2g} of the per-order sector factor.
mpq_class phi_g_def(i64 n, i64 d, i64 s, i64 K, i64 g);

// (gcd(d, nA/s)/(dA))^{2g-1} gcd(d, n/s)/d when gcd(d, n/s) | K d/A, else 0.
// Requires A | d, A | s, s | n, d | n.
mpq_class phi_st_closed(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g);

// Moebius double-sum form; equals phi_st_closed.
mpq_class phi_st_sum(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g);

// Definitional lattice sum over b in F_d^{2g} for an order-A twist a:
// (1/(d^{2g} A^{2g-1})) sum over the subgroup F_{a,s} of xi_a(b)^K.
// Exact; the order/pairing statistics are tallied by dynamic programming
// over coordinate pairs (validated against full enumeration in tests).
mpq_class phi_st_lattice(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g);

// Full enumeration of the same sum (test oracle, small d^{2g} only).
mpq_class phi_st_lattice_bruteforce(i64 A, i64 n, i64 d, i64 s, i64 K, i64 g);

// delta_{B | dn/s} sum_{d1 | gcd(d,s)} mu(d1)/(d^{2g} d1^{2g-1}) *
//   sigma(gcd(s/d1, n/B, d/d1, dn/(Bs))), sigma = sum of divisors.
mpq_class phi_check(i64 B, i64 n, i64 d, i64 s, i64 K, i64 g);

// Prime-local piecewise evaluation of the same function (cross-check).
mpq_class phi_check_plocal(i64 B, i64 n, i64 d, i64 s, i64 K, i64 g);

// sum_{d2 | B | n, B*B0 | n*gcd(B0,d2)} (d^{2g} B^{2g} / (n^{2g} d2^{2g}))
//   mu(d2) phi_check(B, n, d, s, K).
mpq_class phi_stp_sum(i64 B0, i64 n, i64 s, i64 d, i64 K, i64 g);

// Raw double lattice sum over a in F_d^{2g}, b in F_n^{2g} (test oracle).
mpq_class phi_stp_lattice(i64 B0, i64 n, i64 s, i64 d, i64 K, i64 g);

} // namespace charvar
