#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/numtheory.hpp"

namespace charvar {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Element of F_{p^k}, packed as sum of digit_i * p^i where digit_i is the
// coefficient of x^i in the power basis of the field modulus.
using FqElem = std::uint32_t;

// F_{p^k} with p^k <= 10^6. The modulus is the lexicographically least
// monic irreducible of degree k (coefficients compared constant-term
// first). Multiplication, inversion, powers, Frobenius, and discrete logs
// run on exp/log tables of a fixed primitive element (the least one).
class FqField {
public:
    FqField(i64 p, i64 k);

    i64 p() const { return p_; }
    i64 k() const { return k_; }
    i64 q() const { return q_; }
    const std::vector<i64>& modulus() const { return mod_; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }
    FqElem generator() const { return gen_; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, i64 e) const;
    FqElem frobenius(FqElem a) const { return pow_frob(a, 1); }
    // a^(p^m)
    FqElem pow_frob(FqElem a, i64 m) const;

    // Discrete log base the primitive element; a != 0.
    i64 dlog(FqElem a) const;
    // generator^e
    FqElem exp(i64 e) const;

    // Multiplicative order; a != 0.
    i64 elem_order(FqElem a) const;

    // Residue of the prime subfield as a field element.
    FqElem from_int(i64 r) const;

    // True if a lies in the degree-m subfield F_{p^m}, m | k.
    bool in_subfield(FqElem a, i64 m) const;

    // A root of unity of exact order e (requires e | q-1): generator^((q-1)/e).
    FqElem root_of_unity(i64 e) const;

    std::string str(FqElem a) const;

private:
    std::vector<i64> unpack(FqElem a) const;
    FqElem pack(const std::vector<i64>& v) const;
    FqElem raw_mul(FqElem a, FqElem b) const; // polynomial multiplication mod modulus

    i64 p_, k_, q_;
    std::vector<i64> mod_; // monic, length k+1
    FqElem gen_ = 0;
    std::vector<FqElem> exp_; // size q-1
    std::vector<i64> log_;    // size q, log_[0] = -1
};

// Shared, memoized field construction (fields are immutable).
std::shared_ptr<const FqField> make_field(i64 p, i64 k);

} // namespace charvar
