#pragma once

#include <vector>

#include "charvar/cyclotomic.hpp"
#include "charvar/group.hpp"

namespace charvar {

// Exact character table. Rows are irreducibles in a deterministic order
// (degree, then values); values are cyclotomic integers of order
// exponent(G).
class CharacterTable {
public:
    i64 group_order = 0;
    i64 exponent = 1;
    std::vector<i64> class_rep;
    std::vector<i64> class_size;
    std::vector<i64> class_of;  // element index -> class
    std::vector<i64> inv_class; // class of inverses
    std::vector<std::vector<Cyc>> rows;
    std::vector<mpz_class> degrees;

    i64 class_count() const { return static_cast<i64>(class_rep.size()); }
    i64 irr_count() const { return static_cast<i64>(rows.size()); }
    const Cyc& value(i64 chi, i64 cls) const { return rows[chi][cls]; }
    const Cyc& value_at_element(i64 chi, i64 elem) const { return rows[chi][class_of[elem]]; }

    // Both orthogonality relations and sum of squared degrees; throws on
    // any violation.
    void validate(const GroupTable& G) const;
};

// Dixon's exact method: class-algebra structure constants, simultaneous
// eigenvectors over a prime l = 1 (mod exponent), l > 2 sqrt(|G|), lifted
// to cyclotomic integers through discrete logarithms. |G| <= 2500.
CharacterTable character_table(const GroupTable& G);

} // namespace charvar
