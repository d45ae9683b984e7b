#pragma once

#include <utility>
#include <vector>

#include "sv/bott.hpp"

namespace sv {

// External (box) product of one Omega^{p_i}(t_i) per factor.
struct BoxAtom {
    std::vector<FactorSheaf> factors;

    bool operator==(const BoxAtom&) const = default;
};

void validate(const BoxAtom& a);

// Canonical order on atoms: lexicographic over the factor slots by (p, t).
// Only atoms with the same factor profile (same n per slot) are comparable.
bool atom_less(const BoxAtom& a, const BoxAtom& b);

Int rank(const BoxAtom& a);        // product of the factor ranks
int total_dim(const BoxAtom& a);   // sum of the factor dimensions

BoxAtom twist(const BoxAtom& a, const std::vector<int>& c); // t_i += c_i

// Rewrites every p = n_i edge factor as a line bundle (isomorphic sheaf,
// canonical parameters).  Used to deduplicate classification output.
BoxAtom line_normal_form(const BoxAtom& a);

// Kunneth: the dimension vector of the box product is the convolution of the
// factor vectors.
CohomologyVector kunneth_cohomology(const BoxAtom& a);

// Formal direct sum of atoms with positive multiplicities, kept canonical:
// sorted by atom_less, duplicates merged, zero terms dropped.
struct FormalSheaf {
    std::vector<std::pair<BoxAtom, Int>> terms;

    static FormalSheaf zero() { return FormalSheaf{}; }
    static FormalSheaf atom(BoxAtom a, Int mult = 1);

    bool is_zero() const { return terms.empty(); }
    bool operator==(const FormalSheaf&) const = default;
};

FormalSheaf add(const FormalSheaf& a, const FormalSheaf& b);
FormalSheaf scale(const FormalSheaf& a, Int m);
FormalSheaf twist(const FormalSheaf& a, const std::vector<int>& c);
Int rank(const FormalSheaf& a);
CohomologyVector kunneth_cohomology(const FormalSheaf& a);

// External product over disjoint factor blocks: (sum a_i) box (sum b_j) =
// sum a_i ++ b_j.  The factor lists concatenate.
BoxAtom box_concat(const BoxAtom& a, const BoxAtom& b);
FormalSheaf box_product(const FormalSheaf& a, const FormalSheaf& b);

// Slotwise tensor product that stays inside the atom class.  Defined when in
// every slot at least one side is a line bundle after line_normal_form
// (p in {0, n}); otherwise NotRepresentableError.  Cohomology of the
// non-representable products is still available via tensor_cohomology.
BoxAtom atom_tensor(const BoxAtom& a, const BoxAtom& b);
FormalSheaf sheaf_tensor_atom(const FormalSheaf& a, const BoxAtom& b);

// Exact dimension vector of (a (x) b): slotwise factor_tensor_cohomology,
// convolved across slots.  Works for every slot combination, including
// interior (x) interior.
CohomologyVector tensor_cohomology(const BoxAtom& a, const BoxAtom& b);
CohomologyVector tensor_cohomology(const FormalSheaf& a, const BoxAtom& b);

} // namespace sv
