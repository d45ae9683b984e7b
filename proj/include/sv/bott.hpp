#pragma once

#include <vector>

#include "sv/cohomology.hpp"

namespace sv {

// Twisted bundle of holomorphic p-forms Omega^p(t) on P^n.
// Omega^0(t) = O(t) and Omega^n(t) = O(t-n-1) are the line-bundle edges of
// the family.
struct FactorSheaf {
    int n; // ambient projective space P^n, n >= 1
    int p; // exterior power, 0 <= p <= n
    int t; // twist

    bool operator==(const FactorSheaf&) const = default;
};

// Total order used for canonical forms: by (p, t); factors are only ever
// compared inside the same slot, so n is equal on both sides.
inline bool factor_less(const FactorSheaf& a, const FactorSheaf& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.t < b.t;
}

void validate(const FactorSheaf& f); // DomainError unless n >= 1, 0 <= p <= n

Int factor_rank(const FactorSheaf& f); // binom(n, p)

// Dimension vector of H^*(P^n, Omega^p(t)).  The three ranges below are
// pairwise disjoint and everything outside them vanishes; in particular the
// result has at most one nonzero entry.
//   h^0 = binom(t+n-p, t) * binom(t-1, p)        if t > p
//   h^p = 1                                      if t = 0
//   h^n = binom(p-t, -t) * binom(-t-1, n-p)      if t < p - n
// Note that Omega^p(p) is acyclic for every p >= 1 (t = p is outside all
// three ranges), alongside the familiar band p-n <= t <= p-1, t != 0.
CohomologyVector bott_cohomology(const FactorSheaf& f);

bool is_acyclic(const FactorSheaf& f);

// Serre dual up to the twist conventions of the family:
// h^q(Omega^p(t)) = h^{n-q}(Omega^{n-p}(-t)).
FactorSheaf serre_dual(const FactorSheaf& f);

// Rewrites the line-bundle edge p = n as a genuine line bundle:
// Omega^n(t) -> O(t-n-1).  Interior p is returned unchanged.
FactorSheaf line_normal_form(const FactorSheaf& f);

// --- exact single-factor tensor products ------------------------------------
//
// Cohomology of Omega^p(t) (x) Omega^a(u) on P^n for arbitrary p, a.  With
// U = Omega(1) (rank n, so Omega^p(t) = Lambda^p U (t-p)) the product of two
// exterior powers splits into two-column Schur pieces
//   Lambda^p U (x) Lambda^a U = (+)_j  S_{(2^j, 1^{p+a-2j})} U,
//   max(0, p+a-n) <= j <= min(p, a),
// and each irreducible summand has cohomology in a single degree, computed by
// schur_twist_cohomology below.  The result is exact, not a bound.
CohomologyVector factor_tensor_cohomology(const FactorSheaf& f, const FactorSheaf& g);

// Cohomology of S_mu(U)(t) on P^n, U = Omega(1), mu a partition with at most
// n parts.  Sorting the rho-shifted weight (t+n, mu_1+n-1, ..., mu_n+0)
// either hits a repeat (everything vanishes) or lands all cohomology in the
// degree q = #{j : mu_j + n - j > t + n}, with dimension given by the Weyl
// formula applied to the sorted sequence minus rho.
CohomologyVector schur_twist_cohomology(int n, const std::vector<int>& mu, int t);

// dim of the irreducible GL(r) representation with highest weight nu
// (nu weakly decreasing, entries may be negative), r = nu.size().
Int weyl_dim(const std::vector<Int>& nu);

} // namespace sv
