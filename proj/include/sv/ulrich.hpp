#pragma once

#include "sv/variety.hpp"

#include <optional>

namespace sv {

// First nonvanishing entry found when an Ulrich check fails: the twist t in
// 1..d and the cohomological degree i with h^i(V(-t h)) != 0.
struct UlrichWitness {
    int twist = 0;
    int degree = 0;
    Int dimension = 0;

    bool operator==(const UlrichWitness&) const = default;
};

// Full record of an Ulrich check.  `table[t-1]` holds the cohomology of
// V(-t h) for t = 1..d; the bundle is Ulrich exactly when every entry is
// zero.  For Ulrich bundles h0 always equals degree_rank_product; the
// certificate carries both so consumers can audit the identity.
struct UlrichCertificate {
    bool verdict = false;
    std::optional<UlrichWitness> witness; // set iff verdict is false
    std::vector<CohomologyVector> table;
    Int h0 = 0;
    Int rank = 0;
    Int degree = 0;
    Int degree_rank_product = 0;
};

UlrichCertificate ulrich_certificate(const SegreVeronese& X, const FormalSheaf& V);
bool is_ulrich(const SegreVeronese& X, const FormalSheaf& V);

// All twist tuples a with O(a) Ulrich, searched over 0 <= a_i <= d*k_i + n_i
// and returned in ascending lexicographic order.  The top boundary shell of
// the search box must contain no Ulrich bundle; otherwise the bound is too
// small and a SearchBoundError is raised.  Negative coordinates are excluded
// because an Ulrich line bundle has h^0 = deg * rank > 0, which forces every
// factor twist to be nonnegative.
std::vector<std::vector<int>> classify_ulrich_lines(const SegreVeronese& X);

// All Ulrich bundles of the form Om(a;l) x Om(b;t) on a two-factor variety,
// with twists searched over l in [a - n_1, a + d*k_1 + n_1] and
// t in [b - n_2, b + d*k_2 + n_2] for every 0 <= a <= n_1, 0 <= b <= n_2.
// Both boundary shells must be empty of Ulrich members.  Results are reduced
// to normal form (top-degree forms rewritten as line bundles), deduplicated
// and sorted; line bundles therefore appear in their O(c) form.
std::vector<BoxAtom> classify_ulrich_omega_boxes(const SegreVeronese& X);

enum class PullbackSide { Left, Right };

// Given E Ulrich on X_E and F Ulrich on X_F, returns an Ulrich bundle on the
// product variety:
//   Left:  E(dim(X_F) * h_E) box F
//   Right: E box F(dim(X_E) * h_F)
// Both inputs are re-verified, and so is the result; a failure of the result
// check signals an engine bug and raises Error.
FormalSheaf pullback_ulrich(const SegreVeronese& XE, const FormalSheaf& E,
                            const SegreVeronese& XF, const FormalSheaf& F,
                            PullbackSide side);

// Degenerate form: no second factor, the bundle passes through unchanged
// (still verified Ulrich on its own variety).
FormalSheaf pullback_ulrich(const SegreVeronese& XE, const FormalSheaf& E);

struct RegularityViolation {
    bool upper = true;  // which family: twist-up checks (true) or twist-down (false)
    int degree = 0;     // cohomological degree i of the nonzero group
    BoxAtom decoration; // the box factor tensored in
    Int value = 0;

    bool operator==(const RegularityViolation&) const = default;
};

struct RegularityReport {
    bool passed = true;
    Int checks = 0;
    std::vector<RegularityViolation> violations;
};

// Vanishing suite satisfied by every Ulrich bundle.  With j ranging over all
// tuples 0 <= j_r <= grid and D over decorations that put an interior form
// Om(a; a+1+j_r) (upper) or Om(a; a-j_r) (lower) in at most one slot and line
// twists O(j_r) / O(-j_r) everywhere else:
//   upper: h^i(V(-i h) tensor D) = 0        for i = 1..d
//   lower: h^i(V(-(i+1) h) tensor D) = 0    for i = 0..d-1
// Raises DomainError if V is not Ulrich on X.
RegularityReport verify_regularity(const SegreVeronese& X, const FormalSheaf& V, int grid);

} // namespace sv
