#pragma once

#include "sv/ulrich.hpp"

#include <string>

namespace sv {

// Grid of values alpha[i][col] = h^i(V(-i h) ⊗ G_col) where G_col runs over
// the form-bundle family Om(a_1;a_1) x ... x Om(a_s;a_s) in dual-collection
// order (weight ascending, then lexicographic) and i = 0..d.  The table is
// natural when every one of these twisted products has cohomology
// concentrated in degree i; for natural tables the rows supply all the
// multiplicities of the resolutions and monads below.
struct AlphaTable {
    SegreVeronese X;
    FormalSheaf V;
    std::vector<std::vector<int>> tuples;
    std::vector<std::vector<Int>> alpha;
    bool natural = false;
};

AlphaTable alpha_table(const SegreVeronese& X, const FormalSheaf& V);

// Value lookup by tuple; DomainError for an unknown tuple or i out of range.
Int alpha_entry(const AlphaTable& T, int i, const std::vector<int>& tuple);

// One weight layer of a complex: the direct sum of O(-a_1,...,-a_s)^mult
// over the listed tuples (all of weight `weight`, ascending lex, mult > 0).
struct TermGroup {
    int weight = 0;
    std::vector<std::pair<std::vector<int>, Int>> parts;
    Int rank = 0; // sum of the multiplicities

    bool operator==(const TermGroup&) const = default;
};

// Left-to-right term list of the exact complex attached to row q of a
// natural table.  Weight groups are ordered descending; zero groups omitted.
//   q = 0: 0 -> T_d -> ... -> T_1 -> T_0 -> V -> 0
//   q = 1: 0 -> T_d -> ... -> T_1 -> V(-h) -> 0
//   q = d: 0 -> V(-dh) -> T_d -> ... -> T_1 -> 0
struct ResolutionShape {
    int q = 0;
    std::vector<TermGroup> terms;
};

// Monad 0 -> B_1 -> M -> B_2 -> 0 with homology V(-qh), for 1 < q < d.  The
// chains list the weight layers resolving B_1 (weights d..q+1) and B_2
// (weights q-1..1); the middle M is the weight-q layer itself.
struct MonadShape {
    int q = 0;
    std::vector<TermGroup> b1_chain;
    TermGroup middle;
    std::vector<TermGroup> b2_chain;
};

// Both constructors require a natural table (DomainError otherwise) and
// verify the alternating rank identity
//   sum_w (-1)^(w-q) rank(T_w) = rank(V)
// before returning; a mismatch signals an internal error and raises Error.
ResolutionShape build_resolution(const AlphaTable& T, int q); // q in {0, 1, d}
MonadShape build_monad(const AlphaTable& T, int q);           // 1 < q < d

// Euler-characteristic probe: for every t in [-d-2, d+2] checks
//   sum_w (-1)^(w-q) chi(T_w(t h)) = chi(V((t-q) h)).
// The groups overload lets tests probe deliberately corrupted complexes.
bool chi_consistency(const AlphaTable& T, int q, const std::vector<TermGroup>& groups);
bool chi_consistency(const AlphaTable& T, const ResolutionShape& shape);
bool chi_consistency(const AlphaTable& T, const MonadShape& shape);

// One classification-criterion evaluation: a concrete cohomology-vanishing
// hypothesis, the measured values backing it, and the conclusion asserted
// when it holds.  Hypotheses are evaluated unconditionally (no Ulrich
// precondition); `applicable` records whether the criterion's shape guards
// (factor dimensions / embedding degrees) match the input variety.
struct CriterionEvaluation {
    std::string id;
    bool applicable = false;
    bool holds = false;
    std::vector<Int> values;
    std::string conclusion;
};

struct CriteriaReport {
    bool ulrich = false;
    std::vector<CriterionEvaluation> entries;
};

// Evaluates the two-factor classification criteria:
//   weight2-row1-vanishing:    alpha_1^{0,2} = alpha_1^{1,1} = 0   (n_1, n_2 >= 2)
//   scroll-h1-probe:           h^1(V(-h) ⊗ O(-k_1,-1)) = 0        (n_2 = 1, n_1 >= 2; mirrored)
//   middle-row-adjacent:       alpha_m row vanishes next to weight m (n_1, n_2 >= 2)
//   factor-pullback-detection: alpha_n row vanishing pattern        (k_2 = 1, n_2 >= 2)
// DomainError unless X has exactly two factors.
CriteriaReport evaluate_criteria(const SegreVeronese& X, const FormalSheaf& V);

} // namespace sv
