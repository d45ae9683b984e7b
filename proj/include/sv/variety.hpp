#pragma once

#include "sv/sheaf.hpp"

#include <vector>

namespace sv {

// A product of projective spaces P^{n_1} x ... x P^{n_s} embedded by the
// complete linear system O(k_1, ..., k_s).  All cohomology is computed on the
// product; the embedding only enters through degrees and hyperplane twists.
struct SegreVeronese {
    std::vector<int> n; // factor dimensions, each >= 1
    std::vector<int> k; // embedding multidegree, each >= 1

    int s() const { return static_cast<int>(n.size()); }
    int dim() const;

    bool operator==(const SegreVeronese&) const = default;
};

void validate(const SegreVeronese& X);

// Degree of the embedded variety: k_1^{n_1} ... k_s^{n_s} * d! / (n_1! ... n_s!).
Int degree(const SegreVeronese& X);

// Multidegree of q copies of the hyperplane class: (q*k_1, ..., q*k_s).
std::vector<int> h_twist(const SegreVeronese& X, int q);

// Twist tuple of the canonical bundle: (-n_1 - 1, ..., -n_s - 1).
std::vector<int> canonical_twist(const SegreVeronese& X);

// O(c_1, ..., c_s) as a box atom on X.
BoxAtom line_atom(const SegreVeronese& X, const std::vector<int>& c);

// Om(a_1; a_1) x ... x Om(a_s; a_s) -- one member of the exceptional family
// indexed by tuples 0 <= a_i <= n_i.
BoxAtom collection_atom(const SegreVeronese& X, const std::vector<int>& a);

struct CollectionEntry {
    std::vector<int> a;
    int weight = 0; // sum of the a_i
    BoxAtom atom;
};

// Product variety: factors of A followed by factors of B.
SegreVeronese product(const SegreVeronese& A, const SegreVeronese& B);

// All tuples of the given weight, ascending lexicographically.
std::vector<std::vector<int>> weight_tuples(const SegreVeronese& X, int w);

// The full family ordered by weight ascending, ties broken lexicographically.
std::vector<CollectionEntry> dual_collection(const SegreVeronese& X);

} // namespace sv
