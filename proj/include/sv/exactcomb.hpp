#pragma once

#include <cstdint>
#include <vector>

#include "sv/errors.hpp"

namespace sv {

// All dimensions, multiplicities and degrees are exact 64-bit integers with
// overflow detection; any operation that would wrap throws OverflowError.
using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// b^e for e >= 0 (e < 0 is a DomainError).
Int checked_pow(Int b, int e);

// Binomial coefficient binom(a, b) with the zero-outside-range convention:
// 0 whenever b < 0 or b > a.  A negative a is a caller error (DomainError);
// all the cohomology window formulas keep their top argument nonnegative,
// so a negative a always means a bug upstream, not a value to interpret.
Int binom(Int a, Int b);

// Multinomial coefficient (sum n_i)! / prod n_i!  for n_i >= 0.
Int multinomial(const std::vector<int>& n);

// Degree of the (n_1,...,n_s; k_1,...,k_s) Segre-Veronese embedding:
//   k_1^{n_1} ... k_s^{n_s} * d! / (n_1! ... n_s!),   d = sum n_i.
// (The exponent of the intersection power is the dimension d.)
// Requires n_i >= 1, k_i >= 1 and equal tuple lengths.
Int multinomial_degree(const std::vector<int>& n, const std::vector<int>& k);

// Rank binom(n+1, j) of the j-th term in the Koszul resolution of Omega^a(a)
// on P^n by twists of O (the exterior powers of an (n+1)-dimensional space).
Int koszul_term_rank(int n, int j);

} // namespace sv
