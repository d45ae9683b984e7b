#include "sv/exactcomb.hpp"

#include <string>

namespace sv {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int checked_pow(Int b, int e) {
    if (e < 0)
        throw DomainError("checked_pow: negative exponent");
    Int r = 1;
    for (int i = 0; i < e; ++i)
        r = checked_mul(r, b);
    return r;
}

Int binom(Int a, Int b) {
    if (a < 0)
        throw DomainError("binom: negative top argument " + std::to_string(a));
    if (b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    // Multiplicative form; each partial product is divisible by i, so the
    // division below is exact at every step.
    Int r = 1;
    for (Int i = 1; i <= b; ++i) {
        r = checked_mul(r, a - b + i);
        r /= i;
    }
    return r;
}

Int multinomial(const std::vector<int>& n) {
    Int r = 1;
    Int partial = 0;
    for (int ni : n) {
        if (ni < 0)
            throw DomainError("multinomial: negative entry");
        partial = checked_add(partial, ni);
        r = checked_mul(r, binom(partial, ni));
    }
    return r;
}

Int multinomial_degree(const std::vector<int>& n, const std::vector<int>& k) {
    if (n.empty() || n.size() != k.size())
        throw DomainError("multinomial_degree: tuple lengths must match and be nonempty");
    Int r = multinomial(n);
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 1 || k[i] < 1)
            throw DomainError("multinomial_degree: factors need n_i >= 1 and k_i >= 1");
        r = checked_mul(r, checked_pow(k[i], n[i]));
    }
    return r;
}

Int koszul_term_rank(int n, int j) {
    if (n < 1)
        throw DomainError("koszul_term_rank: n must be >= 1");
    return binom(Int(n) + 1, j);
}

} // namespace sv
