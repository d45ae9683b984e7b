#include "sv/bott.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sv {

void validate(const FactorSheaf& f) {
    if (f.n < 1)
        throw DomainError("FactorSheaf: n must be >= 1 (got " + std::to_string(f.n) + ")");
    if (f.p < 0 || f.p > f.n)
        throw DomainError("FactorSheaf: p must lie in 0..n (got p=" + std::to_string(f.p) +
                          ", n=" + std::to_string(f.n) + ")");
}

Int factor_rank(const FactorSheaf& f) {
    validate(f);
    return binom(f.n, f.p);
}

CohomologyVector bott_cohomology(const FactorSheaf& f) {
    validate(f);
    CohomologyVector v(f.n);
    if (f.t > f.p) {
        v[0] = checked_mul(binom(Int(f.t) + f.n - f.p, f.t), binom(Int(f.t) - 1, f.p));
    } else if (f.t == 0) {
        v[f.p] = 1;
    } else if (f.t < f.p - f.n) {
        v[f.n] = checked_mul(binom(Int(f.p) - f.t, -Int(f.t)), binom(-Int(f.t) - 1, f.n - f.p));
    }
    return v;
}

bool is_acyclic(const FactorSheaf& f) {
    // equivalent to bott_cohomology(f).is_zero(), kept branchy for clarity
    if (f.t > f.p) return false;
    if (f.t == 0) return false;
    if (f.t < f.p - f.n) return false;
    return true;
}

FactorSheaf serre_dual(const FactorSheaf& f) {
    validate(f);
    return FactorSheaf{f.n, f.n - f.p, -f.t};
}

FactorSheaf line_normal_form(const FactorSheaf& f) {
    validate(f);
    if (f.p == f.n && f.n >= 1)
        return FactorSheaf{f.n, 0, f.t - f.n - 1};
    return f;
}

Int weyl_dim(const std::vector<Int>& nu) {
    const int r = static_cast<int>(nu.size());
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            num = checked_mul(num, nu[i] - nu[j] + j - i);
            den = checked_mul(den, Int(j) - i);
            const Int g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1 || num < 0)
        throw DomainError("weyl_dim: weight is not dominant");
    return num;
}

CohomologyVector schur_twist_cohomology(int n, const std::vector<int>& mu, int t) {
    if (n < 1)
        throw DomainError("schur_twist_cohomology: n must be >= 1");
    if (static_cast<int>(mu.size()) > n)
        throw DomainError("schur_twist_cohomology: partition has more than n parts");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0 || (i + 1 < mu.size() && mu[i] < mu[i + 1]))
            throw DomainError("schur_twist_cohomology: mu must be a partition");
    }

    // rho-shifted weight: head for the twist, tails for the partition (padded
    // with zeros to n parts).  The tails are strictly decreasing already.
    const Int head = Int(t) + n;
    std::vector<Int> tails(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int part = j < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(j)] : 0;
        tails[static_cast<std::size_t>(j)] = Int(part) + (n - 1 - j);
    }

    int q = 0;
    for (Int x : tails) {
        if (x == head)
            return CohomologyVector(n); // repeated entry: everything vanishes
        if (x > head)
            ++q;
    }

    std::vector<Int> sorted;
    sorted.reserve(static_cast<std::size_t>(n) + 1);
    sorted.insert(sorted.end(), tails.begin(), tails.begin() + q);
    sorted.push_back(head);
    sorted.insert(sorted.end(), tails.begin() + q, tails.end());

    std::vector<Int> nu(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        nu[i] = sorted[i] - (Int(n) - static_cast<Int>(i));

    return CohomologyVector::concentrated(n, q, weyl_dim(nu));
}

CohomologyVector factor_tensor_cohomology(const FactorSheaf& f, const FactorSheaf& g) {
    validate(f);
    validate(g);
    if (f.n != g.n)
        throw DomainError("factor_tensor_cohomology: factors live on different spaces");
    const int n = f.n;
    const int c = (f.t - f.p) + (g.t - g.p); // line twist after pulling out Lambda U's

    CohomologyVector out(n);
    const int jmin = std::max(0, f.p + g.p - n);
    const int jmax = std::min(f.p, g.p);
    for (int j = jmin; j <= jmax; ++j) {
        std::vector<int> mu(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < j; ++r) mu[static_cast<std::size_t>(r)] = 2;
        for (int r = j; r < f.p + g.p - j; ++r) mu[static_cast<std::size_t>(r)] = 1;
        out.add(schur_twist_cohomology(n, mu, c));
    }
    return out;
}

} // namespace sv
