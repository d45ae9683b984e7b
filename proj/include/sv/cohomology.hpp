#pragma once

#include <vector>

#include "sv/exactcomb.hpp"

namespace sv {

// Graded dimension vector (h^0, ..., h^dim) of a sheaf on a space of
// dimension dim.  Plain data; all entries exact.
struct CohomologyVector {
    std::vector<Int> h;

    CohomologyVector() = default;
    explicit CohomologyVector(int dim) : h(static_cast<std::size_t>(dim) + 1, 0) {}

    static CohomologyVector concentrated(int dim, int degree, Int value) {
        CohomologyVector v(dim);
        v.h[static_cast<std::size_t>(degree)] = value;
        return v;
    }

    int dim() const { return static_cast<int>(h.size()) - 1; }

    Int operator[](int q) const { return h[static_cast<std::size_t>(q)]; }
    Int& operator[](int q) { return h[static_cast<std::size_t>(q)]; }

    bool is_zero() const {
        for (Int x : h)
            if (x != 0) return false;
        return true;
    }

    // Euler characteristic: alternating sum of the entries.
    Int chi() const {
        Int c = 0;
        for (std::size_t q = 0; q < h.size(); ++q)
            c = checked_add(c, (q % 2 == 0) ? h[q] : -h[q]);
        return c;
    }

    CohomologyVector reversed() const {
        CohomologyVector v = *this;
        for (std::size_t q = 0; q < h.size(); ++q)
            v.h[q] = h[h.size() - 1 - q];
        return v;
    }

    void add(const CohomologyVector& other) {
        if (other.h.size() != h.size())
            throw DomainError("CohomologyVector::add: dimension mismatch");
        for (std::size_t q = 0; q < h.size(); ++q)
            h[q] = checked_add(h[q], other.h[q]);
    }

    void add_scaled(const CohomologyVector& other, Int m) {
        if (other.h.size() != h.size())
            throw DomainError("CohomologyVector::add_scaled: dimension mismatch");
        for (std::size_t q = 0; q < h.size(); ++q)
            h[q] = checked_add(h[q], checked_mul(m, other.h[q]));
    }

    bool operator==(const CohomologyVector&) const = default;
};

// Convolution product: out[i] = sum_{i1+i2=i} a[i1]*b[i2].  The Kunneth rule
// for a product of two factors is exactly this.
inline CohomologyVector convolve(const CohomologyVector& a, const CohomologyVector& b) {
    CohomologyVector out(a.dim() + b.dim());
    for (int i = 0; i <= a.dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= b.dim(); ++j)
            if (b[j] != 0)
                out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return out;
}

} // namespace sv
