#include "sv/variety.hpp"

#include <algorithm>

namespace sv {

int SegreVeronese::dim() const {
    int d = 0;
    for (int ni : n)
        d += ni;
    return d;
}

void validate(const SegreVeronese& X) {
    if (X.n.empty())
        throw DomainError("variety: needs at least one factor");
    if (X.n.size() != X.k.size())
        throw DomainError("variety: dimension and multidegree tuples differ in length");
    for (int ni : X.n)
        if (ni < 1)
            throw DomainError("variety: factor dimension must be >= 1");
    for (int ki : X.k)
        if (ki < 1)
            throw DomainError("variety: embedding degree must be >= 1");
}

Int degree(const SegreVeronese& X) {
    validate(X);
    return multinomial_degree(X.n, X.k);
}

std::vector<int> h_twist(const SegreVeronese& X, int q) {
    validate(X);
    std::vector<int> c(X.k.size());
    for (std::size_t i = 0; i < X.k.size(); ++i)
        c[i] = q * X.k[i];
    return c;
}

std::vector<int> canonical_twist(const SegreVeronese& X) {
    validate(X);
    std::vector<int> c(X.n.size());
    for (std::size_t i = 0; i < X.n.size(); ++i)
        c[i] = -X.n[i] - 1;
    return c;
}

BoxAtom line_atom(const SegreVeronese& X, const std::vector<int>& c) {
    validate(X);
    if (c.size() != X.n.size())
        throw DomainError("line_atom: twist tuple length does not match factor count");
    BoxAtom a;
    a.factors.reserve(X.n.size());
    for (std::size_t i = 0; i < X.n.size(); ++i)
        a.factors.push_back(FactorSheaf{X.n[i], 0, c[i]});
    return a;
}

BoxAtom collection_atom(const SegreVeronese& X, const std::vector<int>& a) {
    validate(X);
    if (a.size() != X.n.size())
        throw DomainError("collection_atom: index tuple length does not match factor count");
    BoxAtom out;
    out.factors.reserve(X.n.size());
    for (std::size_t i = 0; i < X.n.size(); ++i) {
        if (a[i] < 0 || a[i] > X.n[i])
            throw DomainError("collection_atom: index out of range in slot " +
                              std::to_string(i));
        out.factors.push_back(FactorSheaf{X.n[i], a[i], a[i]});
    }
    return out;
}

SegreVeronese product(const SegreVeronese& A, const SegreVeronese& B) {
    validate(A);
    validate(B);
    SegreVeronese X;
    X.n = A.n;
    X.n.insert(X.n.end(), B.n.begin(), B.n.end());
    X.k = A.k;
    X.k.insert(X.k.end(), B.k.begin(), B.k.end());
    return X;
}

static void tuples_rec(const SegreVeronese& X, int w, std::size_t slot,
                       std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (slot == X.n.size()) {
        if (w == 0)
            out.push_back(cur);
        return;
    }
    for (int a = 0; a <= std::min(w, X.n[slot]); ++a) {
        cur.push_back(a);
        tuples_rec(X, w - a, slot + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> weight_tuples(const SegreVeronese& X, int w) {
    validate(X);
    std::vector<std::vector<int>> out;
    if (w < 0 || w > X.dim())
        return out;
    std::vector<int> cur;
    tuples_rec(X, w, 0, cur, out);
    return out;
}

std::vector<CollectionEntry> dual_collection(const SegreVeronese& X) {
    validate(X);
    std::vector<CollectionEntry> out;
    for (int w = 0; w <= X.dim(); ++w) {
        for (const auto& a : weight_tuples(X, w)) {
            CollectionEntry e;
            e.a = a;
            e.weight = w;
            e.atom = collection_atom(X, a);
            out.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace sv
