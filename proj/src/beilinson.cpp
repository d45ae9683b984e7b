#include "sv/beilinson.hpp"

#include <algorithm>

namespace sv {

AlphaTable alpha_table(const SegreVeronese& X, const FormalSheaf& V) {
    validate(X);
    const int d = X.dim();
    AlphaTable T;
    T.X = X;
    T.V = V;
    for (const CollectionEntry& e : dual_collection(X))
        T.tuples.push_back(e.a);
    T.alpha.assign(static_cast<std::size_t>(d) + 1,
                   std::vector<Int>(T.tuples.size(), 0));
    T.natural = true;
    for (int i = 0; i <= d; ++i) {
        const FormalSheaf Vi = twist(V, h_twist(X, -i));
        for (std::size_t col = 0; col < T.tuples.size(); ++col) {
            const CohomologyVector hv =
                tensor_cohomology(Vi, collection_atom(X, T.tuples[col]));
            T.alpha[static_cast<std::size_t>(i)][col] = hv[i];
            for (int k = 0; k <= d; ++k)
                if (k != i && hv[k] != 0)
                    T.natural = false;
        }
    }
    return T;
}

Int alpha_entry(const AlphaTable& T, int i, const std::vector<int>& tuple) {
    if (i < 0 || i > T.X.dim())
        throw DomainError("alpha_entry: row out of range");
    auto it = std::find(T.tuples.begin(), T.tuples.end(), tuple);
    if (it == T.tuples.end())
        throw DomainError("alpha_entry: unknown collection tuple");
    return T.alpha[static_cast<std::size_t>(i)]
                  [static_cast<std::size_t>(it - T.tuples.begin())];
}

static int tuple_weight(const std::vector<int>& a) {
    int w = 0;
    for (int x : a)
        w += x;
    return w;
}

static Int alt_sign(int e) { return (((e % 2) + 2) % 2 == 0) ? 1 : -1; }

static TermGroup weight_group(const AlphaTable& T, int q, int w) {
    TermGroup g;
    g.weight = w;
    const auto& row = T.alpha[static_cast<std::size_t>(q)];
    for (std::size_t col = 0; col < T.tuples.size(); ++col) {
        if (tuple_weight(T.tuples[col]) != w || row[col] == 0)
            continue;
        g.parts.emplace_back(T.tuples[col], row[col]);
        g.rank = checked_add(g.rank, row[col]);
    }
    return g;
}

ResolutionShape build_resolution(const AlphaTable& T, int q) {
    const int d = T.X.dim();
    if (q != 0 && q != 1 && q != d)
        throw DomainError("build_resolution: q must be 0, 1, or the variety dimension");
    if (!T.natural)
        throw DomainError("build_resolution: table is not natural");
    ResolutionShape shape;
    shape.q = q;
    Int alt = 0;
    for (int w = d; w >= (q == 0 ? 0 : 1); --w) {
        TermGroup g = weight_group(T, q, w);
        alt = checked_add(alt, checked_mul(alt_sign(w - q), g.rank));
        if (!g.parts.empty())
            shape.terms.push_back(std::move(g));
    }
    if (alt != rank(T.V))
        throw Error("build_resolution: alternating rank sum does not match the sheaf rank "
                    "(internal error)");
    return shape;
}

MonadShape build_monad(const AlphaTable& T, int q) {
    const int d = T.X.dim();
    if (q <= 1 || q >= d)
        throw DomainError("build_monad: q must satisfy 1 < q < dim");
    if (!T.natural)
        throw DomainError("build_monad: table is not natural");
    MonadShape shape;
    shape.q = q;
    Int alt = 0;
    for (int w = d; w >= 1; --w) {
        TermGroup g = weight_group(T, q, w);
        alt = checked_add(alt, checked_mul(alt_sign(w - q), g.rank));
        if (w == q)
            shape.middle = std::move(g);
        else if (!g.parts.empty()) {
            if (w > q)
                shape.b1_chain.push_back(std::move(g));
            else
                shape.b2_chain.push_back(std::move(g));
        }
    }
    if (alt != rank(T.V))
        throw Error("build_monad: alternating rank sum does not match the sheaf rank "
                    "(internal error)");
    return shape;
}

bool chi_consistency(const AlphaTable& T, int q, const std::vector<TermGroup>& groups) {
    const int d = T.X.dim();
    const int s = T.X.s();
    for (int t = -d - 2; t <= d + 2; ++t) {
        Int lhs = 0;
        for (const TermGroup& g : groups) {
            const Int sign = alt_sign(g.weight - q);
            for (const auto& [tuple, mult] : g.parts) {
                std::vector<int> c = h_twist(T.X, t);
                for (int r = 0; r < s; ++r)
                    c[static_cast<std::size_t>(r)] -= tuple[static_cast<std::size_t>(r)];
                const Int chi = kunneth_cohomology(line_atom(T.X, c)).chi();
                lhs = checked_add(lhs, checked_mul(sign, checked_mul(mult, chi)));
            }
        }
        const Int rhs =
            T.V.is_zero() ? 0
                          : kunneth_cohomology(twist(T.V, h_twist(T.X, t - q))).chi();
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool chi_consistency(const AlphaTable& T, const ResolutionShape& shape) {
    return chi_consistency(T, shape.q, shape.terms);
}

bool chi_consistency(const AlphaTable& T, const MonadShape& shape) {
    std::vector<TermGroup> groups = shape.b1_chain;
    if (!shape.middle.parts.empty())
        groups.push_back(shape.middle);
    groups.insert(groups.end(), shape.b2_chain.begin(), shape.b2_chain.end());
    return chi_consistency(T, shape.q, groups);
}

CriteriaReport evaluate_criteria(const SegreVeronese& X, const FormalSheaf& V) {
    validate(X);
    if (X.s() != 2)
        throw DomainError("evaluate_criteria: defined for two-factor varieties");
    const int n1 = X.n[0], n2 = X.n[1];
    const int k1 = X.k[0], k2 = X.k[1];

    CriteriaReport rep;
    rep.ulrich = is_ulrich(X, V);

    // alpha_i at one collection tuple, without materializing the whole table
    auto alpha_at = [&](int i, const std::vector<int>& a) {
        return tensor_cohomology(twist(V, h_twist(X, -i)), collection_atom(X, a))[i];
    };
    // h^1 of V(-h) ⊗ O(c1, c2)
    auto h1_probe = [&](int c1, int c2) {
        return kunneth_cohomology(twist(V, {c1 - k1, c2 - k2}))[1];
    };

    {
        CriterionEvaluation e;
        e.id = "weight2-row1-vanishing";
        e.conclusion = "k_2 = 1 and V = O(k_1-1, 1)";
        e.applicable = (n1 >= 2 && n2 >= 2);
        if (e.applicable) {
            e.values = {alpha_at(1, {0, 2}), alpha_at(1, {1, 1})};
            e.holds = (e.values[0] == 0 && e.values[1] == 0);
        }
        rep.entries.push_back(std::move(e));
    }
    {
        CriterionEvaluation e;
        e.id = "scroll-h1-probe";
        const bool right_line = (n2 == 1 && n1 >= 2);
        const bool left_line = (n1 == 1 && n2 >= 2);
        e.applicable = right_line || left_line;
        if (right_line) {
            e.conclusion = "V = O(2k_1-1, k_2-1)";
            e.values = {h1_probe(-k1, -1), h1_probe(-k1 + 1, -1), h1_probe(-1, 0)};
        } else if (left_line) {
            e.conclusion = "V = O(k_1-1, 2k_2-1)";
            e.values = {h1_probe(-1, -k2), h1_probe(-1, -k2 + 1), h1_probe(0, -1)};
        }
        if (e.applicable)
            e.holds = (e.values[0] == 0);
        rep.entries.push_back(std::move(e));
    }
    {
        CriterionEvaluation e;
        e.id = "middle-row-adjacent";
        e.conclusion = "k = (1,1) and V = O(0, n_1) (up to factor swap when n_1 = n_2)";
        e.applicable = (n1 >= 2 && n2 >= 2);
        if (e.applicable) {
            e.holds = true;
            for (int w : {n1 - 1, n1 + 1})
                for (const auto& a : weight_tuples(X, w)) {
                    e.values.push_back(alpha_at(n1, a));
                    if (e.values.back() != 0)
                        e.holds = false;
                }
        }
        rep.entries.push_back(std::move(e));
    }
    {
        CriterionEvaluation e;
        e.id = "factor-pullback-detection";
        e.conclusion = "V = E(n_2 k_1) x O with E Ulrich on the first factor";
        e.applicable = (k2 == 1 && n2 >= 2);
        if (e.applicable) {
            e.holds = true;
            for (const auto& a : weight_tuples(X, n2 + 1)) {
                e.values.push_back(alpha_at(n2, a));
                if (e.values.back() != 0)
                    e.holds = false;
            }
            for (const auto& a : weight_tuples(X, n2)) {
                if (a[0] <= 1)
                    continue;
                e.values.push_back(alpha_at(n2, a));
                if (e.values.back() != 0)
                    e.holds = false;
            }
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace sv
