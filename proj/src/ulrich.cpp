#include "sv/ulrich.hpp"

#include <algorithm>

namespace sv {

UlrichCertificate ulrich_certificate(const SegreVeronese& X, const FormalSheaf& V) {
    validate(X);
    if (V.is_zero())
        throw DomainError("ulrich_certificate: zero sheaf");
    for (const auto& [atom, mult] : V.terms) {
        (void)mult;
        if (atom.factors.size() != X.n.size())
            throw DomainError("ulrich_certificate: sheaf factor count does not match variety");
        for (std::size_t i = 0; i < atom.factors.size(); ++i)
            if (atom.factors[i].n != X.n[i])
                throw DomainError("ulrich_certificate: factor dimension mismatch in slot " +
                                  std::to_string(i));
    }

    const int d = X.dim();
    UlrichCertificate cert;
    cert.rank = rank(V);
    cert.degree = degree(X);
    cert.degree_rank_product = checked_mul(cert.rank, cert.degree);
    cert.h0 = kunneth_cohomology(V)[0];

    cert.verdict = true;
    for (int t = 1; t <= d; ++t) {
        CohomologyVector hv = kunneth_cohomology(twist(V, h_twist(X, -t)));
        if (!hv.is_zero() && cert.verdict) {
            cert.verdict = false;
            for (int i = 0; i <= d; ++i)
                if (hv[i] != 0) {
                    cert.witness = UlrichWitness{t, i, hv[i]};
                    break;
                }
        }
        cert.table.push_back(std::move(hv));
    }
    return cert;
}

bool is_ulrich(const SegreVeronese& X, const FormalSheaf& V) {
    return ulrich_certificate(X, V).verdict;
}

std::vector<std::vector<int>> classify_ulrich_lines(const SegreVeronese& X) {
    validate(X);
    const int s = X.s();
    const int d = X.dim();
    std::vector<int> hi(s);
    for (int i = 0; i < s; ++i)
        hi[i] = d * X.k[i] + X.n[i];

    std::vector<std::vector<int>> found;
    std::vector<int> a(s, 0);
    while (true) {
        if (is_ulrich(X, FormalSheaf::atom(line_atom(X, a)))) {
            for (int i = 0; i < s; ++i)
                if (a[i] == hi[i])
                    throw SearchBoundError(
                        "classify_ulrich_lines: Ulrich bundle found on the search boundary; "
                        "the twist window is too small");
            found.push_back(a);
        }
        int slot = s - 1;
        while (slot >= 0 && a[slot] == hi[slot])
            a[slot--] = 0;
        if (slot < 0)
            break;
        ++a[slot];
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<BoxAtom> classify_ulrich_omega_boxes(const SegreVeronese& X) {
    validate(X);
    if (X.s() != 2)
        throw DomainError("classify_ulrich_omega_boxes: defined for two-factor varieties");
    const int d = X.dim();
    const int n1 = X.n[0], n2 = X.n[1];

    std::vector<BoxAtom> found;
    for (int a = 0; a <= n1; ++a) {
        const int lo1 = a - n1, hi1 = a + d * X.k[0] + n1;
        for (int b = 0; b <= n2; ++b) {
            const int lo2 = b - n2, hi2 = b + d * X.k[1] + n2;
            for (int l = lo1; l <= hi1; ++l)
                for (int t = lo2; t <= hi2; ++t) {
                    BoxAtom atom{{FactorSheaf{n1, a, l}, FactorSheaf{n2, b, t}}};
                    if (!is_ulrich(X, FormalSheaf::atom(atom)))
                        continue;
                    if (l == lo1 || l == hi1 || t == lo2 || t == hi2)
                        throw SearchBoundError(
                            "classify_ulrich_omega_boxes: Ulrich bundle found on the search "
                            "boundary; the twist window is too small");
                    found.push_back(line_normal_form(atom));
                }
        }
    }
    std::sort(found.begin(), found.end(), atom_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

FormalSheaf pullback_ulrich(const SegreVeronese& XE, const FormalSheaf& E,
                            const SegreVeronese& XF, const FormalSheaf& F,
                            PullbackSide side) {
    if (!is_ulrich(XE, E))
        throw DomainError("pullback_ulrich: first input is not Ulrich on its variety");
    if (!is_ulrich(XF, F))
        throw DomainError("pullback_ulrich: second input is not Ulrich on its variety");
    FormalSheaf left = E, right = F;
    if (side == PullbackSide::Left)
        left = twist(E, h_twist(XE, XF.dim()));
    else
        right = twist(F, h_twist(XF, XE.dim()));
    FormalSheaf result = box_product(left, right);
    if (!is_ulrich(product(XE, XF), result))
        throw Error("pullback_ulrich: constructed bundle failed the Ulrich check on the "
                    "product (internal error)");
    return result;
}

FormalSheaf pullback_ulrich(const SegreVeronese& XE, const FormalSheaf& E) {
    if (!is_ulrich(XE, E))
        throw DomainError("pullback_ulrich: input is not Ulrich on its variety");
    return E;
}

RegularityReport verify_regularity(const SegreVeronese& X, const FormalSheaf& V, int grid) {
    validate(X);
    if (grid < 0)
        throw DomainError("verify_regularity: grid bound must be >= 0");
    if (!is_ulrich(X, V))
        throw DomainError("verify_regularity: input is not Ulrich");

    const int s = X.s();
    const int d = X.dim();
    RegularityReport rep;

    // Decorations with line twists +-j_r everywhere and an interior form in
    // at most one slot; slot -1 encodes the pure line-twist decoration.
    auto check_decorations = [&](bool upper) {
        std::vector<int> j(s, 0);
        while (true) {
            for (int slot = -1; slot < s; ++slot) {
                if (slot >= 0 && X.n[slot] < 2)
                    continue; // no interior form indices on P^1
                const int a_lo = (slot < 0) ? 0 : 1;
                const int a_hi = (slot < 0) ? 0 : X.n[slot] - 1;
                for (int a = a_lo; a <= a_hi; ++a) {
                    BoxAtom deco;
                    deco.factors.reserve(s);
                    for (int r = 0; r < s; ++r) {
                        if (r == slot)
                            deco.factors.push_back(FactorSheaf{
                                X.n[r], a, upper ? a + 1 + j[r] : a - j[r]});
                        else
                            deco.factors.push_back(
                                FactorSheaf{X.n[r], 0, upper ? j[r] : -j[r]});
                    }
                    const int i_lo = upper ? 1 : 0;
                    const int i_hi = upper ? d : d - 1;
                    for (int i = i_lo; i <= i_hi; ++i) {
                        const int tw = upper ? i : i + 1;
                        CohomologyVector hv =
                            tensor_cohomology(twist(V, h_twist(X, -tw)), deco);
                        rep.checks = checked_add(rep.checks, 1);
                        if (hv[i] != 0) {
                            rep.passed = false;
                            rep.violations.push_back(
                                RegularityViolation{upper, i, deco, hv[i]});
                        }
                    }
                }
            }
            int r = s - 1;
            while (r >= 0 && j[r] == grid)
                j[r--] = 0;
            if (r < 0)
                break;
            ++j[r];
        }
    };
    check_decorations(true);
    check_decorations(false);
    return rep;
}

} // namespace sv
