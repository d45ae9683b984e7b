#include "sv/sheaf.hpp"

#include <algorithm>
#include <string>

namespace sv {

void validate(const BoxAtom& a) {
    if (a.factors.empty())
        throw DomainError("BoxAtom: needs at least one factor");
    for (const FactorSheaf& f : a.factors)
        validate(f);
}

static void require_same_profile(const BoxAtom& a, const BoxAtom& b, const char* who) {
    if (a.factors.size() != b.factors.size())
        throw DomainError(std::string(who) + ": different number of factors");
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].n != b.factors[i].n)
            throw DomainError(std::string(who) + ": factor dimensions differ in slot " +
                              std::to_string(i));
}

bool atom_less(const BoxAtom& a, const BoxAtom& b) {
    require_same_profile(a, b, "atom_less");
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (a.factors[i] == b.factors[i])
            continue;
        return factor_less(a.factors[i], b.factors[i]);
    }
    return false;
}

Int rank(const BoxAtom& a) {
    validate(a);
    Int r = 1;
    for (const FactorSheaf& f : a.factors)
        r = checked_mul(r, factor_rank(f));
    return r;
}

int total_dim(const BoxAtom& a) {
    validate(a);
    int d = 0;
    for (const FactorSheaf& f : a.factors)
        d += f.n;
    return d;
}

BoxAtom twist(const BoxAtom& a, const std::vector<int>& c) {
    validate(a);
    if (c.size() != a.factors.size())
        throw DomainError("twist: tuple length does not match number of factors");
    BoxAtom out = a;
    for (std::size_t i = 0; i < out.factors.size(); ++i)
        out.factors[i].t += c[i];
    return out;
}

BoxAtom line_normal_form(const BoxAtom& a) {
    BoxAtom out = a;
    for (FactorSheaf& f : out.factors)
        f = line_normal_form(f);
    return out;
}

CohomologyVector kunneth_cohomology(const BoxAtom& a) {
    validate(a);
    CohomologyVector v = bott_cohomology(a.factors[0]);
    for (std::size_t i = 1; i < a.factors.size(); ++i)
        v = convolve(v, bott_cohomology(a.factors[i]));
    return v;
}

FormalSheaf FormalSheaf::atom(BoxAtom a, Int mult) {
    validate(a);
    if (mult < 0)
        throw DomainError("FormalSheaf: negative multiplicity");
    FormalSheaf s;
    if (mult > 0)
        s.terms.emplace_back(std::move(a), mult);
    return s;
}

FormalSheaf add(const FormalSheaf& a, const FormalSheaf& b) {
    // merge two canonical term lists
    FormalSheaf out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && atom_less(a.terms[i].first, b.terms[j].first))) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || atom_less(b.terms[j].first, a.terms[i].first)) {
            out.terms.push_back(b.terms[j++]);
        } else {
            out.terms.emplace_back(a.terms[i].first,
                                   checked_add(a.terms[i].second, b.terms[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

FormalSheaf scale(const FormalSheaf& a, Int m) {
    if (m < 0)
        throw DomainError("scale: negative multiplicity");
    if (m == 0)
        return FormalSheaf::zero();
    FormalSheaf out = a;
    for (auto& [atom, mult] : out.terms)
        mult = checked_mul(mult, m);
    return out;
}

FormalSheaf twist(const FormalSheaf& a, const std::vector<int>& c) {
    FormalSheaf out;
    for (const auto& [atom, mult] : a.terms)
        out.terms.emplace_back(twist(atom, c), mult);
    // twisting preserves the canonical order (it shifts every t equally),
    // so no re-sort is needed; assert in debug builds only.
    return out;
}

Int rank(const FormalSheaf& a) {
    Int r = 0;
    for (const auto& [atom, mult] : a.terms)
        r = checked_add(r, checked_mul(mult, rank(atom)));
    return r;
}

CohomologyVector kunneth_cohomology(const FormalSheaf& a) {
    if (a.terms.empty())
        throw DomainError("kunneth_cohomology: zero sheaf has no ambient dimension");
    CohomologyVector v(total_dim(a.terms[0].first));
    for (const auto& [atom, mult] : a.terms)
        v.add_scaled(kunneth_cohomology(atom), mult);
    return v;
}

BoxAtom box_concat(const BoxAtom& a, const BoxAtom& b) {
    validate(a);
    validate(b);
    BoxAtom out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

FormalSheaf box_product(const FormalSheaf& a, const FormalSheaf& b) {
    FormalSheaf out;
    for (const auto& [aa, ma] : a.terms)
        for (const auto& [bb, mb] : b.terms)
            out = add(out, FormalSheaf::atom(box_concat(aa, bb), checked_mul(ma, mb)));
    return out;
}

static FactorSheaf factor_tensor(const FactorSheaf& f0, const FactorSheaf& g0, std::size_t slot) {
    const FactorSheaf f = line_normal_form(f0);
    const FactorSheaf g = line_normal_form(g0);
    if (f.p == 0)
        return FactorSheaf{g.n, g.p, g.t + f.t};
    if (g.p == 0)
        return FactorSheaf{f.n, f.p, f.t + g.t};
    throw NotRepresentableError(
        "tensor product of two interior form bundles in slot " + std::to_string(slot) +
        " has no box-atom representative; use tensor_cohomology for its dimensions");
}

BoxAtom atom_tensor(const BoxAtom& a, const BoxAtom& b) {
    require_same_profile(a, b, "atom_tensor");
    BoxAtom out;
    out.factors.reserve(a.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        out.factors.push_back(factor_tensor(a.factors[i], b.factors[i], i));
    return out;
}

FormalSheaf sheaf_tensor_atom(const FormalSheaf& a, const BoxAtom& b) {
    FormalSheaf out;
    for (const auto& [atom, mult] : a.terms)
        out = add(out, FormalSheaf::atom(atom_tensor(atom, b), mult));
    return out;
}

CohomologyVector tensor_cohomology(const BoxAtom& a, const BoxAtom& b) {
    require_same_profile(a, b, "tensor_cohomology");
    CohomologyVector v = factor_tensor_cohomology(a.factors[0], b.factors[0]);
    for (std::size_t i = 1; i < a.factors.size(); ++i)
        v = convolve(v, factor_tensor_cohomology(a.factors[i], b.factors[i]));
    return v;
}

CohomologyVector tensor_cohomology(const FormalSheaf& a, const BoxAtom& b) {
    CohomologyVector v(total_dim(b));
    for (const auto& [atom, mult] : a.terms)
        v.add_scaled(tensor_cohomology(atom, b), mult);
    return v;
}

} // namespace sv
