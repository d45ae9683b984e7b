#include "sv/render.hpp"

#include "sv/expr.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace sv {

namespace {

using json = nlohmann::ordered_json;

json envelope(const char* command, const SegreVeronese& X) {
    json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["variety"] = {{"n", X.n}, {"k", X.k}};
    return j;
}

void dump(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

std::string tuple_text(const std::vector<int>& a, char sep = ',') {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        out += (i ? std::string(1, sep) : "") + std::to_string(a[i]);
    return out + ")";
}

std::string tuple_field(const std::vector<int>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out += (i ? " " : "") + std::to_string(a[i]);
    return out;
}

// O(-a_1,...,-a_s)^mult in surface syntax.
std::string term_text(const SegreVeronese& X, const std::vector<int>& tuple, Int mult) {
    std::vector<int> c(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i)
        c[i] = -tuple[i];
    std::string atom = print_atom(line_atom(X, c));
    if (X.s() > 1)
        atom = "(" + atom + ")";
    return atom + "^" + std::to_string(mult);
}

std::string group_text(const SegreVeronese& X, const TermGroup& g) {
    std::string out;
    for (std::size_t i = 0; i < g.parts.size(); ++i) {
        if (i)
            out += " + ";
        out += term_text(X, g.parts[i].first, g.parts[i].second);
    }
    return out.empty() ? "0" : out;
}

json group_json(const TermGroup& g) {
    json parts = json::array();
    for (const auto& [tuple, mult] : g.parts)
        parts.push_back({{"tuple", tuple}, {"multiplicity", mult}});
    return {{"weight", g.weight}, {"rank", g.rank}, {"parts", parts}};
}

void group_csv(std::ostream& os, const char* section, const TermGroup& g) {
    for (const auto& [tuple, mult] : g.parts)
        os << section << "," << g.weight << "," << tuple_field(tuple) << "," << mult
           << "\n";
}

void header(std::ostream& os, const SegreVeronese& X, const FormalSheaf* V) {
    os << "variety: " << print_variety(X) << "\n";
    if (V)
        os << "sheaf:   " << print_sheaf(*V) << "\n";
}

} // namespace

void render_cohom(std::ostream& os, Format f, const SegreVeronese& X,
                  const FormalSheaf& V, const std::vector<int>& twist_applied,
                  const CohomologyVector& hv) {
    switch (f) {
    case Format::Text:
        header(os, X, &V);
        os << "twist:   " << tuple_text(twist_applied) << "\n";
        for (int q = 0; q <= hv.dim(); ++q)
            os << "h^" << q << " = " << hv[q] << "\n";
        os << "chi = " << hv.chi() << "\n";
        return;
    case Format::Json: {
        json j = envelope("cohom", X);
        j["sheaf"] = print_sheaf(V);
        j["twist"] = twist_applied;
        j["h"] = hv.h;
        j["chi"] = hv.chi();
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "q,h\n";
        for (int q = 0; q <= hv.dim(); ++q)
            os << q << "," << hv[q] << "\n";
        return;
    }
}

void render_certificate(std::ostream& os, Format f, const SegreVeronese& X,
                        const FormalSheaf& V, const UlrichCertificate& cert) {
    switch (f) {
    case Format::Text: {
        header(os, X, &V);
        os << "rank = " << cert.rank << ", degree = " << cert.degree
           << ", rank*degree = " << cert.degree_rank_product << ", h^0 = " << cert.h0
           << "\n";
        for (std::size_t t = 0; t < cert.table.size(); ++t) {
            os << "V(-" << (t + 1) << "h): (";
            for (int q = 0; q <= cert.table[t].dim(); ++q)
                os << (q ? "," : "") << cert.table[t][q];
            os << ")\n";
        }
        if (cert.verdict)
            os << "verdict: Ulrich\n";
        else
            os << "verdict: not Ulrich (h^" << cert.witness->degree << "(V(-"
               << cert.witness->twist << "h)) = " << cert.witness->dimension << ")\n";
        return;
    }
    case Format::Json: {
        json j = envelope("ulrich-check", X);
        j["sheaf"] = print_sheaf(V);
        j["rank"] = cert.rank;
        j["degree"] = cert.degree;
        j["degree_rank_product"] = cert.degree_rank_product;
        j["h0"] = cert.h0;
        j["ulrich"] = cert.verdict;
        if (cert.witness)
            j["witness"] = {{"twist", cert.witness->twist},
                            {"degree", cert.witness->degree},
                            {"dimension", cert.witness->dimension}};
        else
            j["witness"] = nullptr;
        json table = json::array();
        for (const CohomologyVector& row : cert.table)
            table.push_back(row.h);
        j["table"] = table;
        dump(os, j);
        return;
    }
    case Format::Csv: {
        os << "twist";
        const int d = X.dim();
        for (int q = 0; q <= d; ++q)
            os << ",h" << q;
        os << "\n";
        for (std::size_t t = 0; t < cert.table.size(); ++t) {
            os << (t + 1);
            for (int q = 0; q <= cert.table[t].dim(); ++q)
                os << "," << cert.table[t][q];
            os << "\n";
        }
        return;
    }
    }
}

void render_lines(std::ostream& os, Format f, const SegreVeronese& X,
                  const std::vector<std::vector<int>>& tuples) {
    switch (f) {
    case Format::Text:
        header(os, X, nullptr);
        os << "ulrich line bundles: " << tuples.size() << "\n";
        for (const auto& a : tuples)
            os << "  " << print_atom(line_atom(X, a)) << "\n";
        return;
    case Format::Json: {
        json j = envelope("classify-lines", X);
        j["count"] = tuples.size();
        json entries = json::array();
        for (const auto& a : tuples)
            entries.push_back({{"tuple", a}, {"sheaf", print_atom(line_atom(X, a))}});
        j["entries"] = entries;
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "sheaf,tuple\n";
        for (const auto& a : tuples)
            os << print_atom(line_atom(X, a)) << "," << tuple_field(a) << "\n";
        return;
    }
}

void render_omega(std::ostream& os, Format f, const SegreVeronese& X,
                  const std::vector<BoxAtom>& atoms) {
    switch (f) {
    case Format::Text:
        header(os, X, nullptr);
        os << "ulrich box bundles: " << atoms.size() << "\n";
        for (const BoxAtom& a : atoms)
            os << "  " << print_atom(a) << "\n";
        return;
    case Format::Json: {
        json j = envelope("classify-omega", X);
        j["count"] = atoms.size();
        json entries = json::array();
        for (const BoxAtom& a : atoms) {
            json factors = json::array();
            for (const FactorSheaf& g : a.factors)
                factors.push_back({{"a", g.p}, {"t", g.t}});
            entries.push_back({{"factors", factors}, {"sheaf", print_atom(a)}});
        }
        j["entries"] = entries;
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "sheaf\n";
        for (const BoxAtom& a : atoms)
            os << print_atom(a) << "\n";
        return;
    }
}

void render_alpha(std::ostream& os, Format f, const AlphaTable& T) {
    const int d = T.X.dim();
    switch (f) {
    case Format::Text: {
        header(os, T.X, &T.V);
        os << "natural: " << (T.natural ? "yes" : "no") << "\n";
        std::vector<std::size_t> width(T.tuples.size());
        std::vector<std::string> labels(T.tuples.size());
        for (std::size_t c = 0; c < T.tuples.size(); ++c) {
            labels[c] = tuple_text(T.tuples[c]);
            width[c] = labels[c].size();
            for (int i = 0; i <= d; ++i)
                width[c] = std::max(
                    width[c],
                    std::to_string(T.alpha[static_cast<std::size_t>(i)][c]).size());
        }
        const std::string row_head = "alpha_" + std::to_string(d);
        os << std::string(row_head.size(), ' ');
        for (std::size_t c = 0; c < T.tuples.size(); ++c)
            os << "  " << std::setw(static_cast<int>(width[c])) << labels[c];
        os << "\n";
        for (int i = 0; i <= d; ++i) {
            std::string head = "alpha_" + std::to_string(i);
            os << head << std::string(row_head.size() - head.size(), ' ');
            for (std::size_t c = 0; c < T.tuples.size(); ++c)
                os << "  " << std::setw(static_cast<int>(width[c]))
                   << T.alpha[static_cast<std::size_t>(i)][c];
            os << "\n";
        }
        return;
    }
    case Format::Json: {
        json j = envelope("alpha-table", T.X);
        j["sheaf"] = print_sheaf(T.V);
        j["natural"] = T.natural;
        j["tuples"] = T.tuples;
        j["alpha"] = T.alpha;
        dump(os, j);
        return;
    }
    case Format::Csv: {
        os << "i";
        for (const auto& a : T.tuples)
            os << ",a_" << [&] {
                std::string s;
                for (std::size_t i = 0; i < a.size(); ++i)
                    s += (i ? "_" : "") + std::to_string(a[i]);
                return s;
            }();
        os << "\n";
        for (int i = 0; i <= d; ++i) {
            os << i;
            for (std::size_t c = 0; c < T.tuples.size(); ++c)
                os << "," << T.alpha[static_cast<std::size_t>(i)][c];
            os << "\n";
        }
        return;
    }
    }
}

void render_resolution(std::ostream& os, Format f, const AlphaTable& T,
                       const ResolutionShape& shape, bool chi_ok) {
    const int d = T.X.dim();
    switch (f) {
    case Format::Text: {
        header(os, T.X, &T.V);
        os << "q = " << shape.q << "\n";
        std::string line = "0 -> ";
        if (shape.q == d)
            line += "V(-" + std::to_string(d) + "h) -> ";
        for (const TermGroup& g : shape.terms)
            line += group_text(T.X, g) + " -> ";
        if (shape.q == 0)
            line += "V -> ";
        else if (shape.q == 1)
            line += "V(-h) -> ";
        line += "0";
        os << "complex: " << line << "\n";
        for (const TermGroup& g : shape.terms)
            os << "  weight " << g.weight << ": " << group_text(T.X, g) << "  (rank "
               << g.rank << ")\n";
        os << "chi-consistent: " << (chi_ok ? "yes" : "no") << "\n";
        return;
    }
    case Format::Json: {
        json j = envelope("resolution", T.X);
        j["sheaf"] = print_sheaf(T.V);
        j["q"] = shape.q;
        j["chi_consistent"] = chi_ok;
        json terms = json::array();
        for (const TermGroup& g : shape.terms)
            terms.push_back(group_json(g));
        j["terms"] = terms;
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "section,weight,tuple,multiplicity\n";
        for (const TermGroup& g : shape.terms)
            group_csv(os, "terms", g);
        return;
    }
}

void render_monad(std::ostream& os, Format f, const AlphaTable& T,
                  const MonadShape& shape, bool chi_ok) {
    switch (f) {
    case Format::Text: {
        header(os, T.X, &T.V);
        os << "q = " << shape.q << "\n";
        os << "monad: 0 -> B1 -> M -> B2 -> 0 with homology V(-" << shape.q << "h)\n";
        for (const TermGroup& g : shape.b1_chain)
            os << "  B1 weight " << g.weight << ": " << group_text(T.X, g) << "  (rank "
               << g.rank << ")\n";
        os << "  M  weight " << shape.middle.weight << ": " << group_text(T.X, shape.middle)
           << "  (rank " << shape.middle.rank << ")\n";
        for (const TermGroup& g : shape.b2_chain)
            os << "  B2 weight " << g.weight << ": " << group_text(T.X, g) << "  (rank "
               << g.rank << ")\n";
        os << "chi-consistent: " << (chi_ok ? "yes" : "no") << "\n";
        return;
    }
    case Format::Json: {
        json j = envelope("monad", T.X);
        j["sheaf"] = print_sheaf(T.V);
        j["q"] = shape.q;
        j["chi_consistent"] = chi_ok;
        json b1 = json::array(), b2 = json::array();
        for (const TermGroup& g : shape.b1_chain)
            b1.push_back(group_json(g));
        for (const TermGroup& g : shape.b2_chain)
            b2.push_back(group_json(g));
        j["b1"] = b1;
        j["middle"] = group_json(shape.middle);
        j["b2"] = b2;
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "section,weight,tuple,multiplicity\n";
        for (const TermGroup& g : shape.b1_chain)
            group_csv(os, "b1", g);
        group_csv(os, "middle", shape.middle);
        for (const TermGroup& g : shape.b2_chain)
            group_csv(os, "b2", g);
        return;
    }
}

void render_regularity(std::ostream& os, Format f, const SegreVeronese& X,
                       const FormalSheaf& V, int grid, const RegularityReport& rep) {
    switch (f) {
    case Format::Text:
        header(os, X, &V);
        os << "grid: 0.." << grid << "\n";
        os << "checks: " << rep.checks << "\n";
        for (const RegularityViolation& v : rep.violations)
            os << "  violation: " << (v.upper ? "upper" : "lower") << " h^" << v.degree
               << " with " << print_atom(v.decoration) << " = " << v.value << "\n";
        os << "passed: " << (rep.passed ? "yes" : "no") << "\n";
        return;
    case Format::Json: {
        json j = envelope("regularity", X);
        j["sheaf"] = print_sheaf(V);
        j["grid"] = grid;
        j["passed"] = rep.passed;
        j["checks"] = rep.checks;
        json viols = json::array();
        for (const RegularityViolation& v : rep.violations)
            viols.push_back({{"variant", v.upper ? "upper" : "lower"},
                             {"degree", v.degree},
                             {"decoration", print_atom(v.decoration)},
                             {"value", v.value}});
        j["violations"] = viols;
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "variant,degree,decoration,value\n";
        for (const RegularityViolation& v : rep.violations)
            os << (v.upper ? "upper" : "lower") << "," << v.degree << ","
               << print_atom(v.decoration) << "," << v.value << "\n";
        return;
    }
}

void render_variety_info(std::ostream& os, Format f, const SegreVeronese& X) {
    const Int deg = degree(X);
    const std::vector<int> can = canonical_twist(X);
    const std::size_t csize = dual_collection(X).size();
    switch (f) {
    case Format::Text:
        header(os, X, nullptr);
        os << "factors: " << X.s() << "\n";
        os << "dim = " << X.dim() << "\n";
        os << "degree = " << deg << "\n";
        os << "canonical twist: " << tuple_text(can) << "\n";
        os << "collection size: " << csize << "\n";
        return;
    case Format::Json: {
        json j = envelope("variety-info", X);
        j["factors"] = X.s();
        j["dim"] = X.dim();
        j["degree"] = deg;
        j["canonical"] = can;
        j["collection_size"] = csize;
        dump(os, j);
        return;
    }
    case Format::Csv:
        os << "key,value\n";
        os << "factors," << X.s() << "\n";
        os << "dim," << X.dim() << "\n";
        os << "degree," << deg << "\n";
        os << "canonical," << tuple_field(can) << "\n";
        os << "collection_size," << csize << "\n";
        return;
    }
}

} // namespace sv
