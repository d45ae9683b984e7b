#include "sv/expr.hpp"

#include <cctype>
#include <limits>

namespace sv {

namespace {

// Minimal recursive-descent machinery shared by both grammars.
struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    explicit Cursor(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (!peek(c))
            return false;
        ++pos;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }

    // Matches an exact keyword (no intervening whitespace inside it).
    bool eat_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0)
            return false;
        pos += w.size();
        return true;
    }

    long long integer(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = (text[pos] == '-');
            ++pos;
        }
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected integer ") + what, start);
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const int digit = text[pos] - '0';
            if (v > (std::numeric_limits<long long>::max() - digit) / 10)
                throw ParseError(std::string("integer out of range ") + what, start);
            v = v * 10 + digit;
            ++pos;
        }
        return neg ? -v : v;
    }

    int small_int(const char* what) {
        const std::size_t start = pos;
        const long long v = integer(what);
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw ParseError(std::string("integer out of range ") + what, start);
        return static_cast<int>(v);
    }
};

std::vector<int> int_list(Cursor& c, const char* what) {
    std::vector<int> out;
    out.push_back(c.small_int(what));
    while (c.eat(','))
        out.push_back(c.small_int(what));
    return out;
}

FactorSheaf parse_factor(Cursor& c, const SegreVeronese& X, std::size_t slot) {
    c.skip_ws();
    const std::size_t start = c.pos;
    if (slot >= X.n.size())
        throw ParseError("atom has more factors than the variety (" +
                             std::to_string(X.n.size()) + " expected)",
                         start);
    const int n = X.n[slot];
    if (c.eat_word("Om")) {
        c.expect('(', "after 'Om'");
        if (!c.eat_word("a="))
            throw ParseError("expected 'a=' in form factor", c.pos);
        const std::size_t a_pos = c.pos;
        const int a = c.small_int("for form index");
        if (a < 0 || a > n)
            throw ParseError("form index must lie in 0.." + std::to_string(n) +
                                 " for this slot",
                             a_pos);
        c.expect(';', "between form index and twist");
        if (!c.eat_word("t="))
            throw ParseError("expected 't=' in form factor", c.pos);
        const int t = c.small_int("for twist");
        c.expect(')', "closing form factor");
        return FactorSheaf{n, a, t};
    }
    if (c.eat_word("O")) {
        c.expect('(', "after 'O'");
        const int t = c.small_int("for twist");
        c.expect(')', "closing line factor");
        return FactorSheaf{n, 0, t};
    }
    throw ParseError("expected a factor ('O(..)' or 'Om(a=..;t=..)')", start);
}

BoxAtom parse_atom(Cursor& c, const SegreVeronese& X) {
    c.skip_ws();
    const std::size_t start = c.pos;
    BoxAtom atom;
    atom.factors.push_back(parse_factor(c, X, 0));
    while (c.eat('x'))
        atom.factors.push_back(parse_factor(c, X, atom.factors.size()));
    if (atom.factors.size() != X.n.size())
        throw ParseError("atom has " + std::to_string(atom.factors.size()) +
                             " factors, variety has " + std::to_string(X.n.size()),
                         start);
    return atom;
}

FormalSheaf parse_term(Cursor& c, const SegreVeronese& X) {
    c.skip_ws();
    std::size_t save = c.pos;
    Int mult = 1;
    if (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
        const long long v = c.integer("for multiplicity");
        if (v < 1)
            throw ParseError("multiplicity must be positive", save);
        if (!c.eat('*'))
            throw ParseError("expected '*' after multiplicity", c.pos);
        mult = v;
    }
    return FormalSheaf::atom(parse_atom(c, X), mult);
}

} // namespace

SegreVeronese parse_variety(const std::string& text) {
    Cursor c(text);
    if (!c.eat_word("n="))
        throw ParseError("expected 'n='", c.pos);
    SegreVeronese X;
    X.n = int_list(c, "for factor dimension");
    c.expect(';', "between dimension and degree lists");
    if (!c.eat_word("k="))
        throw ParseError("expected 'k='", c.pos);
    const std::size_t k_pos = c.pos;
    X.k = int_list(c, "for embedding degree");
    if (!c.at_end())
        throw ParseError("unexpected trailing input", c.pos);
    if (X.n.size() != X.k.size())
        throw ParseError("dimension and degree lists differ in length", k_pos);
    for (int ni : X.n)
        if (ni < 1)
            throw ParseError("factor dimensions must be >= 1", 0);
    for (int ki : X.k)
        if (ki < 1)
            throw ParseError("embedding degrees must be >= 1", k_pos);
    return X;
}

FormalSheaf parse_sheaf(const std::string& text, const SegreVeronese& X) {
    validate(X);
    Cursor c(text);
    FormalSheaf V = parse_term(c, X);
    while (c.eat('+'))
        V = add(V, parse_term(c, X));
    if (!c.at_end())
        throw ParseError("unexpected trailing input", c.pos);
    return V;
}

std::string print_variety(const SegreVeronese& X) {
    std::string out = "n=";
    for (std::size_t i = 0; i < X.n.size(); ++i)
        out += (i ? "," : "") + std::to_string(X.n[i]);
    out += ";k=";
    for (std::size_t i = 0; i < X.k.size(); ++i)
        out += (i ? "," : "") + std::to_string(X.k[i]);
    return out;
}

std::string print_factor(const FactorSheaf& f) {
    if (f.p == 0)
        return "O(" + std::to_string(f.t) + ")";
    return "Om(a=" + std::to_string(f.p) + ";t=" + std::to_string(f.t) + ")";
}

std::string print_atom(const BoxAtom& a) {
    std::string out;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (i)
            out += "x";
        out += print_factor(a.factors[i]);
    }
    return out;
}

std::string print_sheaf(const FormalSheaf& V) {
    if (V.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < V.terms.size(); ++i) {
        if (i)
            out += " + ";
        if (V.terms[i].second != 1)
            out += std::to_string(V.terms[i].second) + "*";
        out += print_atom(V.terms[i].first);
    }
    return out;
}

} // namespace sv
