// Acceptance suite.  Each numbered check prints exactly one PASS/FAIL line;
// informational "log:"/"finding:" lines appear indented under the check that
// produced them.  The process exit status is the number of failed checks, so
// a zero exit means the whole gate is green.
//
// Checks 4-6 collect every Ulrich bundle they verify; checks 7-10 then sweep
// that shared pool, so the later invariants are exercised on exactly the
// bundles the classification layer produced.

#include "oracles.hpp"
#include "sv/beilinson.hpp"
#include "sv/bott.hpp"
#include "sv/cohomology.hpp"
#include "sv/exactcomb.hpp"
#include "sv/expr.hpp"
#include "sv/sheaf.hpp"
#include "sv/ulrich.hpp"
#include "sv/variety.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using sv::AlphaTable;
using sv::BoxAtom;
using sv::CohomologyVector;
using sv::FactorSheaf;
using sv::FormalSheaf;
using sv::Int;
using sv::SegreVeronese;

namespace {

int failures = 0;
std::vector<std::string> pending_notes;

void note(std::string line) { pending_notes.push_back(std::move(line)); }

void run_check(int id, const std::string& label, const std::function<bool()>& body) {
    pending_notes.clear();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
        ok = false;
    }
    if (!ok)
        ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << label << "\n";
    for (const std::string& line : pending_notes)
        std::cout << "  " << line << "\n";
    pending_notes.clear();
}

// Shared pool of verified Ulrich bundles, filled by checks 4-6.
struct Found {
    SegreVeronese X;
    FormalSheaf V;
};
std::vector<Found> pool;
std::set<std::string> pool_keys;

void collect(const SegreVeronese& X, const FormalSheaf& V) {
    std::string key = sv::print_variety(X) + "|" + sv::print_sheaf(V);
    if (pool_keys.insert(std::move(key)).second)
        pool.push_back({X, V});
}

std::string join_atoms(const std::vector<BoxAtom>& atoms) {
    std::string s;
    for (const BoxAtom& a : atoms) {
        if (!s.empty())
            s += ", ";
        s += sv::print_atom(a);
    }
    return s.empty() ? "(none)" : s;
}

// ---------------------------------------------------------------------------

bool check1() {
    for (int n = 1; n <= 4; ++n)
        for (int t = -12; t <= 12; ++t) {
            if (sv::bott_cohomology({n, 0, t}) != svtest::oracle_line(n, t))
                return false;
            if (sv::bott_cohomology({n, 1, t}) != svtest::oracle_omega1(n, t))
                return false;
        }
    return true;
}

bool check2() {
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (int t = -15; t <= 15; ++t) {
                FactorSheaf f{n, p, t};
                if (sv::bott_cohomology(f).reversed() !=
                    sv::bott_cohomology(sv::serre_dual(f)))
                    return false;
            }
    return true;
}

bool check3() {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> s_dist(1, 3);
    std::uniform_int_distribution<int> n_dist(1, 3);
    std::uniform_int_distribution<int> t_dist(-8, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        BoxAtom atom;
        const int s = s_dist(rng);
        for (int i = 0; i < s; ++i) {
            const int n = n_dist(rng);
            std::uniform_int_distribution<int> a_dist(0, n);
            atom.factors.push_back(FactorSheaf{n, a_dist(rng), t_dist(rng)});
        }
        if (sv::kunneth_cohomology(atom) != svtest::oracle_kunneth(atom)) {
            note("mismatch at trial " + std::to_string(trial) + ": " +
                 sv::print_atom(atom));
            return false;
        }
    }
    return true;
}

// Closed-form expected Ulrich line sets over the (n1, n2, k1, k2) grid.  The
// rule is symmetric in the two factors; its one-sided special cases are
// re-asserted explicitly below on their named instances.
std::vector<std::vector<int>> expected_lines(int n1, int n2, int k1, int k2) {
    if (n1 == 1 && n2 == 1)
        return {{k1 - 1, 2 * k2 - 1}, {2 * k1 - 1, k2 - 1}};
    if (k1 == 1 && k2 == 1)
        return {{n2, 0}, {0, n1}};
    if (n2 == 1 && n1 >= 2 && k1 == 1)
        return {{1, k2 - 1}, {0, (n1 + 1) * k2 - 1}};
    if (n1 == 1 && n2 >= 2 && k2 == 1)
        return {{k1 - 1, 1}, {(n2 + 1) * k1 - 1, 0}};
    return {};
}

bool lines_equal(const SegreVeronese& X, std::vector<std::vector<int>> expect,
                 bool collect_found) {
    auto got = sv::classify_ulrich_lines(X);
    if (collect_found)
        for (const auto& tuple : got)
            collect(X, FormalSheaf::atom(sv::line_atom(X, tuple)));
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    return got == expect;
}

bool check4() {
    bool ok = true;
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (int k1 = 1; k1 <= 3; ++k1)
                for (int k2 = 1; k2 <= 3; ++k2) {
                    SegreVeronese X{{n1, n2}, {k1, k2}};
                    if (!lines_equal(X, expected_lines(n1, n2, k1, k2), true)) {
                        note("grid mismatch at " + sv::print_variety(X));
                        ok = false;
                    }
                }
    // Named instances, stated one-sidedly: Segre products, P^m x P^1 scrolls
    // with k = (1, k2), and the P^1 x P^1 family.
    for (auto [m, n] : {std::pair<int, int>{2, 1}, {3, 2}, {2, 2}})
        ok &= lines_equal(SegreVeronese{{m, n}, {1, 1}}, {{n, 0}, {0, m}}, false);
    for (int m : {2, 3})
        for (int k2 : {2, 3})
            ok &= lines_equal(SegreVeronese{{m, 1}, {1, k2}},
                              {{1, k2 - 1}, {0, (m + 1) * k2 - 1}}, false);
    for (auto [k1, k2] : {std::pair<int, int>{1, 1}, {2, 3}, {3, 2}})
        ok &= lines_equal(SegreVeronese{{1, 1}, {k1, k2}},
                          {{k1 - 1, 2 * k2 - 1}, {2 * k1 - 1, k2 - 1}}, false);
    return ok;
}

bool check5() {
    bool ok = true;
    // Distinguished cotangent boxes on the Segre products P^m x P^n.
    for (auto [m, n] : {std::pair<int, int>{2, 2}, {3, 2}, {3, 3}}) {
        SegreVeronese X{{m, n}, {1, 1}};
        const BoxAtom first{{FactorSheaf{m, 1, n + 1}, FactorSheaf{n, n - 1, n}}};
        const BoxAtom second{{FactorSheaf{m, m - 1, m}, FactorSheaf{n, 1, m + 1}}};
        for (const BoxAtom& a : {first, second}) {
            FormalSheaf V = FormalSheaf::atom(a);
            if (sv::is_ulrich(X, V)) {
                collect(X, V);
            } else {
                note("FAIL detail: " + sv::print_atom(a) + " not Ulrich on " +
                     sv::print_variety(X));
                ok = false;
            }
        }
    }

    // The doubly-embedded square P^2 x P^2 with k = (2, 2): evaluate the two
    // tabulated candidates; a refutation is a finding, not an engine failure.
    SegreVeronese square{{2, 2}, {2, 2}};
    const BoxAtom cand1{{FactorSheaf{2, 1, 3}, FactorSheaf{2, 0, 2}}};
    const BoxAtom cand2{{FactorSheaf{2, 0, 2}, FactorSheaf{2, 1, 3}}};
    for (const BoxAtom& a : {cand1, cand2}) {
        FormalSheaf V = FormalSheaf::atom(a);
        auto cert = sv::ulrich_certificate(square, V);
        if (cert.verdict) {
            collect(square, V);
        } else {
            note("finding: " + sv::print_atom(a) + " on " + sv::print_variety(square) +
                 " is not Ulrich (h^" + std::to_string(cert.witness->degree) + "(V(-" +
                 std::to_string(cert.witness->twist) + "h)) = " +
                 std::to_string(cert.witness->dimension) +
                 "); reference tabulation divergence, see docs/classification-notes.md");
        }
    }

    // Full classifier sweep on each tested variety, logged, and diffed against
    // the reference tabulation.
    struct Sweep {
        SegreVeronese X;
        std::set<std::string> reference;
    };
    const std::vector<Sweep> sweeps = {
        {SegreVeronese{{2, 2}, {1, 1}},
         {"O(0)xO(2)", "O(2)xO(0)", "Om(a=1;t=3)xOm(a=1;t=2)",
          "Om(a=1;t=2)xOm(a=1;t=3)"}},
        {SegreVeronese{{3, 2}, {1, 1}},
         {"O(0)xO(3)", "O(2)xO(0)", "Om(a=1;t=3)xOm(a=1;t=2)",
          "Om(a=2;t=3)xOm(a=1;t=4)"}},
        {SegreVeronese{{3, 3}, {1, 1}},
         {"O(0)xO(3)", "O(3)xO(0)", "Om(a=1;t=4)xOm(a=2;t=3)",
          "Om(a=2;t=3)xOm(a=1;t=4)"}},
        {square, {"Om(a=1;t=3)xO(2)", "O(2)xOm(a=1;t=3)"}},
    };
    for (const Sweep& sweep : sweeps) {
        auto boxes = sv::classify_ulrich_omega_boxes(sweep.X);
        note("log: classify-omega " + sv::print_variety(sweep.X) + " -> " +
             join_atoms(boxes));
        std::set<std::string> got;
        for (const BoxAtom& a : boxes) {
            got.insert(sv::print_atom(a));
            collect(sweep.X, FormalSheaf::atom(a));
        }
        if (got != sweep.reference) {
            for (const std::string& name : sweep.reference)
                if (!got.count(name))
                    note("finding: " + name + " absent from the computed list on " +
                         sv::print_variety(sweep.X));
            for (const std::string& name : got)
                if (!sweep.reference.count(name))
                    note("finding: " + name + " present but not in the reference "
                         "tabulation on " + sv::print_variety(sweep.X));
        }
    }
    return ok;
}

bool check6() {
    struct Combo {
        SegreVeronese XE;
        FormalSheaf E;
        SegreVeronese XF;
        FormalSheaf F;
        sv::PullbackSide side;
        std::string expect;
    };
    auto line1 = [](const SegreVeronese& X, int t) {
        return FormalSheaf::atom(sv::line_atom(X, {t}));
    };
    const SegreVeronese p1k1{{1}, {1}}, p1k2{{1}, {2}}, p1k3{{1}, {3}};
    const SegreVeronese p2k1{{2}, {1}}, p2k2{{2}, {2}}, p3k1{{3}, {1}};
    const SegreVeronese quadric{{1, 1}, {1, 1}};
    const FormalSheaf omega_p2 = FormalSheaf::atom(BoxAtom{{FactorSheaf{2, 1, 3}}});
    const FormalSheaf box22 = FormalSheaf::atom(
        BoxAtom{{FactorSheaf{2, 1, 3}, FactorSheaf{2, 1, 2}}});
    const FormalSheaf quadric_line =
        FormalSheaf::atom(sv::line_atom(quadric, {1, 0}));

    const std::vector<Combo> combos = {
        {p1k2, line1(p1k2, 1), p1k3, line1(p1k3, 2), sv::PullbackSide::Left,
         "O(3)xO(2)"},
        {p1k2, line1(p1k2, 1), p1k3, line1(p1k3, 2), sv::PullbackSide::Right,
         "O(1)xO(5)"},
        {p1k1, line1(p1k1, 0), p2k1, line1(p2k1, 0), sv::PullbackSide::Left,
         "O(2)xO(0)"},
        {p2k1, line1(p2k1, 0), p2k1, line1(p2k1, 0), sv::PullbackSide::Right,
         "O(0)xO(2)"},
        {p3k1, line1(p3k1, 0), p2k1, line1(p2k1, 0), sv::PullbackSide::Left,
         "O(2)xO(0)"},
        {p3k1, line1(p3k1, 0), p3k1, line1(p3k1, 0), sv::PullbackSide::Right,
         "O(0)xO(3)"},
        {p2k2, omega_p2, p1k1, line1(p1k1, 0), sv::PullbackSide::Left,
         "Om(a=1;t=5)xO(0)"},
        {p1k2, line1(p1k2, 1), p2k1, line1(p2k1, 0), sv::PullbackSide::Right,
         "O(1)xO(1)"},
        {SegreVeronese{{2, 2}, {1, 1}}, box22, p1k1, line1(p1k1, 0),
         sv::PullbackSide::Left, "Om(a=1;t=4)xOm(a=1;t=3)xO(0)"},
        {quadric, quadric_line, p1k1, line1(p1k1, 0), sv::PullbackSide::Left,
         "O(2)xO(1)xO(0)"},
    };

    bool ok = true;
    for (const Combo& c : combos) {
        FormalSheaf got = sv::pullback_ulrich(c.XE, c.E, c.XF, c.F, c.side);
        SegreVeronese prod = sv::product(c.XE, c.XF);
        if (sv::print_sheaf(got) != c.expect) {
            note("pullback produced " + sv::print_sheaf(got) + ", expected " +
                 c.expect + " on " + sv::print_variety(prod));
            ok = false;
        }
        collect(prod, got);
    }
    return ok;
}

bool check7() {
    bool ok = true;
    for (const Found& f : pool) {
        auto cert = sv::ulrich_certificate(f.X, f.V);
        if (!cert.verdict || cert.h0 != cert.degree_rank_product) {
            note("h^0 = " + std::to_string(cert.h0) + " but deg*rank = " +
                 std::to_string(cert.degree_rank_product) + " for " +
                 sv::print_sheaf(f.V) + " on " + sv::print_variety(f.X));
            ok = false;
        }
    }
    note("checked " + std::to_string(pool.size()) + " bundles");
    return ok && !pool.empty();
}

bool check8() {
    bool ok = true;
    for (const Found& f : pool) {
        auto rep = sv::verify_regularity(f.X, f.V, 3);
        if (!rep.passed) {
            note("regularity violation for " + sv::print_sheaf(f.V) + " on " +
                 sv::print_variety(f.X));
            ok = false;
        }
    }
    return ok && !pool.empty();
}

bool check9() {
    bool ok = true;
    for (const Found& f : pool) {
        AlphaTable T = sv::alpha_table(f.X, f.V);
        if (!T.natural) {
            note("table not natural for " + sv::print_sheaf(f.V) + " on " +
                 sv::print_variety(f.X));
            ok = false;
            continue;
        }
        const int d = f.X.dim();
        for (int q = 0; q <= d; ++q) {
            bool nonzero = false;
            for (const auto& a : sv::weight_tuples(f.X, q)) {
                auto it = std::find(T.tuples.begin(), T.tuples.end(), a);
                if (it != T.tuples.end() &&
                    T.alpha[q][static_cast<std::size_t>(it - T.tuples.begin())] != 0)
                    nonzero = true;
            }
            if (!nonzero) {
                note("row " + std::to_string(q) + " weight-" + std::to_string(q) +
                     " slice vanishes for " + sv::print_sheaf(f.V) + " on " +
                     sv::print_variety(f.X));
                ok = false;
            }
        }
    }
    return ok && !pool.empty();
}

bool check10() {
    bool ok = true;

    // Pinned shape: 0 -> O(-1,0) -> O^2 -> V -> 0 for O(1,0) on the quadric.
    {
        SegreVeronese X{{1, 1}, {1, 1}};
        AlphaTable T = sv::alpha_table(X, FormalSheaf::atom(sv::line_atom(X, {1, 0})));
        auto shape = sv::build_resolution(T, 0);
        const std::vector<sv::TermGroup> expect = {
            {1, {{std::vector<int>{1, 0}, 1}}, 1},
            {0, {{std::vector<int>{0, 0}, 2}}, 2},
        };
        if (shape.terms != expect) {
            note("unexpected shape for the pinned rank-1 resolution");
            ok = false;
        }
    }

    for (const Found& f : pool) {
        AlphaTable T = sv::alpha_table(f.X, f.V);
        if (!T.natural) {
            ok = false;
            continue;
        }
        const int d = f.X.dim();
        for (int q : {0, 1, d}) {
            auto shape = sv::build_resolution(T, q);
            if (!sv::chi_consistency(T, shape)) {
                note("chi probe failed: resolution q=" + std::to_string(q) + " of " +
                     sv::print_sheaf(f.V) + " on " + sv::print_variety(f.X));
                ok = false;
            }
        }
        for (int q = 2; q < d; ++q) {
            auto shape = sv::build_monad(T, q);
            if (!sv::chi_consistency(T, shape)) {
                note("chi probe failed: monad q=" + std::to_string(q) + " of " +
                     sv::print_sheaf(f.V) + " on " + sv::print_variety(f.X));
                ok = false;
            }
            Int alt = 0;
            for (const auto& g : shape.b1_chain)
                alt += ((g.weight - q) % 2 == 0 ? g.rank : -g.rank);
            alt += shape.middle.rank;
            for (const auto& g : shape.b2_chain)
                alt += ((g.weight - q) % 2 == 0 ? g.rank : -g.rank);
            if (alt != sv::rank(f.V)) {
                note("monad rank sum " + std::to_string(alt) + " != rank for " +
                     sv::print_sheaf(f.V) + " on " + sv::print_variety(f.X));
                ok = false;
            }
        }
        // On Segre embeddings the top column is concentrated in degree d.
        if (std::all_of(f.X.k.begin(), f.X.k.end(), [](int k) { return k == 1; })) {
            auto it = std::find(T.tuples.begin(), T.tuples.end(), f.X.n);
            const auto idx = static_cast<std::size_t>(it - T.tuples.begin());
            for (int i = 0; i < d; ++i)
                if (T.alpha[i][idx] != 0) {
                    note("alpha_" + std::to_string(i) + " at the top tuple is " +
                         std::to_string(T.alpha[i][idx]) + " for " +
                         sv::print_sheaf(f.V) + " on " + sv::print_variety(f.X));
                    ok = false;
                }
        }
    }
    return ok && !pool.empty();
}

bool check11() {
    struct Probe {
        SegreVeronese X;
        std::vector<int> line;
        std::string id;
    };
    const std::vector<Probe> probes = {
        {SegreVeronese{{2, 1}, {1, 2}}, {1, 1}, "scroll-h1-probe"},
        {SegreVeronese{{2, 1}, {2, 1}}, {3, 0}, "scroll-h1-probe"},
        {SegreVeronese{{3, 2}, {1, 1}}, {0, 3}, "middle-row-adjacent"},
        {SegreVeronese{{2, 2}, {1, 1}}, {0, 2}, "middle-row-adjacent"},
    };
    bool ok = true;
    for (const Probe& p : probes) {
        auto rep = sv::evaluate_criteria(
            p.X, FormalSheaf::atom(sv::line_atom(p.X, p.line)));
        bool found = false;
        for (const auto& e : rep.entries)
            if (e.id == p.id) {
                found = true;
                if (!e.applicable || !e.holds) {
                    note(p.id + " does not hold on " + sv::print_variety(p.X));
                    ok = false;
                }
            }
        if (!found) {
            note("no evaluator named " + p.id);
            ok = false;
        }
    }
    return ok;
}

} // namespace

int main() {
    run_check(1, "line and cotangent twists match the Euler-sequence oracle", check1);
    run_check(2, "cohomology tables are symmetric under Serre duality", check2);
    run_check(3, "box-product cohomology matches the composition-sum oracle "
                 "(1000 randomized atoms)", check3);
    run_check(4, "Ulrich line-bundle classification matches the closed-form grid",
              check4);
    run_check(5, "distinguished cotangent box bundles verify as Ulrich", check5);
    run_check(6, "factor pullbacks produce Ulrich bundles on products", check6);
    run_check(7, "global sections equal degree times rank for every verified bundle",
              check7);
    run_check(8, "regularity vanishing suite passes for every verified bundle",
              check8);
    run_check(9, "alpha tables are natural with nonvanishing diagonal slices",
              check9);
    run_check(10, "resolution and monad shapes are chi-consistent with exact ranks",
              check10);
    run_check(11, "hypothesis evaluators hold on their model inputs", check11);

    if (failures == 0)
        std::cout << "acceptance: all 11 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria failed\n";
    return failures;
}
