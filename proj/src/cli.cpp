#include "sv/cli.hpp"

#include "sv/expr.hpp"
#include "sv/render.hpp"

#include <ostream>

#include <CLI11.hpp>

namespace sv::cli {

namespace {

Format to_format(const std::string& name) {
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    return Format::Text;
}

struct Options {
    std::string variety;
    std::string sheaf;
    std::string format = "text";
    std::vector<int> twist;
    std::string res_q = "0";
    int monad_q = 2;
    int grid = 3;
};

void add_common(CLI::App* cmd, Options& o, bool with_sheaf) {
    cmd->add_option("--variety", o.variety, "Variety descriptor, e.g. n=2,1;k=1,2")
        ->required();
    if (with_sheaf)
        cmd->add_option("--sheaf", o.sheaf, "Sheaf expression, e.g. Om(a=1;t=3)xO(2)")
            ->required();
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact sheaf cohomology, Ulrich bundles and Beilinson-type "
                 "complexes on Segre-Veronese varieties"};
    app.name("svcoh");
    app.require_subcommand(1);
    Options o;

    CLI::App* cohom = app.add_subcommand("cohom", "Cohomology of a sheaf (optionally twisted)");
    add_common(cohom, o, true);
    cohom->add_option("--twist", o.twist, "Extra twist tuple c_1,..,c_s")->delimiter(',');

    CLI::App* ulrich = app.add_subcommand("ulrich", "Ulrich verification and classification");
    ulrich->require_subcommand(1);
    CLI::App* ucheck = ulrich->add_subcommand("check", "Ulrich certificate for a sheaf");
    add_common(ucheck, o, true);
    CLI::App* ulines = ulrich->add_subcommand("classify-lines", "All Ulrich line bundles");
    add_common(ulines, o, false);
    CLI::App* uomega =
        ulrich->add_subcommand("classify-omega", "All Ulrich form-bundle box products");
    add_common(uomega, o, false);

    CLI::App* alpha = app.add_subcommand("alpha-table", "Full alpha table and naturality flag");
    add_common(alpha, o, true);

    CLI::App* resolution =
        app.add_subcommand("resolution", "Line-bundle resolution read off a natural table");
    add_common(resolution, o, true);
    resolution->add_option("--q", o.res_q, "Row to use: 0, 1 or d")
        ->check(CLI::IsMember({"0", "1", "d"}))
        ->capture_default_str();

    CLI::App* monad = app.add_subcommand("monad", "Monad shape read off a natural table");
    add_common(monad, o, true);
    monad->add_option("--q", o.monad_q, "Row to use, 1 < q < d")->required();

    CLI::App* regularity =
        app.add_subcommand("regularity", "Vanishing suite for an Ulrich bundle");
    add_common(regularity, o, true);
    regularity->add_option("--grid", o.grid, "Twist grid bound (j in 0..grid)")
        ->capture_default_str();

    CLI::App* variety = app.add_subcommand("variety", "Ambient variety data");
    variety->require_subcommand(1);
    CLI::App* vinfo = variety->add_subcommand("info", "Degree, dimension, canonical twist");
    add_common(vinfo, o, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* a = &app;
        while (!a->get_subcommands().empty())
            a = a->get_subcommands().front();
        out << a->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const Format fmt = to_format(o.format);
    try {
        SegreVeronese X = parse_variety(o.variety);

        if (cohom->parsed()) {
            FormalSheaf V = parse_sheaf(o.sheaf, X);
            std::vector<int> c = o.twist;
            if (c.empty())
                c.assign(X.n.size(), 0);
            if (c.size() != X.n.size()) {
                err << "error: --twist needs " << X.n.size() << " entries\n";
                return 2;
            }
            render_cohom(out, fmt, X, V, c, kunneth_cohomology(twist(V, c)));
            return 0;
        }
        if (ucheck->parsed()) {
            FormalSheaf V = parse_sheaf(o.sheaf, X);
            UlrichCertificate cert = ulrich_certificate(X, V);
            render_certificate(out, fmt, X, V, cert);
            return cert.verdict ? 0 : 1;
        }
        if (ulines->parsed()) {
            render_lines(out, fmt, X, classify_ulrich_lines(X));
            return 0;
        }
        if (uomega->parsed()) {
            render_omega(out, fmt, X, classify_ulrich_omega_boxes(X));
            return 0;
        }
        if (alpha->parsed()) {
            FormalSheaf V = parse_sheaf(o.sheaf, X);
            render_alpha(out, fmt, alpha_table(X, V));
            return 0;
        }
        if (resolution->parsed()) {
            FormalSheaf V = parse_sheaf(o.sheaf, X);
            AlphaTable T = alpha_table(X, V);
            if (!T.natural) {
                err << "error: the alpha table is not natural; no resolution is defined\n";
                return 1;
            }
            const int q = (o.res_q == "d") ? X.dim() : (o.res_q == "1" ? 1 : 0);
            ResolutionShape shape = build_resolution(T, q);
            const bool chi_ok = chi_consistency(T, shape);
            render_resolution(out, fmt, T, shape, chi_ok);
            return chi_ok ? 0 : 1;
        }
        if (monad->parsed()) {
            FormalSheaf V = parse_sheaf(o.sheaf, X);
            if (o.monad_q <= 1 || o.monad_q >= X.dim()) {
                err << "error: --q must satisfy 1 < q < " << X.dim() << "\n";
                return 2;
            }
            AlphaTable T = alpha_table(X, V);
            if (!T.natural) {
                err << "error: the alpha table is not natural; no monad is defined\n";
                return 1;
            }
            MonadShape shape = build_monad(T, o.monad_q);
            const bool chi_ok = chi_consistency(T, shape);
            render_monad(out, fmt, T, shape, chi_ok);
            return chi_ok ? 0 : 1;
        }
        if (regularity->parsed()) {
            FormalSheaf V = parse_sheaf(o.sheaf, X);
            if (o.grid < 0) {
                err << "error: --grid must be >= 0\n";
                return 2;
            }
            RegularityReport rep = verify_regularity(X, V, o.grid);
            render_regularity(out, fmt, X, V, o.grid, rep);
            return rep.passed ? 0 : 1;
        }
        if (vinfo->parsed()) {
            render_variety_info(out, fmt, X);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace sv::cli
