// trifold: univalence domains and extremal verification for trinomials
// with fold symmetry.
//
// Subcommands: domain, corner, verify, lemmas, suffridge, check-univalence,
// extremal, asymptotics.  Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "trifold/asymptotics.hpp"
#include "trifold/csv.hpp"
#include "trifold/domain.hpp"
#include "trifold/extremal.hpp"
#include "trifold/inequalities.hpp"
#include "trifold/suffridge.hpp"
#include "trifold/svg.hpp"
#include "trifold/univalence.hpp"

namespace {

using namespace trifold;

// `--out -` (the default) writes to stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_domain(int T, int samples, const std::string& format, const std::string& out) {
    const DomainBoundary bd = boundary_polyline(T, samples);

    // invariant audit before emitting anything
    const bool closed = dist(bd.samples.front().p, bd.samples.back().p) < 1e-9;
    const bool simple = !polyline_self_intersects(bd.polygon);
    const bool ccw = polygon_signed_area(bd.polygon) > 0.0;
    if (!closed || !simple || !ccw) {
        std::cerr << "domain invariant violated (closed=" << closed << " simple=" << simple
                  << " ccw=" << ccw << ")\n";
        return 1;
    }

    Output o(out);
    if (format == "svg") {
        write_domain_svg(o.stream(), bd);
    } else if (format == "csv") {
        write_domain_csv(o.stream(), bd);
    } else {
        const CornerPoint c = corner_point(T);
        o.stream() << "U_" << T << " boundary: " << bd.samples.size() << " samples, "
                   << bd.polygon.size() << " distinct vertices\n"
                   << "corner (" << fmt12(c.a) << ", " << fmt12(c.b) << ")\n"
                   << "top edge y = " << fmt12(c.b) << ", bottom vertex (0, " << fmt12(-c.b)
                   << ")\n"
                   << "signed area " << fmt12(polygon_signed_area(bd.polygon)) << "\n";
    }
    return 0;
}

int run_corner(int T, const std::string& format, const std::string& out) {
    const CornerPoint c = corner_point(T);
    Output o(out);
    if (format == "text")
        o.stream() << "corner of U_" << T << ": a = " << fmt12(c.a) << ", b = " << fmt12(c.b)
                   << "\n";
    else
        write_corner_csv(o.stream(), c);
    return 0;
}

int run_suffridge(int T, int n, const std::string& out) {
    Output o(out);
    write_suffridge_csv(o.stream(), t_symmetric_polynomial(T, n));
    return 0;
}

int run_check_univalence(int T, double a, double b, int samples, const std::string& format,
                         const std::string& out) {
    const UnivalenceReport rep = is_univalent_trinomial(T, a, b, samples);
    Output o(out);
    if (format == "csv") {
        write_univalence_csv(o.stream(), rep);
    } else {
        o.stream() << "z + " << fmt12(a) << " z^" << (1 + T) << " + " << fmt12(b) << " z^"
                   << (1 + 2 * T) << ": " << verdict_name(rep.verdict) << "\n"
                   << "  min derivative root modulus: " << fmt12(rep.min_derivative_root_modulus)
                   << "\n  min boundary self distance: " << fmt12(rep.min_boundary_self_distance)
                   << "\n  finest radius: " << fmt12(rep.test_radius) << ", samples "
                   << rep.boundary_samples << "\n";
    }
    return rep.verdict == Verdict::NotUnivalent ? 1 : 0;
}

int run_lemmas(int k_max, const std::string& out) {
    const LemmaReport l1 = verify_lemma1(default_x_grid(), k_max);
    const LemmaReport l2 = verify_lemma2(default_tau_grid(), default_alpha_grid());
    Output o(out);
    write_lemma_violations_csv(o.stream(), l1);
    write_lemma_violations_csv(o.stream(), l2);
    std::cerr << "lemma1: " << l1.points_checked << " points, " << l1.violations.size()
              << " violations, min margin " << fmt12(l1.min_margin) << "\n"
              << "lemma2: " << l2.points_checked << " points, " << l2.violations.size()
              << " violations, min margin " << fmt12(l2.min_margin) << "\n";
    return (l1.passed() && l2.passed()) ? 0 : 1;
}

int run_extremal(int T, int resolution, int samples, const std::string& out) {
    const ExtremalReport rep = extremal_report(T, resolution, samples);
    Output o(out);
    write_extremal_csv(o.stream(), rep);
    const bool mono_ok = rep.monotonicity.passed();
    if (!mono_ok) std::cerr << "monotonicity violations along the curved arc\n";
    return mono_ok ? 0 : 1;
}

int run_asymptotics(int T, int n_max, const std::string& out) {
    std::vector<int> ns;
    for (int n = 25; n <= n_max; n *= 2) ns.push_back(n);
    if (ns.empty()) ns.push_back(std::max(3, n_max));
    const auto samples = asymptotic_trend(T, ns);
    Output o(out);
    write_asymptotics_csv(o.stream(), samples);
    return 0;
}

int run_verify(int T, int resolution, int mono_samples, unsigned seed, const std::string& out) {
    Output o(out);
    std::ostream& os = o.stream();
    bool ok = true;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        os << (pass ? "[pass] " : "[FAIL] ") << name << ": " << detail << "\n";
        if (!pass && ok) {
            os << "first failing check: " << name << "\n";
            ok = false;
        }
    };

    const ClosedFormExtrema cf = closed_form_extrema(T);
    const GridSearchResult g = grid_search_extrema(T, resolution);
    const double lip[3] = {1.0, 2.0, 2.0};
    check("max_L1 closed vs grid", std::abs(cf.max_l1 - g.max_l1.value) <= 2 * g.cell_diagonal * lip[0],
          "closed " + fmt12(cf.max_l1) + ", grid " + fmt12(g.max_l1.value));
    check("max_L2 closed vs grid", std::abs(cf.max_l2 - g.max_l2.value) <= 2 * g.cell_diagonal * lip[1],
          "closed " + fmt12(cf.max_l2) + ", grid " + fmt12(g.max_l2.value));
    check("min_L3 closed vs grid", std::abs(cf.min_l3 - g.min_l3.value) <= 2 * g.cell_diagonal * lip[2],
          "closed " + fmt12(cf.min_l3) + ", grid " + fmt12(g.min_l3.value));

    const MonotonicityCheck mc = monotonicity_check(T, mono_samples);
    check("arc monotonicity", mc.passed(),
          "min x step " + fmt12(mc.min_x_step) + ", min y step " + fmt12(mc.min_y_step) +
              ", max ratio step " + fmt12(mc.max_ratio_step));

    const CornerPoint c = corner_point(T);
    const UnivalenceReport rep = is_univalent_trinomial(T, c.a, c.b, 1024);
    check("corner trinomial univalent", rep.verdict == Verdict::Univalent,
          std::string("verdict ") + verdict_name(rep.verdict));

    double worst = 0.0;
    for (const PolarRoot& r : trinomial_derivative_roots(T, c.a, c.b))
        worst = std::max(worst, std::abs(r.modulus - 1.0));
    check("derivative zeros on the unit circle", worst < 1e-10,
          "max | |z| - 1 | = " + fmt12(worst));

    // randomized spot check of the objective rewrite identity
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ux(0.01, 1.0), uy(-0.4, 0.4);
    double worst_rewrite = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng), y = uy(rng);
        const double lhs = (1.0 - x + y) / (1.0 + x + y);
        const double rhs = 1.0 - 2.0 / (1.0 + (1.0 + y) / x);
        worst_rewrite = std::max(worst_rewrite, std::abs(lhs - rhs));
    }
    check("objective rewrite identity", worst_rewrite < 1e-12,
          "max deviation " + fmt12(worst_rewrite));

    os << (ok ? "all checks passed" : "verification FAILED") << " (T = " << T
       << ", max_L2 = " << fmt12(cf.max_l2) << ", min_L3 = " << fmt12(cf.min_l3) << ")\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"univalence domains and extremal verification for fold-symmetric trinomials"};
    app.require_subcommand(1);

    int T = 1, samples = 256, resolution = 300, n = 3, n_max = 800, k_max = 20;
    int mono_samples = 1000, oracle_samples = 1024;
    unsigned seed = 12345;
    double a = 0.0, b = 0.0;
    std::string out = "-", format = "csv";

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--out", out, "output path, '-' for stdout");
        if (with_format) cmd->add_option("--format", format, "csv|svg|text")
            ->check(CLI::IsMember({"csv", "svg", "text"}));
        cmd->add_option("--seed", seed, "seed for randomized spot checks");
    };

    CLI::App* cmd_domain = app.add_subcommand("domain", "boundary of the univalence domain");
    cmd_domain->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    cmd_domain->add_option("--samples", samples, "samples per boundary segment")
        ->check(CLI::Range(2, 1 << 20));
    add_common(cmd_domain, true);

    CLI::App* cmd_corner = app.add_subcommand("corner", "corner point of the domain");
    cmd_corner->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    add_common(cmd_corner, true);

    CLI::App* cmd_verify = app.add_subcommand("verify", "closed forms vs oracles");
    cmd_verify->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--resolution", resolution, "grid resolution")->check(CLI::Range(50, 5000));
    cmd_verify->add_option("--samples", mono_samples, "monotonicity samples")
        ->check(CLI::Range(100, 1 << 20));
    add_common(cmd_verify, false);

    CLI::App* cmd_lemmas = app.add_subcommand("lemmas", "grid verification of both inequality lemmas");
    cmd_lemmas->add_option("--k-max", k_max, "largest weight index")->check(CLI::Range(3, 59));
    add_common(cmd_lemmas, false);

    CLI::App* cmd_suffridge = app.add_subcommand("suffridge", "coefficients of the symmetric family");
    cmd_suffridge->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    cmd_suffridge->add_option("--n", n, "number of terms")->check(CLI::PositiveNumber);
    add_common(cmd_suffridge, false);

    CLI::App* cmd_check = app.add_subcommand("check-univalence", "certify one trinomial");
    cmd_check->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    cmd_check->add_option("--a", a, "coefficient of z^{1+T}")->required();
    cmd_check->add_option("--b", b, "coefficient of z^{1+2T}")->required();
    cmd_check->add_option("--samples", oracle_samples, "boundary samples")->check(CLI::Range(64, 1 << 20));
    add_common(cmd_check, true);

    CLI::App* cmd_extremal = app.add_subcommand("extremal", "closed-form vs grid extrema table");
    cmd_extremal->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    cmd_extremal->add_option("--resolution", resolution, "grid resolution")->check(CLI::Range(50, 5000));
    cmd_extremal->add_option("--samples", mono_samples, "monotonicity samples")
        ->check(CLI::Range(100, 1 << 20));
    add_common(cmd_extremal, false);

    CLI::App* cmd_asym = app.add_subcommand("asymptotics", "large-n normalized trend");
    cmd_asym->add_option("--T", T, "fold order")->check(CLI::PositiveNumber);
    cmd_asym->add_option("--n-max", n_max, "largest term count")->check(CLI::Range(3, 200000));
    add_common(cmd_asym, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_domain)) return run_domain(T, samples, format, out);
        if (app.got_subcommand(cmd_corner)) return run_corner(T, format, out);
        if (app.got_subcommand(cmd_verify)) return run_verify(T, resolution, mono_samples, seed, out);
        if (app.got_subcommand(cmd_lemmas)) return run_lemmas(k_max, out);
        if (app.got_subcommand(cmd_suffridge)) return run_suffridge(T, n, out);
        if (app.got_subcommand(cmd_check))
            return run_check_univalence(T, a, b, oracle_samples, format, out);
        if (app.got_subcommand(cmd_extremal)) return run_extremal(T, resolution, mono_samples, out);
        if (app.got_subcommand(cmd_asym)) return run_asymptotics(T, n_max, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
