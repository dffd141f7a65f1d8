// hardy — sharp Hardy-inequality constants on finite intervals and finite
// sections, with cross-verified routes and machine-readable output.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification
// failure.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hardy/asymptotics.hpp"
#include "hardy/continuous.hpp"
#include "hardy/discrete.hpp"
#include "hardy/dual_hahn.hpp"
#include "hardy/errors.hpp"
#include "hardy/record.hpp"
#include "hardy/verify.hpp"

namespace {

void emit(const hardy::OutputRecord& rec, const std::string& format)
{
    if (format == "csv")
        std::cout << hardy::to_csv(rec);
    else
        std::cout << hardy::to_json(rec) << "\n";
}

int cmd_continuous(double a, double b, bool verify, double quad_tol,
                   const std::string& format)
{
    const hardy::IntervalSpec iv{a, b};
    const hardy::SharpConstantReport rep = hardy::sharp_constant(iv);

    hardy::OutputRecord rec;
    rec.command = "continuous";
    rec.add_input("a", a);
    rec.add_input("b", b);
    rec.add_input("verify", verify);
    rec.add_input("quad_tol", quad_tol);
    rec.add_output("L", rep.L);
    rec.add_output("alpha", rep.root.alpha);
    rec.add_output("residual", rep.root.residual);
    rec.add_output("d", rep.d);

    int rc = 0;
    if (verify) {
        const hardy::EqualityCheckReport eq = hardy::verify_equality(iv, quad_tol);
        rec.add_output("lhs", eq.lhs);
        rec.add_output("rhs", eq.rhs);
        rec.add_output("ratio", eq.ratio);
        rec.add_output("quad_error", eq.quad_error);
        if (std::abs(eq.ratio - 1.0) > 10.0 * eq.quad_error) {
            rec.status = hardy::Status::bound_violation;
            rc = 3;
        }
    }
    emit(rec, format);
    return rc;
}

int cmd_discrete(std::size_t n, const std::string& method,
                 const std::string& format)
{
    hardy::OutputRecord rec;
    rec.command = "discrete";
    rec.add_input("n", static_cast<double>(n));
    rec.add_input("method", method);

    int rc = 0;
    if (method == "eigen") {
        const hardy::DiscreteNormReport r = hardy::dn_eigen(n);
        rec.add_output("d_eigen", r.d_n);
        rec.add_output("iterations", r.iterations);
        rec.add_output("residual", r.residual);
    } else if (method == "hahn") {
        const hardy::DiscreteNormReport r = hardy::dn_hahn(n);
        const hardy::SmallestZeroReport z = hardy::smallest_zero(n);
        rec.add_output("d_hahn", r.d_n);
        rec.add_output("t1", z.t1);
        rec.add_output("x1", z.x1);
        rec.add_output("iterations", r.iterations);
        rec.add_output("residual", r.residual);
    } else if (method == "rayleigh") {
        const hardy::AlmostExtremalSequence seq = hardy::almost_extremal(n);
        rec.add_output("alpha", seq.root.alpha);
        rec.add_output("alpha_lb", hardy::alpha_to_constant(seq.root));
        rec.add_output("rayleigh_lb", seq.rayleigh);
    } else if (method == "certificate") {
        const hardy::AlmostExtremalSequence seq = hardy::almost_extremal(n);
        rec.add_output("alpha", seq.root.alpha);
        rec.add_output("alpha_lb", hardy::alpha_to_constant(seq.root));
        rec.add_output("certificate_lb", hardy::certificate_lower(seq.values));
    } else if (method == "bounds") {
        const auto [lo, hi] = hardy::dn_bounds(n);
        rec.add_output("bound_lo", lo);
        rec.add_output("bound_hi", hi);
    } else {  // all
        const hardy::DiscreteNormReport re = hardy::dn_eigen(n);
        const hardy::DiscreteNormReport rh = hardy::dn_hahn(n);
        const hardy::AlmostExtremalSequence seq = hardy::almost_extremal(n);
        const double lb = hardy::alpha_to_constant(seq.root);
        const double cert = hardy::certificate_lower(seq.values);
        rec.add_output("d_eigen", re.d_n);
        rec.add_output("d_hahn", rh.d_n);
        rec.add_output("alpha", seq.root.alpha);
        rec.add_output("alpha_lb", lb);
        rec.add_output("rayleigh_lb", seq.rayleigh);
        rec.add_output("certificate_lb", cert);

        bool ok = std::abs(re.d_n - rh.d_n) <= 1e-9 && seq.rayleigh >= lb - 1e-12 &&
                  cert >= lb - 1e-12 && seq.rayleigh <= rh.d_n + 1e-10 &&
                  cert <= rh.d_n + 1e-10;
        if (n >= 3) {
            const auto [lo, hi] = hardy::dn_bounds(n);
            rec.add_output("bound_lo", lo);
            rec.add_output("bound_hi", hi);
            ok = ok && lo <= rh.d_n && rh.d_n <= hi;
        }
        if (n >= 2)
            rec.add_output("asymptote", hardy::dn_asymptote(n));
        if (!ok) {
            rec.status = hardy::Status::bound_violation;
            rc = 3;
        }
    }
    emit(rec, format);
    return rc;
}

int cmd_alpha(double L, const std::string& format)
{
    const hardy::AlphaRoot r = hardy::alpha_solve(L);
    hardy::OutputRecord rec;
    rec.command = "alpha";
    rec.add_input("L", L);
    rec.add_output("alpha", r.alpha);
    rec.add_output("residual", r.residual);
    rec.add_output("bracket_lo", r.bracket_lo);
    rec.add_output("bracket_hi", r.bracket_hi);
    rec.add_output("d", hardy::alpha_to_constant(r));
    emit(rec, format);
    return 0;
}

int cmd_hahn(std::size_t n, const std::string& format)
{
    const hardy::SmallestZeroReport z = hardy::smallest_zero(n);
    hardy::OutputRecord rec;
    rec.command = "hahn";
    rec.add_input("n", static_cast<double>(n));
    rec.add_output("t1", z.t1);
    rec.add_output("x1", z.x1);
    rec.add_output("d_n", z.d_from_zero);
    emit(rec, format);
    return 0;
}

int cmd_asym(std::size_t n, double x, bool has_x, const std::string& format)
{
    hardy::OutputRecord rec;
    rec.command = "asym";
    rec.add_input("n", static_cast<double>(n));
    if (has_x) rec.add_input("x", x);
    rec.add_output("zero_asymptote", hardy::zero_asymptote(n));
    rec.add_output("dn_asymptote", hardy::dn_asymptote(n));
    if (n >= 3)
        rec.add_output("difference_law", hardy::difference_law(n));
    if (has_x) {
        const hardy::GammaArgReport g = hardy::gamma_ratio_arg(x);
        rec.add_output("arg", g.arg_value);
        rec.add_output("slope", g.slope_estimate);
    }
    emit(rec, format);
    return 0;
}

struct SweepRow {
    std::size_t n = 0;
    double d_eigen = 0.0;
    double d_hahn = 0.0;
    double rayleigh_lb = 0.0;
    double certificate_lb = 0.0;
    double bound_lo = 0.0;
    double bound_hi = 0.0;
    double asymptote = 0.0;
};

SweepRow sweep_row(std::size_t n)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row;
    row.n = n;
    row.d_eigen = hardy::dn_eigen(n).d_n;
    row.d_hahn = hardy::dn_hahn(n).d_n;
    const hardy::AlmostExtremalSequence seq = hardy::almost_extremal(n);
    row.rayleigh_lb = seq.rayleigh;
    row.certificate_lb = hardy::certificate_lower(seq.values);
    if (n >= 3) {
        const auto [lo, hi] = hardy::dn_bounds(n);
        row.bound_lo = lo;
        row.bound_hi = hi;
    } else {
        row.bound_lo = row.bound_hi = nan;
    }
    row.asymptote = n >= 2 ? hardy::dn_asymptote(n) : nan;
    return row;
}

int cmd_sweep(std::size_t n_start, std::size_t n_end, std::size_t points,
              bool log_spaced, const std::string& out, const std::string& format)
{
    if (n_start < 1 || n_start >= n_end || points < 2)
        throw hardy::DomainError("sweep: requires 1 <= n_start < n_end and points >= 2");

    std::vector<std::size_t> ns;
    ns.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(points - 1);
        double v;
        if (log_spaced) {
            const double la = std::log(static_cast<double>(n_start));
            const double lb = std::log(static_cast<double>(n_end));
            v = std::exp(la + s * (lb - la));
        } else {
            v = static_cast<double>(n_start) +
                s * static_cast<double>(n_end - n_start);
        }
        const auto n = static_cast<std::size_t>(std::llround(v));
        if (ns.empty() || n > ns.back()) ns.push_back(n);
    }

    // Rows are independent; compute in parallel, write in ascending n.
    std::vector<SweepRow> rows(ns.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              ns.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < ns.size();
                 i = next.fetch_add(1))
                rows[i] = sweep_row(ns[i]);
        });
    for (std::thread& t : pool) t.join();

    std::ofstream file(out);
    if (!file)
        throw hardy::Error("sweep: cannot open output file: " + out);
    file << "n,d_eigen,d_hahn,rayleigh_lb,certificate_lb,bound_lo,bound_hi,asymptote\n";
    double max_cross = 0.0;
    for (const SweepRow& r : rows) {
        file << r.n << ',' << hardy::format_double(r.d_eigen) << ','
             << hardy::format_double(r.d_hahn) << ','
             << hardy::format_double(r.rayleigh_lb) << ','
             << hardy::format_double(r.certificate_lb) << ','
             << hardy::format_double(r.bound_lo) << ','
             << hardy::format_double(r.bound_hi) << ','
             << hardy::format_double(r.asymptote) << '\n';
        max_cross = std::max(max_cross, std::abs(r.d_hahn - r.d_eigen));
    }
    file.flush();
    if (!file)
        throw hardy::Error("sweep: write failed: " + out);

    hardy::OutputRecord rec;
    rec.command = "sweep";
    rec.add_input("n_start", static_cast<double>(n_start));
    rec.add_input("n_end", static_cast<double>(n_end));
    rec.add_input("points", static_cast<double>(points));
    rec.add_input("log_spaced", log_spaced);
    rec.add_input("out", out);
    rec.add_output("rows", static_cast<double>(rows.size()));
    rec.add_output("max_cross_diff", max_cross);
    emit(rec, format);
    return 0;
}

int cmd_verify_all(const std::string& level, const std::string& format)
{
    const auto lvl = level == "full" ? hardy::verify::Level::full
                                     : hardy::verify::Level::fast;
    const auto results = hardy::verify::run_acceptance(lvl);
    hardy::verify::print_table(results, std::cerr);

    hardy::OutputRecord rec;
    rec.command = "verify-all";
    rec.add_input("level", level);
    char key[32];
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::snprintf(key, sizeof(key), "criterion_%02d", r.id);
        rec.add_output(key, r.pass ? 1.0 : 0.0);
        passed += r.pass ? 1 : 0;
    }
    rec.add_output("passed", static_cast<double>(passed));
    rec.add_output("total", static_cast<double>(results.size()));
    const bool ok = passed == results.size();
    if (!ok) rec.status = hardy::Status::bound_violation;
    emit(rec, format);
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sharp constants in Hardy's inequality: finite-interval and "
                 "finite-section routes with cross-verification"};
    app.require_subcommand(1);

    int rc = 0;

    // continuous
    double ca = 0.0, cb = 0.0, cquad_tol = 1e-10;
    bool cverify = false;
    std::string cformat = "json";
    auto* continuous = app.add_subcommand(
        "continuous", "Sharp constant d(a,b) on (a,b), optionally verified by quadrature");
    continuous->add_option("--a", ca, "Left endpoint, > 0")->required();
    continuous->add_option("--b", cb, "Right endpoint, > a")->required();
    continuous->add_flag("--verify", cverify, "Check the equality case by quadrature");
    continuous->add_option("--quad_tol", cquad_tol, "Quadrature tolerance")
        ->default_val(1e-10);
    continuous->add_option("--format", cformat, "json|csv")->default_val("json");
    continuous->callback([&] { rc = cmd_continuous(ca, cb, cverify, cquad_tol, cformat); });

    // discrete
    std::size_t dn = 0;
    std::string dmethod = "all", dformat = "json";
    auto* discrete = app.add_subcommand(
        "discrete", "Finite-section constant d_n by one or all routes");
    discrete->add_option("--n", dn, "Section size, >= 1")->required()
        ->check(CLI::PositiveNumber);
    discrete->add_option("--method", dmethod, "eigen|hahn|rayleigh|certificate|bounds|all")
        ->default_val("all")
        ->check(CLI::IsMember({"eigen", "hahn", "rayleigh", "certificate", "bounds", "all"}));
    discrete->add_option("--format", dformat, "json|csv")->default_val("json");
    discrete->callback([&] { rc = cmd_discrete(dn, dmethod, dformat); });

    // alpha
    double aL = 0.0;
    std::string aformat = "json";
    auto* alpha = app.add_subcommand("alpha", "Characteristic root for log-length L");
    alpha->add_option("--L", aL, "Logarithmic length, > 0")->required();
    alpha->add_option("--format", aformat, "json|csv")->default_val("json");
    alpha->callback([&] { rc = cmd_alpha(aL, aformat); });

    // hahn
    std::size_t hn = 0;
    std::string hformat = "json";
    auto* hahn = app.add_subcommand(
        "hahn", "Smallest dual-Hahn zero and the constant it determines");
    hahn->add_option("--n", hn, "Degree, >= 1")->required()
        ->check(CLI::PositiveNumber);
    hahn->add_option("--format", hformat, "json|csv")->default_val("json");
    hahn->callback([&] { rc = cmd_hahn(hn, hformat); });

    // asym
    std::size_t yn = 0;
    double yx = 0.0;
    std::string yformat = "json";
    auto* asym = app.add_subcommand("asym", "Asymptotic laws for large n");
    asym->add_option("--n", yn, "Section size, >= 2")->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    auto* xopt = asym->add_option("--x", yx, "Also evaluate the gamma-ratio argument slope at x");
    asym->add_option("--format", yformat, "json|csv")->default_val("json");
    asym->callback([&] { rc = cmd_asym(yn, yx, xopt->count() > 0, yformat); });

    // sweep
    std::size_t sn_start = 0, sn_end = 0, spoints = 0;
    bool slog = false;
    std::string sout, sformat = "json";
    auto* sweep = app.add_subcommand("sweep", "CSV sweep of all d_n routes over n");
    sweep->add_option("--n_start", sn_start, "First n, >= 1")->required();
    sweep->add_option("--n_end", sn_end, "Last n, > n_start")->required();
    sweep->add_option("--points", spoints, "Number of sample points, >= 2")->required();
    sweep->add_flag("--log_spaced", slog, "Log-uniform spacing of n");
    sweep->add_option("--out", sout, "Output CSV path")->required();
    sweep->add_option("--format", sformat, "json|csv")->default_val("json");
    sweep->callback([&] { rc = cmd_sweep(sn_start, sn_end, spoints, slog, sout, sformat); });

    // verify-all
    std::string vlevel = "fast", vformat = "json";
    auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance criteria");
    verify_all->add_option("--level", vlevel, "fast|full")->default_val("fast")
        ->check(CLI::IsMember({"fast", "full"}));
    verify_all->add_option("--format", vformat, "json|csv")->default_val("json");
    verify_all->callback([&] { rc = cmd_verify_all(vlevel, vformat); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const hardy::ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const hardy::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
