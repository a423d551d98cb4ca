#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jacmom/jacmom.hpp"

namespace {

using namespace jacmom;

Rational parse_rational(const std::string& text, const char* what) {
    try {
        return Rational(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(what) + " '" + text +
                                    "': " + e.what());
    }
}

long parse_integer(const std::string& text, const char* what) {
    Rational v = parse_rational(text, what);
    if (!v.is_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer, got '" +
                                    text + "'");
    return v.to_long();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
        std::cerr << "wrote " << out_path << "\n";
    }
}

CoeffTable table_for(const LimitParams& lp, long need_n, Route route,
                     int threads, const std::string& coeff_file,
                     const std::string& cache_dir) {
    if (!coeff_file.empty()) {
        auto loaded = load_coeff_table(coeff_file);
        if (!loaded)
            throw std::invalid_argument("cannot read coefficient file: " +
                                        coeff_file);
        if (!(loaded->params() == lp))
            throw std::invalid_argument(
                "coefficient file was computed at " + loaded->params().str() +
                ", not " + lp.str());
        if (loaded->n_max() < need_n)
            throw std::invalid_argument("coefficient file covers n <= " +
                                        std::to_string(loaded->n_max()) +
                                        " only");
        return *loaded;
    }
    return ensure_coeff_table(lp, need_n, route, resolve_threads(threads),
                              cache_dir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact moments of the Hermitian Jacobi process and of its "
        "large-size limit"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string format_name = "pretty";
    app.add_option("--format", format_name, "output format: json|csv|pretty")
        ->capture_default_str();
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file");
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    std::string cache_dir = cache_dir_from_env();
    app.add_option("--cache-dir", cache_dir,
                   "coefficient cache directory (defaults to $JACMOM_CACHE_DIR)");

    // finite
    auto* fin = app.add_subcommand(
        "finite", "exact finite-size moment E tr(J^n) at half-integer sizes");
    long fin_n = 1;
    std::string fin_m, fin_p, fin_d;
    std::vector<double> fin_t = {0.0, 1.0};
    fin->add_option("--n", fin_n, "moment order")->required();
    fin->add_option("--m", fin_m, "corner height m (rational, integer >= 1)")
        ->required();
    fin->add_option("--p", fin_p, "corner width p (rational, 2p integer)")
        ->required();
    fin->add_option("--d", fin_d, "unitary group size d (rational)")->required();
    fin->add_option("--t", fin_t, "evaluation times")
        ->delimiter(',')
        ->capture_default_str();

    // limit
    auto* lim = app.add_subcommand(
        "limit", "large-size limit of the normalized moment E tr(J^n)/m");
    long lim_n = 1;
    std::string lim_lambda, lim_theta, lim_route = "division", lim_coeff_file;
    std::vector<double> lim_t = {0.0, 1.0};
    lim->add_option("--n", lim_n, "moment order")->required();
    lim->add_option("--lambda", lim_lambda, "corner aspect ratio in (0,1]")
        ->required();
    lim->add_option("--theta", lim_theta, "width fraction in (0,1)")->required();
    lim->add_option("--t", lim_t, "evaluation times")
        ->delimiter(',')
        ->capture_default_str();
    lim->add_option("--route", lim_route,
                    "coefficient route: division|symmetric|recurrence")
        ->capture_default_str();
    lim->add_option("--coeff-file", lim_coeff_file,
                    "use a previously exported coefficient table");

    // coeff
    auto* cof = app.add_subcommand(
        "coeff", "limit coefficient table c(n,h,l) for all n <= n_max");
    long cof_nmax = 4;
    std::string cof_lambda, cof_theta, cof_route = "division";
    cof->add_option("--nmax", cof_nmax, "largest moment order")->required();
    cof->add_option("--lambda", cof_lambda, "corner aspect ratio in (0,1]")
        ->required();
    cof->add_option("--theta", cof_theta, "width fraction in (0,1)")->required();
    cof->add_option("--route", cof_route,
                    "division|symmetric|recurrence|closed-form")
        ->capture_default_str();

    // verify
    auto* ver = app.add_subcommand("verify", "run a self-check suite");
    std::string ver_suite = "all";
    ver->add_option("suite", ver_suite,
                    "gauss|carlitz|chu|routes|cancellation|closed-form|"
                    "half-table|golden|convergence|corollary|biane|mc|all")
        ->capture_default_str();

    // simulate
    auto* sim = app.add_subcommand(
        "simulate", "Monte Carlo moments from Brownian motion on U(d)");
    MCConfig cfg;
    long sim_nmax = 2;
    sim->add_option("--d", cfg.d, "unitary group size")->required();
    sim->add_option("--m", cfg.m, "corner height")->required();
    sim->add_option("--p", cfg.p, "corner width")->required();
    sim->add_option("--t", cfg.t, "process time")->required();
    sim->add_option("--steps", cfg.steps, "time steps")->required();
    sim->add_option("--samples", cfg.samples, "independent samples")->required();
    sim->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sim->add_option("--streams", cfg.streams, "logical RNG streams")
        ->capture_default_str();
    sim->add_option("--time-scale", cfg.time_scale,
                    "physical time per unit t (0 = 1/d)");
    sim->add_option("--nmax", sim_nmax, "largest moment order")
        ->capture_default_str();

    // table
    auto* tab = app.add_subcommand(
        "table", "plot-ready CSV of moment values over a time grid");
    std::string tab_kind = "limit";
    long tab_nmax = 4;
    std::string tab_m, tab_p, tab_d, tab_lambda, tab_theta,
        tab_route = "division", tab_coeff_file;
    double tab_tmin = 0.0, tab_tmax = 5.0;
    long tab_points = 101;
    tab->add_option("--kind", tab_kind, "finite|limit")->capture_default_str();
    tab->add_option("--nmax", tab_nmax, "largest moment order")
        ->capture_default_str();
    tab->add_option("--m", tab_m, "corner height (finite)");
    tab->add_option("--p", tab_p, "corner width (finite)");
    tab->add_option("--d", tab_d, "unitary group size (finite)");
    tab->add_option("--lambda", tab_lambda, "corner aspect ratio (limit)");
    tab->add_option("--theta", tab_theta, "width fraction (limit)");
    tab->add_option("--route", tab_route, "coefficient route (limit)")
        ->capture_default_str();
    tab->add_option("--coeff-file", tab_coeff_file,
                    "use a previously exported coefficient table (limit)");
    tab->add_option("--tmin", tab_tmin, "grid start")->capture_default_str();
    tab->add_option("--tmax", tab_tmax, "grid end")->capture_default_str();
    tab->add_option("--points", tab_points, "grid size")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 0;
    }

    try {
        OutputFormat fmt = format_from_name(format_name);

        if (fin->parsed()) {
            HalfIntegerParams pr(parse_integer(fin_m, "m"),
                                 parse_rational(fin_p, "p"),
                                 parse_integer(fin_d, "d"));
            emit(render_finite(finite_moment(fin_n, pr), fin_t, fmt), out_path);
            return 0;
        }

        if (lim->parsed()) {
            LimitParams lp(parse_rational(lim_lambda, "lambda"),
                           parse_rational(lim_theta, "theta"));
            CoeffTable table = table_for(lp, lim_n, route_from_name(lim_route),
                                         threads, lim_coeff_file, cache_dir);
            emit(render_limit(limit_moment(lim_n, lp, table), lim_t, fmt),
                 out_path);
            return 0;
        }

        if (cof->parsed()) {
            LimitParams lp(parse_rational(cof_lambda, "lambda"),
                           parse_rational(cof_theta, "theta"));
            CoeffTable table =
                ensure_coeff_table(lp, cof_nmax, route_from_name(cof_route),
                                   resolve_threads(threads), cache_dir);
            emit(render_coeff_table(table, fmt), out_path);
            return 0;
        }

        if (ver->parsed()) {
            std::vector<SuiteResult> results = run_suite(ver_suite, threads);
            emit(render_suites(results), out_path);
            return suites_acceptable(results) ? 0 : 1;
        }

        if (sim->parsed()) {
            MCResult res = estimate_moments(cfg, sim_nmax, resolve_threads(threads));
            emit(render_mc(cfg, res, fmt), out_path);
            return 0;
        }

        if (tab->parsed()) {
            std::vector<double> grid = linspace(tab_tmin, tab_tmax, tab_points);
            if (tab_kind == "finite") {
                if (tab_m.empty() || tab_p.empty() || tab_d.empty())
                    throw std::invalid_argument(
                        "table --kind finite needs --m --p --d");
                HalfIntegerParams pr(parse_integer(tab_m, "m"),
                                     parse_rational(tab_p, "p"),
                                     parse_integer(tab_d, "d"));
                std::vector<FiniteMoment> fms;
                for (long n = 1; n <= tab_nmax; ++n)
                    fms.push_back(finite_moment(n, pr));
                emit(moment_table_csv(fms, grid), out_path);
                return 0;
            }
            if (tab_kind == "limit") {
                if (tab_lambda.empty() || tab_theta.empty())
                    throw std::invalid_argument(
                        "table --kind limit needs --lambda --theta");
                LimitParams lp(parse_rational(tab_lambda, "lambda"),
                               parse_rational(tab_theta, "theta"));
                CoeffTable table =
                    table_for(lp, tab_nmax, route_from_name(tab_route), threads,
                              tab_coeff_file, cache_dir);
                std::vector<LimitMoment> lms;
                for (long n = 1; n <= tab_nmax; ++n)
                    lms.push_back(limit_moment(n, lp, table));
                emit(moment_table_csv(lms, grid), out_path);
                return 0;
            }
            throw std::invalid_argument("table --kind must be finite or limit");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
