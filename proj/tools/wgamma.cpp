#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.hpp"

using namespace wgamma::cli;

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of block-transposed Wishart matrices"};
    app.require_subcommand(1);

    MomentsOptions mo;
    auto* moments = app.add_subcommand("moments", "exact limit moments by four routes");
    moments->add_option("--m", mo.m, "parameter m (decimal or fraction)")->required();
    moments->add_option("--n", mo.n, "parameter n (decimal or fraction)")->required();
    moments->add_option("--p", mo.p, "highest moment order");
    moments->add_flag("--json", mo.json, "emit JSON instead of the table");
    moments->add_option("--out", mo.out, "output file (default stdout)");

    DensityOptions de;
    auto* density = app.add_subcommand("density", "density curve CSV via Stieltjes inversion");
    density->add_option("--m", de.m, "parameter m")->required();
    density->add_option("--n", de.n, "parameter n")->required();
    density->add_option("--points", de.points, "grid size");
    density->add_option("--pad", de.pad, "relative padding beyond the support");
    density->add_option("--out", de.out, "output CSV (default stdout)");
    density->add_option("--gnuplot", de.gnuplot, "also write a gnuplot script");

    ClassifyOptions cl;
    auto* classify = app.add_subcommand("classify", "support region and positivity");
    classify->add_option("--m", cl.m, "parameter m")->required();
    classify->add_option("--n", cl.n, "parameter n")->required();

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "phase-diagram CSV over an (m, n) grid");
    sweep->add_option("--m-min", sw.m_min, "smallest m");
    sweep->add_option("--m-max", sw.m_max, "largest m");
    sweep->add_option("--m-steps", sw.m_steps, "grid points in m");
    sweep->add_option("--n-min", sw.n_min, "smallest n");
    sweep->add_option("--n-max", sw.n_max, "largest n");
    sweep->add_option("--n-steps", sw.n_steps, "grid points in n");
    sweep->add_option("--out", sw.out, "output CSV")->required();
    sweep->add_option("--gnuplot", sw.gnuplot, "also write a gnuplot script");

    SimulateOptions si;
    auto* simulate = app.add_subcommand("simulate", "sample spectra of m W^Gamma");
    simulate->add_option("--m", si.m, "integer parameter m")->required();
    simulate->add_option("--n", si.n, "integer parameter n")->required();
    simulate->add_option("--d", si.d, "block dimension d")->required();
    simulate->add_option("--samples", si.samples, "number of samples");
    simulate->add_option("--seed", si.seed, "RNG seed");
    simulate->add_option("--out", si.out, "spectra CSV (sidecar JSON beside it)")->required();
    simulate->add_option("--hist", si.hist, "also write a histogram CSV");
    simulate->add_option("--bins", si.bins, "histogram bin count");

    CompareOptions co;
    auto* compare = app.add_subcommand("compare", "empirical vs exact moments (z-scores)");
    compare->add_option("--m", co.m, "integer parameter m")->required();
    compare->add_option("--n", co.n, "integer parameter n")->required();
    compare->add_option("--d", co.d, "block dimension d");
    compare->add_option("--samples", co.samples, "number of samples");
    compare->add_option("--p", co.p, "highest moment order");
    compare->add_option("--seed", co.seed, "RNG seed");
    compare->add_option("--out", co.out, "also write the table as CSV");

    try {
        app.parse(argc, argv);
        if (*moments) return run_moments(mo);
        if (*density) return run_density(de);
        if (*classify) return run_classify(cl);
        if (*sweep) return run_sweep(sw);
        if (*simulate) return run_simulate(si);
        if (*compare) return run_compare(co);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
