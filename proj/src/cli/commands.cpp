#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "wgamma/cauchy.hpp"
#include "wgamma/compare.hpp"
#include "wgamma/density_curve.hpp"
#include "wgamma/moments.hpp"
#include "wgamma/parallel.hpp"
#include "wgamma/params.hpp"
#include "wgamma/rational.hpp"
#include "wgamma/support.hpp"
#include "wgamma/wishart.hpp"

namespace wgamma::cli {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    return os;
}

void write_or_print(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
    } else {
        auto os = open_out(path);
        os << payload;
    }
}

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

int run_moments(const MomentsOptions& opt) {
    Rational m = parse_rational(opt.m), n = parse_rational(opt.n);
    if (m < 0) throw std::invalid_argument("--m must be >= 0");
    if (n < 1) throw std::invalid_argument("--n must be >= 1");
    if (opt.p < 1 || opt.p > nc::kPMax)
        throw std::invalid_argument("--p must lie in [1, " + std::to_string(nc::kPMax) + "]");

    auto series = nc::mgf_series(m, n, opt.p);
    auto cumulant = nc::moments_from_cumulants(nc::free_cumulants(opt.p, m, n));
    std::vector<Rational> enumeration(opt.p), profile(opt.p);
    for (int p = 1; p <= opt.p; ++p) {
        enumeration[p - 1] = nc::moment_enum(p, m, n);
        profile[p - 1] = nc::moment_from_profiles(nc::profile_counts(p), m, n);
    }

    bool agree = true;
    for (int p = 1; p <= opt.p; ++p)
        agree = agree && enumeration[p - 1] == profile[p - 1] &&
                enumeration[p - 1] == series[p] && enumeration[p - 1] == cumulant[p - 1];

    std::ostringstream os;
    if (opt.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (int p = 1; p <= opt.p; ++p)
            arr.push_back({{"p", p},
                           {"m", to_decimal_string(m)},
                           {"n", to_decimal_string(n)},
                           {"value", to_decimal_string(enumeration[p - 1])}});
        os << arr.dump(2) << "\n";
    } else {
        os << "  p  enumeration  profile  mgf  cumulant\n";
        for (int p = 1; p <= opt.p; ++p)
            os << "  " << p << "  " << to_decimal_string(enumeration[p - 1]) << "  "
               << to_decimal_string(profile[p - 1]) << "  " << to_decimal_string(series[p]) << "  "
               << to_decimal_string(cumulant[p - 1]) << "\n";
        os << "routes-agree: " << (agree ? "yes" : "NO") << "\n";
    }
    write_or_print(opt.out, os.str());

    if (!agree) throw std::runtime_error("moment routes disagree");
    return 0;
}

namespace {

std::string density_gnuplot(const std::string& csv, const DensityCurve& curve) {
    std::ostringstream os;
    os << "# density of the limit law, m=" << curve.params.m << " n=" << curve.params.n << "\n"
       << "set datafile separator ','\n"
       << "set xlabel 'x'\nset ylabel 'density'\nset key top right\n"
       << "set style fill solid 0.25\n"
       << "plot '" << csv << "' skip 2 using 1:2 with filledcurves y1=0 lc rgb '#1f77b4' "
       << "title sprintf('m=%g, n=%g', " << curve.params.m << ", " << curve.params.n << ")";
    if (curve.atom > 0)
        os << ", \\\n     '-' using 1:2 with impulses lw 3 lc rgb '#d62728' title 'atom'\n0 "
           << curve.atom << "\ne\n";
    else
        os << "\n";
    os << "pause -1\n";
    return os.str();
}

std::string sweep_gnuplot(const std::string& csv) {
    std::ostringstream os;
    os << "# support phase diagram over the (m, n) plane\n"
       << "set datafile separator ','\n"
       << "set xlabel 'm'\nset ylabel 'n'\nset key outside\n"
       << "h(x) = x/4 + 1/x\n"
       << "labels = 'A1 A2 B C D'\n"
       << "plot for [i=1:5] '" << csv
       << "' skip 1 using 1:(strcol(3) eq word(labels, i) ? $2 : NaN) "
       << "with points pt 7 ps 0.6 title word(labels, i), \\\n"
       << "     h(x) lw 2 lc rgb 'black' title 'n = m/4 + 1/m'\n"
       << "pause -1\n";
    return os.str();
}

}  // namespace

int run_density(const DensityOptions& opt) {
    Params params(opt.m, opt.n);
    if (opt.points < 2 || opt.points > 1'000'000)
        throw std::invalid_argument("--points must lie in [2, 1000000]");
    if (opt.pad < 0) throw std::invalid_argument("--pad must be >= 0");

    auto curve = build_density_curve(params, opt.points, opt.pad);
    std::ostringstream os;
    write_csv(curve, os);
    write_or_print(opt.out, os.str());
    if (!opt.gnuplot.empty()) {
        auto gp = open_out(opt.gnuplot);
        gp << density_gnuplot(opt.out.empty() ? "density.csv" : opt.out, curve);
    }
    return 0;
}

int run_classify(const ClassifyOptions& opt) {
    Params params(opt.m, opt.n);
    auto edges = support::support_edges(params);
    auto pos = support::is_positive_support(params);

    std::ostringstream os;
    os << "m=" << format17(opt.m) << " n=" << format17(opt.n) << "\n";
    if (pos.mp_case) {
        os << "region: MP (n=1: Marchenko-Pastur specialization)\n";
    } else {
        try {
            auto c = support::classify_region(params);
            os << "region: " << support::to_string(c.region);
            if (c.on_g_boundary || c.on_h_boundary) os << " (near a boundary curve)";
            os << "\n";
        } catch (const support::BoundaryError&) {
            os << "region: boundary (within tolerance of a region curve)\n";
        }
    }
    os << "positive support: " << (pos.positive ? "yes" : "no") << "\n";
    os << "atom mass: " << format17(atom_mass(params)) << "\n";
    os << "support edges:";
    for (double e : edges) os << " " << format17(e);
    os << "\n";
    std::cout << os.str();
    return 0;
}

int run_sweep(const SweepOptions& opt) {
    if (opt.m_steps < 1 || opt.n_steps < 1)
        throw std::invalid_argument("--m-steps/--n-steps must be >= 1");
    if (!(opt.m_min > 0) || opt.m_max < opt.m_min)
        throw std::invalid_argument("--m-min must be > 0 and --m-max >= --m-min");
    if (!(opt.n_min > 1) || opt.n_max < opt.n_min)
        throw std::invalid_argument("--n-min must be > 1 and --n-max >= --n-min");
    if (opt.out.empty()) throw std::invalid_argument("--out is required for sweep");

    int total = opt.m_steps * opt.n_steps;
    std::vector<std::string> rows(total);
    parallel_for(total, [&](int idx) {
        int i = idx / opt.n_steps, j = idx % opt.n_steps;
        double m = opt.m_steps == 1
                       ? opt.m_min
                       : opt.m_min + (opt.m_max - opt.m_min) * i / (opt.m_steps - 1);
        double n = opt.n_steps == 1
                       ? opt.n_min
                       : opt.n_min + (opt.n_max - opt.n_min) * j / (opt.n_steps - 1);
        Params params(m, n);
        std::string label;
        try {
            label = support::to_string(support::classify_region(params).region);
        } catch (const support::BoundaryError&) {
            label = "boundary";
        }
        auto edges = support::support_edges(params);
        std::ostringstream row;
        row << format17(m) << "," << format17(n) << "," << label << ","
            << (support::is_positive_support(params).positive ? "true" : "false");
        for (std::size_t k = 0; k < 4; ++k)
            row << "," << (k < edges.size() ? format17(edges[k]) : "");
        rows[idx] = row.str();
    });

    auto os = open_out(opt.out);
    os << "m,n,label,positive,edge_1,edge_2,edge_3,edge_4\n";
    for (const auto& r : rows) os << r << "\n";
    if (!opt.gnuplot.empty()) {
        auto gp = open_out(opt.gnuplot);
        gp << sweep_gnuplot(opt.out);
    }
    return 0;
}

int run_simulate(const SimulateOptions& opt) {
    rmt::WishartConfig cfg(opt.d, opt.n, opt.m, opt.seed);
    if (opt.samples < 1) throw std::invalid_argument("--samples must be >= 1");
    if (opt.out.empty()) throw std::invalid_argument("--out is required for simulate");

    auto samples = rmt::run_samples(cfg, opt.samples);
    {
        auto os = open_out(opt.out);
        rmt::write_spectra_csv(samples, os);
    }
    {
        auto os = open_out(opt.out + ".json");
        os << rmt::spectra_sidecar(cfg, opt.samples).dump(2) << "\n";
    }
    if (!opt.hist.empty()) {
        // bin range: padded hull of the analytic support for easy overlay
        Params params(static_cast<double>(opt.m), static_cast<double>(opt.n));
        auto edges = support::support_edges(params);
        double lo = edges.front(), hi = edges.back();
        double pad = 0.05 * (hi - lo);
        auto os = open_out(opt.hist);
        rmt::write_histogram_csv(samples, opt.bins, lo - pad, hi + pad, os);
    }
    return 0;
}

int run_compare(const CompareOptions& opt) {
    rmt::WishartConfig cfg(opt.d, opt.n, opt.m, opt.seed);
    if (opt.samples < 2) throw std::invalid_argument("--samples must be >= 2");
    if (opt.p < 1 || opt.p > 8) throw std::invalid_argument("--p must lie in [1, 8]");

    auto report = rmt::compare_report(cfg, opt.samples, opt.p);
    std::cout << rmt::format_table(report);
    if (!opt.out.empty()) {
        auto os = open_out(opt.out);
        rmt::write_csv(report, os);
    }
    return 0;
}

}  // namespace wgamma::cli
