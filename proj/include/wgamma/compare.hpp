#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "wgamma/cauchy.hpp"
#include "wgamma/density_curve.hpp"
#include "wgamma/moments.hpp"
#include "wgamma/params.hpp"
#include "wgamma/wishart.hpp"

namespace wgamma::rmt {

struct MomentRow {
    int p;
    double analytic;
    double empirical_mean;
    double bootstrap_se;
    double z;
    double rms_dev;  // root mean square of per-sample deviation from analytic
};

struct CompareReport {
    WishartConfig config;
    int num_samples;
    int p_max;
    std::vector<MomentRow> rows;
    double smallest_mean;    // mean over samples of the smallest eigenvalue
    double smallest_min;     // min over samples
    double support_infimum;  // infimum of the limit measure's support
};

/// Infimum of the support: leftmost carrier interval, pulled to 0 when the
/// measure has an atom there.
inline double support_infimum(const Params& p) {
    StieltjesDensity rho(p);
    auto intervals = detail::carrier_intervals(rho);
    double inf = intervals.empty() ? 0.0 : intervals.front().first;
    if (atom_mass(p) > 0) inf = std::min(inf, 0.0);
    return inf;
}

/// Empirical moments of m W^Gamma against the exact limit values, with
/// bootstrap standard errors and z-scores; the smallest eigenvalue is
/// summarized but not tested.
inline CompareReport compare_report(const WishartConfig& cfg, int num_samples, int p_max) {
    if (num_samples < 2) throw std::domain_error("compare_report: need at least 2 samples");
    auto samples = run_samples(cfg, num_samples);

    std::vector<std::vector<double>> per_sample(num_samples);
    parallel_for(num_samples, [&](int i) { per_sample[i] = empirical_moments(samples[i], p_max); });

    CompareReport report{cfg, num_samples, p_max, {}, 0, 0, 0};
    Rational m(cfg.m), n(cfg.n);
    auto boot_rng = CounterRng::stream(cfg.seed, 0x626f6f74u);  // separate resampling stream
    const int boots = 1000;

    for (int p = 1; p <= p_max; ++p) {
        MomentRow row{};
        row.p = p;
        row.analytic = nc::moment_enum(p, m, n).convert_to<double>();

        double mean = 0, rms = 0;
        for (const auto& v : per_sample) {
            mean += v[p - 1];
            rms += (v[p - 1] - row.analytic) * (v[p - 1] - row.analytic);
        }
        mean /= num_samples;
        row.empirical_mean = mean;
        row.rms_dev = std::sqrt(rms / num_samples);

        double acc = 0, acc2 = 0;
        for (int b = 0; b < boots; ++b) {
            double bm = 0;
            for (int s = 0; s < num_samples; ++s)
                bm += per_sample[boot_rng.next_u64() % num_samples][p - 1];
            bm /= num_samples;
            acc += bm;
            acc2 += bm * bm;
        }
        double var = acc2 / boots - (acc / boots) * (acc / boots);
        row.bootstrap_se = std::sqrt(var > 0 ? var : 0);
        row.z = row.bootstrap_se > 0 ? (mean - row.analytic) / row.bootstrap_se : 0.0;
        report.rows.push_back(row);
    }

    double sm = 0, smin = samples.front().smallest;
    for (const auto& s : samples) {
        sm += s.smallest;
        smin = std::min(smin, s.smallest);
    }
    report.smallest_mean = sm / num_samples;
    report.smallest_min = smin;
    report.support_infimum =
        support_infimum(Params(static_cast<double>(cfg.m), static_cast<double>(cfg.n)));
    return report;
}

inline std::string format_table(const CompareReport& r) {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf, "d=%d n=%d m=%d seed=%llu samples=%d\n", r.config.d, r.config.n,
                  r.config.m, static_cast<unsigned long long>(r.config.seed), r.num_samples);
    out += buf;
    out += "  p        analytic       empirical    bootstrap_se        z\n";
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%3d %15.8g %15.8g %15.3g %8.2f\n", row.p, row.analytic,
                      row.empirical_mean, row.bootstrap_se, row.z);
        out += buf;
    }
    std::snprintf(buf, sizeof buf,
                  "smallest eigenvalue: mean %.8g, min %.8g; support infimum %.8g (gap %.3g)\n",
                  r.smallest_mean, r.smallest_min, r.support_infimum,
                  r.smallest_mean - r.support_infimum);
    out += buf;
    return out;
}

inline void write_csv(const CompareReport& r, std::ostream& os) {
    os << "p,analytic,empirical_mean,bootstrap_se,z,rms_dev\n";
    char buf[256];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g", row.p, row.analytic,
                      row.empirical_mean, row.bootstrap_se, row.z, row.rms_dev);
        os << buf << "\n";
    }
}

}  // namespace wgamma::rmt
