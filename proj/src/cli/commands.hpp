#pragma once

#include <cstdint>
#include <string>

namespace wgamma::cli {

struct MomentsOptions {
    std::string m, n;
    int p = 8;
    bool json = false;
    std::string out;  // empty: stdout
};

struct DensityOptions {
    double m = 1, n = 1;
    int points = 1024;
    double pad = 0.05;
    std::string out;
    std::string gnuplot;
};

struct ClassifyOptions {
    double m = 1, n = 2;
};

struct SweepOptions {
    double m_min = 0.2, m_max = 10, n_min = 1.1, n_max = 6;
    int m_steps = 40, n_steps = 40;
    std::string out;
    std::string gnuplot;
};

struct SimulateOptions {
    int m = 1, n = 1, d = 50, samples = 10, bins = 64;
    std::uint64_t seed = 0;
    std::string out;
    std::string hist;
};

struct CompareOptions {
    int m = 1, n = 1, d = 100, samples = 20, p = 4;
    std::uint64_t seed = 0;
    std::string out;
};

int run_moments(const MomentsOptions&);
int run_density(const DensityOptions&);
int run_classify(const ClassifyOptions&);
int run_sweep(const SweepOptions&);
int run_simulate(const SimulateOptions&);
int run_compare(const CompareOptions&);

}  // namespace wgamma::cli
