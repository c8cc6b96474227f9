#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path cap = fs::temp_directory_path() / ("wgamma_cli_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(WGAMMA_CLI_BIN) + " " + args + " > " + cap.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(cap)};
    fs::remove(cap);
    return r;
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("moments prints Catalan values and the agreement flag") {
    auto r = run("moments --m 1 --n 1 --p 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("14") != std::string::npos);
    CHECK(r.out.find("routes-agree: yes") != std::string::npos);
}

TEST_CASE("moments json schema") {
    auto r = run("moments --m 2.5 --n 1 --p 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"m\": \"2.5\"") != std::string::npos);
    CHECK(r.out.find("\"value\": \"8.75\"") != std::string::npos);  // m^2 + mn = 6.25 + 2.5
}

TEST_CASE("classify reports the pinned examples") {
    auto r = run("classify --m 8 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("region: D") != std::string::npos);
    CHECK(r.out.find("positive support: yes") != std::string::npos);

    auto r2 = run("classify --m 7 --n 2");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("positive support: no") != std::string::npos);

    auto r3 = run("classify --m 2 --n 1");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("Marchenko-Pastur") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2 and name the problem") {
    CHECK(run("moments --m 1 --n 1 --bogus 3").exit_code == 2);
    CHECK(run("moments --m notanumber --n 1").exit_code == 2);
    CHECK(run("density --m 1 --n 0.5").exit_code == 2);
    CHECK(run("simulate --m 1 --n 1 --d 5000 --out /tmp/x.csv").exit_code == 2);
    auto r = run("moments --m 1 --n 1 --p 99");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("--p") != std::string::npos);
}

TEST_CASE("density output is byte-identical across runs") {
    auto a = tmp("wg_den_a.csv"), b = tmp("wg_den_b.csv");
    CHECK(run("density --m 1 --n 2 --points 128 --out " + a.string()).exit_code == 0);
    CHECK(run("density --m 1 --n 2 --points 128 --out " + b.string()).exit_code == 0);
    auto sa = slurp(a), sb = slurp(b);
    CHECK(sa == sb);
    CHECK(sa.rfind("# {", 0) == 0);
    std::size_t rows = 0;
    for (char c : sa) rows += (c == '\n');
    CHECK(rows == 128 + 2);
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("sweep covers the requested grid exactly") {
    auto out = tmp("wg_sweep.csv");
    CHECK(run("sweep --m-min 0.5 --m-max 6 --m-steps 7 --n-min 1.2 --n-max 3 --n-steps 5 --out " +
              out.string())
              .exit_code == 0);
    auto s = slurp(out);
    std::size_t rows = 0;
    for (char c : s) rows += (c == '\n');
    CHECK(rows == 7 * 5 + 1);
    CHECK(s.rfind("m,n,label,positive,edge_1,edge_2,edge_3,edge_4\n", 0) == 0);
    fs::remove(out);
}

TEST_CASE("simulate is seed-reproducible with sidecar metadata") {
    auto a = tmp("wg_sim_a.csv"), b = tmp("wg_sim_b.csv");
    std::string base = "simulate --m 2 --n 2 --d 12 --samples 3 --seed 99 --out ";
    CHECK(run(base + a.string()).exit_code == 0);
    CHECK(run(base + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("sample_id,index,value\n", 0) == 0);

    auto sidecar = slurp(fs::path(a.string() + ".json"));
    CHECK(sidecar.find("\"seed\": 99") != std::string::npos);
    CHECK(sidecar.find("\"num_samples\": 3") != std::string::npos);

    auto c = tmp("wg_sim_c.csv");
    CHECK(run("simulate --m 2 --n 2 --d 12 --samples 3 --seed 100 --out " + c.string())
              .exit_code == 0);
    CHECK(slurp(a) != slurp(c));
    for (auto p : {a, b, c}) {
        fs::remove(p);
        fs::remove(fs::path(p.string() + ".json"));
    }
}

TEST_CASE("compare emits the z table") {
    auto r = run("compare --m 2 --n 2 --d 24 --samples 6 --p 2 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("analytic") != std::string::npos);
    CHECK(r.out.find("smallest eigenvalue") != std::string::npos);
}

TEST_CASE("gnuplot scripts are emitted next to the data") {
    auto csv = tmp("wg_gp.csv"), gp = tmp("wg_gp.gp");
    CHECK(run("density --m 0.25 --n 2 --points 32 --out " + csv.string() + " --gnuplot " +
              gp.string())
              .exit_code == 0);
    auto s = slurp(gp);
    CHECK(s.find("plot '") != std::string::npos);
    CHECK(s.find("atom") != std::string::npos);  // (0.25, 2) carries an atom
    fs::remove(csv);
    fs::remove(gp);
}
