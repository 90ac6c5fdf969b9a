// cli_test.cpp — end-to-end checks of the command-line interface
// (the binary path arrives as the last command-line argument)

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;

int run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " > /tmp/qr_cli_stdout.txt 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("validate subcommand passes") {
    CHECK(run("validate") == 0);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("nonsense") == 1);
    CHECK(run("css --cutoff wedge --out /tmp/qr_x.csv") == 1);
    CHECK(run("sweep --sweep-N 10,20,30 --sweep-x 0:1:5 --out /tmp/qr_x.csv") == 1);
    CHECK(run("sweep --out /tmp/qr_x.csv") == 1);
    CHECK(run("css --state oats --out /tmp/qr_x.csv") == 1);
}

TEST_CASE("numerical failures exit with code 2") {
    // cross-cluster oscillation just below the decorrelation clamp cannot be
    // resolved within the subdivision budget
    CHECK(run("coeffs --regime even-odd --x 999 --grid 3 --t-lo 5 --t-hi 10 "
              "--out /tmp/qr_div.csv") == 2);
}

TEST_CASE("monte carlo runs are byte-identical across invocations") {
    const std::string flags =
        "ghz-rc --N 12 --eta 0.1 --K 4 --seed 7 --s 3 --cutoff gauss --grid 6 "
        "--t-lo 0.05 --t-hi 1 --out /tmp/qr_a.csv";
    CHECK(run(flags) == 0);
    const auto a = slurp("/tmp/qr_a.csv");
    CHECK(run(flags) == 0);
    CHECK(!a.empty());
    CHECK(a == slurp("/tmp/qr_a.csv"));
    CHECK(a.find('\r') == std::string::npos); // LF line endings
    CHECK(a.find("t,delta_b_mc_sqrtT,sigma_sqrtT,delta_b_eta0_sqrtT") !=
          std::string::npos);
}

TEST_CASE("rerunning from the emitted manifest reproduces the file") {
    CHECK(run("css --N 60 --regime collective --s 3 --cutoff exp --grid 12 "
              "--t-lo 0.01 --t-hi 1 --out /tmp/qr_c.csv") == 0);
    const auto first = slurp("/tmp/qr_c.csv");
    CHECK(run("css --config /tmp/qr_c.csv.manifest.json") == 0);
    CHECK(first == slurp("/tmp/qr_c.csv"));
    // flags still override config values
    CHECK(run("css --config /tmp/qr_c.csv.manifest.json --out /tmp/qr_d.csv") == 0);
    const auto second = slurp("/tmp/qr_d.csv");
    // same rows; the manifest hash line differs because `out` differs
    CHECK(first.substr(first.find('\n')) == second.substr(second.find('\n')));
}

TEST_CASE("qni prints both the enumerated and closed-form counts") {
    CHECK(run("qni --regime even-odd --N 4 --out /tmp/qr_q.csv") == 0);
    const auto csv = slurp("/tmp/qr_q.csv");
    CHECK(csv.find("regime,N,enumerated,formula") != std::string::npos);
    CHECK(csv.find("even-odd,4,56,72") != std::string::npos);
    CHECK(run("qni --regime general --N 6 --out /tmp/qr_q2.csv") == 0);
    CHECK(slurp("/tmp/qr_q2.csv").find("general,6,128,128") != std::string::npos);
}

TEST_CASE("csv floats use 12 significant digits in scientific notation") {
    CHECK(run("coeffs --grid 3 --t-lo 0.1 --t-hi 1 --out /tmp/qr_e.csv") == 0);
    const auto csv = slurp("/tmp/qr_e.csv");
    CHECK(csv.find("e-") != std::string::npos);
    // a mantissa with 11 fractional digits
    CHECK(csv.find("1.00000000000e-01") != std::string::npos);
}

TEST_CASE("even-odd optimum sweep emits one row per separation") {
    CHECK(run("css --regime even-odd --N 2000 --s 3 --alpha 1 --cutoff exp "
              "--sweep-x 0:1:5 --T 1 --t-lo 0.002 --t-hi 0.05 --grid 24 "
              "--out /tmp/qr_sx.csv") == 0);
    const auto csv = slurp("/tmp/qr_sx.csv");
    CHECK(csv.find("x,tau_opt,delta_b_opt_sqrtT") != std::string::npos);
    int rows = -2; // discount comment and header lines
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == 5);
}

TEST_CASE("sweep with fit emits exponents") {
    CHECK(run("sweep --state css --regime collective --sweep-N 200,400,800 "
              "--grid 40 --t-lo 0.005 --t-hi 1 --fit --out /tmp/qr_f.csv") == 0);
    const auto fit = slurp("/tmp/qr_f.csv.fit.json");
    CHECK(fit.find("exponent") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests [doctest args] <cli binary>\n");
        return 64;
    }
    g_cli = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
