// Exercises the installed CLI end to end: exit codes, output formats and
// determinism. Run as: itkc_cli_tests --cli <path-to-binary>.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        std::cerr << "failed to spawn: " << command << "\n";
        std::exit(1);
    }
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << what << "\n";
    if (!ok)
        ++g_failures;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli = argv[i + 1];
    if (cli.empty()) {
        std::cerr << "usage: itkc_cli_tests --cli <path>\n";
        return 1;
    }

    auto ok = run(cli + " analyze \"C:(2,3)\" --kmax 3");
    expect(ok.exit_code == 0, "analyze exits 0 on a valid knot");
    expect(ok.output.find("fails UTP: yes") != std::string::npos, "analyze reports the verdict");
    expect(ok.output.find("(1,4)") != std::string::npos, "analyze lists the k <= 3 cablings");

    auto json = run(cli + " analyze \"C:(2,3),(7,2)\" --kmax 9 --format json");
    expect(json.exit_code == 0, "json analyze exits 0");
    expect(json.output.rfind("{", 0) == 0, "json analyze emits a JSON object");
    expect(json.output.find("\"tbbar\": \"9\"") != std::string::npos,
           "json analyze carries integers as strings");

    auto mixed = run(cli + " analyze \"C:(-2,3)\"");
    expect(mixed.exit_code == 0, "analyze exits 0 on a mixed-sign knot");
    expect(mixed.output.find("unsupported regime") != std::string::npos,
           "analyze marks positive-only sections");

    expect(run(cli + " tori \"C:(-2,3)\"").exit_code == 1,
           "tori exits 1 outside the regime");
    expect(run(cli + " slice \"C:(-2,3)\"").exit_code == 1,
           "slice exits 1 outside the regime");
    expect(run(cli + " cablings \"C:(-2,3)\"").exit_code == 1,
           "cablings exits 1 outside the regime");
    expect(run(cli + " analyze \"C:(2,4)\"").exit_code == 2,
           "validation failures exit 2");
    expect(run(cli + " analyze \"garbage\"").exit_code == 2, "parse failures exit 2");
    expect(run(cli + " analyze").exit_code == 2, "missing arguments exit 2");

    auto tsv1 = run(cli + " tori \"C:(2,3)\" --kmax 50 --format tsv");
    auto tsv2 = run(cli + " tori \"C:(2,3)\" --kmax 50 --format tsv");
    expect(tsv1.exit_code == 0 && tsv1.output == tsv2.output,
           "tsv catalogs are bit-identical across runs");
    expect(tsv1.output.rfind("r\tk\tslope_cprime", 0) == 0, "tsv catalog header");

    auto slice = run(cli + " slice \"C:(2,3),(7,2)\"");
    expect(slice.output ==
               "tb\trot\tlabel\n7\t-2\tLtilde_2^-\n7\t2\tLtilde_2^+\n0\t-9\tL_2^-\n0\t9\tL_2^+\n",
           "slice defaults to the tsv point list");
    auto chained = run(cli + " slice \"C:(2,3),(7,2)\" --chain");
    expect(chained.output.size() > slice.output.size() &&
               chained.output.find("S+^3") != std::string::npos,
           "--chain expands the stabilization chains");

    auto verify = run(cli + " verify --ranges \"r<=3,q<=4,p<=7,k<=40,cases<=40\"");
    expect(verify.exit_code == 0, "verify exits 0 on default-style ranges");
    expect(verify.output.find("r<=3,q<=4,p<=7,k<=40,cases<=40") != std::string::npos,
           "verify echoes the ranges in the report");

    auto fault = run("env ITKC_INJECT_FAULT=gcd_reduction " + cli +
                     " verify --ranges \"r<=2,q<=3,p<=5,k<=20,cases<=10\"");
    expect(fault.exit_code == 3, "injected fault exits 3");
    expect(fault.output.find("gcd_reduction") != std::string::npos,
           "injected fault names the failing check");

    auto capped = run("env ITK_MAX_DIGITS=2 " + cli + " tori \"C:(2,3)\" --kmax 30 --format tsv");
    expect(capped.output.find("..(") != std::string::npos,
           "ITK_MAX_DIGITS caps text integers");
    expect(run("env ITK_MAX_DIGITS=abc " + cli + " tori \"C:(2,3)\"").exit_code == 2,
           "bad ITK_MAX_DIGITS exits 2");

    auto frame = run(cli + " analyze \"C:(2,3),(7,2)\" --frame Cprime");
    expect(frame.exit_code == 0 &&
               frame.output.rfind("knot (cabling frame)", 0) == 0,
           "--frame Cprime leads with the cabling-frame knot");

    if (g_failures != 0) {
        std::cout << g_failures << " CLI checks failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
