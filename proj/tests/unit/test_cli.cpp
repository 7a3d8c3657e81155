#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bogocert/jobs.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace bogocert;

namespace {

std::string cli_path() {
    const char* p = std::getenv("BOGOCERT_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string tmp_dir() {
    const char* p = std::getenv("BOGOCERT_TMP");
    return p ? p : "/tmp";
}

struct RunOutput {
    int exit_code = -1;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunOutput out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.stdout_text.append(buf, n);
    int status = pclose(pipe);
    out.exit_code = WEXITSTATUS(status);
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << content;
}

} // namespace

TEST_CASE("height command prints the exact flag and decimal") {
    auto out = run_cli("height --field x^2-x-1 --elem 0,1");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text ==
          "height exact_zero=false value=0.240605912529802 +/- 7.05e-55\n");

    auto zero = run_cli("height --field x^2+1 --elem 0,1");
    CHECK(zero.stdout_text == "height exact_zero=true value=0\n");
}

TEST_CASE("exit codes per error category") {
    CHECK(run_cli("height --elem 0,1").exit_code == 2);              // missing flag
    CHECK(run_cli("nonsense").exit_code == 2);                       // unknown command
    CHECK(run_cli("height --field x^2-1 --elem 0,1").exit_code == 3); // reducible field
    CHECK(run_cli("verify --in /nonexistent/cert.json").exit_code == 4);
    CHECK(run_cli("split --field x^2-5 --ell 2").exit_code == 3);    // NotMaximalOrder
    CHECK(run_cli("height --field x^2-x-1 --elem 0,1 --digits 5").exit_code == 3);
}

TEST_CASE("job files reproduce flag behavior") {
    std::string job = tmp_dir() + "/height_job.txt";
    write_file(job, "command height\nfield x^2-x-1\nelem 0,1\n");
    auto out = run_cli("run " + job);
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text.find("0.240605912529802") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
    std::string job = tmp_dir() + "/cert_job.txt";
    write_file(job,
               "command certify\nfield x^2+1\nell 5\nrho 1/1\nattest no prime over 5 ramifies\n");
    auto first = run_cli("run " + job);
    auto second = run_cli("run " + job);
    CHECK(first.exit_code == 0);
    CHECK(first.stdout_text == second.stdout_text);

    auto h1 = run_cli("witnesses --b 2 --kmax 6 --format csv");
    auto h2 = run_cli("witnesses --b 2 --kmax 6 --format csv");
    CHECK(h1.stdout_text == h2.stdout_text);
    CHECK(h1.stdout_text.substr(0, 12) == "k,x,height\n2");
}

TEST_CASE("certify and verify round trip through files") {
    std::string cert = tmp_dir() + "/roundtrip_cert.json";
    auto make = run_cli("certify --field x^2+1 --ell 5 --rho 1/1 --attest attested --out " + cert);
    CHECK(make.exit_code == 0);
    auto check = run_cli("verify --in " + cert);
    CHECK(check.exit_code == 0);
    CHECK(check.stdout_text.find("valid") == 0);
    CHECK(check.stdout_text.find("1.10582301703024") != std::string::npos);
}

TEST_CASE("batch mode preserves input order") {
    std::string j1 = tmp_dir() + "/batch1.txt";
    std::string j2 = tmp_dir() + "/batch2.txt";
    write_file(j1, "command height\nfield x\nelem 2\n");
    write_file(j2, "command height\nfield x\nelem 3\n");
    auto out = run_cli("run --jobs 2 " + j1 + " " + j2);
    CHECK(out.exit_code == 0);
    size_t p1 = out.stdout_text.find("batch1");
    size_t p2 = out.stdout_text.find("batch2");
    CHECK(p1 != std::string::npos);
    CHECK(p1 < p2);
    CHECK(out.stdout_text.find("0.693147180559945") < p2);
    CHECK(out.stdout_text.find("1.09861228866811") != std::string::npos);
}

TEST_CASE("construct and split text output") {
    auto split = run_cli("split --field x^2+1 --ell 5");
    CHECK(split.stdout_text ==
          "ell 5\ndedekind_ok true\nfactor g=[2,1] e=1 f=1\nfactor g=[3,1] e=1 f=1\n");
    auto cons = run_cli("construct --field x --ell 5");
    CHECK(cons.stdout_text == "alpha 6\nprime f=1 w=1\n");
    auto json = run_cli("split --field x^2+1 --ell 3 --format json");
    CHECK(json.stdout_text.find("\"f\": 2") != std::string::npos);
}
