#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary end to end. KUMMERLAB_BIN is injected by the
// build; exit codes follow the contract 0 = pass, 1 = failure, 2 = usage.

namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    std::string tmp = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = env + " " + std::string(KUMMERLAB_BIN) + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(tmp)};
    std::remove(tmp.c_str());
    return r;
}

}  // namespace

TEST_CASE("count: one row with the pinned values") {
    auto r = run("count --model k3-z --p 7 --params 0,0");
    CHECK(r.code == 0);
    CHECK(r.out == "model,p,param1,param2,exact,euler,formula,match,skipped\n"
                   "k3-z,7,0,0,50,1,1,true,0\n");

    auto j = run("count --model k3-z --p 7 --params 0,0 --format jsonl");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"euler\":1") != std::string::npos);

    auto lg = run("count --model kummer-j6 --p 5 --params 2,3");
    CHECK(lg.code == 0);
    CHECK(lg.out.find("kummer-j6,5,2,3,") != std::string::npos);
    CHECK(lg.out.find("true") != std::string::npos);
}

TEST_CASE("count: usage errors exit with 2") {
    CHECK(run("count --model kummer-j6 --p 4 --params 2,3").code == 2);   // not prime
    CHECK(run("count --model kummer-j6 --p 9 --params 2,3").code == 2);   // not prime
    CHECK(run("count --model bogus --p 5 --params 2").code == 2);         // unknown model
    CHECK(run("count --model kummer-j6 --p 5 --params 2").code == 2);     // arity
    CHECK(run("count --model k3-y --p 5 --params 1,2").code == 2);        // lambda=1 invalid
    CHECK(run("count --model kummer-j6 --p 5").code == 2);                // missing flag
    CHECK(run("count --model kummer-j6 --p 5 --params x,y").code == 2);   // unparsable
}

TEST_CASE("sweep: exhaustive grids and match columns") {
    auto r = run("sweep --model k3-z --p 5");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0, matches = 0;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find(",true,") != std::string::npos) ++matches;
    }
    CHECK(rows == 25);
    CHECK(matches == 25);

    auto lg = run("sweep --model legendre --p 101");
    CHECK(lg.code == 0);
    CHECK(std::count(lg.out.begin(), lg.out.end(), '\n') == 102);  // exhaustive: curve work is O(p)
    CHECK(lg.out.find("false") == std::string::npos);
}

TEST_CASE("sweep: oversized grids fall back to seeded sampling unless forced") {
    auto autod = run("sweep --model k3-z --p 101 --seed 1");
    CHECK(autod.code == 0);
    // 101^2 tuples at 101^2 evaluations each is over the 1e6 budget
    long rows = std::count(autod.out.begin(), autod.out.end(), '\n') - 1;
    CHECK(rows < 101L * 101L);
    CHECK(rows >= 1);
    auto again = run("sweep --model k3-z --p 101 --seed 1");
    CHECK(again.out == autod.out);
}

TEST_CASE("sweep: sampled runs are reproducible byte for byte") {
    auto a = run("sweep --model kummer-j6 --p 13 --sample 50 --seed 42 --jobs 1");
    auto b = run("sweep --model kummer-j6 --p 13 --sample 50 --seed 42 --jobs 1");
    auto c = run("sweep --model kummer-j6 --p 13 --sample 50 --seed 42 --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 51);

    auto d = run("sweep --model kummer-j6 --p 13 --sample 50 --seed 43");
    CHECK(d.out != a.out);
}

TEST_CASE("sweep: --out writes the same bytes to a file") {
    std::string path = "sweep_file_test.csv";
    auto direct = run("sweep --model k3-z --p 7");
    auto filed = run("sweep --model k3-z --p 7 --out " + path);
    CHECK(filed.code == 0);
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("verify: suites pass and exit zero") {
    auto r = run("verify --suite identity --primes 5,7,11,13");
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] identity") != std::string::npos);

    auto multi = run("verify --suite countz --suite twist --primes 3,5,7");
    CHECK(multi.code == 0);
    CHECK(multi.out.find("[PASS] countz") != std::string::npos);
    CHECK(multi.out.find("[PASS] twist") != std::string::npos);

    auto upto = run("verify --suite pf --primes-up-to 13");
    CHECK(upto.code == 0);

    auto cl = run("verify --suite clausen");
    CHECK(cl.code == 0);
    CHECK(cl.out.find("max residual") != std::string::npos);
}

TEST_CASE("verify: usage errors exit with 2") {
    CHECK(run("verify --suite bogus").code == 2);
    CHECK(run("verify --suite igusa --p 4").code == 2);
    CHECK(run("verify --suite igusa --primes 5,6").code == 2);
    CHECK(run("nonsense-subcommand").code == 2);
    CHECK(run("").code == 2);  // subcommand required
}

TEST_CASE("verify: a suite that cannot run is a reported failure, exit 1") {
    auto r = run("verify --suite igusa --primes 7", "KUMMERLAB_MAX_P=3");
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] igusa") != std::string::npos);
    CHECK(r.out.find("suite aborted") != std::string::npos);
}

TEST_CASE("KUMMERLAB_MAX_P raises the cap") {
    auto r = run("count --model legendre --p 1048583 --params 2", "KUMMERLAB_MAX_P=2000000");
    CHECK(r.code == 0);
    CHECK(r.out.find("legendre,1048583,2,") != std::string::npos);
    CHECK(run("count --model legendre --p 1048583 --params 2").code == 2);
}
