#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "kummerlab/report_io.hpp"
#include "kummerlab/rng.hpp"
#include "kummerlab/suites.hpp"

using namespace kummerlab;

namespace {

ModelInstance make(const PrimeContext& F, ModelId id, u64 a, u64 b = 0) {
    std::vector<Fp> par{Fp{a}};
    if (model_param_count(id) == 2) par.push_back(Fp{b});
    return ModelInstance(F, id, par);
}

std::string render_sweep(const PrimeContext& F, ModelId id, std::span<const ParamTuple> tuples,
                         int jobs, ReportFormat fmt) {
    std::ostringstream os;
    ReportWriter writer(os, fmt);
    sweep(F, id, tuples, jobs, [&](const CountReport& r) { writer.write(r); });
    return os.str();
}

}  // namespace

TEST_CASE("CSV golden rows") {
    CHECK(std::string(csv_header()) == "model,p,param1,param2,exact,euler,formula,match,skipped");

    PrimeContext F7(7), F5(5);
    CHECK(csv_row(make_report(make(F7, ModelId::K3Z, 0, 0))) == "k3-z,7,0,0,50,1,1,true,0");
    CHECK(csv_row(make_report(make(F5, ModelId::LegendreCurve, 2))) == "legendre,5,2,,7,2,2,true,0");
    // no closed form: formula column stays empty
    CHECK(csv_row(make_report(make(F5, ModelId::RationalS, 2, 3))).find(",,true,0") !=
          std::string::npos);
}

TEST_CASE("JSONL golden row mirrors the CSV columns as keys") {
    PrimeContext F7(7);
    std::string line = jsonl_row(make_report(make(F7, ModelId::K3Z, 0, 0)));
    CHECK(line ==
          "{\"model\":\"k3-z\",\"p\":7,\"param1\":0,\"param2\":0,\"exact\":50,\"euler\":1,"
          "\"formula\":1,\"match\":true,\"skipped\":0}");

    PrimeContext F5(5);
    auto j = nlohmann::json::parse(jsonl_row(make_report(make(F5, ModelId::LegendreCurve, 2))));
    CHECK(j["param2"].is_null());
    CHECK(j["exact"] == 7);
    auto k = nlohmann::json::parse(jsonl_row(make_report(make(F5, ModelId::K3Y, 2, 3))));
    CHECK(k["formula"].is_null());
}

TEST_CASE("ReportWriter emits the CSV header exactly once") {
    PrimeContext F(5);
    std::ostringstream os;
    ReportWriter w(os, ReportFormat::Csv);
    w.write(make_report(make(F, ModelId::LegendreCurve, 0)));
    w.write(make_report(make(F, ModelId::LegendreCurve, 1)));
    std::string text = os.str();
    CHECK(text.find("model,p,") == 0);
    CHECK(text.find("model,p,", 1) == std::string::npos);

    std::ostringstream js;
    ReportWriter wj(js, ReportFormat::Jsonl);
    wj.write(make_report(make(F, ModelId::LegendreCurve, 2)));
    CHECK(js.str().find("model,p,") == std::string::npos);
    CHECK(js.str().find("{\"model\"") == 0);
}

TEST_CASE("sweep output is byte-identical across runs and job counts") {
    PrimeContext F(13);
    auto grid = parameter_grid(F, ModelId::KummerJ6);
    CounterRng rng(42);
    auto keep = rng.sample_indices(grid.size(), 50);
    std::vector<ParamTuple> sampled;
    for (u64 i : keep) sampled.push_back(grid[i]);
    REQUIRE(sampled.size() == 50);

    std::string a = render_sweep(F, ModelId::KummerJ6, sampled, 1, ReportFormat::Csv);
    std::string b = render_sweep(F, ModelId::KummerJ6, sampled, 1, ReportFormat::Csv);
    std::string c = render_sweep(F, ModelId::KummerJ6, sampled, 3, ReportFormat::Csv);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(std::count(a.begin(), a.end(), '\n') == 51);  // header + 50 rows

    std::string j = render_sweep(F, ModelId::KummerJ6, sampled, 2, ReportFormat::Jsonl);
    CHECK(std::count(j.begin(), j.end(), '\n') == 50);
}

TEST_CASE("counter rng sampling is deterministic, sorted, and distinct") {
    CounterRng rng(42);
    auto s1 = rng.sample_indices(121, 50);
    auto s2 = CounterRng(42).sample_indices(121, 50);
    CHECK(s1 == s2);
    CHECK(s1.size() == 50);
    for (std::size_t i = 1; i < s1.size(); ++i) CHECK(s1[i - 1] < s1[i]);
    CHECK(CounterRng(43).sample_indices(121, 50) != s1);
    auto all = rng.sample_indices(10, 99);
    CHECK(all.size() == 10);
}

TEST_CASE("suite registry knows the ten suites and their default primes") {
    auto names = suite_names();
    REQUIRE(names.size() == 10);
    for (const auto& n :
         {"igusa", "countx", "countz", "identity", "pf", "euler", "covers", "twist", "clausen",
          "combinatorial"})
        CHECK(is_suite(n));
    CHECK_FALSE(is_suite("nope"));
    CHECK(default_primes("igusa").back() == 101);
    CHECK(default_primes("pf").back() == 37);
    CHECK(default_primes("countx") == std::vector<u64>{3, 5, 7, 11, 13});
    CHECK(default_primes("covers") == std::vector<u64>{11, 13});
    CHECK(default_primes("clausen").empty());
}

TEST_CASE("suites pass on small prime sets and report case counts") {
    SuiteConfig cfg;
    cfg.primes = {3, 5, 7};
    for (const auto& name : {"igusa", "countx", "countz", "identity", "euler", "twist", "pf",
                             "combinatorial"}) {
        SuiteResult res = run_suite(name, cfg);
        CHECK(res.passed());
        CHECK(res.cases > 0);
        CHECK(res.name == name);
    }
    // identity: (p^2 - p) pairs plus one anchor per prime
    SuiteResult id = run_suite("identity", cfg);
    CHECK(id.cases == (9 - 3 + 1) + (25 - 5 + 1) + (49 - 7 + 1));

    SuiteConfig small;
    small.primes = {5};
    SuiteResult cov = run_suite("covers", small);
    CHECK(cov.passed());
    CHECK(cov.cases > 0);

    SuiteResult cl = run_suite("clausen", SuiteConfig{});
    CHECK(cl.passed());
    CHECK(cl.cases == 20);
    CHECK(cl.note.find("max residual") == 0);
}

TEST_CASE("suite failures would be reported: unknown suite throws") {
    CHECK_THROWS_AS(run_suite("bogus", SuiteConfig{}), std::invalid_argument);
}

TEST_CASE("parallel suite execution yields identical results") {
    SuiteConfig one;
    one.primes = {3, 5, 7, 11};
    SuiteConfig four = one;
    four.jobs = 4;
    SuiteResult a = run_suite("countz", one);
    SuiteResult b = run_suite("countz", four);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.passed());
}
