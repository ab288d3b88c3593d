// kummerlab CLI: point counts, parameter sweeps, and verification suites
// for the Kummer/K3 elliptic-fibration models over F_p.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kummerlab/counting.hpp"
#include "kummerlab/report_io.hpp"
#include "kummerlab/rng.hpp"
#include "kummerlab/series.hpp"
#include "kummerlab/suites.hpp"

namespace {

using namespace kummerlab;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return 2;
}

std::optional<std::vector<u64>> parse_u64_list(const std::string& csv) {
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            u64 v = std::stoull(item, &pos);
            if (pos != item.size()) return std::nullopt;
            out.push_back(v);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

struct Options {
    std::string model;
    std::string params;
    std::string out_path;
    std::string format = "csv";
    std::vector<std::string> suites;
    std::string primes_csv;
    u64 p = 0;
    u64 primes_up_to_v = 0;
    i64 sample = -1;  // -1: auto, 0: force exhaustive, >0: sample size
    u64 seed = 0;
    int jobs = 1;
};

ReportFormat format_of(const Options& o) {
    return o.format == "jsonl" ? ReportFormat::Jsonl : ReportFormat::Csv;
}

// Opens o.out_path if given. Returns nullptr for stdout.
std::unique_ptr<std::ofstream> open_out(const Options& o, std::ostream*& out) {
    if (o.out_path.empty()) {
        out = &std::cout;
        return nullptr;
    }
    auto file = std::make_unique<std::ofstream>(o.out_path);
    out = file.get();
    return file;
}

int run_count(const Options& o) {
    auto id = model_from_tag(o.model);
    if (!id) return usage_error("unknown model '" + o.model + "'");
    auto parsed = parse_u64_list(o.params);
    if (!parsed) return usage_error("cannot parse --params '" + o.params + "'");
    try {
        PrimeContext F(o.p);
        if (static_cast<int>(parsed->size()) != model_param_count(*id))
            return usage_error("model " + o.model + " takes " +
                               std::to_string(model_param_count(*id)) + " parameter(s)");
        std::vector<Fp> params;
        for (u64 v : *parsed) params.push_back(F.from_uint(v));
        ModelInstance m(F, *id, params);
        std::ostream* out = nullptr;
        auto file = open_out(o, out);
        if (file && !*file) return usage_error("cannot open " + o.out_path);
        ReportWriter writer(*out, format_of(o));
        writer.write(make_report(m));
        return 0;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

int run_sweep(const Options& o) {
    auto id = model_from_tag(o.model);
    if (!id) return usage_error("unknown model '" + o.model + "'");
    try {
        PrimeContext F(o.p);
        auto grid = parameter_grid(F, *id);

        i64 sample = o.sample;
        if (sample < 0) {
            // auto mode: grids costing more than 1e6 point evaluations are
            // sampled; pass --sample 0 to force an exhaustive sweep.
            const u64 per_tuple = model_arity(*id) == 1 ? o.p : o.p * o.p;
            const u128 work = static_cast<u128>(grid.size()) * per_tuple;
            if (work > 1000000) sample = std::max<i64>(1, static_cast<i64>(1000000 / per_tuple));
        }
        if (sample > 0 && static_cast<u64>(sample) < grid.size()) {
            CounterRng rng(o.seed);
            auto keep = rng.sample_indices(grid.size(), static_cast<u64>(sample));
            std::vector<ParamTuple> subset;
            subset.reserve(keep.size());
            for (u64 i : keep) subset.push_back(grid[i]);
            grid = std::move(subset);
        }

        std::ostream* out = nullptr;
        auto file = open_out(o, out);
        if (file && !*file) return usage_error("cannot open " + o.out_path);
        ReportWriter writer(*out, format_of(o));
        sweep(F, *id, grid, o.jobs, [&](const CountReport& r) { writer.write(r); });
        return 0;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

int run_verify(const Options& o) {
    std::vector<std::string> selected = o.suites.empty() ? suite_names() : o.suites;
    for (const auto& s : selected)
        if (!is_suite(s)) return usage_error("unknown suite '" + s + "'");

    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.jobs = o.jobs;
    if (!o.primes_csv.empty()) {
        auto parsed = parse_u64_list(o.primes_csv);
        if (!parsed) return usage_error("cannot parse --primes '" + o.primes_csv + "'");
        cfg.primes = *parsed;
    } else if (o.primes_up_to_v > 0) {
        cfg.primes = primes_up_to(o.primes_up_to_v);
    } else if (o.p > 0) {
        cfg.primes = {o.p};
    }
    for (u64 q : cfg.primes)
        if (q < 3 || !is_prime(q)) return usage_error(std::to_string(q) + " is not an odd prime");

    bool all_pass = true;
    for (const auto& name : selected) {
        SuiteResult res;
        try {
            res = run_suite(name, cfg);
        } catch (const std::exception& e) {
            res.name = name;
            res.failures.push_back(std::string("suite aborted: ") + e.what());
        }
        all_pass = all_pass && res.passed();
        std::ostringstream line;
        line << (res.passed() ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.cases
             << " cases, " << res.failures.size() << " failures (" << res.seconds << " s)";
        if (!res.note.empty()) line << " [" << res.note << "]";
        std::cout << line.str() << '\n';
        for (const auto& f : res.failures) std::cout << "    " << f << '\n';
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting rational points on Kummer/K3 elliptic-fibration models over F_p"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out_path, "output file (default: stdout)");
        cmd->add_option("--format", o.format, "csv or jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}));
    };

    CLI::App* count_cmd = app.add_subcommand("count", "count points of one model instance");
    count_cmd->add_option("--model", o.model, "model tag")->required();
    count_cmd->add_option("--p", o.p, "odd prime modulus")->required();
    count_cmd->add_option("--params", o.params, "comma-separated parameters")->required();
    add_io(count_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep the parameter grid of a model");
    sweep_cmd->add_option("--model", o.model, "model tag")->required();
    sweep_cmd->add_option("--p", o.p, "odd prime modulus")->required();
    sweep_cmd->add_option("--sample", o.sample,
                          "sample size (0 forces exhaustive; default: auto above 1e6 evals)");
    sweep_cmd->add_option("--seed", o.seed, "seed for sampled sweeps");
    sweep_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_io(sweep_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suite_help = "suite name (repeatable; default: all). Suites:";
    for (const auto& s : suite_names()) suite_help += " " + s;
    verify_cmd->add_option("--suite", o.suites, suite_help);
    verify_cmd->add_option("--primes", o.primes_csv, "comma-separated prime list");
    verify_cmd->add_option("--primes-up-to", o.primes_up_to_v, "all odd primes up to bound");
    verify_cmd->add_option("--p", o.p, "single prime");
    verify_cmd->add_option("--seed", o.seed, "seed for sampled parameter selection");
    verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (count_cmd->parsed()) return run_count(o);
    if (sweep_cmd->parsed()) return run_sweep(o);
    return run_verify(o);
}
