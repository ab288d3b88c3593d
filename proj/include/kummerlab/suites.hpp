#pragma once

#include <string>
#include <vector>

#include "kummerlab/fp.hpp"

namespace kummerlab {

struct SuiteConfig {
    std::vector<u64> primes;  // empty: use the suite's default range
    u64 seed = 0;             // drives sampled parameter selection (covers)
    int jobs = 1;
};

struct SuiteResult {
    std::string name;
    u64 cases = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;
    std::string note;
    bool passed() const { return failures.empty(); }
};

// Verification suites, one per claim family:
//   igusa          Legendre-curve count vs truncated Gauss series
//   countx         KummerJ6 Euler sum vs closed-form multinomial double sum
//   countz         K3Z Euler sum vs truncated Appell series
//   identity       the two-parameter main identity, plus its (1,0) anchor
//   pf             operator annihilation of the counting polynomials
//   euler          exact counts vs Euler sums across every model
//   covers         point-level soundness of the rational maps
//   twist          the K3Y-chart/K3Z count relation
//   clausen        float Appell factorization into two Gauss factors
//   combinatorial  Wilson, power-sum lemma, central binomial sum
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<u64> default_primes(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<u64> primes_up_to(u64 n);

}  // namespace kummerlab
