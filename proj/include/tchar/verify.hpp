#pragma once

#include "tchar/witness.hpp"

namespace tchar {

// Invariant factors d_1 | d_2 | ... | d_N of a direct sum of cyclic groups
// given as a multiset of orders, by gcd/lcm chain reduction of the
// diagonal. Independent route used to cross-check the closed-form socle
// rank.
std::vector<Int> invariant_factors(std::vector<Int> orders);

// Z(e)^r embeds into the direct sum iff at least r invariant factors are
// divisible by e.
unsigned long socle_rank_oracle(const std::vector<Int>& orders, const Int& e);

struct VerifyOptions {
    std::size_t samples = 10000;          // eq02 sample count
    std::size_t horizon = 256;            // trace horizon
    std::size_t elements_per_model = 100; // consistency sample size
    std::size_t witness_scale = 40;       // k_max / r_max for budget grids
    unsigned seed = 20260810;
    Rat tol = Rat(1, 1000000);
    bool quick = false;  // shrink the expensive sweeps (unit-test mode)
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;  // first few failure descriptions
    bool pass() const { return failures == 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt = {});

}  // namespace tchar
