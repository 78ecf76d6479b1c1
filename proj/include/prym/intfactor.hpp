#pragma once

#include <utility>
#include <vector>

#include "prym/numeric.hpp"

namespace prym {

struct FactorConfig {
    uint32_t trial_bound = 1'000'000;
    double time_budget_sec = 120.0;
    bool parallel_trial = true;
};

// (prime, exponent) pairs sorted by prime
using Factorization = std::vector<std::pair<Int, int>>;

/// Factors |n| completely (n != 0). Throws ResourceExhausted naming the
/// unfactored cofactor when the budget runs out.
Factorization factor_integer(const Int& n, const FactorConfig& cfg = {});

Int factorization_product(const Factorization& f);

/// Primes of the table dividing n, via a chunked scan.
/// The serial twin is the test reference for the OpenMP version.
std::vector<uint32_t> trial_divisors_serial(const Int& n, const std::vector<uint32_t>& primes);
std::vector<uint32_t> trial_divisors_parallel(const Int& n, const std::vector<uint32_t>& primes);

}  // namespace prym
