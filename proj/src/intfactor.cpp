#include "prym/intfactor.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>

namespace prym {

std::vector<uint32_t> trial_divisors_serial(const Int& n, const std::vector<uint32_t>& primes) {
    std::vector<uint32_t> hits;
    for (uint32_t p : primes)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) hits.push_back(p);
    return hits;
}

std::vector<uint32_t> trial_divisors_parallel(const Int& n, const std::vector<uint32_t>& primes) {
    std::vector<std::vector<uint32_t>> parts;
#pragma omp parallel
    {
#pragma omp single
        parts.resize(omp_get_num_threads());
        auto& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (size_t i = 0; i < primes.size(); ++i)
            if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i])) mine.push_back(primes[i]);
    }
    std::vector<uint32_t> hits;
    for (auto& part : parts) hits.insert(hits.end(), part.begin(), part.end());
    std::sort(hits.begin(), hits.end());
    return hits;
}

namespace {

using Clock = std::chrono::steady_clock;

Int pollard_brent(const Int& n, unsigned long c, const Clock::time_point& deadline) {
    // Brent's cycle variant of Pollard rho with f(x) = x^2 + c
    Int y(2), r(1), q(1), g(1), x, ys;
    const unsigned long batch = 128;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k(0);
        while (k < r && g == 1) {
            if (Clock::now() > deadline) return Int(0);
            ys = y;
            Int rem = r - k;
            unsigned long lim = (rem > batch) ? batch : rem.get_ui();
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                if (sign(d) < 0) d = -d;
                q = q * d % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            Int d = x - ys;
            if (sign(d) < 0) d = -d;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void factor_rec(const Int& n, std::map<Int, int>& out, const Clock::time_point& deadline) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        factor_rec(r, out, deadline);
        factor_rec(r, out, deadline);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        if (Clock::now() > deadline)
            throw ResourceExhausted("integer factorization timed out; unfactored cofactor " + n.get_str());
        Int d = pollard_brent(n, c, deadline);
        if (d > 1 && d < n) {
            factor_rec(d, out, deadline);
            factor_rec(n / d, out, deadline);
            return;
        }
    }
}

}  // namespace

Factorization factor_integer(const Int& n, const FactorConfig& cfg) {
    if (sign(n) == 0) throw Error("factor_integer: n must be nonzero");
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(cfg.time_budget_sec));
    Int m = abs(n);
    std::map<Int, int> acc;
    if (m > 1) {
        const auto& primes = prime_table(cfg.trial_bound);
        auto hits = cfg.parallel_trial ? trial_divisors_parallel(m, primes)
                                       : trial_divisors_serial(m, primes);
        for (uint32_t p : hits) {
            if (p > cfg.trial_bound) break;
            Int u;
            int e = static_cast<int>(valuation(m, Int(p), &u));
            acc[Int(p)] = e;
            m = u;
        }
        // anything left is free of primes <= trial_bound
        if (m > 1) {
            Int bound2 = Int(cfg.trial_bound) * Int(cfg.trial_bound);
            if (m <= bound2)
                acc[m] += 1;  // below the square of the trial bound, m is prime
            else
                factor_rec(m, acc, deadline);
        }
    }
    Factorization out(acc.begin(), acc.end());
    return out;
}

Int factorization_product(const Factorization& f) {
    Int r(1);
    for (const auto& [p, e] : f) r *= pow_int(p, e);
    return r;
}

}  // namespace prym
