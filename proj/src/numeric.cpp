#include "prym/numeric.hpp"

#include <mutex>

namespace prym {

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (sign(q) < 0) return std::nullopt;
    const Int& n = q.get_num();
    const Int& d = q.get_den();
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    Rat r(isqrt(n), isqrt(d));
    r.canonicalize();
    return r;
}

long valuation(const Int& n, const Int& p, Int* unit) {
    if (sign(n) == 0) throw Error("valuation of zero");
    Int u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    if (unit) *unit = u;
    return v;
}

long valuation(const Rat& q, const Int& p) {
    if (sign(q) == 0) throw Error("valuation of zero");
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (mpz_probab_prime_p(n.get_mpz_t(), 48) == 0) return false;
    // below 2^64 this witness set is a proof
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
            if (n == a) return true;
            if (n % a == 0) return false;
            if (miller_rabin_witness(n, Int(a))) return false;
        }
    }
    return true;
}

const std::vector<uint32_t>& prime_table(uint32_t bound) {
    static std::mutex mx;
    static std::vector<uint32_t> primes;
    static uint32_t have = 0;
    std::lock_guard<std::mutex> lock(mx);
    if (bound > have) {
        primes.clear();
        std::vector<bool> comp(bound + 1, false);
        for (uint64_t i = 2; i <= bound; ++i) {
            if (comp[i]) continue;
            primes.push_back(static_cast<uint32_t>(i));
            for (uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
        }
        have = bound;
    }
    return primes;
}

}  // namespace prym
