#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prym {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An override file entry could supply the missing quantity.
struct OverrideRequired : Error {
    std::string key;
    OverrideRequired(const std::string& msg, std::string k) : Error(msg), key(std::move(k)) {}
};

struct UnsupportedCase : Error {
    using Error::Error;
};

struct ResourceExhausted : Error {
    using Error::Error;
};

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Exact square root of a rational, if it is one.
std::optional<Rat> rat_sqrt(const Rat& q);

// v_p(n) for n != 0; also returns n / p^v through `unit` when non-null.
long valuation(const Int& n, const Int& p, Int* unit = nullptr);
long valuation(const Rat& q, const Int& p);

Int powmod(const Int& b, const Int& e, const Int& m);

// Deterministic below 2^64, BPSW + Miller-Rabin above.
bool is_prime(const Int& n);

// Shared sieve of all primes below `bound` (bound <= 2^31).
const std::vector<uint32_t>& prime_table(uint32_t bound);

}  // namespace prym
