#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <random>
#include <vector>

#include "prym/sturm.hpp"
#include "prym/unipoly.hpp"

namespace prym::testing {

/// Resultant as the determinant of the Sylvester matrix, by fraction-free
/// Gaussian elimination over Q. Independent of the subresultant PRS.
inline Rat sylvester_resultant(const UniPoly& a, const UniPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) throw Error("sylvester oracle: zero polynomial");
    int N = m + n;
    if (N == 0) return Rat(1);
    std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.coeff(n - j);
    Rat det(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (sign(M[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (sign(M[r][col]) == 0) continue;
            Rat f = M[r][col] / M[col][col];
            for (int c = col; c < N; ++c) M[r][c] -= f * M[col][c];
        }
    }
    return det;
}

/// Dense sign-scan root count: doubles resolution until two consecutive
/// scans agree.
inline int stable_grid_roots(const UniPoly& p) {
    Rat B = cauchy_root_bound(p);
    long steps = 8 * (p.degree() + 1);
    int prev = -1;
    for (int round = 0; round < 12; ++round) {
        Rat h = 2 * B / Rat(steps);
        int count = 0;
        int last = 0;
        for (long i = 0; i <= steps; ++i) {
            Rat xn = -B + h * Rat(i);
            int s = sign(p(xn));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        if (count == prev) return count;
        prev = count;
        steps *= 2;
    }
    return prev;
}

inline std::mt19937_64 test_rng(uint64_t seed = 0x5eed5eed1234abcdULL) { return std::mt19937_64(seed); }

inline UniPoly random_poly(std::mt19937_64& rng, int deg, long coeff_bound = 20) {
    std::uniform_int_distribution<long> d(-coeff_bound, coeff_bound);
    std::vector<Rat> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = Rat(d(rng));
    while (sign(c[deg]) == 0) c[deg] = Rat(d(rng));
    return UniPoly(c);
}

}  // namespace prym::testing
