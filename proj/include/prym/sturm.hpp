#pragma once

#include <vector>

#include "prym/unipoly.hpp"

namespace prym {

/// Open-ended dyadic interval certified to contain exactly one real root of
/// `poly`; the endpoints themselves are never roots.
struct IsolatingInterval {
    Rat lo, hi;
    UniPoly poly;

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

/// Sturm chain of p (p squarefree).
std::vector<UniPoly> sturm_chain(const UniPoly& p);

/// Number of real roots of p in (a, b], via sign variation counts.
int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

/// Sorted, pairwise disjoint isolating intervals for all real roots.
/// Throws on non-squarefree input.
std::vector<IsolatingInterval> sturm_isolate_real_roots(const UniPoly& p);

/// Bisect until the interval is narrower than `width`.
void refine_interval(IsolatingInterval& iv, const Rat& width);

int count_real_roots(const UniPoly& p);

/// Dyadic bound B (a power of two) with all real roots of p in (-B, B).
Rat cauchy_root_bound(const UniPoly& p);

}  // namespace prym
