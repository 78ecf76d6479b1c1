#pragma once

#include <optional>

#include "prym/ffpoly.hpp"
#include "prym/unipoly.hpp"

namespace prym {

/// One segment of the Newton polygon: the roots of valuation `slope` and how
/// many there are (counted with multiplicity).
struct PAdicFactorSlope {
    Int p;
    Rat slope;  // common valuation of the roots on this segment
    int multiplicity;
};

/// Slopes of the lower convex hull of (i, v_p(coeff_i)), reported as root
/// valuations in decreasing order.
std::vector<PAdicFactorSlope> padic_newton_polygon(const Int& p, const UniPoly& q);

/// Ramification beyond a quadratic step; the cluster machinery treats this as
/// a non-semistable certificate.
struct RamificationTooDeep : Error {
    using Error::Error;
};

/// Address of one root of F in \bar Q_p along the isolation tree. Each step
/// records the valuation level at which the root's disc was cut and the
/// residue direction taken (an element of an unramified residue field).
/// A ramified tail means the root is one of a conjugate pair c +- sqrt(p^(2L) u).
struct PadicAddress {
    struct Step {
        Rat level;    // v(r - center) at this refinement
        FqCtxPtr fld; // field of the direction label
        Fq label;     // nonzero residue direction
    };
    std::vector<Step> steps;
    bool ram = false;
    Rat ram_level;     // half-integer: v of the pair difference
    Fq ram_unit;       // red((r - c)^2 / p^(2 ram_level)), nonzero
    int ram_sign = 0;  // +1 / -1 distinguishes the two members of a pair

    int residue_degree() const { return steps.empty() ? 1 : steps.back().fld->k; }
    int ramification_index() const { return ram ? 2 : 1; }
};

/// All roots of a squarefree F over \bar Q_p with e <= 2 presented by
/// isolation addresses; pairwise valuations and residue directions of
/// differences are derived data.
class PadicRootSystem {
  public:
    Int p;
    int n = 0;                        // number of roots = deg F
    long x_scale = 0;                 // roots here are p^x_scale * (roots of the input)
    std::vector<PadicAddress> roots;
    std::vector<int> frobenius;       // arithmetic Frobenius as a permutation (mod inertia)
    std::vector<int> inertia;         // swaps members of ramified pairs
    // At p = 2 the distance inside a ramified pair is not determined by its
    // level alone; it is recovered from exact discriminant bookkeeping.
    std::vector<Rat> pair_dist;       // per root; meaningful for ramified roots
    std::vector<char> pair_dist_known;

    /// v_p(r_i - r_j), exact
    Rat dist(int i, int j) const;
    /// field + value of red((r_i - r_j)/p^dist); requires the pair distance
    /// to be attained at an unramified step (true unless i,j are one pair)
    std::pair<FqCtxPtr, Fq> direction_unit(int i, int j) const;
    bool same_ram_pair(int i, int j) const;
    /// residue of the root itself (only when all its levels are >= 0)
    std::pair<FqCtxPtr, Fq> residue(int i) const;
};

/// Isolates all p-adic roots of squarefree F. Throws RamificationTooDeep when
/// a root needs e > 2, ResourceExhausted on precision failure.
PadicRootSystem padic_split(const UniPoly& F, const Int& p);

/// A lifted root for the public root-lifting entry point.
struct PadicRoot {
    int residue_degree;
    int ramification_index;
    // For unramified roots: approximation in Z_p[t]/(T,p^prec) as coefficient
    // vector; exact when the root is rational and small.
    FqCtxPtr residue_field;
    std::vector<Int> approx;   // length k, valid mod p^prec (unramified roots)
    long prec = 0;
    bool exact = false;
    std::optional<Rat> exact_value;  // set when the root lies in Q
};

/// Lifts every root of squarefree q to at least the requested p-adic
/// precision (unramified roots carry explicit approximations; ramified pairs
/// carry their field data). Throws naming the obstruction when a factor needs
/// e > 2 or the precision budget is exhausted.
std::vector<PadicRoot> padic_lift_roots(const Int& p, const UniPoly& q, long precision);

}  // namespace prym
