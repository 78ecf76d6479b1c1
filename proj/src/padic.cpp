#include "prym/padic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace prym {

// ---------------------------------------------------------------------------
// Newton polygon of a rational polynomial
// ---------------------------------------------------------------------------

std::vector<PAdicFactorSlope> padic_newton_polygon(const Int& p, const UniPoly& q) {
    if (q.is_zero()) throw Error("newton polygon of zero polynomial");
    if (!is_prime(p)) throw Error("newton polygon: p must be prime");
    struct Pt {
        long i;
        Rat v;
    };
    std::vector<Pt> pts;
    for (int i = 0; i <= q.degree(); ++i) {
        if (sign(q.coeff(i)) == 0) continue;
        pts.push_back({i, Rat(valuation(q.coeff(i), p))});
    }
    // lower convex hull left to right
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // drop b if it lies on or above segment a->pt
            if ((b.v - a.v) * Rat(pt.i - a.i) >= (pt.v - a.v) * Rat(b.i - a.i))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<PAdicFactorSlope> out;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        Rat slope = (hull[s].v - hull[s + 1].v) / Rat(hull[s + 1].i - hull[s].i);
        out.push_back({p, slope, static_cast<int>(hull[s + 1].i - hull[s].i)});
    }
    // root valuations in decreasing order
    std::sort(out.begin(), out.end(),
              [](const PAdicFactorSlope& a, const PAdicFactorSlope& b) { return a.slope > b.slope; });
    return out;
}

// ---------------------------------------------------------------------------
// Unramified p-adic arithmetic: Z_p[t]/(T) with exact integer coordinates
// ---------------------------------------------------------------------------

namespace {

struct UCtx {
    Int p;
    FqCtxPtr res;        // residue field F_{p^f}
    std::vector<Int> T;  // monic modulus lift, integer coefficients in [0,p)
    int f() const { return res->k; }
};

using UElem = std::vector<Int>;  // coordinates in the power basis of t, size f

UElem uzero(const UCtx& c) { return UElem(c.f(), Int(0)); }

void ureduce(UElem& a, const UCtx& c, const Int& pNW) {
    if (sign(pNW) == 0) return;  // exact mode
    for (auto& v : a) {
        v %= pNW;
        if (sign(v) < 0) v += pNW;
    }
}

UElem uadd(const UElem& a, const UElem& b, const UCtx& c, const Int& pNW) {
    UElem r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    ureduce(r, c, pNW);
    return r;
}

UElem usub(const UElem& a, const UElem& b, const UCtx& c, const Int& pNW) {
    UElem r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    ureduce(r, c, pNW);
    return r;
}

UElem umul(const UElem& a, const UElem& b, const UCtx& c, const Int& pNW) {
    int f = c.f();
    std::vector<Int> prod(2 * f - 1, Int(0));
    for (int i = 0; i < f; ++i) {
        if (sign(a[i]) == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce by monic T
    for (int i = 2 * f - 2; i >= f; --i) {
        if (sign(prod[i]) == 0) continue;
        Int top = prod[i];
        for (int j = 0; j < f; ++j) prod[i - f + j] -= top * c.T[j];
        prod[i] = 0;
    }
    prod.resize(f);
    ureduce(prod, c, pNW);
    return prod;
}

UElem uscale(const UElem& a, const Int& s, const UCtx& c, const Int& pNW) {
    UElem r(a);
    for (auto& v : r) v *= s;
    ureduce(r, c, pNW);
    return r;
}

bool uis_zero(const UElem& a) {
    for (const auto& v : a)
        if (sign(v) != 0) return false;
    return true;
}

// min p-valuation over coordinates; LONG_MAX/2 when the vector is zero
long uval(const UElem& a, const Int& p) {
    long best = LONG_MAX / 2;
    for (const auto& v : a) {
        if (sign(v) == 0) continue;
        best = std::min(best, valuation(v, p));
    }
    return best;
}

Fq ured(const UElem& a, const UCtx& c) {
    std::vector<Int> r(a);
    return Fq(c.res, std::move(r));
}

UElem ulift(const Fq& x, const UCtx& c) {
    UElem r(x.rep());
    r.resize(c.f(), Int(0));
    return r;
}

UCtx make_uctx(const Int& p, int f) {
    UCtx c;
    c.p = p;
    c.res = FqCtx::get(p, f);
    c.T = c.res->mod;
    return c;
}

// Newton inversion of a unit mod p^NW
UElem uinv(const UElem& a, const UCtx& c, const Int& pNW, long NW) {
    Fq r = ured(a, c);
    if (r.is_zero()) throw Error("uinv: not a unit");
    UElem z = ulift(r.inverse(), c);
    // z <- z (2 - a z), doubling correct digits
    for (long have = 1; have < NW; have *= 2) {
        UElem az = umul(a, z, c, pNW);
        UElem two = uzero(c);
        two[0] = 2;
        UElem corr = usub(two, az, c, pNW);
        z = umul(z, corr, c, pNW);
    }
    return z;
}

// image of the small field generator inside U_F, to precision p^NW,
// compatible with FqEmbedding on residues
UElem ugen_image(const UCtx& from, const UCtx& to, const Int& pNW, long NW) {
    const auto& emb = FqEmbedding::get(from.res, to.res);
    UElem x = ulift(emb(Fq::gen(from.res)), to);
    // Newton-lift a root of T_from inside U_to
    std::vector<UElem> tc;  // T coefficients as constants of U_to
    for (const auto& coeff : from.T) {
        UElem e = uzero(to);
        e[0] = coeff;
        tc.push_back(e);
    }
    auto eval = [&](const std::vector<UElem>& poly, const UElem& at) {
        UElem acc = uzero(to);
        for (size_t i = poly.size(); i-- > 0;) {
            acc = umul(acc, at, to, pNW);
            acc = uadd(acc, poly[i], to, pNW);
        }
        return acc;
    };
    std::vector<UElem> dtc;
    for (size_t i = 1; i < tc.size(); ++i) dtc.push_back(uscale(tc[i], Int(i), to, pNW));
    for (long have = 1; have < NW; have *= 2) {
        UElem fx = eval(tc, x);
        UElem dfx = eval(dtc, x);
        UElem corr = umul(fx, uinv(dfx, to, pNW, NW), to, pNW);
        x = usub(x, corr, to, pNW);
    }
    return x;
}

UElem uembed(const UElem& a, const UCtx& from, const UCtx& to, const UElem& gen_img,
             const Int& pNW) {
    // evaluate the t-polynomial of `a` at gen_img
    UElem acc = uzero(to);
    for (size_t i = a.size(); i-- > 0;) {
        acc = umul(acc, gen_img, to, pNW);
        acc[0] += a[i];
        ureduce(acc, to, pNW);
    }
    return acc;
}

using UPoly = std::vector<UElem>;  // lowest degree first, fixed length

// G(center + x)
UPoly ushift(const UPoly& g, const UElem& center, const UCtx& c, const Int& pNW) {
    UPoly r(g);
    size_t n = r.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t i = n - 1; i-- > k;) {
            UElem t = umul(r[i + 1], center, c, pNW);
            r[i] = uadd(r[i], t, c, pNW);
        }
    return r;
}

struct HullSeg {
    Rat slope;  // root valuation
    long i0, i1;
    long v0;  // valuation at i0 (integer since coefficients are integral)
};

// lower hull of (i, v_p(g_i)); indices with (near-)vanishing coefficients are
// skipped; `vcap` marks coordinates indistinguishable from zero
std::vector<HullSeg> upoly_polygon(const UPoly& g, const UCtx& c, long vcap, bool exact,
                                   bool& precision_ok) {
    struct Pt {
        long i;
        long v;
    };
    std::vector<Pt> pts;
    precision_ok = true;
    for (size_t i = 0; i < g.size(); ++i) {
        if (uis_zero(g[i])) continue;  // exact zero
        long v = uval(g[i], c.p);
        if (!exact && v >= vcap) {
            // cannot distinguish from zero at working precision
            continue;
        }
        pts.push_back({static_cast<long>(i), v});
    }
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            if (Rat(b.v - a.v) * Rat(pt.i - a.i) >= Rat(pt.v - a.v) * Rat(b.i - a.i))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<HullSeg> out;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        Rat slope = Rat(hull[s].v - hull[s + 1].v) / Rat(hull[s + 1].i - hull[s].i);
        out.push_back({slope, hull[s].i, hull[s + 1].i, hull[s].v});
    }
    return out;
}

struct SplitterState {
    Int p;
    long NW;
    Int pNW;
    std::vector<PadicAddress> leaves;
};

// Frobenius-twist of the steps strictly below a node whose residue degree is
// base_f, by j conjugation steps
PadicAddress twist_suffix(const PadicAddress& addr, size_t from_step, int base_f, int j,
                          const Int& p) {
    PadicAddress out = addr;
    Int e = pow_int(p, base_f);
    Int ej(1);
    for (int i = 0; i < j; ++i) ej *= e;
    for (size_t s = from_step; s < out.steps.size(); ++s)
        out.steps[s].label = out.steps[s].label.pow(ej);
    if (out.ram) out.ram_unit = out.ram_unit.pow(ej);
    return out;
}

void split_rec(const UPoly& G, const UCtx& ctx, const Rat& bound, bool has_bound,
               std::vector<PadicAddress::Step> prefix, bool exact, SplitterState& st, int depth) {
    if (depth > 64) throw ResourceExhausted("p-adic splitting recursion too deep");
    // exact zero constant coefficient: one root exactly at the center
    if (uis_zero(G[0])) {
        if (!exact)
            throw ResourceExhausted(
                "p-adic splitting: vanishing constant term beyond working precision");
        PadicAddress a;
        a.steps = prefix;
        st.leaves.push_back(std::move(a));
        // divide by x and continue with the rest
        UPoly H(G.begin() + 1, G.end());
        if (H.size() <= 1) return;
        bool all_zero = true;
        for (const auto& cf : H)
            if (!uis_zero(cf)) all_zero = false;
        if (all_zero) throw Error("p-adic splitting: repeated exact root (input not squarefree)");
        split_rec(H, ctx, bound, has_bound, prefix, exact, st, depth + 1);
        return;
    }

    bool prec_ok = true;
    auto segs = upoly_polygon(G, ctx, st.NW - 8, exact, prec_ok);
    if (!prec_ok) throw ResourceExhausted("p-adic splitting: precision exhausted");

    for (const auto& seg : segs) {
        Rat sigma = seg.slope;
        if (has_bound && sigma <= bound) continue;  // alien roots handled higher up
        // denominator of sigma decides ramification
        Int den = sigma.get_den();
        if (den > 2) throw RamificationTooDeep("root valuation " + sigma.get_str() +
                                               " requires ramification degree " + den.get_str());
        bool ram_step = (den == 2);
        long stride = ram_step ? 2 : 1;
        long segw = seg.i1 - seg.i0;
        if (segw % stride != 0)
            throw Error("p-adic splitting: inconsistent segment width");  // unreachable
        // residue polynomial along the segment
        std::vector<Fq> rc;
        for (long j = 0; j * stride <= segw; ++j) {
            long idx = seg.i0 + j * stride;
            // line value at idx
            Rat lv = Rat(seg.v0) - sigma * Rat(idx - seg.i0);
            if (lv.get_den() != 1) throw Error("p-adic splitting: non-integral line value");
            long lvz = static_cast<long>(mpz_get_si(lv.get_num().get_mpz_t()));
            const UElem& cf = G[idx];
            if (uis_zero(cf)) {
                rc.push_back(Fq::zero(ctx.res));
                continue;
            }
            long v = uval(cf, ctx.p);
            if (v > lvz) {
                rc.push_back(Fq::zero(ctx.res));
            } else {
                // divide by p^lvz exactly and reduce
                UElem sc(cf);
                Int plv = pow_int(ctx.p, lvz);
                for (auto& vv : sc) {
                    Int q, r;
                    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), vv.get_mpz_t(), plv.get_mpz_t());
                    if (sign(r) != 0) throw Error("p-adic splitting: non-exact division");
                    vv = q;
                }
                rc.push_back(ured(sc, ctx));
            }
        }
        FqPoly R(ctx.res, std::move(rc));
        if (R.degree() < 1) throw Error("p-adic splitting: empty residue polynomial");

        for (const auto& [psi, mult] : factor(R)) {
            int d = psi.degree();
            if (d == 0) continue;
            if (ram_step) {
                if (mult != 1)
                    throw RamificationTooDeep(
                        "repeated residue direction below a ramified layer (slope " +
                        sigma.get_str() + ")");
                // each root of psi gives a conjugate pair
                FqCtxPtr bigres = FqCtx::get(ctx.p, ctx.f() * d);
                Fq xi = Fq::zero(bigres);
                if (d == 1) {
                    xi = FqEmbedding::get(ctx.res, bigres)(-psi.coeff(0));
                } else {
                    std::vector<Fq> lifted;
                    const auto& emb = FqEmbedding::get(ctx.res, bigres);
                    for (const auto& cc : psi.coeffs()) lifted.push_back(emb(cc));
                    auto rts = roots(FqPoly(bigres, std::move(lifted)));
                    if (rts.empty()) throw Error("p-adic splitting: residue root not found");
                    Fq best = rts[0].first;
                    for (const auto& [r, m] : rts)
                        if (Fq::cmp(r, best) < 0) best = r;
                    xi = best;
                }
                for (int j = 0; j < d; ++j) {
                    Fq xij = j == 0 ? xi : xi.pow(pow_int(ctx.p, ctx.f() * j));
                    for (int sgn : {+1, -1}) {
                        PadicAddress a;
                        a.steps = prefix;
                        a.ram = true;
                        a.ram_level = sigma;
                        a.ram_unit = xij;
                        a.ram_sign = sgn;
                        st.leaves.push_back(std::move(a));
                    }
                }
                continue;
            }
            // unramified branch
            long sig_z = static_cast<long>(mpz_get_si(sigma.get_num().get_mpz_t()));
            if (d == 1) {
                Fq xi = -psi.coeff(0);
                if (mult == 1) {
                    PadicAddress a;
                    a.steps = prefix;
                    a.steps.push_back({sigma, ctx.res, xi});
                    st.leaves.push_back(std::move(a));
                } else {
                    if (sig_z < 0)
                        throw Error("p-adic splitting: negative slope after normalization");
                    UElem center = uscale(ulift(xi, ctx), pow_int(ctx.p, sig_z), ctx, st.pNW);
                    UPoly Gn = ushift(G, center, ctx, exact ? Int(0) : st.pNW);
                    auto pfx = prefix;
                    pfx.push_back({sigma, ctx.res, xi});
                    split_rec(Gn, ctx, sigma, true, std::move(pfx), exact, st, depth + 1);
                }
            } else {
                // extend the unramified base
                UCtx big = make_uctx(ctx.p, ctx.f() * d);
                const auto& emb = FqEmbedding::get(ctx.res, big.res);
                std::vector<Fq> lifted;
                for (const auto& cc : psi.coeffs()) lifted.push_back(emb(cc));
                auto rts = roots(FqPoly(big.res, std::move(lifted)));
                if (rts.empty()) throw Error("p-adic splitting: residue root not found");
                Fq xi = rts[0].first;
                for (const auto& [r, m] : rts)
                    if (Fq::cmp(r, xi) < 0) xi = r;
                if (mult == 1) {
                    for (int j = 0; j < d; ++j) {
                        Fq xij = j == 0 ? xi : xi.pow(pow_int(ctx.p, ctx.f() * j));
                        PadicAddress a;
                        a.steps = prefix;
                        a.steps.push_back({sigma, big.res, xij});
                        st.leaves.push_back(std::move(a));
                    }
                } else {
                    if (sig_z < 0)
                        throw Error("p-adic splitting: negative slope after normalization");
                    // embed the polynomial; coefficients that are constants stay exact
                    bool next_exact = exact && ctx.f() == 1;
                    UElem gi = ugen_image(ctx, big, st.pNW, st.NW);
                    UPoly Gb;
                    Gb.reserve(G.size());
                    for (const auto& cf : G) {
                        if (ctx.f() == 1) {
                            UElem e = uzero(big);
                            e[0] = cf[0];
                            Gb.push_back(std::move(e));
                        } else {
                            Gb.push_back(uembed(cf, ctx, big, gi, st.pNW));
                        }
                    }
                    UElem center = uscale(ulift(xi, big), pow_int(ctx.p, sig_z), big, st.pNW);
                    UPoly Gn = ushift(Gb, center, big, next_exact ? Int(0) : st.pNW);
                    auto pfx0 = prefix;
                    pfx0.push_back({sigma, big.res, xi});
                    size_t mark = st.leaves.size();
                    size_t suffix_from = prefix.size();
                    split_rec(Gn, big, sigma, true, std::move(pfx0), next_exact, st, depth + 1);
                    size_t n_new = st.leaves.size() - mark;
                    // materialize the conjugate branches
                    for (int j = 1; j < d; ++j) {
                        for (size_t idx = 0; idx < n_new; ++idx) {
                            PadicAddress tw =
                                twist_suffix(st.leaves[mark + idx], suffix_from, ctx.f(), j, ctx.p);
                            st.leaves.push_back(std::move(tw));
                        }
                    }
                }
            }
        }
    }
}

bool addr_equal(const PadicAddress& a, const PadicAddress& b, bool ignore_ram_sign) {
    if (a.steps.size() != b.steps.size()) return false;
    for (size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i].level != b.steps[i].level) return false;
        if (a.steps[i].fld.get() != b.steps[i].fld.get()) return false;
        if (!(a.steps[i].label == b.steps[i].label)) return false;
    }
    if (a.ram != b.ram) return false;
    if (a.ram) {
        if (a.ram_level != b.ram_level) return false;
        if (!(a.ram_unit == b.ram_unit)) return false;
        if (!ignore_ram_sign && a.ram_sign != b.ram_sign) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// PadicRootSystem derived data
// ---------------------------------------------------------------------------

namespace {

// levels after the common prefix: step level (integral) or ram level
// (half-integral) or none (terminal exact root)
struct Tail {
    bool has = false;
    bool is_ram = false;
    Rat level;
};

Tail tail_of(const PadicAddress& x, size_t from) {
    Tail t;
    if (from < x.steps.size()) {
        t.has = true;
        t.level = x.steps[from].level;
    } else if (x.ram) {
        t.has = true;
        t.is_ram = true;
        t.level = x.ram_level;
    }
    return t;
}

}  // namespace

Rat PadicRootSystem::dist(int i, int j) const {
    if (i == j) throw Error("dist of a root with itself");
    const PadicAddress& a = roots[i];
    const PadicAddress& b = roots[j];
    size_t m = std::min(a.steps.size(), b.steps.size());
    for (size_t s = 0; s < m; ++s) {
        const auto& sa = a.steps[s];
        const auto& sb = b.steps[s];
        if (sa.level != sb.level) return std::min(sa.level, sb.level);
        if (sa.fld.get() != sb.fld.get() || !(sa.label == sb.label)) return sa.level;
    }
    Tail ta = tail_of(a, m), tb = tail_of(b, m);
    if (ta.has && tb.has) {
        if (ta.level != tb.level) return std::min(ta.level, tb.level);
        if (ta.is_ram && tb.is_ram) {
            if (!(a.ram_unit == b.ram_unit)) return ta.level;
            if (a.ram_sign != b.ram_sign) {
                if (p != 2) return ta.level;  // v(2) = 0
                if (!pair_dist_known[i])
                    throw ResourceExhausted("2-adic pair distance not separable");
                return pair_dist[i];
            }
            throw Error("duplicate root address");
        }
        // integral vs half-integral levels can never coincide
        throw Error("unreachable tail combination");
    }
    if (ta.has) return ta.level;
    if (tb.has) return tb.level;
    throw Error("duplicate root address");
}

std::pair<FqCtxPtr, Fq> PadicRootSystem::direction_unit(int i, int j) const {
    const PadicAddress& a = roots[i];
    const PadicAddress& b = roots[j];
    size_t m = std::min(a.steps.size(), b.steps.size());
    for (size_t s = 0; s < m; ++s) {
        const auto& sa = a.steps[s];
        const auto& sb = b.steps[s];
        if (sa.level < sb.level) return {sa.fld, sa.label};
        if (sb.level < sa.level) return {sb.fld, -sb.label};
        if (sa.fld.get() != sb.fld.get() || !(sa.label == sb.label)) {
            int kc = std::lcm(sa.fld->k, sb.fld->k);
            FqCtxPtr comp = FqCtx::get(p, kc);
            Fq la = FqEmbedding::get(sa.fld, comp)(sa.label);
            Fq lb = FqEmbedding::get(sb.fld, comp)(sb.label);
            return {comp, la - lb};
        }
    }
    Tail ta = tail_of(a, m), tb = tail_of(b, m);
    auto step_unit = [&](const PadicAddress& x, int sgn) -> std::pair<FqCtxPtr, Fq> {
        const auto& st = x.steps[m];
        return {st.fld, sgn > 0 ? st.label : -st.label};
    };
    if (ta.has && tb.has) {
        if (ta.level < tb.level) {
            if (ta.is_ram) throw Error("direction unit at a ramified level");
            return step_unit(a, +1);
        }
        if (tb.level < ta.level) {
            if (tb.is_ram) throw Error("direction unit at a ramified level");
            return step_unit(b, -1);
        }
        throw Error("direction unit at a ramified level");  // equal => both ram
    }
    if (ta.has) {
        if (ta.is_ram) throw Error("direction unit at a ramified level");
        return step_unit(a, +1);
    }
    if (tb.has) {
        if (tb.is_ram) throw Error("direction unit at a ramified level");
        return step_unit(b, -1);
    }
    throw Error("duplicate root address");
}

bool PadicRootSystem::same_ram_pair(int i, int j) const {
    if (i == j) return false;
    const PadicAddress& a = roots[i];
    const PadicAddress& b = roots[j];
    if (!a.ram || !b.ram) return false;
    return addr_equal(a, b, true) && a.ram_sign != b.ram_sign;
}

std::pair<FqCtxPtr, Fq> PadicRootSystem::residue(int i) const {
    const PadicAddress& a = roots[i];
    FqCtxPtr base = FqCtx::get(p, 1);
    if (a.steps.empty()) {
        if (a.ram) {
            if (a.ram_level < 0) throw Error("residue of a non-integral root");
            return {base, Fq::zero(base)};  // pair centered at 0 with positive level
        }
        return {base, Fq::zero(base)};  // exact zero root
    }
    const auto& s0 = a.steps.front();
    if (s0.level < 0) throw Error("residue of a non-integral root");
    if (s0.level > 0) return {base, Fq::zero(base)};
    return {s0.fld, s0.label};
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

PadicRootSystem padic_split(const UniPoly& F, const Int& p) {
    if (F.degree() < 1) throw Error("padic_split: need degree >= 1");
    if (!is_squarefree(F)) throw Error("padic_split: input must be squarefree");
    if (!is_prime(p)) throw Error("padic_split: p must be prime");

    // integral primitive model
    auto [zc, scale] = primitive_integer_coeffs(F);
    (void)scale;
    // rescale x so every root is integral: x -> x / p^B
    long B = 0;
    {
        UniPoly zpoly(std::vector<Rat>(zc.begin(), zc.end()));
        for (const auto& s : padic_newton_polygon(p, zpoly)) {
            if (s.slope < 0) {
                Rat need = -s.slope;
                Int b;
                mpz_cdiv_q(b.get_mpz_t(), need.get_num().get_mpz_t(), need.get_den().get_mpz_t());
                B = std::max(B, static_cast<long>(mpz_get_si(b.get_mpz_t())));
            }
        }
    }
    int n = static_cast<int>(zc.size()) - 1;
    std::vector<Int> work(zc);
    if (B > 0) {
        // p^(B n) F(x / p^B): coefficient i picks up p^(B (n - i))
        for (int i = 0; i <= n; ++i) work[i] *= pow_int(p, B * (n - i));
    }

    long vdisc = 0;
    {
        UniPoly wq(std::vector<Rat>(work.begin(), work.end()));
        Rat d = discriminant(wq);
        vdisc = std::max(0L, valuation(d, p));
    }

    long NW = std::max<long>(96, 4 * vdisc + 48);
    const long NW_CAP = 1 << 14;
    while (true) {
        try {
            SplitterState st;
            st.p = p;
            st.NW = NW;
            st.pNW = pow_int(p, NW);
            UCtx base = make_uctx(p, 1);
            UPoly G;
            G.reserve(work.size());
            for (const auto& cf : work) G.push_back(UElem{cf});
            split_rec(G, base, Rat(0), false, {}, true, st, 0);

            PadicRootSystem sys;
            sys.p = p;
            sys.x_scale = B;
            sys.roots = std::move(st.leaves);
            sys.n = static_cast<int>(sys.roots.size());
            if (sys.n != n)
                throw Error("padic_split: leaf count " + std::to_string(sys.n) +
                            " does not match degree " + std::to_string(n));

            // Frobenius permutation: raise every label to the p-th power
            sys.frobenius.resize(sys.n);
            sys.inertia.resize(sys.n);
            for (int i = 0; i < sys.n; ++i) {
                PadicAddress img = sys.roots[i];
                for (auto& stp : img.steps) stp.label = stp.label.pow(p);
                if (img.ram) img.ram_unit = img.ram_unit.pow(p);
                int found = -1;
                for (int j = 0; j < sys.n && found < 0; ++j)
                    if (addr_equal(img, sys.roots[j], false)) found = j;
                if (found < 0)
                    for (int j = 0; j < sys.n && found < 0; ++j)
                        if (addr_equal(img, sys.roots[j], true)) found = j;
                if (found < 0) throw Error("padic_split: frobenius image not found");
                sys.frobenius[i] = found;
            }
            for (int i = 0; i < sys.n; ++i) {
                sys.inertia[i] = i;
                if (sys.roots[i].ram)
                    for (int j = 0; j < sys.n; ++j)
                        if (sys.same_ram_pair(i, j)) sys.inertia[i] = j;
            }

            // distances inside ramified pairs
            sys.pair_dist.assign(sys.n, Rat(0));
            sys.pair_dist_known.assign(sys.n, 1);
            for (int i = 0; i < sys.n; ++i)
                if (sys.roots[i].ram) sys.pair_dist[i] = sys.roots[i].ram_level;
            if (p == 2) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < sys.n; ++i)
                    for (int j = i + 1; j < sys.n; ++j)
                        if (sys.same_ram_pair(i, j)) pairs.emplace_back(i, j);
                if (!pairs.empty()) {
                    for (auto& [i, j] : pairs) sys.pair_dist_known[i] = sys.pair_dist_known[j] = 0;
                    UniPoly wq(std::vector<Rat>(work.begin(), work.end()));
                    long vd = valuation(discriminant(wq), p);
                    long vlc = valuation(Rat(work.back()), p);
                    Rat known_sum(0);
                    for (int i = 0; i < sys.n; ++i)
                        for (int j = i + 1; j < sys.n; ++j)
                            if (!sys.same_ram_pair(i, j)) known_sum += sys.dist(i, j);
                    Rat rem = Rat(vd) - Rat(2 * (n - 1)) * Rat(vlc) - Rat(2) * known_sum;
                    // the pairs in one Frobenius orbit share their distance
                    bool one_orbit = true;
                    for (auto& [i, j] : pairs) {
                        int fi = sys.frobenius[pairs[0].first];
                        (void)fi;
                        // crude orbit check: all pairs conjugate iff their ram
                        // data matches under iterated Frobenius; with a single
                        // orbit every pair has the same level
                        if (sys.roots[i].ram_level != sys.roots[pairs[0].first].ram_level)
                            one_orbit = false;
                    }
                    bool same_data = true;
                    // verify all pairs lie in one Frobenius orbit by walking it
                    {
                        std::set<std::pair<int, int>> orbit;
                        auto norm = [](int a, int b) {
                            return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
                        };
                        auto cur = pairs[0];
                        for (int step = 0; step < 2 * sys.n; ++step) {
                            orbit.insert(norm(cur.first, cur.second));
                            cur = {sys.frobenius[cur.first], sys.frobenius[cur.second]};
                        }
                        same_data = orbit.size() == pairs.size();
                        for (auto& pr : pairs)
                            if (!orbit.count(norm(pr.first, pr.second))) same_data = false;
                    }
                    if (one_orbit && same_data) {
                        Rat delta = rem / Rat(2 * static_cast<long>(pairs.size()));
                        for (auto& [i, j] : pairs) {
                            if (delta < sys.roots[i].ram_level)
                                throw Error("2-adic pair distance below its level");
                            sys.pair_dist[i] = sys.pair_dist[j] = delta;
                            sys.pair_dist_known[i] = sys.pair_dist_known[j] = 1;
                        }
                    }
                }
            }
            return sys;
        } catch (const ResourceExhausted&) {
            if (NW >= NW_CAP) throw;
            NW *= 2;
        }
    }
}

std::vector<PadicRoot> padic_lift_roots(const Int& p, const UniPoly& q, long precision) {
    if (precision < 1) throw Error("padic_lift_roots: precision must be positive");
    PadicRootSystem sys = padic_split(q, p);
    // refine unramified roots by Newton iteration in their own fields
    std::vector<PadicRoot> out;
    long NW = precision + 8;
    Int pNW = pow_int(p, NW);

    auto [zc, scale] = primitive_integer_coeffs(q);
    (void)scale;

    for (int i = 0; i < sys.n; ++i) {
        const PadicAddress& a = sys.roots[i];
        PadicRoot r;
        r.residue_degree = a.residue_degree();
        r.ramification_index = a.ramification_index();
        r.residue_field = FqCtx::get(p, r.residue_degree);
        if (a.ram) {
            out.push_back(std::move(r));
            continue;
        }
        // initial approximation from the address, then Newton
        UCtx ctx = make_uctx(p, r.residue_degree);
        UElem x = uzero(ctx);
        for (const auto& stp : a.steps) {
            if (stp.level.get_den() != 1) throw Error("unreachable: unramified address");
            long lv = static_cast<long>(mpz_get_si(stp.level.get_num().get_mpz_t()));
            if (lv < 0) throw Error("padic_lift_roots: non-integral root after scaling");
            Fq lab = FqEmbedding::get(stp.fld, ctx.res)(stp.label);
            x = uadd(x, uscale(ulift(lab, ctx), pow_int(p, lv), ctx, pNW), ctx, pNW);
        }
        // scale the polynomial like padic_split did
        int n = static_cast<int>(zc.size()) - 1;
        UPoly P;
        for (int ci = 0; ci <= n; ++ci) {
            UElem e = uzero(ctx);
            e[0] = zc[ci] * pow_int(p, sys.x_scale * (n - ci));
            P.push_back(std::move(e));
        }
        UPoly dP;
        for (int ci = 1; ci <= n; ++ci) dP.push_back(uscale(P[ci], Int(ci), ctx, pNW));
        auto eval = [&](const UPoly& poly, const UElem& at) {
            UElem acc = uzero(ctx);
            for (size_t k = poly.size(); k-- > 0;) {
                acc = umul(acc, at, ctx, pNW);
                acc = uadd(acc, poly[k], ctx, pNW);
            }
            return acc;
        };
        for (int iter = 0; iter < 64; ++iter) {
            UElem fx = eval(P, x);
            long vfx = uval(fx, p);
            if (vfx >= precision + static_cast<long>(sys.x_scale)) break;
            UElem dfx = eval(dP, x);
            long vd = uval(dfx, p);
            if (vd * 2 >= vfx)
                throw ResourceExhausted("padic_lift_roots: Newton step stalled on a factor of " +
                                        q.str());
            // x <- x - fx / dfx  (exact p-power division then unit inversion)
            Int pv = pow_int(p, vd);
            UElem fx2(fx), dfx2(dfx);
            for (auto& vv : fx2) vv /= pv;
            for (auto& vv : dfx2) {
                Int qq, rr;
                mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), vv.get_mpz_t(), pv.get_mpz_t());
                if (sign(rr) != 0) throw Error("padic_lift_roots: non-exact derivative division");
                vv = qq;
            }
            UElem corr = umul(fx2, uinv(dfx2, ctx, pNW, NW), ctx, pNW);
            x = usub(x, corr, ctx, pNW);
        }
        // undo the x-scaling: root of q is x / p^B
        r.prec = precision;
        r.approx = x;
        if (sys.x_scale > 0) {
            // divide by p^B when possible; otherwise report the scaled root
            Int pb = pow_int(p, sys.x_scale);
            bool divisible = true;
            for (const auto& vv : r.approx)
                if (!mpz_divisible_p(vv.get_mpz_t(), pb.get_mpz_t())) divisible = false;
            if (divisible)
                for (auto& vv : r.approx) vv /= pb;
            else
                r.prec = precision - sys.x_scale;  // fractional part folded into precision loss
        }
        if (r.residue_degree == 1) {
            // detect an exact rational root
            Int cand = r.approx[0] % pNW;
            Int cand2 = cand - pNW;
            for (const Int& rep : {cand, cand2}) {
                Rat v(rep);
                if (sign(q(v)) == 0) {
                    r.exact = true;
                    r.exact_value = v;
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace prym
