#include "prym/sturm.hpp"

#include <deque>

namespace prym {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign(q(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rat cauchy_root_bound(const UniPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeff(i) / p.leading());
        if (r > m) m = r;
    }
    Rat bound = m + 1;
    Rat b(1);
    while (b < bound) b *= 2;
    return b;
}

std::vector<IsolatingInterval> sturm_isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
    if (!is_squarefree(p)) throw Error("sturm_isolate_real_roots requires squarefree input");
    std::vector<IsolatingInterval> out;
    if (p.degree() < 1) return out;

    auto chain = sturm_chain(p);
    Rat B = cauchy_root_bound(p);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::deque<Seg> work;
    int total = sturm_count(chain, -B, B);
    if (total > 0) work.push_back({-B, B, total});

    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.count == 1) {
            // endpoints of the initial box are non-roots; interior endpoints are
            // checked before being used as cut points below
            out.push_back({s.lo, s.hi, p});
            continue;
        }
        Rat m = (s.lo + s.hi) / 2;
        while (sign(p(m)) == 0) m = (s.lo + m) / 2;  // dyadic, finitely many roots
        int left = sturm_count(chain, s.lo, m);
        if (left > 0) work.push_back({s.lo, m, left});
        if (s.count - left > 0) work.push_back({m, s.hi, s.count - left});
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

void refine_interval(IsolatingInterval& iv, const Rat& width) {
    auto chain = sturm_chain(iv.poly);
    while (iv.width() >= width) {
        Rat m = iv.mid();
        while (sign(iv.poly(m)) == 0) m = (iv.lo + m) / 2;
        if (sturm_count(chain, iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
}

int count_real_roots(const UniPoly& p) {
    if (!is_squarefree(p)) throw Error("count_real_roots requires squarefree input");
    if (p.degree() < 1) return 0;
    auto chain = sturm_chain(p);
    Rat B = cauchy_root_bound(p);
    return sturm_count(chain, -B, B);
}

}  // namespace prym
