#include "prym/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace prym {

const Fq& FqPoly::leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial over F_q");
    return c_.back();
}

FqPoly FqPoly::x(const FqCtxPtr& ctx) {
    return FqPoly(ctx, {Fq::zero(ctx), Fq::one(ctx)});
}

FqPoly FqPoly::constant(const Fq& a) { return FqPoly(a.ctx(), {a}); }

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<Fq> r(std::max(c_.size(), o.c_.size()), Fq::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<Fq> r(std::max(c_.size(), o.c_.size()), Fq::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(ctx_);
    std::vector<Fq> r(c_.size() + o.c_.size() - 1, Fq::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::operator*(const Fq& s) const {
    std::vector<Fq> r(c_);
    for (auto& v : r) v = v * s;
    return FqPoly(ctx_, std::move(r));
}

Fq FqPoly::operator()(const Fq& x) const {
    Fq acc = Fq::zero(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FqPoly FqPoly::derivative() const {
    if (degree() < 1) return FqPoly(ctx_);
    std::vector<Fq> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Fq::from_int(ctx_, Int(i)));
    return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::string FqPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].str();
    }
    os << "]";
    return os.str();
}

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial over F_q");
    auto ctx = a.ctx();
    std::vector<Fq> rem(a.coeffs());
    int db = b.degree();
    Fq invl = b.leading().inverse();
    std::vector<Fq> quo(std::max(0, a.degree() - db + 1), Fq::zero(ctx));
    for (int i = a.degree(); i >= db; --i) {
        if (static_cast<size_t>(i) >= rem.size() || rem[i].is_zero()) continue;
        Fq f = rem[i] * invl;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.coeff(j);
    }
    return {FqPoly(ctx, std::move(quo)), FqPoly(ctx, std::move(rem))};
}

FqPoly gcd_poly(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

FqPoly powmod(const FqPoly& base, const Int& e, const FqPoly& mod) {
    FqPoly r = FqPoly::constant(Fq::one(base.ctx()));
    FqPoly b = divrem(base, mod).second;
    Int n = e;
    while (sign(n) > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = divrem(r * b, mod).second;
        n >>= 1;
        if (sign(n) > 0) b = divrem(b * b, mod).second;
    }
    return r;
}

namespace {

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

FqPoly random_poly_det(const FqCtxPtr& ctx, int deg, uint64_t& seed) {
    std::vector<Fq> c;
    c.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        std::vector<Int> rep(ctx->k);
        for (int j = 0; j < ctx->k; ++j)
            rep[j] = Int(static_cast<unsigned long>(splitmix64(seed))) % ctx->p;
        c.emplace_back(ctx, std::move(rep));
    }
    return FqPoly(ctx, std::move(c));
}

// p-th root of an F_q element (Frobenius is bijective)
Fq pth_root(const Fq& a) {
    const auto& ctx = a.ctx();
    Int e = ctx->q / ctx->p;  // p^(k-1)
    return a.pow(e);
}

// f with f' = 0 is g(x^p); recover g
FqPoly pth_root_poly(const FqPoly& f) {
    const auto& ctx = f.ctx();
    unsigned long p = ctx->p.get_ui();
    std::vector<Fq> g;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) g.push_back(pth_root(f.coeff(i)));
    return FqPoly(ctx, std::move(g));
}

void squarefree_decomposition(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
    if (f.degree() < 1) return;
    FqPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomposition(pth_root_poly(f), mult * static_cast<int>(f.ctx()->p.get_ui()),
                                 out);
        return;
    }
    FqPoly g = gcd_poly(f, d);
    FqPoly w = divrem(f, g).first;  // squarefree part
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = gcd_poly(w, g);
        FqPoly fac = divrem(w, y).first;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        g = divrem(g, y).first;
        ++i;
    }
    if (g.degree() > 0) squarefree_decomposition(g, mult, out);
    else if (!g.is_zero() && g.degree() == 0) {
        // constant, done
    }
}

// distinct-degree factorization of squarefree monic f: (product of irreducibles of degree d, d)
std::vector<std::pair<FqPoly, int>> ddf(const FqPoly& f) {
    std::vector<std::pair<FqPoly, int>> out;
    const auto& ctx = f.ctx();
    FqPoly rest = f;
    FqPoly x = FqPoly::x(ctx);
    FqPoly h = x;  // x^(q^d) mod rest
    int d = 0;
    while (rest.degree() > 0 && rest.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, ctx->q, rest);
        FqPoly g = gcd_poly(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = divrem(rest, g).first;
            h = divrem(h, rest).second;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const FqPoly& f, int d, std::vector<FqPoly>& out, uint64_t& seed) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto& ctx = f.ctx();
    FqPoly splitter(ctx);
    while (true) {
        FqPoly r = random_poly_det(ctx, f.degree() - 1, seed);
        if (r.degree() < 1) continue;
        FqPoly g = gcd_poly(f, r);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
        if (ctx->char_two()) {
            // absolute trace map over F_2 of dimension k*d
            FqPoly t = r, cur = r;
            long total = static_cast<long>(ctx->k) * d;
            for (long i = 1; i < total; ++i) {
                cur = divrem(cur * cur, f).second;
                t = t + cur;
            }
            FqPoly g2 = gcd_poly(f, t);
            if (g2.degree() > 0 && g2.degree() < f.degree()) {
                splitter = g2;
                break;
            }
        } else {
            Int e = (pow_int(ctx->q, d) - 1) / 2;
            FqPoly t = powmod(r, e, f) - FqPoly::constant(Fq::one(ctx));
            FqPoly g2 = gcd_poly(f, t);
            if (g2.degree() > 0 && g2.degree() < f.degree()) {
                splitter = g2;
                break;
            }
        }
    }
    edf(splitter, d, out, seed);
    edf(divrem(f, splitter).first, d, out, seed);
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f) {
    if (f.degree() < 1) throw Error("factor: constant polynomial");
    std::vector<std::pair<FqPoly, int>> sqf;
    squarefree_decomposition(f.monic(), 1, sqf);
    std::vector<std::pair<FqPoly, int>> out;
    uint64_t seed = 0xfac702ULL;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<FqPoly> irr;
            edf(prod, d, irr, seed);
            for (auto& i : irr) out.emplace_back(i, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            int c = Fq::cmp(a.first.coeff(i), b.first.coeff(i));
            if (c != 0) return c < 0;
        }
        return a.second < b.second;
    });
    return out;
}

std::vector<std::pair<Fq, int>> roots(const FqPoly& f) {
    std::vector<std::pair<Fq, int>> out;
    for (const auto& [irr, mult] : factor(f)) {
        if (irr.degree() == 1) {
            // monic x + c: root = -c
            out.emplace_back(-irr.coeff(0), mult);
        }
    }
    return out;
}

bool is_irreducible(const FqPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor(f);
    return fac.size() == 1 && fac[0].second == 1;
}

struct FqEmbeddingCache {
    static const FqEmbedding& get(const FqCtxPtr& from, const FqCtxPtr& to) {
        static std::mutex mx;
        static std::map<std::pair<std::pair<std::string, int>, int>, FqEmbedding> cache;
        std::lock_guard<std::mutex> lock(mx);
        auto key = std::make_pair(std::make_pair(from->p.get_str(), from->k), to->k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        if (from->p != to->p || to->k % from->k != 0)
            throw Error("no embedding F_{p^" + std::to_string(from->k) + "} -> F_{p^" +
                        std::to_string(to->k) + "}");
        FqEmbedding e;
        e.from_ = from;
        e.to_ = to;
        if (from->k == to->k) {
            e.gen_image_ = Fq::gen(to);
        } else {
            std::vector<Fq> lifted;
            for (const auto& c : from->mod) lifted.push_back(Fq::from_int(to, c));
            auto rts = roots(FqPoly(to, std::move(lifted)));
            if (rts.empty()) throw Error("embedding root not found (unreachable)");
            Fq best = rts[0].first;
            for (const auto& [r, m] : rts)
                if (Fq::cmp(r, best) < 0) best = r;
            e.gen_image_ = best;
        }
        return cache.emplace(key, std::move(e)).first->second;
    }
};

const FqEmbedding& FqEmbedding::get(const FqCtxPtr& from, const FqCtxPtr& to) {
    return FqEmbeddingCache::get(from, to);
}

Fq FqEmbedding::operator()(const Fq& x) const {
    // evaluate the representation polynomial at the generator image
    Fq acc = Fq::zero(to_);
    for (size_t i = x.rep().size(); i-- > 0;) acc = acc * gen_image_ + Fq::from_int(to_, x.rep()[i]);
    return acc;
}

}  // namespace prym
