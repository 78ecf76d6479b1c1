#include "prym/finite_field.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace prym {

namespace {

// ---- F_p[x] helpers on raw coefficient vectors (lowest degree first) ----
// All vectors keep entries reduced into [0, p) and carry no trailing zeros.

using ZV = std::vector<Int>;

void trimv(ZV& v) {
    while (!v.empty() && sign(v.back()) == 0) v.pop_back();
}

void normv(ZV& v, const Int& p) {
    for (auto& c : v) {
        c %= p;
        if (sign(c) < 0) c += p;
    }
    trimv(v);
}

ZV mulmodp(const ZV& a, const ZV& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (sign(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    normv(r, p);
    return r;
}

// remainder mod a monic divisor
ZV remmodp(ZV a, const ZV& m, const Int& p) {
    normv(a, p);
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        Int top = a.back();
        int sh = static_cast<int>(a.size()) - 1 - dm;
        for (int j = 0; j < dm; ++j) {
            a[sh + j] = (a[sh + j] - top * m[j]) % p;
            if (sign(a[sh + j]) < 0) a[sh + j] += p;
        }
        a.pop_back();
        trimv(a);
    }
    return a;
}

ZV powmodp(ZV base, Int e, const ZV& m, const Int& p) {
    ZV r{Int(1)};
    base = remmodp(std::move(base), m, p);
    while (sign(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = remmodp(mulmodp(r, base, p), m, p);
        e >>= 1;
        if (sign(e) > 0) base = remmodp(mulmodp(base, base, p), m, p);
    }
    return r;
}

ZV monic(ZV a, const Int& p) {
    normv(a, p);
    if (a.empty()) return a;
    Int inv;
    mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
    for (auto& c : a) c = c * inv % p;
    return a;
}

ZV gcdmodp(ZV a, ZV b, const Int& p) {
    normv(a, p);
    normv(b, p);
    while (!b.empty()) {
        b = monic(std::move(b), p);
        ZV r = remmodp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(std::move(a), p);
}

// g(h) mod f, f monic
ZV composemodp(const ZV& g, const ZV& h, const ZV& f, const Int& p) {
    ZV acc;
    for (size_t i = g.size(); i-- > 0;) {
        acc = remmodp(mulmodp(acc, h, p), f, p);
        if (sign(g[i]) != 0) {
            if (acc.empty())
                acc = ZV{g[i]};
            else
                acc[0] = (acc[0] + g[i]) % p;
            trimv(acc);
        }
    }
    return acc;
}

bool irreducible_modp(const ZV& f, const Int& p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    ZV x{Int(0), Int(1)};
    // dbl[j] = x^(p^(2^j)) mod f
    std::vector<ZV> dbl{powmodp(x, p, f, p)};
    auto frob_power = [&](int j) {  // x^(p^j) mod f
        ZV acc = x;
        for (int b = 0; (1 << b) <= j; ++b) {
            while (static_cast<int>(dbl.size()) <= b)
                dbl.push_back(composemodp(dbl.back(), dbl.back(), f, p));
            if (j & (1 << b)) acc = composemodp(dbl[b], acc, f, p);
        }
        return acc;
    };
    auto minus_x = [&](ZV g) {
        if (g.size() < 2) g.resize(2, Int(0));
        g[1] = (g[1] - 1) % p;
        if (sign(g[1]) < 0) g[1] += p;
        trimv(g);
        return g;
    };
    std::vector<int> prime_divs;
    int m = n;
    for (int r = 2; r * r <= m; ++r)
        while (m % r == 0) {
            if (prime_divs.empty() || prime_divs.back() != r) prime_divs.push_back(r);
            m /= r;
        }
    if (m > 1 && (prime_divs.empty() || prime_divs.back() != m)) prime_divs.push_back(m);

    for (int r : prime_divs) {
        ZV g = minus_x(frob_power(n / r));
        if (g.empty()) return false;  // x^(p^(n/r)) == x: proper subfield splitting
        ZV gc = gcdmodp(f, g, p);
        if (static_cast<int>(gc.size()) - 1 != 0) return false;
    }
    return minus_x(frob_power(n)).empty();
}

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

FqCtxPtr FqCtx::get(const Int& p, int k) {
    static std::mutex mx;
    static std::map<std::pair<std::string, int>, FqCtxPtr> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(p.get_str(), k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (k < 1) throw Error("extension degree must be >= 1");
    if (!is_prime(p)) throw Error("characteristic must be prime: " + p.get_str());

    auto ctx = std::make_shared<FqCtx>();
    ctx->p = p;
    ctx->k = k;
    mpz_pow_ui(ctx->q.get_mpz_t(), p.get_mpz_t(), k);
    if (k == 1) {
        ctx->mod = {Int(0), Int(1)};  // t
    } else {
        // lexicographically least monic irreducible: tuples (c_{k-1},...,c_0)
        // in increasing order, constant coefficient varying fastest
        bool skip_pure_power_row;
        {
            Int g, km(k), pm1 = p - 1;
            mpz_gcd(g.get_mpz_t(), km.get_mpz_t(), pm1.get_mpz_t());
            // gcd(k, p-1) = 1 with k odd makes x -> x^k bijective: x^k + c always has a root
            skip_pure_power_row = (g == 1 && k % 2 == 1);
        }
        const long scan_guard = 500'000;
        long scanned = 0;
        std::vector<Int> tuple(k, Int(0));
        std::function<bool(int)> scan = [&](int pos) -> bool {
            if (pos < 0) {
                bool pure = true;
                for (int i = 1; i < k; ++i)
                    if (sign(tuple[i]) != 0) pure = false;
                if (pure && skip_pure_power_row) return false;
                if (++scanned > scan_guard)
                    throw ResourceExhausted("irreducible scan guard exceeded for p=" + p.get_str() +
                                            " k=" + std::to_string(k));
                ZV f(tuple);
                f.push_back(Int(1));
                return irreducible_modp(f, p);
            }
            for (Int c(0); c < p; ++c) {
                tuple[pos] = c;
                if (scan(pos - 1)) return true;
            }
            tuple[pos] = 0;
            return false;
        };
        if (!scan(k - 1)) throw Error("no irreducible polynomial found (unreachable)");
        ctx->mod = ZV(tuple);
        ctx->mod.push_back(Int(1));
    }
    auto cptr = FqCtxPtr(ctx);
    cache[key] = cptr;
    return cptr;
}

Fq::Fq(FqCtxPtr ctx, std::vector<Int> rep) : ctx_(std::move(ctx)), a_(std::move(rep)) {
    if (static_cast<int>(a_.size()) > ctx_->k) {
        a_ = remmodp(std::move(a_), ctx_->mod, ctx_->p);
    }
    a_.resize(ctx_->k, Int(0));
    for (auto& v : a_) {
        v %= ctx_->p;
        if (sign(v) < 0) v += ctx_->p;
    }
}

Fq Fq::zero(const FqCtxPtr& ctx) { return Fq(ctx, {}); }
Fq Fq::one(const FqCtxPtr& ctx) { return Fq(ctx, {Int(1)}); }
Fq Fq::gen(const FqCtxPtr& ctx) {
    if (ctx->k == 1) return Fq(ctx, {});  // modulus is t, so the generator class is 0
    return Fq(ctx, {Int(0), Int(1)});
}
Fq Fq::from_int(const FqCtxPtr& ctx, const Int& n) { return Fq(ctx, {n}); }

bool Fq::is_zero() const {
    for (const auto& v : a_)
        if (sign(v) != 0) return false;
    return true;
}

bool Fq::operator==(const Fq& o) const { return a_ == o.a_; }

Fq Fq::operator+(const Fq& o) const {
    std::vector<Int> r(a_);
    for (int i = 0; i < ctx_->k; ++i) {
        r[i] += o.a_[i];
        if (r[i] >= ctx_->p) r[i] -= ctx_->p;
    }
    return Fq(ctx_, std::move(r));
}

Fq Fq::operator-(const Fq& o) const {
    std::vector<Int> r(a_);
    for (int i = 0; i < ctx_->k; ++i) {
        r[i] -= o.a_[i];
        if (sign(r[i]) < 0) r[i] += ctx_->p;
    }
    return Fq(ctx_, std::move(r));
}

Fq Fq::operator-() const {
    std::vector<Int> r(a_);
    for (auto& v : r)
        if (sign(v) != 0) v = ctx_->p - v;
    return Fq(ctx_, std::move(r));
}

Fq Fq::operator*(const Fq& o) const {
    ZV prod = mulmodp(a_, o.a_, ctx_->p);
    prod = remmodp(std::move(prod), ctx_->mod, ctx_->p);
    return Fq(ctx_, std::move(prod));
}

Fq Fq::pow(const Int& e) const {
    if (sign(e) < 0) return inverse().pow(-e);
    ZV base(a_);
    trimv(base);
    ZV r = powmodp(std::move(base), e, ctx_->mod, ctx_->p);
    return Fq(ctx_, std::move(r));
}

Fq Fq::frobenius_iter(int n) const {
    Fq r = *this;
    for (int i = 0; i < n; ++i) r = r.frobenius();
    return r;
}

Fq Fq::inverse() const {
    if (is_zero()) throw Error("inverse of zero in F_q");
    const Int& p = ctx_->p;
    ZV r0(ctx_->mod), r1(a_);
    trimv(r1);
    ZV s0{}, s1{Int(1)};
    while (!r1.empty()) {
        // divide r0 by r1: r0 = q r1 + rem
        ZV rem = r0, q;
        int d1 = static_cast<int>(r1.size()) - 1;
        Int inv_lead;
        mpz_invert(inv_lead.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
        while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= d1) {
            int sh = static_cast<int>(rem.size()) - 1 - d1;
            Int c = rem.back() * inv_lead % p;
            if (static_cast<int>(q.size()) < sh + 1) q.resize(sh + 1, Int(0));
            q[sh] = (q[sh] + c) % p;
            for (int j = 0; j <= d1; ++j) {
                rem[sh + j] = (rem[sh + j] - c * r1[j]) % p;
                if (sign(rem[sh + j]) < 0) rem[sh + j] += p;
            }
            trimv(rem);
        }
        trimv(q);
        ZV qs = mulmodp(q, s1, p);
        ZV s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Int(0));
        for (size_t i = 0; i < qs.size(); ++i) {
            s2[i] = (s2[i] - qs[i]) % p;
            if (sign(s2[i]) < 0) s2[i] += p;
        }
        trimv(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Int inv_g;
    mpz_invert(inv_g.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
    for (auto& v : s0) v = v * inv_g % p;
    s0 = remmodp(std::move(s0), ctx_->mod, p);
    return Fq(ctx_, std::move(s0));
}

int Fq::quadratic_character() const {
    if (ctx_->char_two()) throw Error("quadratic character undefined in characteristic 2");
    if (is_zero()) return 0;
    Fq v = pow((ctx_->q - 1) / 2);
    return v == one(ctx_) ? 1 : -1;
}

std::optional<Fq> Fq::sqrt() const {
    if (is_zero()) return zero(ctx_);
    if (ctx_->char_two()) return pow(ctx_->q / 2);  // squaring is bijective
    if (quadratic_character() != 1) return std::nullopt;

    // Tonelli-Shanks in F_q; deterministic seeded search for a non-residue
    Int Q = ctx_->q - 1;
    unsigned long S = mpz_scan1(Q.get_mpz_t(), 0);
    Q >>= S;
    Fq z = zero(ctx_);
    uint64_t seed = 0x51ab5eedULL;
    for (int tries = 0; tries < 4096; ++tries) {
        std::vector<Int> rep(ctx_->k);
        for (int i = 0; i < ctx_->k; ++i)
            rep[i] = Int(static_cast<unsigned long>(splitmix64(seed))) % ctx_->p;
        Fq cand(ctx_, std::move(rep));
        if (!cand.is_zero() && cand.quadratic_character() == -1) {
            z = cand;
            break;
        }
    }
    if (z.is_zero()) throw ResourceExhausted("non-residue search failed");

    Fq c = z.pow(Q);
    Fq t = pow(Q);
    Fq r = pow((Q + 1) / 2);
    unsigned long M = S;
    while (!(t == one(ctx_))) {
        unsigned long i = 0;
        Fq tt = t;
        while (!(tt == one(ctx_))) {
            tt = tt * tt;
            ++i;
        }
        Fq b = c;
        for (unsigned long j = 0; j + i + 1 < M; ++j) b = b * b;
        M = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

int Fq::trace_to_f2() const {
    if (!ctx_->char_two()) throw Error("trace_to_f2 needs characteristic 2");
    Fq acc = *this;
    Fq cur = *this;
    for (int i = 1; i < ctx_->k; ++i) {
        cur = cur * cur;
        acc = acc + cur;
    }
    return acc.is_zero() ? 0 : 1;
}

std::optional<Fq> Fq::artin_schreier_root() const {
    if (!ctx_->char_two()) throw Error("artin_schreier_root needs characteristic 2");
    int k = ctx_->k;
    std::vector<std::vector<int>> M(k, std::vector<int>(k + 1, 0));
    for (int j = 0; j < k; ++j) {
        std::vector<Int> e(k, Int(0));
        e[j] = 1;
        Fq b(ctx_, std::move(e));
        Fq im = b * b + b;
        for (int i = 0; i < k; ++i) M[i][j] = static_cast<int>(im.rep()[i].get_ui() & 1);
    }
    for (int i = 0; i < k; ++i) M[i][k] = static_cast<int>(a_[i].get_ui() & 1);
    int row = 0;
    std::vector<int> pivot_col(k, -1);
    for (int col = 0; col < k && row < k; ++col) {
        int pr = -1;
        for (int r = row; r < k; ++r)
            if (M[r][col]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[pr], M[row]);
        for (int r = 0; r < k; ++r)
            if (r != row && M[r][col])
                for (int cidx = col; cidx <= k; ++cidx) M[r][cidx] ^= M[row][cidx];
        pivot_col[row] = col;
        ++row;
    }
    for (int r = row; r < k; ++r)
        if (M[r][k]) return std::nullopt;
    std::vector<Int> z(k, Int(0));
    for (int r = 0; r < row; ++r)
        if (M[r][k]) z[pivot_col[r]] = 1;
    Fq res(ctx_, std::move(z));
    if (!(res * res + res == *this)) return std::nullopt;
    return res;
}

int Fq::cmp(const Fq& a, const Fq& b) {
    for (int i = a.ctx_->k; i-- > 0;) {
        int c = ::mpz_cmp(a.a_[i].get_mpz_t(), b.a_[i].get_mpz_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Fq::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < ctx_->k; ++i) {
        if (i) os << ",";
        os << a_[i].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace prym
