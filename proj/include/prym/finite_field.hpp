#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "prym/numeric.hpp"

namespace prym {

struct FqCtx;
using FqCtxPtr = std::shared_ptr<const FqCtx>;

/// F_{p^k} presented as F_p[t]/(m(t)) with m the lexicographically least monic
/// irreducible of degree k (coefficients compared from the top down).
struct FqCtx {
    Int p;
    int k;
    std::vector<Int> mod;  // size k+1, monic
    Int q;                 // p^k

    static FqCtxPtr get(const Int& p, int k);
    bool char_two() const { return p == 2; }
};

class Fq {
  public:
    Fq() = default;
    Fq(FqCtxPtr ctx, std::vector<Int> rep);

    static Fq zero(const FqCtxPtr& ctx);
    static Fq one(const FqCtxPtr& ctx);
    static Fq gen(const FqCtxPtr& ctx);  // the class of t
    static Fq from_int(const FqCtxPtr& ctx, const Int& n);

    const FqCtxPtr& ctx() const { return ctx_; }
    const std::vector<Int>& rep() const { return a_; }
    bool is_zero() const;
    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq inverse() const;
    Fq pow(const Int& e) const;
    Fq frobenius() const { return pow(ctx_->p); }
    Fq frobenius_iter(int n) const;

    /// -1, 0, +1 (odd characteristic only)
    int quadratic_character() const;
    std::optional<Fq> sqrt() const;

    /// absolute trace to F_2 (characteristic 2 only), returned as 0/1
    int trace_to_f2() const;
    /// solves z^2 + z = *this when the trace vanishes (characteristic 2)
    std::optional<Fq> artin_schreier_root() const;

    /// deterministic total order (for canonical choices)
    static int cmp(const Fq& a, const Fq& b);

    std::string str() const;

  private:
    FqCtxPtr ctx_;
    std::vector<Int> a_;  // size k, entries in [0,p)
};

}  // namespace prym
