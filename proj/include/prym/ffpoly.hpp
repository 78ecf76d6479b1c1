#pragma once

#include <utility>
#include <vector>

#include "prym/finite_field.hpp"

namespace prym {

/// Dense polynomial over F_q, lowest degree first, no trailing zeros.
class FqPoly {
  public:
    explicit FqPoly(FqCtxPtr ctx) : ctx_(std::move(ctx)) {}
    FqPoly(FqCtxPtr ctx, std::vector<Fq> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        trim();
    }

    const FqCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Fq coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Fq::zero(ctx_);
    }
    const std::vector<Fq>& coeffs() const { return c_; }
    const Fq& leading() const;

    static FqPoly x(const FqCtxPtr& ctx);
    static FqPoly constant(const Fq& a);

    bool operator==(const FqPoly& o) const { return c_ == o.c_; }
    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly operator*(const Fq& s) const;

    Fq operator()(const Fq& x) const;

    FqPoly derivative() const;
    FqPoly monic() const;
    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FqCtxPtr ctx_;
    std::vector<Fq> c_;
};

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
FqPoly gcd_poly(const FqPoly& a, const FqPoly& b);
FqPoly powmod(const FqPoly& base, const Int& e, const FqPoly& mod);

/// full factorization into monic irreducibles with multiplicities
std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f);
/// distinct roots in F_q with multiplicities
std::vector<std::pair<Fq, int>> roots(const FqPoly& f);
bool is_irreducible(const FqPoly& f);

/// canonical field embedding F_{p^k} -> F_{p^K} for k | K; maps the generator
/// to the least root (under Fq::cmp) of the small modulus in the big field
class FqEmbedding {
  public:
    static const FqEmbedding& get(const FqCtxPtr& from, const FqCtxPtr& to);
    Fq operator()(const Fq& x) const;
    const FqCtxPtr& from() const { return from_; }
    const FqCtxPtr& to() const { return to_; }

  private:
    FqCtxPtr from_, to_;
    Fq gen_image_;
    friend struct FqEmbeddingCache;
};

}  // namespace prym
