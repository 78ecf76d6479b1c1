#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "prym/numeric.hpp"

namespace prym {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// Invariant: the highest stored coefficient is nonzero (zero polynomial is empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& a) { return UniPoly(std::vector<Rat>{a}); }
    static UniPoly x() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    // coefficients as decimal strings (may be fractions "a/b"), lowest degree first
    static UniPoly from_strings(const std::vector<std::string>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& leading() const;
    Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;

    Rat operator()(const Rat& x) const;  // Horner

    UniPoly derivative() const;
    UniPoly monic() const;

    // p(x + a)
    UniPoly shift(const Rat& a) const;
    // p(u*x)
    UniPoly scale(const Rat& u) const;
    // x^deg * p(1/x)
    UniPoly reverse() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);  // monic gcd
bool is_squarefree(const UniPoly& p);

/// Resultant via the subresultant pseudo-remainder sequence, exact over Q.
Rat resultant(const UniPoly& a, const UniPoly& b);
Rat discriminant(const UniPoly& p);

/// Clears denominators and content: returns primitive integer coefficients c
/// with positive leading sign and the rational s such that p = s * c.
std::pair<std::vector<Int>, Rat> primitive_integer_coeffs(const UniPoly& p);

}  // namespace prym
