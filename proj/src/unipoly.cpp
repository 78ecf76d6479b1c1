#include "prym/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace prym {

UniPoly UniPoly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        Rat q(s);
        q.canonicalize();
        c.push_back(q);
    }
    return UniPoly(std::move(c));
}

const Rat& UniPoly::leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

Rat UniPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

UniPoly UniPoly::shift(const Rat& a) const {
    if (is_zero()) return UniPoly();
    // Taylor shift by synthetic Horner passes
    std::vector<Rat> r(c_);
    size_t n = r.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t i = n - 1; i-- > k;) r[i] += a * r[i + 1];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scale(const Rat& u) const {
    std::vector<Rat> r(c_);
    Rat pw(1);
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= u;
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::reverse() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (sign(a) == 0) continue;
        if (!first) os << (sign(a) > 0 ? " + " : " - ");
        else if (sign(a) < 0) os << "-";
        Rat mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    std::vector<Rat> r(a.coeffs());
    int db = b.degree();
    std::vector<Rat> q(std::max(0, a.degree() - db + 1), Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        if (static_cast<size_t>(i) >= r.size() || sign(r[i]) == 0) continue;
        Rat f = r[i] / b.leading();
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd_poly(p, p.derivative()).degree() == 0;
}

std::pair<std::vector<Int>, Rat> primitive_integer_coeffs(const UniPoly& p) {
    if (p.is_zero()) return {{}, Rat(1)};
    Int den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> z;
    z.reserve(p.coeffs().size());
    Int cont(0);
    for (const auto& c : p.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (sign(z.back()) < 0) cont = -cont;
    for (auto& v : z) v /= cont;
    Rat s(cont, den);
    s.canonicalize();
    return {z, s};
}

namespace {

void trim_z(std::vector<Int>& v) {
    while (!v.empty() && sign(v.back()) == 0) v.pop_back();
}

// pseudo-remainder: lc(B)^(degA-degB+1) * A mod B, all over Z
std::vector<Int> prem(const std::vector<Int>& A, const std::vector<Int>& B) {
    int da = static_cast<int>(A.size()) - 1;
    int db = static_cast<int>(B.size()) - 1;
    const Int& lb = B.back();
    std::vector<Int> R = A;
    int steps = 0;
    while (static_cast<int>(R.size()) - 1 >= db) {
        int e = static_cast<int>(R.size()) - 1 - db;
        Int top = R.back();
        for (auto& v : R) v *= lb;
        for (int j = 0; j <= db; ++j) R[e + j] -= top * B[j];
        trim_z(R);
        ++steps;
        if (R.empty()) break;
    }
    // normalize to exactly lb^(d+1) * A mod B
    for (; steps < da - db + 1; ++steps)
        for (auto& v : R) v *= lb;
    return R;
}

Int resultant_z(std::vector<Int> A, std::vector<Int> B) {
    // subresultant PRS, Cohen Algorithm 3.3.7
    int s = 1;
    if (A.size() < B.size()) {
        if (((A.size() - 1) * (B.size() - 1)) % 2 == 1) s = -s;
        std::swap(A, B);
    }
    Int g(1), h(1);
    while (true) {
        int da = static_cast<int>(A.size()) - 1;
        int db = static_cast<int>(B.size()) - 1;
        if (db == 0) break;
        int d = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
        std::vector<Int> R = prem(A, B);
        if (R.empty()) return Int(0);
        A = B;
        Int divisor = g * pow_int(h, d);
        B = std::move(R);
        for (auto& v : B) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
            if (sign(r) != 0) throw Error("subresultant exact division failed");
            v = q;
        }
        g = A.back();
        if (d > 0) {
            // h = g^d / h^(d-1)
            Int num = pow_int(g, d);
            Int den = pow_int(h, d - 1);
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (sign(r) != 0) throw Error("subresultant h update failed");
            h = q;
        }
    }
    int da = static_cast<int>(A.size()) - 1;
    // res = s * lc(B)^da / h^(da-1)
    Int num = pow_int(B.back(), da);
    Int den = pow_int(h, da - 1);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sign(r) != 0) throw Error("subresultant final division failed");
    return s > 0 ? q : Int(-q);
}

}  // namespace

Rat resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw Error("resultant of zero polynomial");
    int da = a.degree(), db = b.degree();
    if (da == 0) return pow_rat(a.coeff(0), db);
    if (db == 0) return pow_rat(b.coeff(0), da);
    auto [az, as] = primitive_integer_coeffs(a);
    auto [bz, bs] = primitive_integer_coeffs(b);
    Int rz = resultant_z(az, bz);
    return Rat(rz) * pow_rat(as, db) * pow_rat(bs, da);
}

Rat discriminant(const UniPoly& p) {
    int n = p.degree();
    if (n < 1) throw Error("discriminant needs degree >= 1");
    if (n == 1) return Rat(1);
    Rat r = resultant(p, p.derivative()) / p.leading();
    if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

}  // namespace prym
