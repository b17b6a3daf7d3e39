#include "qi/rational_function.hpp"

#include <utility>

#include "qi/errors.hpp"

namespace qi {

namespace {

// Ordinary polynomials over Z, ascending dense coefficients, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const Dense& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(Dense& p) {
    if (p.empty()) return;
    Integer g = content(p);
    if (p.back() < 0) g = -g;
    if (g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Some multiple lc(b)^k * a reduced modulo b; enough for a primitive remainder sequence.
Dense pseudo_remainder(Dense r, const Dense& b) {
    const int db = degree(b);
    const Integer& lb = b.back();
    Integer lr;
    while (!r.empty() && degree(r) >= db) {
        lr = r.back();
        const std::size_t shift = static_cast<std::size_t>(degree(r) - db);
        for (auto& c : r) c *= lb;
        for (std::size_t k = 0; k < b.size(); ++k) mpz_submul(r[shift + k].get_mpz_t(), lr.get_mpz_t(), b[k].get_mpz_t());
        trim(r);
        make_primitive(r);
    }
    return r;
}

Dense dense_gcd(Dense a, Dense b) {
    make_primitive(a);
    make_primitive(b);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

// b divides a in Z[x] exactly; returns the quotient or throws.
Dense dense_divide(Dense a, const Dense& b) {
    if (b.empty()) throw ArithmeticError("division by the zero polynomial");
    if (a.empty()) return {};
    const int db = degree(b);
    if (degree(a) < db) throw ArithmeticError("inexact polynomial division");
    Dense q(static_cast<std::size_t>(degree(a) - db + 1), Integer(0));
    Integer c;
    for (int k = degree(a) - db; k >= 0; --k) {
        Integer& top = a[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) throw ArithmeticError("inexact polynomial division");
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t t = 0; t < b.size(); ++t)
            mpz_submul(a[static_cast<std::size_t>(k) + t].get_mpz_t(), c.get_mpz_t(), b[t].get_mpz_t());
    }
    trim(a);
    if (!a.empty()) throw ArithmeticError("inexact polynomial division");
    trim(q);
    return q;
}

Dense to_dense(const LaurentPoly& p) { return p.dense(); }

LaurentPoly from_dense(int low, Dense d) { return LaurentPoly::from_coefficients(low, std::move(d)); }

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return from_dense(0, [&] { Dense d = to_dense(b); make_primitive(d); return d; }());
    if (b.is_zero()) return from_dense(0, [&] { Dense d = to_dense(a); make_primitive(d); return d; }());
    return from_dense(0, dense_gcd(to_dense(a), to_dense(b)));
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
    if (a.is_zero()) return {};
    return from_dense(a.low_degree() - b.low_degree(), dense_divide(to_dense(a), to_dense(b)));
}

RationalFunc::RationalFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    canonicalize();
}

void RationalFunc::canonicalize() {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const int shift = num_.low_degree() - den_.low_degree();
    Dense n = to_dense(num_);
    Dense d = to_dense(den_);
    if (d.size() > 1 && n.size() > 1) {
        Dense g = dense_gcd(n, d);
        if (degree(g) > 0) {
            n = dense_divide(std::move(n), g);
            d = dense_divide(std::move(d), g);
        }
    }
    Integer cn = content(n), cd = content(d), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (d.back() < 0) c = -c;
    if (c != 1) {
        for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    num_ = from_dense(shift, std::move(n));
    den_ = from_dense(0, std::move(d));
}

RationalFunc RationalFunc::operator-() const { return RationalFunc(Canonical{}, -num_, den_); }

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunc(a.num_ + b.num_, a.den_);
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunc(RationalFunc::Canonical{}, a.num_ * b.num_, LaurentPoly(1));
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) { return a * b.inverse(); }

RationalFunc RationalFunc::inverse() const {
    if (is_zero()) throw ArithmeticError("division by the zero rational function");
    return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunc result(1), base(*this);
    while (n > 0) {
        if (n & 1L) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

RationalFunc RationalFunc::substitute_power(int k) const {
    return RationalFunc(num_.substitute_power(k), den_.substitute_power(k));
}

Rational RationalFunc::evaluate(const Rational& v0) const {
    Rational d = den_.evaluate(v0);
    if (d == 0) throw ArithmeticError("pole at v = " + v0.get_str());
    return num_.evaluate(v0) / d;
}

std::string RationalFunc::to_string(std::string_view var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

LaurentPoly to_polynomial(const RationalFunc& x) {
    if (x.is_polynomial()) return x.numerator();
    const LaurentPoly& n = x.numerator();
    Dense r = pseudo_remainder(to_dense(n), to_dense(x.denominator()));
    throw ArithmeticError("not a polynomial: " + x.to_string() + "; remainder (up to a constant) " +
                          from_dense(n.low_degree(), std::move(r)).to_string());
}

}  // namespace qi
