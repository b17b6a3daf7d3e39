#pragma once

#include <string>
#include <string_view>

#include "qi/laurent.hpp"

namespace qi {

/// Element of Q(v) in canonical form.
///
/// Canonical form: numerator and denominator are coprime in Q[v, v^-1], the
/// denominator is an ordinary polynomial with nonzero constant term and positive
/// leading coefficient, and the integer contents of numerator and denominator are
/// coprime. Two functions are equal iff their canonical forms are identical.
class RationalFunc {
   public:
    RationalFunc() : num_(), den_(1) {}
    RationalFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunc(long c) : num_(c), den_(1) {}                // NOLINT
    /// Throws ArithmeticError if the denominator is zero.
    RationalFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& numerator() const noexcept { return num_; }
    const LaurentPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly(1); }

    RationalFunc operator-() const;
    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) { return a + (-b); }
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    /// Throws ArithmeticError when dividing by zero.
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
    RationalFunc& operator+=(const RationalFunc& b) { return *this = *this + b; }
    RationalFunc& operator-=(const RationalFunc& b) { return *this = *this - b; }
    RationalFunc& operator*=(const RationalFunc& b) { return *this = *this * b; }

    RationalFunc inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    RationalFunc pow(long n) const;
    /// v -> v^k.
    RationalFunc substitute_power(int k) const;

    bool operator==(const RationalFunc& other) const { return num_ == other.num_ && den_ == other.den_; }

    /// Exact value; ArithmeticError at a pole.
    Rational evaluate(const Rational& v0) const;

    std::string to_string(std::string_view var = "v") const;

   private:
    struct Canonical {};
    RationalFunc(Canonical, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Numerator of a rational function whose canonical denominator is 1.
/// Throws ArithmeticError carrying the division remainder otherwise.
LaurentPoly to_polynomial(const RationalFunc& x);

/// Primitive gcd of two Laurent polynomials (up to units v^k and sign), with
/// lowest exponent 0 and positive leading coefficient.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b where b divides a in Q[v, v^-1] and the quotient is integral.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qi
