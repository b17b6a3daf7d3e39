#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qi/quiver.hpp"

namespace qi {

/// Univariate Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest nonzero exponent to the highest; both ends are
/// nonzero, so the zero polynomial is the empty coefficient vector.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(const Integer& c);  // NOLINT: constants convert implicitly
    LaurentPoly(long c) : LaurentPoly(Integer(c)) {}  // NOLINT

    static LaurentPoly monomial(const Integer& c, int exponent);
    /// Coefficients of v^low, v^{low+1}, ...
    static LaurentPoly from_coefficients(int low, std::vector<Integer> coeffs);
    static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);
    static LaurentPoly variable() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }
    /// Lowest / highest exponent with nonzero coefficient; 0 for the zero polynomial.
    int low_degree() const noexcept { return low_; }
    int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(int exponent) const;
    const Integer& leading_coefficient() const { return coeffs_.back(); }
    /// Dense coefficients from low_degree() to high_degree().
    const std::vector<Integer>& dense() const noexcept { return coeffs_; }
    /// Nonzero terms in ascending exponent order.
    std::vector<std::pair<int, Integer>> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly pow(unsigned n) const;
    /// Multiply by v^k.
    LaurentPoly shifted(int k) const;
    /// v -> v^k for k != 0.
    LaurentPoly substitute_power(int k) const;
    /// Exact inverse of substitute_power(k): requires every exponent divisible by k.
    LaurentPoly contract_power(int k) const;
    /// v -> v^{-1}.
    LaurentPoly reflected() const { return substitute_power(-1); }
    bool is_palindromic() const;

    /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
    Integer content() const;
    LaurentPoly scaled(const Integer& c) const;
    /// Division of every coefficient by c; throws ArithmeticError if inexact.
    LaurentPoly divided_exactly(const Integer& c) const;

    /// Exact value at v0; ArithmeticError at v0 = 0 when a negative exponent is present.
    Rational evaluate(const Rational& v0) const;

    bool operator==(const LaurentPoly& other) const { return low_ == other.low_ && coeffs_ == other.coeffs_; }

    std::string to_string(std::string_view var = "v") const;

   private:
    void normalize();

    int low_ = 0;
    std::vector<Integer> coeffs_;
};

}  // namespace qi
