#include "qi/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "qi/errors.hpp"

namespace qi {

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<Integer> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
}

void LaurentPoly::normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    }
    low_ += static_cast<int>(first);
}

Integer LaurentPoly::coefficient(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
    std::vector<std::pair<int, Integer>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    int lo = std::min(low_, other.low_);
    int hi = std::max(high_degree(), other.high_degree());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[static_cast<std::size_t>(other.low_ - low_) + k] += other.coeffs_[k];
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(p.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    p.normalize();
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result(1), base(*this);
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.low_ += k;
    return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    if (k == 0) throw ArithmeticError("substitution v -> v^0 is not supported");
    if (k == 1 || is_zero()) return *this;
    std::vector<std::pair<int, Integer>> t = terms();
    for (auto& term : t) term.first *= k;
    return from_terms(t);
}

LaurentPoly LaurentPoly::contract_power(int k) const {
    if (k == 0) throw ArithmeticError("contraction by 0");
    std::vector<std::pair<int, Integer>> t = terms();
    for (auto& term : t) {
        if (term.first % k != 0) throw ArithmeticError("exponent " + std::to_string(term.first) + " is not divisible by " + std::to_string(k));
        term.first /= k;
    }
    return from_terms(t);
}

bool LaurentPoly::is_palindromic() const {
    if (is_zero()) return true;
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Integer LaurentPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
    if (c == 0) return {};
    LaurentPoly p(*this);
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

LaurentPoly LaurentPoly::divided_exactly(const Integer& c) const {
    if (c == 0) throw ArithmeticError("division by zero");
    LaurentPoly p(*this);
    for (auto& x : p.coeffs_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw ArithmeticError("inexact coefficient division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return p;
}

Rational LaurentPoly::evaluate(const Rational& v0) const {
    if (is_zero()) return 0;
    if (v0 == 0) {
        if (low_ < 0) throw ArithmeticError("evaluation at v = 0 of a polynomial with negative exponents");
        return low_ == 0 ? Rational(coeffs_[0]) : Rational(0);
    }
    // Horner over the dense part, then the v^low factor.
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v0 + Rational(*it);
    Rational factor = 1;
    Rational base = low_ >= 0 ? v0 : Rational(1) / v0;
    for (int k = 0; k < std::abs(low_); ++k) factor *= base;
    return acc * factor;
}

std::string LaurentPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (*it == 0) continue;
        int e = low_ + static_cast<int>(coeffs_.rend() - it) - 1;
        Integer c = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Integer a = abs(c);
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace qi
