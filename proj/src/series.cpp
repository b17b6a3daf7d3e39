#include "qi/series.hpp"

#include <algorithm>

#include "qi/errors.hpp"

namespace qi {

TruncatedSeries::TruncatedSeries(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw InputError("series cutoff must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(int cutoff, const LaurentPoly& poly) : TruncatedSeries(cutoff) {
    if (!poly.is_zero() && poly.low_degree() < 0) throw InputError("series cannot hold negative exponents");
    for (const auto& [e, c] : poly.terms())
        if (e <= cutoff) coeffs_[static_cast<std::size_t>(e)] = c;
}

TruncatedSeries TruncatedSeries::geometric(int cutoff, int k) {
    if (k < 1) throw InputError("geometric series needs k >= 1");
    TruncatedSeries s(cutoff);
    for (int e = 0; e <= cutoff; e += k) s.coeffs_[static_cast<std::size_t>(e)] = 1;
    return s;
}

void TruncatedSeries::check_cutoff(const TruncatedSeries& other) const {
    if (cutoff_ != other.cutoff_) throw InputError("arithmetic between series with different cutoffs");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    check_cutoff(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
    check_cutoff(other);
    std::vector<Integer> r(coeffs_.size(), Integer(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; a + b < coeffs_.size(); ++b)
            mpz_addmul(r[a + b].get_mpz_t(), coeffs_[a].get_mpz_t(), other.coeffs_[b].get_mpz_t());
    }
    coeffs_ = std::move(r);
    return *this;
}

TruncatedSeries two_row_partition_series(int n) {
    // (1 - q^i)^{-1} = 1 + O(q^{n+1}) for i > n, so the product may stop at n.
    TruncatedSeries s(n, LaurentPoly(1) - LaurentPoly::monomial(1, 1));
    for (int i = 1; i <= n; ++i) {
        auto g = TruncatedSeries::geometric(n, i);
        s *= g;
        s *= g;
    }
    return s;
}

TruncatedSeries drezet_series(int d, int e, int n) {
    if (d < 1 || e < 1) throw InputError("drezet series needs d, e >= 1");
    TruncatedSeries s(n, LaurentPoly(1) - LaurentPoly::monomial(1, 1));
    for (int i = 1; i <= d; ++i) s *= TruncatedSeries::geometric(n, i);
    for (int i = 1; i <= e; ++i) s *= TruncatedSeries::geometric(n, i);
    return s;
}

}  // namespace qi
