#pragma once

#include <vector>

#include "qi/laurent.hpp"

namespace qi {

/// Power series in q known exactly through degree cutoff(). Arithmetic between
/// series with different cutoffs is refused.
class TruncatedSeries {
   public:
    explicit TruncatedSeries(int cutoff);
    TruncatedSeries(int cutoff, const LaurentPoly& poly);

    /// 1 / (1 - q^k) through the cutoff, k >= 1.
    static TruncatedSeries geometric(int cutoff, int k);

    int cutoff() const noexcept { return cutoff_; }
    const Integer& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

    bool operator==(const TruncatedSeries&) const = default;

   private:
    void check_cutoff(const TruncatedSeries& other) const;

    int cutoff_;
    std::vector<Integer> coeffs_;
};

/// (1 - q) * prod_{i >= 1} (1 - q^i)^{-2} through degree n: counts of two-row plane partitions.
TruncatedSeries two_row_partition_series(int n);
/// (1 - q) * prod_{i=1}^d (1 - q^i)^{-1} * prod_{i=1}^e (1 - q^i)^{-1} through degree n.
TruncatedSeries drezet_series(int d, int e, int n);

}  // namespace qi
