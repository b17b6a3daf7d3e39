#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qi::oracle {

/// Small primes only: entries are stored as bytes and products stay below 256.
void check_prime(int p);
int inverse_mod(int a, int p);

/// x mod p for 0 <= x < kModTableSize, by table lookup.
inline constexpr int kModTableSize = 4096;
const std::uint8_t* mod_table(int p);

/// Dense matrix over F_p, row-major.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    std::uint8_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
    std::uint8_t& operator()(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    bool is_zero() const;
    bool operator==(const Mat&) const = default;

    static Mat identity(int n);
};

Mat multiply(const Mat& x, const Mat& y, int p);
Mat add(const Mat& x, const Mat& y, int p);
Mat scaled(const Mat& x, int c, int p);

/// Row reduction in place to reduced row echelon form; returns the pivot columns.
std::vector<int> row_reduce(Mat& m, int p);
int rank(Mat m, int p);
/// Basis of { x : m x = 0 }.
std::vector<std::vector<std::uint8_t>> nullspace(const Mat& m, int p);
/// Some x with m x = b, if any.
std::optional<std::vector<std::uint8_t>> solve(const Mat& m, const std::vector<std::uint8_t>& b, int p);
int determinant(Mat m, int p);

}  // namespace qi::oracle
