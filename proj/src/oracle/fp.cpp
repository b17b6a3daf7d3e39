#include "qi/oracle/fp.hpp"

#include <array>
#include <string>
#include <utility>

#include "qi/errors.hpp"

namespace qi::oracle {

void check_prime(int p) {
    if (p != 2 && p != 3 && p != 5 && p != 7 && p != 11 && p != 13)
        throw InputError("field size must be a prime <= 13, got " + std::to_string(p));
}

int inverse_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw ArithmeticError("zero has no inverse mod p");
    // a^{p-2} by repeated multiplication; p is tiny.
    int r = 1;
    for (int k = 0; k < p - 2; ++k) r = r * a % p;
    return r;
}

const std::uint8_t* mod_table(int p) {
    check_prime(p);
    static const auto tables = [] {
        std::array<std::array<std::uint8_t, kModTableSize>, 14> t{};
        for (int q = 2; q < 14; ++q)
            for (int x = 0; x < kModTableSize; ++x) t[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x % q);
        return t;
    }();
    return tables[static_cast<std::size_t>(p)].data();
}

bool Mat::is_zero() const {
    for (auto x : a)
        if (x != 0) return false;
    return true;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat multiply(const Mat& x, const Mat& y, int p) {
    if (x.cols != y.rows) throw InputError("matrix shapes do not match");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            int s = 0;
            for (int k = 0; k < x.cols; ++k) s += x(i, k) * y(k, j);
            z(i, j) = static_cast<std::uint8_t>(s % p);
        }
    return z;
}

Mat add(const Mat& x, const Mat& y, int p) {
    if (x.rows != y.rows || x.cols != y.cols) throw InputError("matrix shapes do not match");
    Mat z(x.rows, x.cols);
    for (std::size_t k = 0; k < x.a.size(); ++k) z.a[k] = static_cast<std::uint8_t>((x.a[k] + y.a[k]) % p);
    return z;
}

Mat scaled(const Mat& x, int c, int p) {
    c %= p;
    if (c < 0) c += p;
    Mat z(x.rows, x.cols);
    for (std::size_t k = 0; k < x.a.size(); ++k) z.a[k] = static_cast<std::uint8_t>(x.a[k] * c % p);
    return z;
}

std::vector<int> row_reduce(Mat& m, int p) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m(sel, c), m(row, c));
        const int inv = inverse_mod(m(row, col), p);
        for (int c = 0; c < m.cols; ++c) m(row, c) = static_cast<std::uint8_t>(m(row, c) * inv % p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m(r, col) == 0) continue;
            const int f = p - m(r, col);
            for (int c = 0; c < m.cols; ++c) m(r, c) = static_cast<std::uint8_t>((m(r, c) + f * m(row, c)) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m, int p) { return static_cast<int>(row_reduce(m, p).size()); }

std::vector<std::vector<std::uint8_t>> nullspace(const Mat& m, int p) {
    Mat r = m;
    auto pivots = row_reduce(r, p);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<std::uint8_t> x(static_cast<std::size_t>(m.cols), 0);
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[static_cast<std::size_t>(pivots[k])] = static_cast<std::uint8_t>((p - r(static_cast<int>(k), free)) % p);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<std::uint8_t>> solve(const Mat& m, const std::vector<std::uint8_t>& b, int p) {
    if (static_cast<int>(b.size()) != m.rows) throw InputError("right-hand side has the wrong length");
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug(r, c) = m(r, c);
        aug(r, m.cols) = b[static_cast<std::size_t>(r)];
    }
    auto pivots = row_reduce(aug, p);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<std::uint8_t> x(static_cast<std::size_t>(m.cols), 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[static_cast<std::size_t>(pivots[k])] = aug(static_cast<int>(k), m.cols);
    return x;
}

int determinant(Mat m, int p) {
    if (m.rows != m.cols) throw InputError("determinant of a non-square matrix");
    int det = 1;
    const int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return 0;
        if (sel != col) {
            for (int c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
            det = (p - det) % p;
        }
        det = det * m(col, col) % p;
        const int inv = inverse_mod(m(col, col), p);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const int f = (p - m(r, col)) * inv % p;
            for (int c = col; c < n; ++c) m(r, c) = static_cast<std::uint8_t>((m(r, c) + f * m(col, c)) % p);
        }
    }
    return det;
}

}  // namespace qi::oracle
