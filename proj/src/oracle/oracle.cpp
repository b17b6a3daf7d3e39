#include "qi/oracle/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "qi/errors.hpp"

namespace qi::oracle {

namespace {

// Variables of a hom system: g_i is rows_i x cols_i, stored row-major after offset_i.
struct VarLayout {
    std::vector<std::size_t> offset;
    std::vector<int> rows, cols;
    std::size_t total = 0;

    VarLayout(const DimVector& src, const DimVector& tgt) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            offset.push_back(total);
            rows.push_back(tgt[i]);
            cols.push_back(src[i]);
            total += static_cast<std::size_t>(tgt[i] * src[i]);
        }
    }
    int var(std::size_t i, int r, int c) const { return static_cast<int>(offset[i] + static_cast<std::size_t>(r * cols[i] + c)); }
};

// Rows of the system g_j M_a - N_a g_i = 0 for all arrows a : i -> j.
Mat hom_system(const FFRep& m, const FFRep& n, const VarLayout& v) {
    const int p = m.prime();
    std::size_t eqs = 0;
    for (const auto& a : m.arrows()) eqs += static_cast<std::size_t>(n.dim()[a.target] * m.dim()[a.source]);
    Mat sys(static_cast<int>(eqs), static_cast<int>(v.total));
    int row = 0;
    for (std::size_t k = 0; k < m.arrows().size(); ++k) {
        const auto& a = m.arrows()[k];
        const std::size_t i = a.source, j = a.target;
        for (int r = 0; r < n.dim()[j]; ++r)
            for (int c = 0; c < m.dim()[i]; ++c, ++row) {
                for (int t = 0; t < m.dim()[j]; ++t) {
                    const int x = m.entry(k, t, c);
                    if (x) sys(row, v.var(j, r, t)) = static_cast<std::uint8_t>((sys(row, v.var(j, r, t)) + x) % p);
                }
                for (int t = 0; t < n.dim()[i]; ++t) {
                    const int x = n.entry(k, r, t);
                    if (x) sys(row, v.var(i, t, c)) = static_cast<std::uint8_t>((sys(row, v.var(i, t, c)) + p - x) % p);
                }
            }
    }
    return sys;
}

void check_compatible(const FFRep& m, const FFRep& n) {
    if (m.prime() != n.prime() || m.vertex_count() != n.vertex_count() || m.arrows().size() != n.arrows().size())
        throw InputError("representations live over different quivers or fields");
}

}  // namespace

std::vector<std::vector<Mat>> hom_basis(const FFRep& m, const FFRep& n) {
    check_compatible(m, n);
    VarLayout v(m.dim(), n.dim());
    auto null = nullspace(hom_system(m, n, v), m.prime());
    std::vector<std::vector<Mat>> out;
    for (const auto& x : null) {
        std::vector<Mat> g;
        for (std::size_t i = 0; i < m.vertex_count(); ++i) {
            Mat gi(v.rows[i], v.cols[i]);
            for (std::size_t t = 0; t < gi.a.size(); ++t) gi.a[t] = x[v.offset[i] + t];
            g.push_back(std::move(gi));
        }
        out.push_back(std::move(g));
    }
    return out;
}

int hom_dim(const FFRep& m, const FFRep& n) {
    check_compatible(m, n);
    VarLayout v(m.dim(), n.dim());
    if (v.total == 0) return 0;
    return static_cast<int>(v.total) - rank(hom_system(m, n, v), m.prime());
}

int ext_dim(const Quiver& q, const FFRep& m, const FFRep& n) {
    return hom_dim(m, n) - static_cast<int>(euler_form(q, m.dim(), n.dim()));
}

StabilityTester::StabilityTester(const Quiver& q, const Stability& theta, const DimVector& d, int p, std::uint64_t subspace_budget)
    : finder_(d, p), dim_(d), prime_(p) {
    if (theta.size() != q.vertex_count() || d.size() != q.vertex_count()) throw InputError("stability or dimension vector does not match the quiver");
    const std::uint64_t tuples = subspace_tuple_count(d, p);
    if (tuples > subspace_budget) throw BudgetExceeded("subspace enumeration exceeds its budget", tuples, subspace_budget);
    for (const auto& e : subvectors(d)) {
        if (e.is_zero() || e == d) continue;
        auto c = theta.compare(e, d);
        if (c > 0) above_.push_back(e);
        if (c >= 0) at_least_.push_back(e);
    }
}

bool StabilityTester::semistable(const FFRep& x) {
    if (x.dim() != dim_ || x.prime() != prime_) throw InputError("representation does not match the tester");
    for (const auto& e : above_)
        if (finder_.exists_unchecked(x, e)) return false;
    return true;
}

bool StabilityTester::stable(const FFRep& x) {
    if (x.dim() != dim_ || x.prime() != prime_) throw InputError("representation does not match the tester");
    for (const auto& e : at_least_)
        if (finder_.exists_unchecked(x, e)) return false;
    return true;
}

bool is_semistable(const Quiver& q, const FFRep& x, const Stability& theta) {
    if (x.dim().is_zero()) throw InputError("semistability of the zero representation is undefined");
    return StabilityTester(q, theta, x.dim(), x.prime()).semistable(x);
}

bool is_stable(const Quiver& q, const FFRep& x, const Stability& theta) {
    if (x.dim().is_zero()) throw InputError("stability of the zero representation is undefined");
    return StabilityTester(q, theta, x.dim(), x.prime()).stable(x);
}

bool indecomposable_by_idempotents(const FFRep& x, std::uint64_t end_budget) {
    if (x.dim().is_zero()) return false;
    const int p = x.prime();
    auto basis = hom_basis(x, x);
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (size > end_budget / static_cast<std::uint64_t>(p)) throw BudgetExceeded("endomorphism space exceeds its budget", std::numeric_limits<std::uint64_t>::max(), end_budget);
        size *= static_cast<std::uint64_t>(p);
    }
    if (size > end_budget) throw BudgetExceeded("endomorphism space exceeds its budget", size, end_budget);
    const std::size_t nv = x.vertex_count();
    std::vector<int> coef(basis.size(), 0);
    for (;;) {
        bool zero = true, identity = true, idempotent = true;
        for (std::size_t i = 0; i < nv && idempotent; ++i) {
            const int n = x.dim()[i];
            Mat g(n, n);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (!coef[b]) continue;
                for (std::size_t t = 0; t < g.a.size(); ++t) g.a[t] = static_cast<std::uint8_t>((g.a[t] + coef[b] * basis[b][i].a[t]) % p);
            }
            zero = zero && g.is_zero();
            identity = identity && g == Mat::identity(n);
            idempotent = multiply(g, g, p) == g;
        }
        if (idempotent && !zero && !identity) return false;
        std::size_t k = 0;
        while (k < coef.size() && coef[k] == p - 1) coef[k++] = 0;
        if (k == coef.size()) return true;
        ++coef[k];
    }
}

namespace {

// The inclusion U -> X splits iff there are pi_i : X_i -> U_i with
// pi_j X_a = U_a pi_i on every arrow and pi_i B_i = id, B_i the basis of U_i.
bool inclusion_splits(const Quiver& q, const FFRep& x, const std::vector<const Subspace*>& u) {
    const int p = x.prime();
    const FFRep ux = restrict_to(q, x, u);
    VarLayout v(x.dim(), ux.dim());
    Mat sys = hom_system(x, ux, v);
    std::size_t extra = 0;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) extra += static_cast<std::size_t>(u[i]->dim * u[i]->dim);
    Mat full(sys.rows + static_cast<int>(extra), sys.cols);
    std::copy(sys.a.begin(), sys.a.end(), full.a.begin());
    std::vector<std::uint8_t> rhs(static_cast<std::size_t>(full.rows), 0);
    int row = sys.rows;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        const Subspace& s = *u[i];
        for (int r = 0; r < s.dim; ++r)
            for (int c = 0; c < s.dim; ++c, ++row) {
                for (int k = 0; k < x.dim()[i]; ++k) {
                    const int b = s.basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
                    if (b) full(row, v.var(i, r, k)) = static_cast<std::uint8_t>(b);
                }
                rhs[static_cast<std::size_t>(row)] = r == c ? 1 : 0;
            }
    }
    return solve(full, rhs, p).has_value();
}

}  // namespace

bool indecomposable_by_summands(const FFRep& x) {
    if (x.dim().is_zero()) return false;
    // Rebuild a quiver shape for restrict_to from the representation's own arrows.
    std::vector<std::string> names;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) names.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : x.arrows()) arrows.emplace_back(names[a.source], names[a.target]);
    const Quiver q(names, arrows);
    SubrepFinder finder(x.dim(), x.prime());
    const long half = x.dim().total() / 2;
    bool split = false;
    for (const auto& e : subvectors(x.dim())) {
        if (e.is_zero() || e.total() > half) continue;
        finder.for_each(x, e, [&](const std::vector<const Subspace*>& u) {
            split = inclusion_splits(q, x, u);
            return !split;
        });
        if (split) return false;
    }
    return true;
}

bool is_indecomposable(const FFRep& x, std::uint64_t end_budget) {
    if (x.dim().is_zero()) return false;
    const int h = hom_dim(x, x);
    std::uint64_t size = 1;
    for (int k = 0; k < h && size <= end_budget; ++k) size *= static_cast<std::uint64_t>(x.prime());
    if (size <= end_budget) return indecomposable_by_idempotents(x, end_budget);
    return indecomposable_by_summands(x);
}

bool is_simple_tuple(int n, const std::vector<Mat>& mats, int p) {
    check_prime(p);
    if (n <= 0) throw InputError("tuple size must be positive");
    for (const auto& m : mats)
        if (m.rows != n || m.cols != n) throw InputError("tuple matrices must be n x n");
    const SubspaceTable& t = subspaces(p, n);
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k)
        for (const auto& w : t.by_dim[static_cast<std::size_t>(k)]) {
            bool invariant = true;
            for (const auto& m : mats) {
                for (const auto& b : w.basis) {
                    for (int r = 0; r < n; ++r) {
                        int s = 0;
                        for (int c = 0; c < n; ++c) s += m(r, c) * b[static_cast<std::size_t>(c)];
                        img[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(s % p);
                    }
                    if (!w.contains(encode(img.data(), n, p))) {
                        invariant = false;
                        break;
                    }
                }
                if (!invariant) break;
            }
            if (invariant) return false;
        }
    return true;
}

bool has_comp_series(const Quiver& q, const FFRep& x, const Word& w) {
    if (w.empty()) return x.dim().is_zero();
    if (word_weight(q, w) != x.dim()) return false;
    const std::size_t i = w.front();
    const DimVector e = x.dim() - DimVector::simple(x.vertex_count(), i);
    const Word tail(w.begin() + 1, w.end());
    bool found = false;
    for_each_subrep(x, e, [&](const std::vector<const Subspace*>& u) {
        found = has_comp_series(q, restrict_to(q, x, u), tail);
        return !found;
    });
    return found;
}

bool QuadraticForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

int kronecker_form_raw(const std::uint8_t* a, int m, int p, int* out) {
    // det(sum l_k A^k) = sum_k l_k^2 det A^k + sum_{k<l} l_k l_l (a00 b11 + b00 a11 - a01 b10 - b01 a10).
    const std::uint8_t* mod = mod_table(p);
    const int shift = 2 * p * p;  // keeps the table index nonnegative
    int idx = 0;
    for (int k = 0; k < m; ++k) {
        const std::uint8_t* x = a + 4 * k;
        for (int l = k; l < m; ++l, ++idx) {
            const std::uint8_t* y = a + 4 * l;
            const int c = k == l ? x[0] * x[3] - x[1] * x[2] : x[0] * y[3] + y[0] * x[3] - x[1] * y[2] - y[1] * x[2];
            out[idx] = mod[c + shift];
        }
    }
    if (p == 2) return -1;
    // Gram matrix of the polar form: G_kk = 2 c_kk, G_kl = c_kl.
    static const auto inverses = [] {
        std::array<std::array<int, 16>, 16> t{};
        for (int q : {3, 5, 7, 11, 13})
            for (int x = 1; x < q; ++x) t[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] = inverse_mod(x, q);
        return t;
    }();
    const auto& inv = inverses[static_cast<std::size_t>(p)];
    int g[16][16];
    idx = 0;
    for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l, ++idx) g[k][l] = g[l][k] = k == l ? mod[2 * out[idx]] : out[idx];
    int r = 0;
    for (int col = 0; col < m && r < m; ++col) {
        int sel = -1;
        for (int row = r; row < m; ++row)
            if (g[row][col]) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int c = 0; c < m; ++c) std::swap(g[sel][c], g[r][c]);
        const int iv = inv[static_cast<std::size_t>(g[r][col])];
        for (int row = r + 1; row < m; ++row) {
            if (!g[row][col]) continue;
            const int f = mod[(p - g[row][col]) * iv];
            for (int c = col; c < m; ++c) g[row][c] = mod[g[row][c] + f * g[r][c]];
        }
        ++r;
    }
    return r;
}

QuadraticForm kronecker_quadratic_form(const std::vector<Mat>& a, int p) {
    check_prime(p);
    if (p == 2) throw InputError("quadratic form rank needs an odd field size");
    const int m = static_cast<int>(a.size());
    if (m > 16) throw InputError("at most 16 matrices are supported");
    std::vector<std::uint8_t> flat;
    for (const auto& x : a) {
        if (x.rows != 2 || x.cols != 2) throw InputError("quadratic form needs 2 x 2 matrices");
        for (auto v : x.a) {
            if (v >= p) throw InputError("matrix entry outside [0, p)");
            flat.push_back(v);
        }
    }
    QuadraticForm f;
    f.m = m;
    f.coeffs.assign(static_cast<std::size_t>(m * (m + 1) / 2), 0);
    f.rank = kronecker_form_raw(flat.data(), m, p, f.coeffs.data());
    return f;
}

namespace {

template <class Pred>
CountResult count_points(const Quiver& q, const DimVector& d, int p, std::uint64_t budget, Pred pred) {
    CountResult r;
    r.total = enumerate_reps(q, d, p, budget, [&](const FFRep& x) {
        if (pred(x)) ++r.count;
        return true;
    });
    return r;
}

}  // namespace

CountResult count_semistable(const Quiver& q, const Stability& theta, const DimVector& d, int p, std::uint64_t budget) {
    if (d.is_zero()) throw InputError("dimension vector must be nonzero");
    StabilityTester t(q, theta, d, p);
    return count_points(q, d, p, budget, [&](const FFRep& x) { return t.semistable(x); });
}

CountResult count_stable(const Quiver& q, const Stability& theta, const DimVector& d, int p, std::uint64_t budget) {
    if (d.is_zero()) throw InputError("dimension vector must be nonzero");
    StabilityTester t(q, theta, d, p);
    return count_points(q, d, p, budget, [&](const FFRep& x) { return t.stable(x); });
}

CountResult count_indecomposable(const Quiver& q, const DimVector& d, int p, std::uint64_t budget) {
    return count_points(q, d, p, budget, [&](const FFRep& x) { return is_indecomposable(x); });
}

bool exists_indecomposable(const Quiver& q, const DimVector& d, int p, std::uint64_t budget) {
    bool found = false;
    enumerate_reps(q, d, p, budget, [&](const FFRep& x) {
        found = is_indecomposable(x);
        return !found;
    });
    return found;
}

MinExtResult min_ext(const Quiver& q, const DimVector& d, const DimVector& e, int p, std::uint64_t budget) {
    const std::uint64_t nd = rep_space_size(q, d, p), ne = rep_space_size(q, e, p);
    MinExtResult r;
    r.total = nd > std::numeric_limits<std::uint64_t>::max() / ne ? std::numeric_limits<std::uint64_t>::max() : nd * ne;
    if (r.total > budget) throw BudgetExceeded("pairs of representations exceed the enumeration budget", r.total, budget);
    std::vector<FFRep> targets;
    enumerate_reps(q, e, p, budget, [&](const FFRep& n) {
        targets.push_back(n);
        return true;
    });
    const long euler = euler_form(q, d, e);
    const long floor = std::max(0L, -euler);
    r.value = std::numeric_limits<long>::max();
    enumerate_reps(q, d, p, budget, [&](const FFRep& m) {
        for (const auto& n : targets) {
            ++r.pairs;
            r.value = std::min(r.value, static_cast<long>(hom_dim(m, n)) - euler);
            if (r.value == floor) return false;
        }
        return true;
    });
    return r;
}

FFRep loop_embedding(const LoopReduction& red, const std::vector<Mat>& tuple, int p) {
    if (static_cast<int>(tuple.size()) != red.loops) throw InputError("tuple length must equal the number of loops");
    std::vector<Mat> maps{Mat::identity(red.size)};
    maps.insert(maps.end(), tuple.begin(), tuple.end());
    return FFRep::from_matrices(red.target, red.dimension, p, maps);
}

}  // namespace qi::oracle
