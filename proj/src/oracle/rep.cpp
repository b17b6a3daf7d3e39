#include "qi/oracle/rep.hpp"

#include <limits>
#include <map>
#include <mutex>

#include "qi/errors.hpp"

namespace qi::oracle {

FFRep::FFRep(const Quiver& q, const DimVector& d, int p) {
    check_prime(p);
    if (d.size() != q.vertex_count()) throw InputError("dimension vector does not match the quiver's vertex set");
    auto layout = std::make_shared<Layout>();
    layout->d = d;
    layout->p = p;
    layout->mod = mod_table(p);
    if (static_cast<long>(d.total()) * (p - 1) * (p - 1) >= kModTableSize) throw InputError("dimension vector too large for the finite-field oracle");
    layout->incoming.resize(d.size());
    std::size_t offset = 0;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const auto& a = q.arrows()[k];
        Arrow arrow{a.source, a.target, offset, d[a.target], d[a.source]};
        offset += static_cast<std::size_t>(arrow.rows * arrow.cols);
        layout->arrows.push_back(arrow);
        layout->incoming[a.target].push_back(k);
    }
    entries_.assign(offset, 0);
    layout_ = std::move(layout);
}

FFRep FFRep::from_matrices(const Quiver& q, const DimVector& d, int p, const std::vector<Mat>& maps) {
    FFRep x(q, d, p);
    if (maps.size() != x.arrows().size()) throw InputError("one matrix per arrow is required");
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const Arrow& a = x.arrows()[k];
        if (maps[k].rows != a.rows || maps[k].cols != a.cols) throw InputError("matrix shape does not match the dimension vector");
        for (std::size_t t = 0; t < maps[k].a.size(); ++t) {
            if (maps[k].a[t] >= p) throw InputError("matrix entry outside [0, p)");
            x.entries_[a.offset + t] = maps[k].a[t];
        }
    }
    return x;
}

Mat FFRep::map(std::size_t arrow) const {
    const Arrow& a = layout_->arrows.at(arrow);
    Mat m(a.rows, a.cols);
    for (std::size_t t = 0; t < m.a.size(); ++t) m.a[t] = entries_[a.offset + t];
    return m;
}

std::vector<Mat> FFRep::maps() const {
    std::vector<Mat> out;
    for (std::size_t k = 0; k < arrows().size(); ++k) out.push_back(map(k));
    return out;
}

std::uint64_t rep_space_size(const Quiver& q, const DimVector& d, int p) {
    long n = 0;
    for (const auto& a : q.arrows()) n += static_cast<long>(d[a.source]) * d[a.target];
    std::uint64_t r = 1;
    for (long k = 0; k < n; ++k) {
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) return std::numeric_limits<std::uint64_t>::max();
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

std::uint64_t enumerate_reps(const Quiver& q, const DimVector& d, int p, std::uint64_t budget,
                             const std::function<bool(const FFRep&)>& visit) {
    const std::uint64_t total = rep_space_size(q, d, p);
    if (total > budget) throw BudgetExceeded("representation space exceeds the enumeration budget", total, budget);
    FFRep x(q, d, p);
    auto& e = x.raw();
    const auto top = static_cast<std::uint8_t>(p - 1);
    std::uint64_t visited = 0;
    for (;;) {
        ++visited;
        if (!visit(x)) return visited;
        std::size_t k = 0;
        while (k < e.size() && e[k] == top) e[k++] = 0;
        if (k == e.size()) return visited;
        ++e[k];
    }
}

FFRep rep_at(const Quiver& q, const DimVector& d, int p, std::uint64_t index) {
    FFRep x(q, d, p);
    if (index >= rep_space_size(q, d, p)) throw InputError("representation index out of range");
    for (auto& v : x.raw()) {
        v = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(p));
        index /= static_cast<std::uint64_t>(p);
    }
    return x;
}

std::uint32_t encode(const std::uint8_t* v, int n, int p) {
    std::uint32_t code = 0;
    for (int k = n - 1; k >= 0; --k) code = code * static_cast<std::uint32_t>(p) + v[k];
    return code;
}

std::uint64_t SubspaceTable::total() const {
    std::uint64_t t = 0;
    for (const auto& v : by_dim) t += v.size();
    return t;
}

namespace {

SubspaceTable build_table(int p, int n) {
    SubspaceTable t;
    t.p = p;
    t.n = n;
    t.by_dim.resize(static_cast<std::size_t>(n + 1));
    std::uint32_t space = 1;
    for (int k = 0; k < n; ++k) space *= static_cast<std::uint32_t>(p);
    const std::size_t words = (space + 63) / 64;
    for (int k = 0; k <= n; ++k) {
        // Pivot sets in lexicographic order, then the free entries as a base-p counter.
        std::vector<int> piv(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r) piv[static_cast<std::size_t>(r)] = r;
        for (;;) {
            std::vector<std::pair<int, int>> free;  // (row, col)
            for (int r = 0; r < k; ++r)
                for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
                    bool pc = false;
                    for (int s = 0; s < k; ++s) pc = pc || piv[static_cast<std::size_t>(s)] == c;
                    if (!pc) free.emplace_back(r, c);
                }
            std::vector<int> vals(free.size(), 0);
            for (;;) {
                Subspace s;
                s.dim = k;
                s.pivots = piv;
                s.basis.assign(static_cast<std::size_t>(k), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
                for (int r = 0; r < k; ++r) s.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = 1;
                for (std::size_t f = 0; f < free.size(); ++f)
                    s.basis[static_cast<std::size_t>(free[f].first)][static_cast<std::size_t>(free[f].second)] = static_cast<std::uint8_t>(vals[f]);
                s.members.assign(words, 0);
                // All p^k combinations of the basis rows.
                std::vector<int> coef(static_cast<std::size_t>(k), 0);
                std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
                for (;;) {
                    for (int c = 0; c < n; ++c) {
                        int x = 0;
                        for (int r = 0; r < k; ++r) x += coef[static_cast<std::size_t>(r)] * s.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                        v[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(x % p);
                    }
                    const std::uint32_t code = encode(v.data(), n, p);
                    s.members[code >> 6] |= std::uint64_t{1} << (code & 63);
                    int r = 0;
                    while (r < k && coef[static_cast<std::size_t>(r)] == p - 1) coef[static_cast<std::size_t>(r++)] = 0;
                    if (r == k) break;
                    ++coef[static_cast<std::size_t>(r)];
                }
                t.by_dim[static_cast<std::size_t>(k)].push_back(std::move(s));
                std::size_t f = 0;
                while (f < vals.size() && vals[f] == p - 1) vals[f++] = 0;
                if (f == vals.size()) break;
                ++vals[f];
            }
            // next pivot combination
            int r = k - 1;
            while (r >= 0 && piv[static_cast<std::size_t>(r)] == n - k + r) --r;
            if (r < 0) break;
            ++piv[static_cast<std::size_t>(r)];
            for (int s = r + 1; s < k; ++s) piv[static_cast<std::size_t>(s)] = piv[static_cast<std::size_t>(s - 1)] + 1;
        }
    }
    return t;
}

}  // namespace

const SubspaceTable& subspaces(int p, int n) {
    check_prime(p);
    std::uint64_t space = 1;
    for (int k = 0; k < n; ++k) space *= static_cast<std::uint64_t>(p);
    if (n < 0 || n > 8 || space > (1U << 20)) throw BudgetExceeded("subspace table too large", space, 1U << 20);
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SubspaceTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, n}];
    if (!slot) slot = std::make_unique<SubspaceTable>(build_table(p, n));
    return *slot;
}

std::uint64_t subspace_tuple_count(const DimVector& d, int p) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::uint64_t c = subspaces(p, d[i]).total();
        if (r > std::numeric_limits<std::uint64_t>::max() / c) return std::numeric_limits<std::uint64_t>::max();
        r *= c;
    }
    return r;
}

SubrepFinder::SubrepFinder(const DimVector& d, int p) : d_(d), p_(p), chosen_(d.size(), nullptr), required_(d.size()) {
    for (std::size_t i = 0; i < d.size(); ++i) tables_.push_back(&subspaces(p, d[i]));
}

template <class Visit>
bool SubrepFinder::run(const FFRep& x, const DimVector& e, std::size_t j, Visit& visit) {
    if (j == d_.size()) return visit(chosen_);
    const int dj = d_[j];
    const auto& cands = tables_[j]->by_dim[static_cast<std::size_t>(e[j])];
    if (e[j] == dj || e[j] == 0) {
        // U_j is forced; for U_j = 0 the images of the sources must vanish.
        if (e[j] == 0 && dj > 0) {
            std::uint8_t img[8];
            for (auto arrow : x.incoming()[j])
                for (const auto& b : chosen_[x.arrows()[arrow].source]->basis) {
                    x.apply(arrow, b.data(), img);
                    for (int r = 0; r < dj; ++r)
                        if (img[r]) return true;
                }
        }
        chosen_[j] = &cands.front();
        return run(x, e, j + 1, visit);
    }
    // Images of the chosen source subspaces must lie in U_j.
    auto& required = required_[j];
    required.clear();
    std::uint8_t img[8];
    for (auto arrow : x.incoming()[j]) {
        const Subspace* src = chosen_[x.arrows()[arrow].source];
        for (const auto& b : src->basis) {
            x.apply(arrow, b.data(), img);
            const std::uint32_t code = encode(img, dj, p_);
            if (code != 0) required.push_back(code);
        }
    }
    for (const auto& cand : cands) {
        bool ok = true;
        for (auto code : required)
            if (!cand.contains(code)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen_[j] = &cand;
        if (!run(x, e, j + 1, visit)) return false;
    }
    return true;
}

bool SubrepFinder::for_each(const FFRep& x, const DimVector& e, const std::function<bool(const std::vector<const Subspace*>&)>& visit) {
    if (x.dim() != d_ || x.prime() != p_) throw InputError("representation does not match the finder");
    if (e.size() != d_.size() || !e.leq(d_)) throw InputError("subrepresentation dimension must satisfy 0 <= e <= d");
    auto v = [&](const std::vector<const Subspace*>& u) { return visit(u); };
    return run(x, e, 0, v);
}

bool SubrepFinder::exists(const FFRep& x, const DimVector& e) {
    if (x.dim() != d_ || x.prime() != p_) throw InputError("representation does not match the finder");
    if (e.size() != d_.size() || !e.leq(d_)) throw InputError("subrepresentation dimension must satisfy 0 <= e <= d");
    return exists_unchecked(x, e);
}

bool SubrepFinder::exists_unchecked(const FFRep& x, const DimVector& e) {
    auto stop = [](const std::vector<const Subspace*>&) { return false; };
    return !run(x, e, 0, stop);
}

bool for_each_subrep(const FFRep& x, const DimVector& e, const std::function<bool(const std::vector<const Subspace*>&)>& visit) {
    SubrepFinder f(x.dim(), x.prime());
    return f.for_each(x, e, visit);
}

bool has_subrep(const FFRep& x, const DimVector& e) {
    SubrepFinder f(x.dim(), x.prime());
    return f.exists(x, e);
}

FFRep restrict_to(const Quiver& q, const FFRep& x, const std::vector<const Subspace*>& u) {
    std::vector<int> e;
    for (const auto* s : u) e.push_back(s->dim);
    FFRep y(q, DimVector(e), x.prime());
    std::uint8_t img[8];
    for (std::size_t k = 0; k < x.arrows().size(); ++k) {
        const auto& a = x.arrows()[k];
        const Subspace& src = *u[a.source];
        const Subspace& tgt = *u[a.target];
        const auto& b = y.arrows()[k];
        for (int c = 0; c < src.dim; ++c) {
            x.apply(k, src.basis[static_cast<std::size_t>(c)].data(), img);
            // Coordinates in an RREF basis are the entries at the pivot columns.
            for (int r = 0; r < tgt.dim; ++r)
                y.raw()[b.offset + static_cast<std::size_t>(r * b.cols + c)] = img[tgt.pivots[static_cast<std::size_t>(r)]];
        }
    }
    return y;
}

}  // namespace qi::oracle
