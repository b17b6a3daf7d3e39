#include "qi/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qi/errors.hpp"

namespace qi {

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int x : entries_)
        if (x < 0) throw InputError("dimension vector entries must be nonnegative");
}

DimVector DimVector::simple(std::size_t n, std::size_t i) {
    std::vector<int> e(n, 0);
    e.at(i) = 1;
    return DimVector(std::move(e));
}

long DimVector::total() const noexcept {
    long s = 0;
    for (int x : entries_) s += x;
    return s;
}

bool DimVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool DimVector::leq(const DimVector& other) const {
    if (size() != other.size()) throw InputError("dimension vectors over different vertex sets");
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

std::vector<std::size_t> DimVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] != 0) s.push_back(i);
    return s;
}

int DimVector::gcd() const {
    int g = 0;
    for (int x : entries_) g = std::gcd(g, x);
    return g;
}

DimVector DimVector::operator+(const DimVector& other) const {
    if (size() != other.size()) throw InputError("dimension vectors over different vertex sets");
    std::vector<int> r(entries_);
    for (std::size_t i = 0; i < size(); ++i) r[i] += other.entries_[i];
    DimVector out;
    out.entries_ = std::move(r);
    return out;
}

DimVector DimVector::operator-(const DimVector& other) const {
    if (size() != other.size()) throw InputError("dimension vectors over different vertex sets");
    std::vector<int> r(entries_);
    for (std::size_t i = 0; i < size(); ++i) {
        r[i] -= other.entries_[i];
        if (r[i] < 0) throw InputError("difference of dimension vectors is negative");
    }
    DimVector out;
    out.entries_ = std::move(r);
    return out;
}

DimVector DimVector::operator*(int factor) const {
    if (factor < 0) throw InputError("negative multiple of a dimension vector");
    std::vector<int> r(entries_);
    for (int& x : r) x *= factor;
    DimVector out;
    out.entries_ = std::move(r);
    return out;
}

DimVector DimVector::divided_by(int n) const {
    if (n <= 0) throw InputError("division of a dimension vector by a nonpositive integer");
    std::vector<int> r(entries_);
    for (int& x : r) {
        if (x % n != 0) throw InputError("dimension vector is not divisible");
        x /= n;
    }
    DimVector out;
    out.entries_ = std::move(r);
    return out;
}

std::size_t DimVector::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : entries_) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::vector<DimVector> subvectors(const DimVector& d) {
    std::vector<DimVector> out;
    std::vector<int> cur(d.size(), 0);
    while (true) {
        out.emplace_back(cur);
        // odometer, last coordinate fastest: lexicographic order
        std::size_t k = d.size();
        while (true) {
            if (k == 0) return out;
            --k;
            if (cur[k] < d[k]) {
                ++cur[k];
                break;
            }
            cur[k] = 0;
        }
    }
}

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arrows) {
    const std::size_t n = vertices.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (vertices[a] == vertices[b]) throw InputError("duplicate vertex '" + vertices[a] + "'");

    auto input_index = [&](const std::string& v) -> std::size_t {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        if (it == vertices.end()) throw InputError("arrow refers to unknown vertex '" + v + "'");
        return static_cast<std::size_t>(it - vertices.begin());
    };

    std::vector<std::pair<std::size_t, std::size_t>> raw;
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& [s, t] : arrows) {
        std::size_t a = input_index(s), b = input_index(t);
        if (a == b) throw InputError("loops are not allowed (vertex '" + s + "')");
        raw.emplace_back(a, b);
        out[a].push_back(b);
        ++indegree[b];
    }

    // Kahn's algorithm, always taking the smallest available input index.
    std::vector<std::size_t> order;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && indegree[v] == 0) {
                pick = v;
                break;
            }
        if (pick == n) throw InputError("quiver has an oriented cycle");
        done[pick] = true;
        order.push_back(pick);
        for (std::size_t b : out[pick]) --indegree[b];
    }

    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
    names_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) names_.push_back(vertices[order[k]]);
    counts_.assign(n * n, 0);
    for (auto [a, b] : raw) {
        arrows_.push_back({position[a], position[b]});
        ++counts_[position[a] * n + position[b]];
    }

    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(n);
    for (const auto& name : names_) mix(std::hash<std::string>{}(name));
    for (int c : counts_) mix(static_cast<std::uint64_t>(c));
    hash_ = h;
}

Quiver Quiver::kronecker(int m) {
    if (m < 0) throw InputError("negative arrow count");
    return Quiver({"i", "j"}, std::vector<std::pair<std::string, std::string>>(static_cast<std::size_t>(m), {"i", "j"}));
}

Quiver Quiver::linear(int n) {
    if (n < 1) throw InputError("A_n needs n >= 1");
    std::vector<std::string> v;
    std::vector<std::pair<std::string, std::string>> a;
    for (int k = 1; k <= n; ++k) v.push_back(std::to_string(k));
    for (int k = 1; k < n; ++k) a.emplace_back(std::to_string(k), std::to_string(k + 1));
    return Quiver(std::move(v), a);
}

Quiver Quiver::discrete(int n) {
    std::vector<std::string> v;
    for (int k = 1; k <= n; ++k) v.push_back(std::to_string(k));
    return Quiver(std::move(v), {});
}

std::optional<std::size_t> Quiver::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool Quiver::support_connected(const DimVector& d) const {
    auto supp = d.support();
    if (supp.empty()) return false;
    const std::size_t n = vertex_count();
    std::vector<bool> in_supp(n, false), seen(n, false);
    for (auto i : supp) in_supp[i] = true;
    std::vector<std::size_t> stack{supp.front()};
    seen[supp.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t w = 0; w < n; ++w)
            if (in_supp[w] && !seen[w] && (arrow_count(v, w) + arrow_count(w, v) > 0)) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == supp.size();
}

std::string RelaxedQuiver::to_string() const {
    std::ostringstream os;
    os << "vertices 1.." << vertex_count << ";";
    for (std::size_t i = 0; i < vertex_count; ++i)
        for (std::size_t j = 0; j < vertex_count; ++j)
            if (arrows(i, j) > 0) os << " " << (i + 1) << "->" << (j + 1) << " x" << arrows(i, j);
    return os.str();
}

namespace {

void check_sizes(const Quiver& q, const DimVector& d) {
    if (d.size() != q.vertex_count()) throw InputError("dimension vector does not match the quiver's vertex set");
}

}  // namespace

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_sizes(q, d);
    check_sizes(q, e);
    long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long>(d[i]) * e[i];
    for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.source]) * e[a.target];
    return s;
}

long symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) + euler_form(q, e, d);
}

std::vector<int> euler_matrix(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<int> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? 1 : 0) - q.arrow_count(i, j);
    return m;
}

std::vector<int> cartan_matrix(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    auto e = euler_matrix(q);
    std::vector<int> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = e[i * n + j] + e[j * n + i];
    return c;
}

Stability Stability::coordinate(std::size_t n, std::size_t i) {
    std::vector<long> t(n, 0);
    t.at(i) = 1;
    return Stability(std::move(t));
}

long Stability::value(const DimVector& d) const {
    if (d.size() != theta_.size()) throw InputError("stability does not match the dimension vector");
    long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += theta_[i] * d[i];
    return s;
}

Rational Stability::slope(const DimVector& d) const {
    if (d.is_zero()) throw InputError("slope of the zero dimension vector is undefined");
    Rational r(value(d), d.total());
    r.canonicalize();
    return r;
}

std::strong_ordering Stability::compare(const DimVector& d, const DimVector& e) const {
    if (d.is_zero() || e.is_zero()) throw InputError("slope of the zero dimension vector is undefined");
    __int128 lhs = static_cast<__int128>(value(d)) * e.total();
    __int128 rhs = static_cast<__int128>(value(e)) * d.total();
    return lhs <=> rhs;
}

Stability Stability::shifted(long c) const {
    std::vector<long> t(theta_);
    for (long& x : t) x += c;
    return Stability(std::move(t));
}

std::vector<Rational> Stability::king_modification(const DimVector& d) const {
    Rational mu = slope(d);
    std::vector<Rational> out;
    out.reserve(theta_.size());
    for (long t : theta_) out.emplace_back(mu - t);
    return out;
}

Rational Stability::king_value(const DimVector& d, const DimVector& e) const {
    auto tt = king_modification(d);
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += tt[i] * e[i];
    return s;
}

LocalQuiver local_quiver(const Quiver& q, const std::vector<std::pair<DimVector, int>>& stables) {
    if (stables.empty()) throw InputError("local quiver needs at least one stable summand");
    const std::size_t s = stables.size();
    LocalQuiver out;
    out.quiver.vertex_count = s;
    out.quiver.arrow_counts.assign(s * s, 0);
    for (std::size_t a = 0; a < s; ++a) {
        if (stables[a].second < 1) throw InputError("multiplicities must be positive");
        if (stables[a].first.is_zero()) throw InputError("stable summands must be nonzero");
        out.dimension.push_back(stables[a].second);
        for (std::size_t b = 0; b < s; ++b) {
            long n = (a == b ? 1 : 0) - euler_form(q, stables[a].first, stables[b].first);
            if (n < 0)
                throw InputError("negative arrow count " + std::to_string(n) + " in local quiver between summands " +
                                 std::to_string(a + 1) + " and " + std::to_string(b + 1));
            out.quiver.arrow_counts[a * s + b] = static_cast<int>(n);
        }
    }
    return out;
}

BirationalType birational_type(const Quiver& q, const DimVector& d) {
    if (d.is_zero()) throw InputError("birational type needs d != 0");
    int n = d.gcd();
    DimVector base = d.divided_by(n);
    return {n, 1 - euler_form(q, base, base)};
}

LoopReduction::RankStratum LoopReduction::rank_stratum(int r) const {
    if (r < 0 || r > size) throw InputError("rank stratum index out of range");
    return {r, r == size, r == 0};
}

LoopReduction loop_reduction(int m, int n) {
    if (m < 0 || n < 1) throw InputError("loop reduction needs m >= 0 and n >= 1");
    Quiver k = Quiver::kronecker(m + 1);
    return LoopReduction{m, n, k, DimVector({n, n}), Stability::coordinate(2, 0), 0};
}

}  // namespace qi
