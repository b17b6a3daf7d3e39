#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Nonnegative integer vector indexed by the canonical vertex order of a quiver.
class DimVector {
   public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries);

    static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }
    static DimVector simple(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }

    long total() const noexcept;
    bool is_zero() const noexcept;
    /// Componentwise order.
    bool leq(const DimVector& other) const;
    std::vector<std::size_t> support() const;
    int gcd() const;

    DimVector operator+(const DimVector& other) const;
    /// Throws InputError when the difference has a negative entry.
    DimVector operator-(const DimVector& other) const;
    DimVector operator*(int factor) const;
    /// Exact division of every entry; InputError if not divisible.
    DimVector divided_by(int n) const;

    bool operator==(const DimVector&) const = default;
    std::strong_ordering operator<=>(const DimVector& other) const { return entries_ <=> other.entries_; }

    std::size_t hash() const noexcept;

   private:
    std::vector<int> entries_;
};

struct DimVectorHash {
    std::size_t operator()(const DimVector& d) const noexcept { return d.hash(); }
};

struct DimVectorPairHash {
    std::size_t operator()(const std::pair<DimVector, DimVector>& p) const noexcept {
        return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
    }
};

/// All e with 0 <= e <= d, in lexicographic order (the zero vector first, d last).
std::vector<DimVector> subvectors(const DimVector& d);

/// Acyclic quiver without loops. Vertices are stored in a topological order
/// (ties broken by input order), so an arrow i -> j always has index(i) < index(j).
class Quiver {
   public:
    struct Arrow {
        std::size_t source;
        std::size_t target;
    };

    /// Throws InputError on unknown or duplicate vertices, loops, or oriented cycles.
    Quiver(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arrows);

    /// Generalized Kronecker quiver K_m: vertices i, j and m arrows i -> j.
    static Quiver kronecker(int m);
    /// Equioriented A_n: 1 -> 2 -> ... -> n.
    static Quiver linear(int n);
    /// n vertices, no arrows.
    static Quiver discrete(int n);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Arrows in input order, endpoints as canonical indices.
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    int arrow_count(std::size_t i, std::size_t j) const { return counts_[i * names_.size() + j]; }

    /// Connectivity of the support of d in the underlying undirected graph.
    bool support_connected(const DimVector& d) const;

    std::uint64_t hash() const noexcept { return hash_; }
    bool operator==(const Quiver& other) const {
        return names_ == other.names_ && counts_ == other.counts_ && arrows_.size() == other.arrows_.size();
    }

   private:
    std::vector<std::string> names_;
    std::vector<Arrow> arrows_;
    std::vector<int> counts_;
    std::uint64_t hash_ = 0;
};

/// Quiver that may carry loops and oriented cycles. Only produced by local_quiver;
/// no algorithms are offered on it.
struct RelaxedQuiver {
    std::size_t vertex_count = 0;
    std::vector<int> arrow_counts;  // row-major: arrow_counts[i * n + j] arrows i -> j

    int arrows(std::size_t i, std::size_t j) const { return arrow_counts[i * vertex_count + j]; }
    int loops(std::size_t i) const { return arrows(i, i); }
    std::string to_string() const;
};

/// <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
/// (d, e) = <d, e> + <e, d>.
long symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e);
/// E[i][j] = delta_ij - #(i -> j), row-major.
std::vector<int> euler_matrix(const Quiver& q);
/// C = E + E^T.
std::vector<int> cartan_matrix(const Quiver& q);

/// Integer linear functional Theta on ZI, with slope mu(d) = Theta(d) / dim d.
class Stability {
   public:
    explicit Stability(std::vector<long> theta) : theta_(std::move(theta)) {}

    static Stability constant(std::size_t n, long c) { return Stability(std::vector<long>(n, c)); }
    /// i^* : Theta(j) = delta_ij.
    static Stability coordinate(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return theta_.size(); }
    long operator[](std::size_t i) const { return theta_[i]; }
    std::span<const long> weights() const noexcept { return theta_; }

    long value(const DimVector& d) const;
    /// Exact slope; InputError for d = 0.
    Rational slope(const DimVector& d) const;
    /// Exact three-way comparison of mu(d) and mu(e) by cross-multiplication.
    std::strong_ordering compare(const DimVector& d, const DimVector& e) const;
    /// Theta + c * dim; every slope shifts by c.
    Stability shifted(long c) const;
    /// King's functional mu(d) * dim - Theta, one entry per vertex.
    std::vector<Rational> king_modification(const DimVector& d) const;
    /// Theta~(e) for the King modification relative to d.
    Rational king_value(const DimVector& d, const DimVector& e) const;

    bool operator==(const Stability&) const = default;

   private:
    std::vector<long> theta_;
};

struct LocalQuiver {
    RelaxedQuiver quiver;
    std::vector<int> dimension;  // d_X = (m_1, ..., m_s)
};

/// Local quiver of a polystable point X_1^{m_1} + ... + X_s^{m_s}: vertices 1..s
/// with delta_ij - <dim X_i, dim X_j> arrows i -> j.
LocalQuiver local_quiver(const Quiver& q, const std::vector<std::pair<DimVector, int>>& stables);

struct BirationalType {
    int n;   // gcd of the entries
    long p;  // 1 - <d/n, d/n>
    bool operator==(const BirationalType&) const = default;
};

BirationalType birational_type(const Quiver& q, const DimVector& d);

/// Data of the embedding R_n(L_m) -> R_{ni+nj}(K_{m+1}), (A_1..A_m) -> (id_n, A_1..A_m).
struct LoopReduction {
    int loops;  // m
    int size;   // n
    Quiver target;
    DimVector dimension;
    Stability stability;
    std::size_t identity_arrow = 0;

    struct RankStratum {
        int rank;
        bool loop_tuples;      // r = n: reduces to m-tuples of n x n matrices
        bool kronecker_minus;  // r = 0: the first arrow vanishes, R_{ni+nj}(K_m)
    };
    /// Stratum S_r by the rank r of the matrix on the first arrow, 0 <= r <= n.
    RankStratum rank_stratum(int r) const;
};

LoopReduction loop_reduction(int m, int n);

}  // namespace qi
