#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qi/oracle/fp.hpp"
#include "qi/quiver.hpp"

namespace qi::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Point of R_d(F_p): one (d_target x d_source) matrix per arrow, in the quiver's
/// arrow order, stored as one flat byte array.
class FFRep {
   public:
    struct Arrow {
        std::size_t source;
        std::size_t target;
        std::size_t offset;
        int rows;  // d_target
        int cols;  // d_source
    };

    /// The zero representation.
    FFRep(const Quiver& q, const DimVector& d, int p);
    /// Throws InputError on shape mismatch or entries outside [0, p).
    static FFRep from_matrices(const Quiver& q, const DimVector& d, int p, const std::vector<Mat>& maps);

    int prime() const noexcept { return layout_->p; }
    const DimVector& dim() const noexcept { return layout_->d; }
    std::size_t vertex_count() const noexcept { return layout_->d.size(); }
    const std::vector<Arrow>& arrows() const noexcept { return layout_->arrows; }
    const std::vector<std::vector<std::size_t>>& incoming() const noexcept { return layout_->incoming; }

    std::uint8_t entry(std::size_t arrow, int r, int c) const {
        const Arrow& a = layout_->arrows[arrow];
        return entries_[a.offset + static_cast<std::size_t>(r * a.cols + c)];
    }
    Mat map(std::size_t arrow) const;
    std::vector<Mat> maps() const;

    std::vector<std::uint8_t>& raw() noexcept { return entries_; }
    const std::vector<std::uint8_t>& raw() const noexcept { return entries_; }

    /// Image of v under the arrow's matrix, written to out (length d_target).
    void apply(std::size_t arrow, const std::uint8_t* v, std::uint8_t* out) const {
        const Arrow& a = layout_->arrows[arrow];
        const std::uint8_t* m = entries_.data() + a.offset;
        const std::uint8_t* mod = layout_->mod;
        for (int r = 0; r < a.rows; ++r, m += a.cols) {
            int s = 0;
            for (int c = 0; c < a.cols; ++c) s += m[c] * v[c];
            out[r] = mod[s];
        }
    }

   private:
    struct Layout {
        DimVector d;
        int p;
        const std::uint8_t* mod;
        std::vector<Arrow> arrows;
        std::vector<std::vector<std::size_t>> incoming;  // arrows into each vertex
    };
    FFRep() = default;
    std::shared_ptr<const Layout> layout_;
    std::vector<std::uint8_t> entries_;
};

/// p^{sum over arrows of d_i d_j}, saturating at UINT64_MAX.
std::uint64_t rep_space_size(const Quiver& q, const DimVector& d, int p);

/// Every point of R_d(F_p) exactly once: flat entry k is digit k (base p) of the
/// index, so entry 0 varies fastest. BudgetExceeded when the space is larger than
/// budget. The callback sees one representation object mutated in place and may
/// return false to stop early; returns the number of points visited.
std::uint64_t enumerate_reps(const Quiver& q, const DimVector& d, int p, std::uint64_t budget,
                             const std::function<bool(const FFRep&)>& visit);
FFRep rep_at(const Quiver& q, const DimVector& d, int p, std::uint64_t index);

/// Subspace of F_p^n in reduced row echelon form.
struct Subspace {
    int dim = 0;
    std::vector<std::vector<std::uint8_t>> basis;  // RREF rows
    std::vector<int> pivots;
    std::vector<std::uint64_t> members;            // bitset over encoded vectors

    bool contains(std::uint32_t code) const { return (members[code >> 6] >> (code & 63)) & 1U; }
};

/// All subspaces of F_p^n grouped by dimension, in a fixed order. Cached.
struct SubspaceTable {
    int p = 0;
    int n = 0;
    std::vector<std::vector<Subspace>> by_dim;
    std::uint64_t total() const;
};
const SubspaceTable& subspaces(int p, int n);
/// sum_k v_k p^k.
std::uint32_t encode(const std::uint8_t* v, int n, int p);

/// Reusable subrepresentation search for representations of one dimension vector
/// over one field. Buffers are kept between calls so hot loops do not allocate.
class SubrepFinder {
   public:
    SubrepFinder(const DimVector& d, int p);

    /// Calls visit with one subspace per vertex for every subrepresentation U of X
    /// with dim U = e, in a fixed order, until visit returns false. Returns false iff stopped.
    bool for_each(const FFRep& x, const DimVector& e, const std::function<bool(const std::vector<const Subspace*>&)>& visit);
    bool exists(const FFRep& x, const DimVector& e);
    /// exists() without argument validation, for callers that checked once.
    bool exists_unchecked(const FFRep& x, const DimVector& e);

   private:
    template <class Visit>
    bool run(const FFRep& x, const DimVector& e, std::size_t j, Visit& visit);

    DimVector d_;
    int p_;
    std::vector<const SubspaceTable*> tables_;
    std::vector<const Subspace*> chosen_;
    std::vector<std::vector<std::uint32_t>> required_;
};

/// One-shot wrappers around SubrepFinder.
bool for_each_subrep(const FFRep& x, const DimVector& e, const std::function<bool(const std::vector<const Subspace*>&)>& visit);
bool has_subrep(const FFRep& x, const DimVector& e);
/// The subrepresentation U as a representation in the RREF bases of its spaces.
FFRep restrict_to(const Quiver& q, const FFRep& x, const std::vector<const Subspace*>& u);

/// prod_i (number of subspaces of F_p^{d_i}).
std::uint64_t subspace_tuple_count(const DimVector& d, int p);

}  // namespace qi::oracle
