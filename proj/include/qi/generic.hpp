#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qi/quiver.hpp"

namespace qi {

/// Generic hom/ext and the Schofield-Kac decomposition calculus on a fixed quiver.
///
/// ext(d, e) is computed by Schofield's recursion
///     ext(d, e) = max { -<d', e> : 0 <= d' <= d, ext(d', d - d') = 0 },
/// i.e. d' ranges over generic subrepresentation dimensions of d. Results are
/// memoized in a write-once table; concurrent callers may fill the same entry
/// with the same value.
class GenericCalculus {
   public:
    explicit GenericCalculus(Quiver q) : quiver_(std::move(q)) {}

    const Quiver& quiver() const noexcept { return quiver_; }

    long ext(const DimVector& d, const DimVector& e) const;
    /// hom(d, e) = <d, e> + ext(d, e).
    long hom(const DimVector& d, const DimVector& e) const;
    /// A generic representation of dimension d has a subrepresentation of
    /// dimension e iff ext(e, d - e) = 0. Requires e <= d.
    bool generic_subrep(const DimVector& e, const DimVector& d) const;
    /// Schofield: d is Schur iff <e, d> - <d, e> > 0 for every proper nonzero
    /// generic subrepresentation e of d.
    bool schur(const DimVector& d) const;
    /// Kac's generic decomposition, sorted lexicographically. Every part is a Schur
    /// root and ext vanishes between distinct parts; InternalError if not.
    std::vector<DimVector> decomposition(const DimVector& d) const;

    /// Kac's two conditions for a candidate decomposition.
    bool satisfies_kac_conditions(const std::vector<DimVector>& parts) const;

    std::size_t cached_ext_entries() const;

   private:
    void check(const DimVector& d) const;

    Quiver quiver_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::pair<DimVector, DimVector>, long, DimVectorPairHash> ext_cache_;
    mutable std::unordered_map<DimVector, bool, DimVectorHash> schur_cache_;
    mutable std::unordered_map<DimVector, std::vector<DimVector>, DimVectorHash> decomposition_cache_;
};

}  // namespace qi
