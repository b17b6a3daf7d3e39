#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "qi/quiver.hpp"
#include "qi/rational_function.hpp"

namespace qi {

// Point counts and masses are polynomials / rational functions in q. They use the
// same LaurentPoly type as the v-side; only the printed variable differs.

/// |R_d(F_q)| = q^{sum over arrows i->j of d_i d_j}.
LaurentPoly rep_space_count(const Quiver& q, const DimVector& d);
/// |G_d(F_q)| = prod_i |GL_{d_i}(F_q)|.
LaurentPoly group_order(const DimVector& d);
/// |R_d| / |G_d|.
RationalFunc mass(const Quiver& q, const DimVector& d);

/// Harder-Narasimhan type, subrepresentation first: mu(parts[0]) > mu(parts[1]) > ...
struct HNType {
    std::vector<DimVector> parts;
    long codim = 0;  // -sum_{k<l} <d^k, d^l>
};

/// -sum_{k<l} <d^k, d^l>.
long hn_codimension(const Quiver& q, const std::vector<DimVector>& parts);

/// HN recursion and closed formulas for a fixed quiver and stability.
///
/// Internally everything is scaled by |G_e| so that intermediate values are
/// integer polynomials in q: N(e) = |R_e^ss(F_q)|. Memo tables are filled under a
/// lock and never modified afterwards.
class HNCalculus {
   public:
    HNCalculus(Quiver q, Stability theta);

    const Quiver& quiver() const noexcept { return quiver_; }
    const Stability& stability() const noexcept { return theta_; }

    /// Nonemptiness of R_d^ss by the combinatorial criterion: no HN type with at
    /// least two parts whose pairwise Euler forms <d^k, d^l> (k < l) all vanish.
    bool ss_nonempty(const DimVector& d) const;
    /// All HN types of d, in lexicographic order of their part lists.
    std::vector<HNType> hn_types(const DimVector& d) const;

    /// |R_d^ss(F_q)| from the HN recursion.
    LaurentPoly ss_count(const DimVector& d) const;
    /// |R_d^ss(F_q)| from the inclusion-exclusion closed form.
    LaurentPoly ss_count_closed(const DimVector& d) const;
    /// |R_d^ss| / |G_d| via the HN recursion.
    RationalFunc mass_ss(const DimVector& d) const;
    /// |R_d^ss| / |G_d| via the closed form.
    RationalFunc mass_ss_closed(const DimVector& d) const;

    /// gcd(Theta(d), dim d) == 1.
    bool coprime(const DimVector& d) const;
    /// Poincare polynomial of the moduli space in v (only even powers occur).
    /// InputError for non-coprime d; InternalError if the result is not a polynomial.
    LaurentPoly poincare(const DimVector& d) const;
    /// (q - 1) * mass_ss(d) as a polynomial in q.
    LaurentPoly betti_via_mass(const DimVector& d) const;

   private:
    struct Slope {
        long num;
        long den;  // > 0
    };
    struct Level {
        LaurentPoly count;                 // N(r)
        std::vector<Slope> slopes;         // slopes of the nonzero c <= r, ascending
        std::vector<LaurentPoly> prefix;   // prefix[k] = sum of the first k + 1 terms
    };

    void check(const DimVector& d) const;
    Slope slope_of(const DimVector& d) const;
    static bool less(const Slope& a, const Slope& b);
    // Sum over HN types of r with every slope < beta of the scaled stratum counts.
    LaurentPoly types_below(const DimVector& r, const Slope& beta) const;
    void fill_levels(const DimVector& d) const;
    // Closed-form tail sums with threshold mu(d): x = q (q-side) or x = v^2.
    LaurentPoly closed_sum(const DimVector& d, int exponent_scale) const;
    bool decomposable_search(const DimVector& rem, std::vector<DimVector>& parts, const DimVector& d) const;

    Quiver quiver_;
    Stability theta_;
    mutable std::mutex level_mutex_;
    mutable std::unordered_map<DimVector, Level, DimVectorHash> levels_;
    mutable std::mutex ss_mutex_;
    mutable std::unordered_map<DimVector, bool, DimVectorHash> ss_cache_;
};

}  // namespace qi
