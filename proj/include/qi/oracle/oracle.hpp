#pragma once

#include <cstdint>
#include <vector>

#include "qi/monoid.hpp"
#include "qi/oracle/rep.hpp"
#include "qi/quiver.hpp"

namespace qi::oracle {

/// Hom_Q(M, N) as tuples (g_i : M_i -> N_i) with g_j M_a = N_a g_i; one Mat per vertex.
std::vector<std::vector<Mat>> hom_basis(const FFRep& m, const FFRep& n);
int hom_dim(const FFRep& m, const FFRep& n);
/// dim Ext = dim Hom - <dim M, dim N>, valid because path algebras are hereditary.
int ext_dim(const Quiver& q, const FFRep& m, const FFRep& n);

inline constexpr std::uint64_t kSubspaceBudget = 1'000'000;
inline constexpr std::uint64_t kEndBudget = 100'000;

/// Semistability and stability for one (Q, Theta, d, p). Only subrepresentation
/// dimensions e that could destabilize (mu(e) > mu(d), resp. >= for stability) are
/// searched. Not thread-safe: keep one tester per thread.
class StabilityTester {
   public:
    StabilityTester(const Quiver& q, const Stability& theta, const DimVector& d, int p, std::uint64_t subspace_budget = kSubspaceBudget);

    bool semistable(const FFRep& x);
    bool stable(const FFRep& x);

   private:
    SubrepFinder finder_;
    DimVector dim_;
    int prime_;
    std::vector<DimVector> above_;     // mu(e) > mu(d)
    std::vector<DimVector> at_least_;  // mu(e) >= mu(d)
};

bool is_semistable(const Quiver& q, const FFRep& x, const Stability& theta);
bool is_stable(const Quiver& q, const FFRep& x, const Stability& theta);

/// End(X) has no idempotents besides 0 and 1: by enumerating End(X) when
/// p^{dim End} <= end_budget, otherwise by searching for a proper nonzero
/// subrepresentation whose inclusion splits.
bool is_indecomposable(const FFRep& x, std::uint64_t end_budget = kEndBudget);
/// Idempotent search over all of End(X); BudgetExceeded if p^{dim End} > end_budget.
bool indecomposable_by_idempotents(const FFRep& x, std::uint64_t end_budget = kEndBudget);
/// No subrepresentation U with 0 < dim U <= dim X / 2 admits a retraction X -> U.
bool indecomposable_by_summands(const FFRep& x);

/// No common invariant subspace 0 < W < F_p^n.
bool is_simple_tuple(int n, const std::vector<Mat>& mats, int p);

/// X has a composition series X = X_0 > X_1 > ... > X_n = 0 with X_{k-1}/X_k
/// simple at the k-th letter of w.
bool has_comp_series(const Quiver& q, const FFRep& x, const Word& w);

/// f_A(l) = det(sum_k l_k A^k) for 2 x 2 matrices. Coefficients of l_k l_l, k <= l,
/// in lexicographic order of (k, l); rank of the Gram matrix (p odd only).
struct QuadraticForm {
    int m = 0;
    std::vector<int> coeffs;
    int rank = 0;
    bool is_zero() const;
};
QuadraticForm kronecker_quadratic_form(const std::vector<Mat>& a, int p);
/// Allocation-free variant over m consecutive row-major 2 x 2 matrices; writes the
/// m(m+1)/2 coefficients to out and returns the rank.
int kronecker_form_raw(const std::uint8_t* entries, int m, int p, int* out);

struct CountResult {
    std::uint64_t count = 0;
    std::uint64_t total = 0;  // points enumerated
};
CountResult count_semistable(const Quiver& q, const Stability& theta, const DimVector& d, int p, std::uint64_t budget = kDefaultBudget);
CountResult count_stable(const Quiver& q, const Stability& theta, const DimVector& d, int p, std::uint64_t budget = kDefaultBudget);
CountResult count_indecomposable(const Quiver& q, const DimVector& d, int p, std::uint64_t budget = kDefaultBudget);
/// Whether some point of R_d(F_p) is indecomposable (stops at the first one).
bool exists_indecomposable(const Quiver& q, const DimVector& d, int p, std::uint64_t budget = kDefaultBudget);

struct MinExtResult {
    long value = 0;
    std::uint64_t pairs = 0;  // pairs examined
    std::uint64_t total = 0;  // |R_d| * |R_e|
};
/// Minimum of dim Ext(M, N) over M in R_d(F_p), N in R_e(F_p). The search stops
/// early once the lower bound max(0, -<d, e>) is reached.
MinExtResult min_ext(const Quiver& q, const DimVector& d, const DimVector& e, int p, std::uint64_t budget = kDefaultBudget);

/// Image (id_n, A_1, ..., A_m) of a loop tuple in R_{(n,n)}(K_{m+1}).
FFRep loop_embedding(const LoopReduction& r, const std::vector<Mat>& tuple, int p);

}  // namespace qi::oracle
