#pragma once

// Test-side reference implementations. They follow the defining formulas
// literally (explicit tuple enumeration, unscaled rational functions) and share
// no code with the library beyond the arithmetic types.

#include <functional>
#include <map>
#include <vector>

#include "qi/hn.hpp"
#include "qi/quantum.hpp"
#include "qi/quiver.hpp"
#include "qi/rational_function.hpp"

namespace qi::testing {

inline DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }

inline LaurentPoly q_power(long e) { return LaurentPoly::monomial(1, static_cast<int>(e)); }

inline RationalFunc q_power_rf(long e) { return e >= 0 ? RationalFunc(q_power(e)) : RationalFunc(1) / RationalFunc(q_power(-e)); }

// |R_d| / |G_d| from the product formula.
inline RationalFunc naive_mass(const Quiver& q, const DimVector& d) {
    long e = 0;
    for (const auto& a : q.arrows()) e += static_cast<long>(d[a.source]) * d[a.target];
    LaurentPoly g(1);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (int k = 0; k < d[i]; ++k) g *= q_power(d[i]) - q_power(k);
    return RationalFunc(q_power(e), g);
}

// Every ordered tuple of nonzero vectors summing to d.
inline void for_each_composition(const DimVector& d, const std::function<void(const std::vector<DimVector>&)>& visit) {
    std::vector<DimVector> parts;
    std::function<void(const DimVector&)> rec = [&](const DimVector& rem) {
        if (rem.is_zero()) {
            visit(parts);
            return;
        }
        for (const auto& c : subvectors(rem)) {
            if (c.is_zero()) continue;
            parts.push_back(c);
            rec(rem - c);
            parts.pop_back();
        }
    };
    if (!d.is_zero()) rec(d);
}

inline long pair_form(const Quiver& q, const std::vector<DimVector>& parts) {
    long s = 0;
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t l = k + 1; l < parts.size(); ++l) s += euler_form(q, parts[k], parts[l]);
    return s;
}

// Tail condition of the closed form: mu(d^k + ... + d^s) > mu(d) for k >= 2.
inline bool tail_condition(const Stability& th, const std::vector<DimVector>& parts, const DimVector& d) {
    DimVector tail = DimVector::zero(d.size());
    for (std::size_t k = parts.size(); k-- > 1;) {
        tail = tail + parts[k];
        if (th.slope(tail) <= th.slope(d)) return false;
    }
    return true;
}

inline RationalFunc closed_oracle(const Quiver& q, const Stability& th, const DimVector& d) {
    RationalFunc sum;
    for_each_composition(d, [&](const std::vector<DimVector>& parts) {
        if (!tail_condition(th, parts, d)) return;
        RationalFunc t = q_power_rf(-pair_form(q, parts));
        for (const auto& p : parts) t *= naive_mass(q, p);
        sum += parts.size() % 2 == 1 ? t : -t;
    });
    return sum;
}

// The HN recursion solved top-down, sequences in increasing slope order
// mu(d^1) < ... < mu(d^s) with weight q^{-sum_{k<l} <d^k, d^l>}.
class RecursionOracle {
   public:
    RecursionOracle(Quiver q, Stability th) : q_(std::move(q)), th_(std::move(th)) {}

    RationalFunc mass_ss(const DimVector& d) {
        if (auto it = memo_.find(d); it != memo_.end()) return it->second;
        RationalFunc r = naive_mass(q_, d);
        for_each_composition(d, [&](const std::vector<DimVector>& parts) {
            if (parts.size() < 2) return;
            for (std::size_t k = 0; k + 1 < parts.size(); ++k)
                if (th_.slope(parts[k]) >= th_.slope(parts[k + 1])) return;
            RationalFunc t = q_power_rf(-pair_form(q_, parts));
            for (const auto& p : parts) t *= mass_ss(p);
            r -= t;
        });
        memo_.emplace(d, r);
        return r;
    }

   private:
    Quiver q_;
    Stability th_;
    std::map<DimVector, RationalFunc> memo_;
};

// The Poincare formula in v, term by term, with the normalized factorial
// v^{n(n-1)/2} [n]!.
inline LaurentPoly poincare_oracle(const Quiver& q, const Stability& th, const DimVector& d) {
    auto v_pow = [](long e) { return e >= 0 ? RationalFunc(LaurentPoly::monomial(1, static_cast<int>(e))) : RationalFunc(1) / RationalFunc(LaurentPoly::monomial(1, static_cast<int>(-e))); };
    RationalFunc sum;
    for_each_composition(d, [&](const std::vector<DimVector>& parts) {
        if (!tail_condition(th, parts, d)) return;
        long e = 0;
        for (std::size_t k = 0; k < parts.size(); ++k)
            for (std::size_t l = k; l < parts.size(); ++l)
                for (const auto& a : q.arrows()) e += static_cast<long>(parts[k][a.source]) * parts[l][a.target];
        RationalFunc t = v_pow(2 * e);
        for (const auto& p : parts)
            for (std::size_t i = 0; i < p.size(); ++i) t *= RationalFunc(1) / RationalFunc(quantum_factorial(p[i]).shifted(p[i] * (p[i] - 1) / 2));
        sum += parts.size() % 2 == 1 ? t : -t;
    });
    long shift = 0;
    for (std::size_t i = 0; i < d.size(); ++i) shift += static_cast<long>(d[i]) * (d[i] - 1);
    const RationalFunc v2m1(LaurentPoly::monomial(1, 2) - LaurentPoly(1));
    sum *= v_pow(-shift) * v2m1.pow(1 - d.total());
    return to_polynomial(sum);
}

inline std::vector<long> coefficients_of(const LaurentPoly& p) {
    std::vector<long> c;
    for (int e = 0; e <= p.high_degree(); ++e) c.push_back(p.coefficient(e).get_si());
    return c;
}

}  // namespace qi::testing
