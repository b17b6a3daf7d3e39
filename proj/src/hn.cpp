#include "qi/hn.hpp"

#include <algorithm>
#include <numeric>

#include "qi/errors.hpp"
#include "qi/quantum.hpp"

namespace qi {

namespace {

// sum over arrows a -> b of c_a t_b
long arrow_pairing(const Quiver& q, const DimVector& c, const DimVector& t) {
    long s = 0;
    for (const auto& a : q.arrows()) s += static_cast<long>(c[a.source]) * t[a.target];
    return s;
}

// prod_i [t_i choose c_i] in x, with x = v^scale.
LaurentPoly binomial_product(const DimVector& t, const DimVector& c, int scale) {
    LaurentPoly r(1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (c[i] == 0 || c[i] == t[i]) continue;
        r *= gaussian_binomial(t[i], c[i]);
    }
    return scale == 1 ? r : r.substitute_power(scale);
}

}  // namespace

LaurentPoly rep_space_count(const Quiver& q, const DimVector& d) {
    return LaurentPoly::monomial(1, static_cast<int>(arrow_pairing(q, d, d)));
}

LaurentPoly group_order(const DimVector& d) {
    LaurentPoly r(1);
    for (std::size_t i = 0; i < d.size(); ++i) r *= gl_order(d[i]);
    return r;
}

RationalFunc mass(const Quiver& q, const DimVector& d) {
    if (d.size() != q.vertex_count()) throw InputError("dimension vector does not match the quiver's vertex set");
    return RationalFunc(rep_space_count(q, d), group_order(d));
}

long hn_codimension(const Quiver& q, const std::vector<DimVector>& parts) {
    long s = 0;
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t l = k + 1; l < parts.size(); ++l) s -= euler_form(q, parts[k], parts[l]);
    return s;
}

HNCalculus::HNCalculus(Quiver q, Stability theta) : quiver_(std::move(q)), theta_(std::move(theta)) {
    if (theta_.size() != quiver_.vertex_count()) throw InputError("stability does not match the quiver's vertex set");
}

void HNCalculus::check(const DimVector& d) const {
    if (d.size() != quiver_.vertex_count()) throw InputError("dimension vector does not match the quiver's vertex set");
    if (d.is_zero()) throw InputError("dimension vector must be nonzero");
}

HNCalculus::Slope HNCalculus::slope_of(const DimVector& d) const { return {theta_.value(d), d.total()}; }

bool HNCalculus::less(const Slope& a, const Slope& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

LaurentPoly HNCalculus::types_below(const DimVector& r, const Slope& beta) const {
    if (r.is_zero()) return LaurentPoly(1);
    const Level& lv = levels_.at(r);
    auto it = std::lower_bound(lv.slopes.begin(), lv.slopes.end(), beta, less);
    auto k = static_cast<std::size_t>(it - lv.slopes.begin());
    return k == 0 ? LaurentPoly() : lv.prefix[k - 1];
}

void HNCalculus::fill_levels(const DimVector& d) const {
    // Caller holds level_mutex_. Lexicographic order refines the componentwise order,
    // so every c < r is processed before r.
    for (const auto& r : subvectors(d)) {
        if (r.is_zero() || levels_.count(r)) continue;
        std::vector<std::pair<Slope, LaurentPoly>> terms;
        LaurentPoly rest;
        for (const auto& c : subvectors(r)) {
            if (c.is_zero() || c == r) continue;
            const DimVector quotient = r - c;
            const Level& sub = levels_.at(c);
            if (sub.count.is_zero()) continue;
            const Slope mu = slope_of(c);
            LaurentPoly tail = types_below(quotient, mu);
            if (tail.is_zero()) continue;
            LaurentPoly term = (binomial_product(r, c, 1) * sub.count).shifted(static_cast<int>(arrow_pairing(quiver_, quotient, c))) * tail;
            rest += term;
            terms.emplace_back(mu, std::move(term));
        }
        Level lv;
        lv.count = rep_space_count(quiver_, r) - rest;
        if (!lv.count.is_zero()) terms.emplace_back(slope_of(r), lv.count);
        std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return less(a.first, b.first); });
        LaurentPoly acc;
        for (auto& [s, t] : terms) {
            acc += t;
            lv.slopes.push_back(s);
            lv.prefix.push_back(acc);
        }
        levels_.emplace(r, std::move(lv));
    }
}

LaurentPoly HNCalculus::ss_count(const DimVector& d) const {
    check(d);
    std::lock_guard lock(level_mutex_);
    fill_levels(d);
    return levels_.at(d).count;
}

LaurentPoly HNCalculus::closed_sum(const DimVector& d, int scale) const {
    // U(t) = - sum over c <= t, c != 0, with t - c = 0 or mu(t - c) > mu(d), of
    //        x^{sum_arrows c_a t_b} prod_i [t_i choose c_i] U(t - c);
    // the scaled closed-form count is -U(d).
    const Slope mu_d = slope_of(d);
    auto admissible = [&](const DimVector& t) { return t.is_zero() || less(mu_d, slope_of(t)); };
    std::unordered_map<DimVector, LaurentPoly, DimVectorHash> u;
    for (const auto& t : subvectors(d)) {
        if (t.is_zero()) {
            u.emplace(t, LaurentPoly(1));
            continue;
        }
        if (t != d && !admissible(t)) continue;
        LaurentPoly acc;
        for (const auto& c : subvectors(t)) {
            if (c.is_zero()) continue;
            const DimVector rem = t - c;
            if (!admissible(rem)) continue;
            const LaurentPoly& tail = u.at(rem);
            if (tail.is_zero()) continue;
            acc -= (binomial_product(t, c, scale) * tail).shifted(scale * static_cast<int>(arrow_pairing(quiver_, c, t)));
        }
        u.emplace(t, std::move(acc));
    }
    return -u.at(d);
}

LaurentPoly HNCalculus::ss_count_closed(const DimVector& d) const {
    check(d);
    return closed_sum(d, 1);
}

RationalFunc HNCalculus::mass_ss(const DimVector& d) const { return RationalFunc(ss_count(d), group_order(d)); }

RationalFunc HNCalculus::mass_ss_closed(const DimVector& d) const { return RationalFunc(ss_count_closed(d), group_order(d)); }

bool HNCalculus::coprime(const DimVector& d) const {
    check(d);
    return std::gcd(theta_.value(d), d.total()) == 1;
}

LaurentPoly HNCalculus::poincare(const DimVector& d) const {
    if (!coprime(d)) throw InputError("Theta(d) and dim d must be coprime");
    // (v^2 - 1)^{1 - dim d} v^{-sum d_i(d_i - 1)} W / prod_i [d_i]!, with [n]! the
    // normalized factorial prod_k (v^{2k} - 1)/(v^2 - 1) and W the closed sum scaled
    // by prod_i [d_i]!.
    LaurentPoly w = closed_sum(d, 2);
    long shift = 0;
    LaurentPoly den = (LaurentPoly::monomial(1, 2) - LaurentPoly(1)).pow(static_cast<unsigned>(d.total() - 1));
    for (std::size_t i = 0; i < d.size(); ++i) {
        shift += static_cast<long>(d[i]) * (d[i] - 1);
        den *= gaussian_factorial(d[i]).substitute_power(2);
    }
    LaurentPoly num = w.shifted(static_cast<int>(-shift));
    try {
        return exact_quotient(num, den);
    } catch (const ArithmeticError&) {
        try {
            return to_polynomial(RationalFunc(num, den));
        } catch (const ArithmeticError& e) {
            throw InternalError(std::string("Poincare formula did not produce a polynomial: ") + e.what());
        }
    }
}

LaurentPoly HNCalculus::betti_via_mass(const DimVector& d) const {
    if (!coprime(d)) throw InputError("Theta(d) and dim d must be coprime");
    LaurentPoly num = ss_count(d) * (LaurentPoly::monomial(1, 1) - LaurentPoly(1));
    try {
        return exact_quotient(num, group_order(d));
    } catch (const ArithmeticError& e) {
        throw InternalError(std::string("(q - 1) * mass_ss is not a polynomial: ") + e.what());
    }
}

bool HNCalculus::decomposable_search(const DimVector& rem, std::vector<DimVector>& parts, const DimVector& d) const {
    const Slope mu_rem = slope_of(rem);
    for (const auto& c : subvectors(rem)) {
        if (c.is_zero() || (parts.empty() && c == d)) continue;
        const Slope mu_c = slope_of(c);
        // The first part of any HN type of rem has slope > mu(rem) unless it is all of rem.
        if (c != rem && !less(mu_rem, mu_c)) continue;
        if (!parts.empty() && !less(mu_c, slope_of(parts.back()))) continue;
        bool orthogonal = true;
        for (const auto& p : parts)
            if (euler_form(quiver_, p, c) != 0) {
                orthogonal = false;
                break;
            }
        if (!orthogonal || !ss_nonempty(c)) continue;
        if (c == rem) return true;
        parts.push_back(c);
        bool found = decomposable_search(rem - c, parts, d);
        parts.pop_back();
        if (found) return true;
    }
    return false;
}

bool HNCalculus::ss_nonempty(const DimVector& d) const {
    check(d);
    {
        std::lock_guard lock(ss_mutex_);
        auto it = ss_cache_.find(d);
        if (it != ss_cache_.end()) return it->second;
    }
    std::vector<DimVector> parts;
    const bool result = !decomposable_search(d, parts, d);
    std::lock_guard lock(ss_mutex_);
    ss_cache_.emplace(d, result);
    return result;
}

std::vector<HNType> HNCalculus::hn_types(const DimVector& d) const {
    check(d);
    std::vector<HNType> out;
    std::vector<DimVector> parts;
    auto rec = [&](auto&& self, const DimVector& rem) -> void {
        const Slope mu_rem = slope_of(rem);
        for (const auto& c : subvectors(rem)) {
            if (c.is_zero()) continue;
            const Slope mu_c = slope_of(c);
            if (c != rem && !less(mu_rem, mu_c)) continue;
            if (!parts.empty() && !less(mu_c, slope_of(parts.back()))) continue;
            if (!ss_nonempty(c)) continue;
            parts.push_back(c);
            if (c == rem) out.push_back({parts, hn_codimension(quiver_, parts)});
            else self(self, rem - c);
            parts.pop_back();
        }
    };
    rec(rec, d);
    std::sort(out.begin(), out.end(), [](const HNType& a, const HNType& b) { return a.parts < b.parts; });
    return out;
}

}  // namespace qi
