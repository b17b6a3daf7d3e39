#include "qi/generic.hpp"

#include <algorithm>

#include "qi/errors.hpp"

namespace qi {

void GenericCalculus::check(const DimVector& d) const {
    if (d.size() != quiver_.vertex_count()) throw InputError("dimension vector does not match the quiver's vertex set");
}

std::size_t GenericCalculus::cached_ext_entries() const {
    std::lock_guard lock(mutex_);
    return ext_cache_.size();
}

long GenericCalculus::ext(const DimVector& d, const DimVector& e) const {
    check(d);
    check(e);
    if (d.is_zero() || e.is_zero()) return 0;
    {
        std::lock_guard lock(mutex_);
        auto it = ext_cache_.find({d, e});
        if (it != ext_cache_.end()) return it->second;
    }
    // Inner calls ext(d', d - d') have total dimension dim d < dim d + dim e.
    long best = 0;
    for (const auto& sub : subvectors(d)) {
        if (sub.is_zero()) continue;
        if (sub != d && ext(sub, d - sub) != 0) continue;
        best = std::max(best, -euler_form(quiver_, sub, e));
    }
    std::lock_guard lock(mutex_);
    ext_cache_.emplace(std::pair{d, e}, best);
    return best;
}

long GenericCalculus::hom(const DimVector& d, const DimVector& e) const { return euler_form(quiver_, d, e) + ext(d, e); }

bool GenericCalculus::generic_subrep(const DimVector& e, const DimVector& d) const {
    check(d);
    check(e);
    if (!e.leq(d)) throw InputError("generic_subrep needs e <= d");
    return ext(e, d - e) == 0;
}

bool GenericCalculus::schur(const DimVector& d) const {
    check(d);
    if (d.is_zero()) throw InputError("Schur test needs d != 0");
    {
        std::lock_guard lock(mutex_);
        auto it = schur_cache_.find(d);
        if (it != schur_cache_.end()) return it->second;
    }
    bool result = true;
    for (const auto& e : subvectors(d)) {
        if (e.is_zero() || e == d) continue;
        if (ext(e, d - e) != 0) continue;
        if (euler_form(quiver_, e, d) - euler_form(quiver_, d, e) <= 0) {
            result = false;
            break;
        }
    }
    std::lock_guard lock(mutex_);
    schur_cache_.emplace(d, result);
    return result;
}

bool GenericCalculus::satisfies_kac_conditions(const std::vector<DimVector>& parts) const {
    for (std::size_t a = 0; a < parts.size(); ++a) {
        if (parts[a].is_zero() || !schur(parts[a])) return false;
        for (std::size_t b = 0; b < parts.size(); ++b)
            if (a != b && ext(parts[a], parts[b]) != 0) return false;
    }
    return true;
}

std::vector<DimVector> GenericCalculus::decomposition(const DimVector& d) const {
    check(d);
    if (d.is_zero()) return {};
    {
        std::lock_guard lock(mutex_);
        auto it = decomposition_cache_.find(d);
        if (it != decomposition_cache_.end()) return it->second;
    }
    std::vector<DimVector> result;
    if (schur(d)) {
        result.push_back(d);
    } else {
        // A generic representation of d splits as e + (d - e) iff ext vanishes both ways;
        // the generic decomposition of d is then the union of those of the two pieces.
        bool found = false;
        for (const auto& e : subvectors(d)) {
            if (e.is_zero() || e == d) continue;
            DimVector rest = d - e;
            if (ext(e, rest) != 0 || ext(rest, e) != 0) continue;
            result = decomposition(e);
            auto tail = decomposition(rest);
            result.insert(result.end(), tail.begin(), tail.end());
            found = true;
            break;
        }
        if (!found) throw InternalError("no generic splitting found for a non-Schur dimension vector");
        std::sort(result.begin(), result.end());
    }
    if (!satisfies_kac_conditions(result)) throw InternalError("generic decomposition violates Kac's conditions");
    std::lock_guard lock(mutex_);
    decomposition_cache_.emplace(d, result);
    return result;
}

}  // namespace qi
