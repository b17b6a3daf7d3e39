#include "qi/quantum.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "qi/errors.hpp"

namespace qi {

LaurentPoly quantum_integer(int n) {
    if (n < 0) throw InputError("quantum integer of a negative number");
    std::vector<Integer> c;
    for (int t = 0; t < 2 * n - 1; ++t) c.emplace_back(t % 2 == 0 ? 1 : 0);
    return LaurentPoly::from_coefficients(1 - n, std::move(c));
}

LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw InputError("quantum factorial of a negative number");
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r *= quantum_integer(k);
    return r;
}

LaurentPoly gaussian_integer(int n) {
    if (n < 0) throw InputError("gaussian integer of a negative number");
    return LaurentPoly::from_coefficients(0, std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

LaurentPoly gaussian_factorial(int n) {
    if (n < 0) throw InputError("gaussian factorial of a negative number");
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r *= gaussian_integer(k);
    return r;
}

LaurentPoly gaussian_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    static std::mutex mu;
    static std::map<std::pair<int, int>, LaurentPoly> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    LaurentPoly r;
    if (k == 0 || k == n) r = LaurentPoly(1);
    else r = gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shifted(k);
    std::lock_guard lock(mu);
    cache.emplace(std::pair{n, k}, r);
    return r;
}

LaurentPoly gl_order(int n) {
    if (n < 0) throw InputError("GL of negative size");
    LaurentPoly r(1);
    for (int k = 0; k < n; ++k) r *= LaurentPoly::monomial(1, n) - LaurentPoly::monomial(1, k);
    return r;
}

}  // namespace qi
