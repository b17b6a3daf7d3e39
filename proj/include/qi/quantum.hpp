#pragma once

#include "qi/laurent.hpp"

namespace qi {

/// [n] = (v^n - v^-n) / (v - v^-1) = v^{n-1} + v^{n-3} + ... + v^{1-n}.
LaurentPoly quantum_integer(int n);
/// [n]! = [1][2]...[n], [0]! = 1. Throws InputError for n < 0.
LaurentPoly quantum_factorial(int n);

/// 1 + x + ... + x^{n-1}, in whatever variable x the caller means (q or v^2).
LaurentPoly gaussian_integer(int n);
/// prod_{k=1}^n (1 + x + ... + x^{k-1}); equals v^{n(n-1)/2}[n]! under x = v^2.
LaurentPoly gaussian_factorial(int n);
/// Gaussian binomial coefficient [n choose k]_x, zero outside 0 <= k <= n.
LaurentPoly gaussian_binomial(int n, int k);

/// |GL_n(F_q)| = prod_{k=0}^{n-1} (q^n - q^k), as a polynomial in q.
LaurentPoly gl_order(int n);

}  // namespace qi
