#include "qi/roots.hpp"

#include <algorithm>

#include "qi/errors.hpp"

namespace qi {

std::string_view to_string(RootKind k) {
    switch (k) {
        case RootKind::Real: return "real";
        case RootKind::Imaginary: return "imaginary";
        case RootKind::NotRoot: break;
    }
    return "not-root";
}

namespace {

long pairing(const std::vector<int>& cartan, std::size_t n, const std::vector<long>& x, std::size_t i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += cartan[i * n + j] * x[j];
    return s;
}

}  // namespace

std::vector<long> reflect(const Quiver& q, const std::vector<long>& x, std::size_t i) {
    const std::size_t n = q.vertex_count();
    auto c = cartan_matrix(q);
    std::vector<long> y(x);
    y[i] -= pairing(c, n, x, i);
    return y;
}

RootClassification classify_root(const Quiver& q, const DimVector& d) {
    if (d.size() != q.vertex_count()) throw InputError("dimension vector does not match the quiver's vertex set");
    if (d.is_zero()) throw InputError("root classification needs d != 0");
    const std::size_t n = q.vertex_count();
    const auto cartan = cartan_matrix(q);

    RootClassification out;
    std::vector<long> x(d.entries().begin(), d.entries().end());
    while (true) {
        long height = 0;
        for (long v : x) height += v;
        if (height == 1) {
            out.kind = RootKind::Real;
            break;
        }
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] > 0 && pairing(cartan, n, x, i) > 0) {
                pick = i;
                break;
            }
        if (pick == n) {
            // Fundamental domain up to support connectivity.
            std::vector<int> dx(x.begin(), x.end());
            out.kind = q.support_connected(DimVector(dx)) ? RootKind::Imaginary : RootKind::NotRoot;
            break;
        }
        long next = x[pick] - pairing(cartan, n, x, pick);
        if (next < 0) {
            // s_i maps positive roots other than the simple root i to positive roots.
            out.kind = RootKind::NotRoot;
            break;
        }
        x[pick] = next;
        out.witness.push_back(pick);
    }
    out.endpoint = x;
    return out;
}

std::vector<long> replay_witness(const Quiver& q, const RootClassification& c) {
    std::vector<long> x = c.endpoint;
    for (auto it = c.witness.rbegin(); it != c.witness.rend(); ++it) x = reflect(q, x, *it);
    return x;
}

std::vector<RootEntry> positive_roots_up_to(const Quiver& q, const DimVector& bound) {
    if (bound.size() != q.vertex_count()) throw InputError("bound does not match the quiver's vertex set");
    std::vector<RootEntry> out;
    for (const auto& d : subvectors(bound)) {
        if (d.is_zero()) continue;
        auto c = classify_root(q, d);
        if (c.kind != RootKind::NotRoot) out.push_back({d, c.kind});
    }
    return out;
}

bool decomposition_stratum_nonempty(const Quiver& q, const std::vector<DimVector>& parts) {
    return std::all_of(parts.begin(), parts.end(),
                       [&](const DimVector& p) { return classify_root(q, p).kind != RootKind::NotRoot; });
}

}  // namespace qi
