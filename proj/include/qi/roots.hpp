#pragma once

#include <string_view>
#include <vector>

#include "qi/quiver.hpp"

namespace qi {

enum class RootKind { NotRoot, Real, Imaginary };

std::string_view to_string(RootKind k);

struct RootClassification {
    RootKind kind = RootKind::NotRoot;
    /// Vertices reflected at, in order of application.
    std::vector<std::size_t> witness;
    /// Where the descent stopped: a simple root (real), a fundamental-domain
    /// vector (imaginary), or the last nonnegative vector reached (not a root).
    std::vector<long> endpoint;
};

/// Positive-root membership in the Kac root system of the underlying graph, by
/// reflection descent: reflect at any support vertex with (d, i) > 0 until d is
/// simple, a reflection leaves the positive cone, or d is in the fundamental domain.
RootClassification classify_root(const Quiver& q, const DimVector& d);

/// s_i(x) = x - (x, i) i.
std::vector<long> reflect(const Quiver& q, const std::vector<long>& x, std::size_t i);

/// Applies the reflections of the witness in reverse to the endpoint; returns d.
std::vector<long> replay_witness(const Quiver& q, const RootClassification& c);

struct RootEntry {
    DimVector dim;
    RootKind kind;
};

/// All roots 0 < d <= bound, in lexicographic order.
std::vector<RootEntry> positive_roots_up_to(const Quiver& q, const DimVector& bound);

/// The decomposition-type stratum for parts is nonempty iff every part is a root.
bool decomposition_stratum_nonempty(const Quiver& q, const std::vector<DimVector>& parts);

}  // namespace qi
