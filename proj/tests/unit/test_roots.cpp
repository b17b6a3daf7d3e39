#include <doctest.h>

#include "qi/roots.hpp"
#include "support.hpp"

using namespace qi;
using qi::testing::dv;

TEST_SUITE("root-system") {

TEST_CASE("classify on A2 and K2") {
    const Quiver a2 = Quiver::linear(2), k2 = Quiver::kronecker(2);
    CHECK(classify_root(a2, dv({1, 1})).kind == RootKind::Real);
    CHECK(classify_root(a2, dv({2, 0})).kind == RootKind::NotRoot);
    CHECK(classify_root(a2, dv({2, 2})).kind == RootKind::NotRoot);
    CHECK(classify_root(k2, dv({2, 2})).kind == RootKind::Imaginary);
    CHECK(classify_root(k2, dv({1, 1})).kind == RootKind::Imaginary);
    CHECK(classify_root(k2, dv({2, 1})).kind == RootKind::Real);
    CHECK(classify_root(k2, dv({3, 1})).kind == RootKind::NotRoot);
}

TEST_CASE("witness replays to d") {
    const Quiver k3 = Quiver::kronecker(3);
    for (const auto& d : subvectors(dv({5, 6}))) {
        if (d.is_zero()) continue;
        auto c = classify_root(k3, d);
        const auto back = replay_witness(k3, c);
        CHECK(back == std::vector<long>(d.entries().begin(), d.entries().end()));
    }
}

TEST_CASE("positive roots up to a bound") {
    const Quiver a2 = Quiver::linear(2);
    auto r = positive_roots_up_to(a2, dv({2, 2}));
    REQUIRE(r.size() == 3);
    CHECK(r[0].dim == dv({0, 1}));
    CHECK(r[1].dim == dv({1, 0}));
    CHECK(r[2].dim == dv({1, 1}));
    for (const auto& e : r) CHECK(e.kind == RootKind::Real);

    const Quiver k2 = Quiver::kronecker(2);
    std::map<DimVector, RootKind> got;
    for (const auto& e : positive_roots_up_to(k2, dv({2, 2}))) got[e.dim] = e.kind;
    std::map<DimVector, RootKind> want{{dv({0, 1}), RootKind::Real},      {dv({1, 0}), RootKind::Real},
                                       {dv({1, 1}), RootKind::Imaginary}, {dv({1, 2}), RootKind::Real},
                                       {dv({2, 1}), RootKind::Real},      {dv({2, 2}), RootKind::Imaginary}};
    CHECK(got == want);

    auto single = positive_roots_up_to(Quiver::discrete(1), dv({3}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].dim == dv({1}));
}

TEST_CASE("disconnected support is not a root") {
    const Quiver d2 = Quiver::discrete(2);
    CHECK(classify_root(d2, dv({1, 1})).kind == RootKind::NotRoot);
}

TEST_CASE("real roots have <d,d> = 1, imaginary <d,d> <= 0") {
    const Quiver q({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "c"}});
    for (const auto& d : subvectors(dv({3, 3, 3}))) {
        if (d.is_zero()) continue;
        auto c = classify_root(q, d);
        if (c.kind == RootKind::Real) CHECK(euler_form(q, d, d) == 1);
        if (c.kind == RootKind::Imaginary) CHECK(euler_form(q, d, d) <= 0);
    }
}

TEST_CASE("decomposition strata") {
    const Quiver a2 = Quiver::linear(2);
    CHECK(decomposition_stratum_nonempty(a2, {dv({1, 1}), dv({1, 0})}));
    CHECK_FALSE(decomposition_stratum_nonempty(a2, {dv({2, 0})}));
    CHECK(decomposition_stratum_nonempty(Quiver::kronecker(5), {dv({0, 1})}));
}

}
