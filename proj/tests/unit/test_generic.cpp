#include <doctest.h>

#include "qi/errors.hpp"
#include "qi/generic.hpp"
#include "qi/roots.hpp"
#include "support.hpp"

using namespace qi;
using qi::testing::dv;

TEST_SUITE("generic-reps") {

TEST_CASE("ext between simples of K_m") {
    for (int m = 1; m <= 5; ++m) {
        GenericCalculus g(Quiver::kronecker(m));
        CHECK(g.ext(dv({1, 0}), dv({0, 1})) == m);
        CHECK(g.ext(dv({0, 1}), dv({1, 0})) == 0);
    }
}

TEST_CASE("small cases") {
    GenericCalculus a2(Quiver::linear(2));
    CHECK(a2.ext(dv({1, 1}), dv({1, 1})) == 0);
    CHECK(GenericCalculus(Quiver::kronecker(3)).hom(dv({1, 0}), dv({0, 1})) == 0);
    CHECK(a2.generic_subrep(dv({0, 1}), dv({1, 1})));
    CHECK_FALSE(a2.generic_subrep(dv({1, 0}), dv({1, 1})));
    CHECK(a2.generic_subrep(dv({0, 0}), dv({1, 1})));
    CHECK(a2.generic_subrep(dv({1, 1}), dv({1, 1})));
}

TEST_CASE("schur roots") {
    GenericCalculus k3(Quiver::kronecker(3)), a2(Quiver::linear(2));
    CHECK(k3.schur(dv({1, 0})));
    CHECK(k3.schur(dv({1, 1})));
    CHECK(k3.schur(dv({2, 3})));
    CHECK_FALSE(a2.schur(dv({2, 2})));
    CHECK(a2.schur(dv({1, 1})));
    // Schur roots of K_2 are (n, n+1), (n+1, n) and (1, 1).
    GenericCalculus k2(Quiver::kronecker(2));
    CHECK(k2.schur(dv({1, 1})));
    CHECK_FALSE(k2.schur(dv({2, 2})));
    CHECK(k2.schur(dv({2, 3})));
}

TEST_CASE("decompositions") {
    GenericCalculus a2(Quiver::linear(2));
    CHECK(a2.decomposition(dv({2, 1})) == std::vector<DimVector>{dv({1, 0}), dv({1, 1})});
    CHECK(a2.decomposition(dv({2, 2})) == std::vector<DimVector>{dv({1, 1}), dv({1, 1})});
    GenericCalculus one(Quiver::discrete(1));
    CHECK(one.decomposition(dv({3})) == std::vector<DimVector>(3, dv({1})));
    GenericCalculus k2(Quiver::kronecker(2));
    CHECK(k2.decomposition(dv({3, 3})) == std::vector<DimVector>(3, dv({1, 1})));
}

TEST_CASE("decomposition invariants on a catalog") {
    std::vector<std::pair<Quiver, DimVector>> cat{
        {Quiver::kronecker(2), dv({4, 3})}, {Quiver::kronecker(3), dv({3, 4})}, {Quiver::linear(3), dv({2, 3, 2})},
        {Quiver({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}), dv({2, 2, 2})},
        {Quiver({"a", "b", "c", "d"}, {{"a", "d"}, {"b", "d"}, {"c", "d"}}), dv({1, 1, 1, 2})}};
    for (const auto& [q, bound] : cat) {
        GenericCalculus g(q);
        for (const auto& d : subvectors(bound)) {
            if (d.is_zero()) continue;
            auto parts = g.decomposition(d);
            DimVector sum = DimVector::zero(d.size());
            for (const auto& p : parts) {
                sum = sum + p;
                CHECK(g.schur(p));
                CHECK(classify_root(q, p).kind != RootKind::NotRoot);
            }
            CHECK(sum == d);
            CHECK(g.satisfies_kac_conditions(parts));
            CHECK(g.hom(d, d) - g.ext(d, d) == euler_form(q, d, d));
        }
    }
}

TEST_CASE("ext is nonnegative and bounded below by -<d,e>") {
    const Quiver q({"a", "b", "c"}, {{"a", "b"}, {"a", "b"}, {"b", "c"}});
    GenericCalculus g(q);
    for (const auto& d : subvectors(dv({2, 1, 2})))
        for (const auto& e : subvectors(dv({1, 2, 1}))) {
            const long x = g.ext(d, e);
            CHECK(x >= 0);
            CHECK(x >= -euler_form(q, d, e));
            CHECK(g.hom(d, e) >= 0);
        }
}

TEST_CASE("dimension mismatch") {
    GenericCalculus g(Quiver::kronecker(2));
    CHECK_THROWS_AS(g.ext(dv({1}), dv({1, 1})), InputError);
    CHECK_THROWS_AS(g.generic_subrep(dv({2, 0}), dv({1, 1})), InputError);
}

}
