#include <doctest.h>

#include "qi/errors.hpp"
#include "qi/monoid.hpp"
#include "support.hpp"

using namespace qi;
using qi::testing::dv;

TEST_SUITE("comp-monoid") {

TEST_CASE("word parsing") {
    const Quiver k2 = Quiver::kronecker(2);
    CHECK(parse_word(k2, "iij") == Word{0, 0, 1});
    CHECK(parse_word(k2, "i, i j") == Word{0, 0, 1});
    CHECK(format_word(k2, Word{1, 0}) == "ji");
    CHECK(word_weight(k2, parse_word(k2, "iij")) == dv({2, 1}));
    CHECK_THROWS_AS(parse_word(k2, "ik"), InputError);
    const Quiver long_names({"v1", "v2"}, {{"v1", "v2"}});
    CHECK(parse_word(long_names, "v1 v2 v1") == Word{0, 1, 0});
    CHECK(format_word(long_names, Word{0, 1}) == "v1 v2");
}

TEST_CASE("degeneration order") {
    const Quiver a2 = Quiver::linear(2);
    const Word ij = parse_word(a2, "12"), ji = parse_word(a2, "21");
    CHECK(word_leq(a2, ij, ji));
    CHECK_FALSE(word_leq(a2, ji, ij));
    CHECK(word_leq(a2, ij, ij));
    CHECK_FALSE(word_leq(a2, ij, parse_word(a2, "11")));
    CHECK(word_leq(a2, Word{}, Word{}));
    CHECK(word_leq(a2, parse_word(a2, "1122"), parse_word(a2, "2211")));
    CHECK_THROWS_AS(word_leq(a2, parse_word(a2, "11112222"), parse_word(a2, "22221111"), 3), BudgetExceeded);
}

TEST_CASE("relations") {
    const Quiver a2 = Quiver::linear(2);
    auto rel = monoid_relations(a2);
    REQUIRE(rel.size() == 2);
    CHECK(rel[0] == std::pair<Word, Word>{parse_word(a2, "112"), parse_word(a2, "121")});
    CHECK(rel[1] == std::pair<Word, Word>{parse_word(a2, "122"), parse_word(a2, "212")});
    // No relations between vertices joined in both directions are possible on an
    // acyclic quiver, but unconnected vertices commute.
    const Quiver d2 = Quiver::discrete(2);
    CHECK(monoid_equal(d2, Word{0, 1}, Word{1, 0}).outcome == MonoidOutcome::Equal);
}

TEST_CASE("monoid equality") {
    const Quiver a2 = Quiver::linear(2);
    CHECK(monoid_equal(a2, parse_word(a2, "112"), parse_word(a2, "121")).outcome == MonoidOutcome::Equal);
    CHECK(monoid_equal(a2, parse_word(a2, "12"), parse_word(a2, "21")).outcome == MonoidOutcome::NotEqual);
    CHECK(monoid_equal(a2, Word{}, Word{}).outcome == MonoidOutcome::Equal);
    CHECK(monoid_equal(a2, parse_word(a2, "1"), parse_word(a2, "2")).outcome == MonoidOutcome::NotEqual);
    const Quiver k2 = Quiver::kronecker(2);
    CHECK(monoid_equal(k2, parse_word(k2, "iiij"), parse_word(k2, "iiji")).outcome == MonoidOutcome::Equal);
    CHECK(monoid_equal(k2, parse_word(k2, "ijjj"), parse_word(k2, "jijj")).outcome == MonoidOutcome::Equal);
    auto budgeted = monoid_equal(a2, parse_word(a2, "1212121212"), parse_word(a2, "2222211111"), 2);
    CHECK(budgeted.outcome == MonoidOutcome::Undecided);
    CHECK(to_string(MonoidOutcome::Undecided) == "undecided-at-budget");
}

TEST_CASE("canonical words") {
    const Quiver a2 = Quiver::linear(2);
    CHECK(canonical_word(a2, parse_word(a2, "121")) == parse_word(a2, "112"));
    auto cls = congruence_class(a2, parse_word(a2, "1212"));
    for (const auto& w : cls) CHECK(canonical_word(a2, w) == canonical_word(a2, parse_word(a2, "1212")));
}

TEST_CASE("schur normal form") {
    const Quiver a2 = Quiver::linear(2);
    GenericCalculus g(a2);
    CHECK(schur_normal_form(g, {dv({1, 1})}) == std::vector<DimVector>{dv({1, 1})});
    CHECK(schur_normal_form(g, {dv({0, 1}), dv({1, 0})}) == std::vector<DimVector>{dv({0, 1}), dv({1, 0})});
    CHECK(schur_normal_form(g, {dv({1, 0}), dv({0, 1})}) == std::vector<DimVector>{dv({1, 1})});
    CHECK(schur_normal_form(g, {dv({0, 0}), dv({1, 0})}) == std::vector<DimVector>{dv({1, 0})});

    const Quiver k3 = Quiver::kronecker(3);
    GenericCalculus g3(k3);
    for (const auto& a : subvectors(dv({2, 2})))
        for (const auto& b : subvectors(dv({2, 2}))) {
            if (a.is_zero() || b.is_zero()) continue;
            auto nf = schur_normal_form(g3, {a, b});
            CHECK(is_schur_normal_form(g3, nf));
            DimVector sum = DimVector::zero(2);
            for (const auto& p : nf) sum = sum + p;
            CHECK(sum == a + b);
        }
}

}
