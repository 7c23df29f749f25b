#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "tamcy/poset.hpp"

using namespace tamcy;

namespace {

// Five elements a < b,c < d < e with b, c incomparable: the running example
// for the representation engine.
FinitePoset diamond_chain() {
    return FinitePoset::from_covers({"a", "b", "c", "d", "e"},
                                    {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
}

} // namespace

TEST_CASE("construction and order queries") {
    const FinitePoset p = diamond_chain();
    CHECK(p.size() == 5);
    CHECK(p.leq(0, 4));
    CHECK(p.leq(1, 3));
    CHECK_FALSE(p.leq(1, 2));
    CHECK_FALSE(p.leq(3, 0));
    CHECK(p.leq(2, 2));
    CHECK(p.index_of("d") == 3);
    CHECK(p.index_of("zz") == -1);
    CHECK(p.minimum() == 0);
    CHECK(p.maximum() == 4);

    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(p.covers_above(0) == std::vector<int>{1, 2});
    CHECK(p.covers_below(3) == std::vector<int>{1, 2});
    CHECK(p.up_set(1) == std::vector<int>{1, 3, 4});
    CHECK(p.down_set(3) == std::vector<int>{0, 1, 2, 3});
    CHECK(p.down_set_size(3) == 4);
    CHECK(p.intervals().size() == 5 + 9); // reflexive plus strict comparable pairs

    const auto lin = p.linear_extension();
    for (std::size_t i = 0; i < lin.size(); ++i)
        for (std::size_t j = i + 1; j < lin.size(); ++j) CHECK_FALSE(p.leq(lin[j], lin[i]));
}

TEST_CASE("from_leq agrees with from_covers") {
    const FinitePoset p = diamond_chain();
    std::vector<std::pair<int, int>> leq;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b)) leq.push_back({a, b});
    const FinitePoset q = FinitePoset::from_leq({"a", "b", "c", "d", "e"}, leq);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == q.leq(a, b));
    CHECK(q.covers() == p.covers());
}

TEST_CASE("order axioms are enforced") {
    CHECK_THROWS_AS(FinitePoset::from_covers({"x", "y"}, {{0, 1}, {1, 0}}), validation_error);
    CHECK_THROWS_AS(FinitePoset::from_covers({"x"}, {{0, 1}}), validation_error);
}

TEST_CASE("zeta and mobius matrices invert each other") {
    const FinitePoset p = diamond_chain();
    const IntMatrix z = zeta_matrix(p);
    const IntMatrix m = mobius_matrix(p);
    CHECK((z * m).is_identity());
    CHECK((m * z).is_identity());
    // classic values on the diamond part: mu(a, d) counts the two chains
    CHECK(z.at(0, 3) == 1);
    CHECK(m.at(0, 3) == 1); // mu(a,d) = -1 -1 -1 ... = +1 for the diamond
    CHECK(m.at(0, 1) == -1);
    CHECK(m.at(0, 4) == 0);
}

TEST_CASE("coxeter matrix of the two-chain") {
    const FinitePoset two = FinitePoset::from_covers({"0", "1"}, {{0, 1}});
    const IntMatrix c = coxeter_matrix(two);
    CHECK(c.at(0, 0) == 0);
    CHECK(c.at(0, 1) == -1);
    CHECK(c.at(1, 0) == 1);
    CHECK(c.at(1, 1) == -1);
    const IntMatrix c2 = c * c;
    CHECK(c2.at(0, 0) == -1);
    CHECK(c2.at(0, 1) == 1);
    CHECK(c2.at(1, 0) == -1);
    CHECK(c2.at(1, 1) == 0);
    CHECK((c2 * c).is_identity());
    CHECK(matrix_power_is_identity(c, 3));
    CHECK_FALSE(matrix_power_is_identity(c, 2));
}

TEST_CASE("coxeter periodicity on the five-element example") {
    const FinitePoset p = diamond_chain();
    CHECK(matrix_power_is_identity(coxeter_matrix(p), 8));
    CHECK_FALSE(matrix_power_is_identity(coxeter_matrix(p), 7));
}
