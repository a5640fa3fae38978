#include "weylhodge/errors.hpp"
#include "weylhodge/partitions/group_algebra.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace weylhodge;

TEST_CASE("partition basics") {
    const Partition p{3, 1, 0};
    CHECK(p.parts() == std::vector<int>{3, 1});
    CHECK(p.size() == 4);
    CHECK(p[5] == 0);
    CHECK(p.conjugate() == Partition{2, 1, 1});
    CHECK(p.to_string() == "(3,1)");
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidArgument);
    const auto cd = column_data(Partition{2, 2, 1});
    CHECK(cd.first == 3);
    CHECK(cd.second == 2);
}

TEST_CASE("partition counts and order") {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15};
    for (int d = 1; d < 8; ++d) CHECK(enumerate_partitions(d).size() == counts[d]);
    const auto four = enumerate_partitions(4);
    CHECK(four.front() == Partition{4});
    CHECK(four.back() == Partition{1, 1, 1, 1});
    CHECK(std::is_sorted(four.rbegin(), four.rend()));
}

TEST_CASE("conjugation is an involution") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& p : enumerate_partitions(d)) REQUIRE(p.conjugate().conjugate() == p);
}

TEST_CASE("hook length formula against enumeration") {
    for (int d = 1; d <= 7; ++d) {
        std::uint64_t sum_sq = 0;
        for (const auto& p : enumerate_partitions(d)) {
            const auto tableaux = enumerate_standard_tableaux(p);
            REQUIRE(tableaux.size() == count_standard_tableaux(p));
            for (const auto& t : tableaux) REQUIRE(t.is_standard());
            sum_sq += tableaux.size() * tableaux.size();
        }
        std::uint64_t fact = 1;
        for (int i = 2; i <= d; ++i) fact *= i;
        REQUIRE(sum_sq == fact);
    }
}

TEST_CASE("tableau validation") {
    CHECK_THROWS_AS(FilledTableau({{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(FilledTableau({{1}, {2, 3}}), InvalidArgument);
    const FilledTableau t({{1, 3}, {2}});
    CHECK(t.is_standard());
    CHECK(t.columns() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK_FALSE(FilledTableau({{2, 1}}).is_standard());
    CHECK(FilledTableau::row_major(Partition{2, 1}) == FilledTableau({{1, 2}, {3}}));
}

TEST_CASE("permutation algebra") {
    const Permutation s({2, 3, 1});
    const Permutation t({2, 1, 3});
    CHECK((s * t)(1) == s(t(1)));
    CHECK((s * t).images() == std::vector<int>{3, 2, 1});
    CHECK(s * s.inverse() == Permutation::identity(3));
    CHECK(s.sign() == 1);
    CHECK(t.sign() == -1);
    CHECK_THROWS_AS(Permutation({1, 1}), InvalidArgument);
}

TEST_CASE("Young projectors are idempotent and mutually annihilating") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& shape : enumerate_partitions(d)) {
            const auto tableaux = enumerate_standard_tableaux(shape);
            for (const auto& t : tableaux) {
                const auto p = young_projector(t);
                REQUIRE(p * p == p);
            }
        }
    // Projectors for different shapes multiply to zero.
    const auto a = young_projector(FilledTableau::row_major(Partition{2, 1}));
    const auto b = young_projector(FilledTableau::row_major(Partition{3}));
    CHECK((a * b).terms().empty());
    CHECK((b * a).terms().empty());
}

TEST_CASE("symmetrizer shapes") {
    const auto t = FilledTableau::row_major(Partition{2, 1});
    CHECK(row_symmetrizer(t).terms().size() == 2);
    CHECK(column_antisymmetrizer(t).terms().size() == 2);
    CHECK(column_antisymmetrizer(t).coefficient(Permutation({3, 2, 1})) == -1);
    CHECK_THROWS_AS(young_projector(FilledTableau({{2, 1}})), InvalidArgument);
}
