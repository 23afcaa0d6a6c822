#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "hypdom/hypdom.hpp"

using namespace hypdom;

namespace {

// Full structural check of the Factorization invariants.
void check_factorization(const Factorization& f) {
    REQUIRE(f.r >= 1);
    REQUIRE(f.n % f.r == 0);
    CHECK(f.factors.size() == binomial(f.n - 1, f.r - 1));

    std::set<std::vector<std::size_t>> all_edges;
    for (const auto& factor : f.factors) {
        REQUIRE(factor.size() == f.n / f.r);
        std::vector<bool> covered(f.n, false);
        for (const auto& e : factor) {
            REQUIRE(e.size() == f.r);
            for (std::size_t v : e) {
                REQUIRE(v < f.n);
                REQUIRE_FALSE(covered[v]);  // disjoint within the factor
                covered[v] = true;
            }
            REQUIRE(all_edges.insert(e).second);  // factors are edge-disjoint
        }
        for (bool c : covered) REQUIRE(c);  // factor covers every vertex
    }
    CHECK(all_edges.size() == binomial(f.n, f.r));
}

}  // namespace

TEST_CASE("baranyai invariants on the acceptance shapes") {
    for (auto [n, r] : std::vector<std::pair<std::size_t, std::size_t>>{
             {4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {10, 5}}) {
        CAPTURE(n, r);
        check_factorization(baranyai(n, r));
    }
}

TEST_CASE("baranyai degenerate shapes") {
    Factorization whole = baranyai(5, 5);
    REQUIRE(whole.factors.size() == 1);
    CHECK(whole.factors[0] ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4}});

    Factorization singles = baranyai(3, 1);
    REQUIRE(singles.factors.size() == 1);
    CHECK(singles.factors[0].size() == 3);

    check_factorization(baranyai(12, 6));
    check_factorization(baranyai(10, 2));
}

TEST_CASE("baranyai(4,2): a factor containing {0,1} also contains {2,3}") {
    Factorization f = baranyai(4, 2);
    REQUIRE(f.factors.size() == 3);
    for (const auto& factor : f.factors) {
        bool has01 = false, has23 = false;
        for (const auto& e : factor) {
            if (e == std::vector<std::size_t>{0, 1}) has01 = true;
            if (e == std::vector<std::size_t>{2, 3}) has23 = true;
        }
        CHECK(has01 == has23);
    }
}

TEST_CASE("baranyai(6,3): every factor is a complementary pair") {
    Factorization f = baranyai(6, 3);
    REQUIRE(f.factors.size() == 10);
    for (const auto& factor : f.factors) {
        REQUIRE(factor.size() == 2);
        std::vector<std::size_t> all;
        for (const auto& e : factor) all.insert(all.end(), e.begin(), e.end());
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    }
}

TEST_CASE("baranyai rejects bad parameters") {
    CHECK_THROWS_MATCHES(baranyai(6, 4), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::InvalidParams;
                         }));
    CHECK_THROWS_AS(baranyai(5, 0), Error);
    CHECK_THROWS_AS(baranyai(0, 0), Error);
}

TEST_CASE("baranyai output is deterministic") {
    Factorization a = baranyai(8, 2);
    Factorization b = baranyai(8, 2);
    CHECK(a.factors == b.factors);
}
