#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hypdom/hypdom.hpp"

using namespace hypdom;

TEST_CASE("parse_hgf") {
    Hypergraph h = parse_hgf("p hg 3 2\ne 0 1\ne 1 2\n");
    CHECK(h.n == 3);
    CHECK(h.edges == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});

    CHECK_THROWS_MATCHES(parse_hgf("p hg 2 1\ne 0 2\n"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::IndexOutOfRange && e.position() == 2;
                         }));
}

TEST_CASE("parse_hgf error reporting") {
    CHECK_THROWS_MATCHES(parse_hgf(""), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::ParseError;
                         }));
    CHECK_THROWS_AS(parse_hgf("p graph 3 1\ne 0 1\n"), Error);
    CHECK_THROWS_AS(parse_hgf("p hg 3 2\ne 0 1\n"), Error);          // missing edge line
    CHECK_THROWS_AS(parse_hgf("p hg 3 1\ne 0 1\ne 1 2\n"), Error);   // trailing content
    CHECK_THROWS_AS(parse_hgf("p hg 3 1\ne 0 0\n"), Error);          // repeated vertex
    CHECK_THROWS_AS(parse_hgf("p hg 3 1\ne 0 x\n"), Error);          // not an index
    CHECK_THROWS_AS(parse_hgf("p hg 3 1\ne\n"), Error);              // empty edge
    CHECK_THROWS_MATCHES(parse_hgf("p hg 3 2\ne 0 1\ne 1 0\n"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::DuplicateEdge && e.position() == 3;
                         }));
}

TEST_CASE("comments and blank lines are ignored") {
    Hypergraph h = parse_hgf("# family note\n\np hg 3 1\n# interior comment\ne 2 0\n\n");
    CHECK(h.n == 3);
    CHECK(h.edges == std::vector<std::vector<std::size_t>>{{0, 2}});
}

TEST_CASE("write_hgf emits colex order for generated families") {
    std::string text = write_hgf(generate_complete(4, 2));
    CHECK(text ==
          "p hg 4 6\n"
          "e 0 1\n"
          "e 0 2\n"
          "e 1 2\n"
          "e 0 3\n"
          "e 1 3\n"
          "e 2 3\n");
}

TEST_CASE("round-trip identity on all generated families up to n = 12") {
    auto roundtrip = [](const Hypergraph& h) {
        Hypergraph back = parse_hgf(write_hgf(h, "annotation"));
        CHECK(back.n == h.n);
        CHECK(back.edges == h.edges);
        CHECK(back.uniform_r == h.uniform_r);
    };
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t r = 1; r <= n; ++r) roundtrip(generate_complete(n, r));
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t b = a; a + b <= 12; ++b)
            for (std::size_t r = 2; r <= a + b; ++r)
                roundtrip(generate_complete_bipartite(a, b, r));
}

TEST_CASE("partition files") {
    DomaticPartition p{GroundSet::Edge, true, {{0, 2}, {1, 3, 4}}};
    std::string text = write_partition(p);
    CHECK(text == "p part e 1 2\nc 0 2\nc 1 3 4\n");

    DomaticPartition back = parse_partition(text);
    CHECK(back.kind == GroundSet::Edge);
    CHECK(back.total);
    CHECK(back.classes == p.classes);

    CHECK_THROWS_AS(parse_partition("p part q 0 1\nc 0\n"), Error);
    CHECK_THROWS_AS(parse_partition("p part v 2 1\nc 0\n"), Error);
    CHECK_THROWS_AS(parse_partition("p part v 0 2\nc 0\n"), Error);  // missing class line

    // Empty classes parse; the validator rejects them downstream.
    DomaticPartition empty_cls = parse_partition("p part v 0 2\nc 0 1\nc\n");
    CHECK(empty_cls.classes.size() == 2);
    CHECK(empty_cls.classes[1].empty());
}

TEST_CASE("partition round-trip on solver and constructor output") {
    DomaticPartition p = construct_partition(Complete{6, 3}, Quantity::Ed);
    DomaticPartition back = parse_partition(write_partition(p));
    CHECK(back.classes == p.classes);
    CHECK(back.kind == p.kind);
    CHECK(back.total == p.total);

    SolveResult res = domatic_number(generate_complete(5, 2));
    back = parse_partition(write_partition(res.witness));
    CHECK(back.classes == res.witness.classes);
}
