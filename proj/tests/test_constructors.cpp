#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "hypdom/hypdom.hpp"

using namespace hypdom;

namespace {

ValidationReport validated(const FamilyDescriptor& f, Quantity q, const DomaticPartition& p) {
    Hypergraph h = realize(f);
    AdjacencyStructure a =
        (p.kind == GroundSet::Vertex) ? two_section(h) : line_graph(h);
    return validate_partition(a, p);
}

void check_construction(const FamilyDescriptor& f, Quantity q) {
    CAPTURE(family_name(f), quantity_name(q));
    FormulaResult fr = formula(f, q);
    REQUIRE(fr.kind != BoundKind::NotApplicable);
    DomaticPartition p = construct_partition(f, q);
    CHECK(p.classes.size() == fr.value);
    CHECK(p.total == (q == Quantity::Dt || q == Quantity::Edt));
    ValidationReport rep = validated(f, q, p);
    CHECK(rep.valid);
}

}  // namespace

TEST_CASE("singleton and pair constructions") {
    DomaticPartition p = construct_partition(Complete{6, 3}, Quantity::D);
    CHECK(p.classes.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(p.classes[i] == std::vector<std::size_t>{i});

    p = construct_partition(Complete{7, 3}, Quantity::Dt);
    REQUIRE(p.classes.size() == 3);
    CHECK(p.classes[2] == std::vector<std::size_t>{4, 5, 6});  // leftover joins the last pair

    p = construct_partition(Complete{5, 3}, Quantity::Ed);
    CHECK(p.classes.size() == 10);  // r > floor(n/2): singleton edge classes

    p = construct_partition(Complete{5, 3}, Quantity::Edt);
    CHECK(p.classes.size() == 5);
    check_construction(Complete{5, 3}, Quantity::Edt);
}

TEST_CASE("baranyai-backed edge construction for complete families") {
    DomaticPartition p = construct_partition(Complete{6, 3}, Quantity::Ed);
    REQUIRE(p.classes.size() == 10);
    Hypergraph h = generate_complete(6, 3);
    for (const auto& cls : p.classes) {
        REQUIRE(cls.size() == 2);
        std::vector<std::size_t> all;
        for (std::size_t e : cls)
            all.insert(all.end(), h.edges[e].begin(), h.edges[e].end());
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});  // complementary pairs
    }
    CHECK(validated(Complete{6, 3}, Quantity::Ed, p).valid);
}

TEST_CASE("complementary pair construction for |X|=|Y|=r") {
    DomaticPartition p = construct_partition(CompleteBipartite{3, 3, 3}, Quantity::Ed);
    REQUIRE(p.classes.size() == 9);
    Hypergraph h = generate_complete_bipartite(3, 3, 3);
    for (const auto& cls : p.classes) {
        REQUIRE(cls.size() == 2);
        std::set<std::size_t> verts;
        for (std::size_t e : cls) verts.insert(h.edges[e].begin(), h.edges[e].end());
        CHECK(verts.size() == 6);  // each class covers every vertex
    }
    CHECK(validated(CompleteBipartite{3, 3, 3}, Quantity::Ed, p).valid);
}

TEST_CASE("intersecting pairing avoids complements for |X|=|Y|=r") {
    for (std::size_t r : {2, 3, 4}) {
        FamilyDescriptor f = CompleteBipartite{r, r, r};
        DomaticPartition p = construct_partition(f, Quantity::Edt);
        Hypergraph h = realize(f);
        CHECK(p.classes.size() == h.m() / 2);
        for (const auto& cls : p.classes) {
            REQUIRE(cls.size() == 2);
            std::vector<std::size_t> common;
            std::set_intersection(h.edges[cls[0]].begin(), h.edges[cls[0]].end(),
                                  h.edges[cls[1]].begin(), h.edges[cls[1]].end(),
                                  std::back_inserter(common));
            CHECK_FALSE(common.empty());  // paired edges share a vertex
        }
        CHECK(validated(f, Quantity::Edt, p).valid);
    }
}

TEST_CASE("star factor classes for the 3-uniform even-parts family") {
    FamilyDescriptor f = CompleteBipartite{4, 4, 3};
    Hypergraph h = realize(f);
    REQUIRE(h.m() == 48);

    for (Quantity q : {Quantity::Ed, Quantity::Edt}) {
        DomaticPartition p = construct_partition(f, q);
        REQUIRE(p.classes.size() == 24);
        // Every class's union misses either <= 2 vertices or only same-side
        // vertices (the pair-domination characterization).
        for (const auto& cls : p.classes) {
            REQUIRE(cls.size() == 2);
            std::set<std::size_t> verts;
            for (std::size_t e : cls) verts.insert(h.edges[e].begin(), h.edges[e].end());
            std::size_t miss_x = 0, miss_y = 0;
            for (std::size_t v = 0; v < 8; ++v)
                if (!verts.count(v)) ++(v < 4 ? miss_x : miss_y);
            bool ok = (miss_x + miss_y <= 2) || (miss_x == 0) || (miss_y == 0);
            CHECK(ok);
        }
        CHECK(validated(f, q, p).valid);
    }
}

TEST_CASE("cyclic classes for the r = 2 lower-bound shapes") {
    check_construction(CompleteBipartite{4, 4, 2}, Quantity::Ed);
    check_construction(CompleteBipartite{6, 6, 2}, Quantity::Ed);
    check_construction(CompleteBipartite{4, 6, 2}, Quantity::Ed);
    check_construction(CompleteBipartite{2, 4, 2}, Quantity::Ed);
    check_construction(CompleteBipartite{2, 6, 2}, Quantity::Ed);
    check_construction(CompleteBipartite{6, 4, 2}, Quantity::Ed);  // larger side first
}

TEST_CASE("construct_partition matches formula across desk-scale families") {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t r = 2; r <= n; ++r)
            for (Quantity q : {Quantity::D, Quantity::Dt, Quantity::Ed, Quantity::Edt}) {
                FamilyDescriptor f = Complete{n, r};
                if (formula(f, q).kind == BoundKind::NotApplicable) continue;
                check_construction(f, q);
            }
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = a; a + b <= 8; ++b)
            for (std::size_t r = 2; r <= a + b; ++r)
                for (Quantity q : {Quantity::D, Quantity::Dt, Quantity::Ed, Quantity::Edt}) {
                    FamilyDescriptor f = CompleteBipartite{a, b, r};
                    if (formula(f, q).kind == BoundKind::NotApplicable) continue;
                    check_construction(f, q);
                }
}

TEST_CASE("construct_partition on the big witnesses") {
    check_construction(CompleteBipartite{6, 6, 3}, Quantity::Ed);   // 60 star classes
    check_construction(CompleteBipartite{6, 6, 3}, Quantity::Edt);  // Lemma 11 at k = 6
    check_construction(Complete{10, 5}, Quantity::Ed);              // 126 factors
    check_construction(Complete{9, 3}, Quantity::Ed);
}

TEST_CASE("construct_partition rejects uncovered families") {
    CHECK_THROWS_MATCHES(construct_partition(Complete{8, 3}, Quantity::Ed), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotApplicable;
                         }));
    CHECK_THROWS_AS(construct_partition(CompleteBipartite{3, 3, 2}, Quantity::D), Error);
}

TEST_CASE("exact formula families agree with the solver at desk scale") {
    for (FamilyDescriptor f : {FamilyDescriptor(Complete{6, 2}), FamilyDescriptor(Complete{6, 3}),
                               FamilyDescriptor(Complete{7, 4}),
                               FamilyDescriptor(CompleteBipartite{2, 2, 2}),
                               FamilyDescriptor(CompleteBipartite{3, 3, 3}),
                               FamilyDescriptor(CompleteBipartite{2, 3, 3})}) {
        Hypergraph h = realize(f);
        for (Quantity q : {Quantity::D, Quantity::Dt, Quantity::Ed, Quantity::Edt}) {
            FormulaResult fr = formula(f, q);
            if (fr.kind != BoundKind::Exact) continue;
            SolveResult res = q == Quantity::D    ? domatic_number(h)
                              : q == Quantity::Dt ? total_domatic_number(h)
                              : q == Quantity::Ed ? edge_domatic_number(h)
                                                  : total_edge_domatic_number(h);
            CAPTURE(family_name(f), quantity_name(q));
            CHECK(res.value == fr.value);
        }
    }
}
