#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pam/subgraph.hpp"

using namespace pam;

namespace {
const EdgeList kTriangle{{2, 1}, {3, 1}, {3, 2}};
}

TEST_CASE("attainability") {
    CHECK(is_attainable(OrderedSubgraph(3, kTriangle), 2));
    CHECK_FALSE(is_attainable(OrderedSubgraph(2, {{1, 2}}), 5)); // oldest cannot send
    CHECK_FALSE(is_attainable(OrderedSubgraph(3, {{3, 1}, {3, 2}}), 1)); // out-degree 2 > m
    CHECK(is_attainable(OrderedSubgraph(3, {{3, 1}, {3, 2}}), 2));
}

TEST_CASE("attainable orderings") {
    // directed triangle a->b, c->b, a->c: exactly one ordering at m >= 2
    UnorderedDigraph tri(3, {{1, 2}, {3, 2}, {1, 3}});
    CHECK(attainable_orderings(tri, 2).size() == 1);
    CHECK(attainable_orderings(tri, 1).empty()); // needs out-degree 2

    // 2-path a->b, b->c: exactly one ordering
    UnorderedDigraph path(3, {{1, 2}, {2, 3}});
    auto ords = attainable_orderings(path, 1);
    REQUIRE(ords.size() == 1);
    // c oldest, b middle, a youngest
    EdgeList expect{{3, 2}, {2, 1}};
    CHECK(ords[0].edges == expect);

    CHECK_THROWS_AS(UnorderedDigraph(4, {{1, 2}, {3, 4}}), std::invalid_argument); // disconnected
    CHECK_THROWS_AS(UnorderedDigraph(2, {{1, 1}}), std::invalid_argument);         // self-loop
}

TEST_CASE("every returned ordering is attainable, every skipped one is not") {
    UnorderedDigraph g(4, {{1, 2}, {1, 3}, {4, 2}, {3, 2}});
    for (int m : {1, 2, 3}) {
        auto ords = attainable_orderings(g, m);
        for (auto& h : ords) CHECK(is_attainable(h, m));
        // count must match a direct permutation filter
        std::vector<int> perm{1, 2, 3, 4};
        std::size_t expect = 0;
        std::sort(perm.begin(), perm.end());
        do {
            EdgeList rel;
            for (auto [s, t] : g.edges) rel.emplace_back(perm[s - 1], perm[t - 1]);
            bool ok = true;
            for (auto [s, t] : rel) ok = ok && s > t;
            if (!ok) continue;
            if (is_attainable(OrderedSubgraph(4, rel), m)) ++expect;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(ords.size() == expect);
    }
}

TEST_CASE("canonical form identifies isomorphs") {
    EdgeList a{{1, 2}, {3, 2}};
    EdgeList b{{3, 1}, {2, 1}}; // same shape, relabeled
    EdgeList c{{1, 2}, {2, 3}}; // different shape
    CHECK(canonical_form(3, a) == canonical_form(3, b));
    CHECK(canonical_form(3, a) != canonical_form(3, c));
    // multiplicity matters
    EdgeList d{{2, 1}, {2, 1}};
    EdgeList e{{2, 1}};
    CHECK(canonical_form(2, d) != canonical_form(2, e));
}

TEST_CASE("merge_copies: single edge gives the doubled edge") {
    auto shapes = merge_copies(OrderedSubgraph(2, {{2, 1}}));
    REQUIRE(shapes.size() == 1);
    CHECK(shapes[0].k == 2);
    EdgeList expect{{2, 1}, {2, 1}};
    CHECK(canonical_form(2, shapes[0].edges) == canonical_form(2, expect));
}

TEST_CASE("merge_copies: 2-path gives 9 shapes") {
    // hand enumeration: two age-ordered 2-chains overlapping on at least one
    // edge-carrying vertex pair give 3 three-vertex and 6 four-vertex unions
    auto shapes = merge_copies(OrderedSubgraph(3, {{3, 2}, {2, 1}}));
    CHECK(shapes.size() == 9);
    int k3 = 0, k4 = 0;
    for (auto& s : shapes) (s.k == 3 ? k3 : k4)++;
    CHECK(k3 == 3);
    CHECK(k4 == 6);
}

TEST_CASE("merge_copies invariants on the triangle") {
    OrderedSubgraph tri(3, kTriangle);
    auto shapes = merge_copies(tri);
    std::set<EdgeList> canon;
    for (auto& s : shapes) {
        // strictly more labeled edges than H itself
        CHECK(s.edges.size() > kTriangle.size());
        CHECK(s.edges.size() <= 2 * kTriangle.size());
        CHECK(s.k >= 3);
        CHECK(s.k <= 4); // two triangles sharing >= 1 vertex pair
        CHECK(canon.insert(canonical_form(s.k, s.edges)).second); // iso-distinct
    }
    // the classic one-edge-share union: two triangles glued on an edge
    EdgeList bowtie{{1, 2}, {1, 4}, {2, 4}, {1, 3}, {3, 4}};
    bool found = false;
    for (auto& s : shapes)
        found = found || (s.k == 4 && canonical_form(4, s.edges) == canonical_form(4, bowtie));
    CHECK(found);
}

TEST_CASE("edge spec parsing") {
    int k = 0;
    auto e = parse_edge_spec("2>1,3>1,3>2", k);
    CHECK(k == 3);
    CHECK(e == kTriangle);
    auto j = parse_edge_spec(R"({"k": 3, "edges": [[2,1],[3,1],[3,2]]})", k);
    CHECK(k == 3);
    CHECK(j == kTriangle);
    CHECK(format_edge_spec(e) == "2>1,3>1,3>2");
    CHECK_THROWS(parse_edge_spec("2-1", k));
}
