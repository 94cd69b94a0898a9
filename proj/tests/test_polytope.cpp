#include "qtcob/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qtcob;

TEST_CASE("simplices") {
    const Polytope segment = simplex(1);
    CHECK(segment.dim() == 1);
    CHECK(segment.facet_count() == 2);
    CHECK(segment.vertex_count() == 2);

    const Polytope triangle = simplex(2);
    CHECK(triangle.facet_count() == 3);
    CHECK(triangle.vertex_count() == 3);

    const Polytope tetra = simplex(3);
    CHECK(tetra.facet_count() == 4);
    CHECK(tetra.vertex_count() == 4);
    CHECK(edges(tetra).size() == 6);

    CHECK_THROWS_AS(simplex(0), std::invalid_argument);
    CHECK(is_simplex(tetra));
}

TEST_CASE("prisms") {
    const Polytope square = prism(simplex(1));
    CHECK(square.dim() == 2);
    CHECK(square.facet_count() == 4);
    CHECK(square.vertex_count() == 4);

    const Polytope tri_prism = prism(simplex(2));
    CHECK(tri_prism.facet_count() == 5);
    CHECK(tri_prism.vertex_count() == 6);

    const Polytope cube = prism(square);
    CHECK(cube.facet_count() == 6);
    CHECK(cube.vertex_count() == 8);
    CHECK_FALSE(is_simplex(cube));

    // prism counts in general
    const Polytope pentagon = Polytope::from_names(
        2, {"a", "b", "c", "d", "e"},
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
    const Polytope p = prism(pentagon);
    CHECK(p.vertex_count() == 2 * pentagon.vertex_count());
    CHECK(p.facet_count() == pentagon.facet_count() + 2);
}

TEST_CASE("vertex truncation") {
    SUBCASE("square corner -> pentagon") {
        const Polytope square = prism(simplex(1));
        const Truncation t = truncate_vertex(square, 0);
        CHECK(t.polytope.facet_count() == 5);
        CHECK(t.polytope.vertex_count() == 5);
        // the new facet is a 1-simplex: exactly dim = 2 vertices lie on it
        const int h = t.polytope.facet_index(t.new_facet);
        int support = 0;
        for (int v = 0; v < t.polytope.vertex_count(); ++v) {
            const FacetSet& vs = t.polytope.vertex(v);
            if (std::binary_search(vs.begin(), vs.end(), h)) ++support;
        }
        CHECK(support == 2);
    }
    SUBCASE("triangle truncated at all three corners -> hexagon") {
        Polytope p = simplex(2);
        const auto original = p.vertices();
        for (const FacetSet& v : original) p = truncate_vertex(p, v).polytope;
        CHECK(p.dim() == 2);
        CHECK(p.facet_count() == 6);
        CHECK(p.vertex_count() == 6);
    }
    SUBCASE("cube corner -> 7 facets, triangular cut") {
        const Polytope cube = prism(prism(simplex(1)));
        const Truncation t = truncate_vertex(cube, 0);
        CHECK(t.polytope.facet_count() == 7);
        CHECK(t.polytope.vertex_count() == 8 - 1 + 3);
        const int h = t.polytope.facet_index(t.new_facet);
        int support = 0;
        for (int v = 0; v < t.polytope.vertex_count(); ++v) {
            const FacetSet& vs = t.polytope.vertex(v);
            if (std::binary_search(vs.begin(), vs.end(), h)) ++support;
        }
        CHECK(support == 3);  // the cut is a triangle
    }
    SUBCASE("count bookkeeping") {
        const Polytope cube = prism(prism(simplex(1)));
        const Truncation t = truncate_vertex(cube, 2);
        CHECK(t.polytope.vertex_count() == cube.vertex_count() - 1 + cube.dim());
        CHECK(t.polytope.facet_count() == cube.facet_count() + 1);
    }
    SUBCASE("not a vertex") {
        CHECK_THROWS_AS(truncate_vertex(simplex(2), FacetSet{0}), std::invalid_argument);
    }
}

TEST_CASE("face enumeration") {
    const Polytope triangle = simplex(2);
    const auto tri_edges = edges(triangle);
    CHECK(tri_edges.size() == 3);
    for (const Face& e : tri_edges) CHECK(e.facet_set.size() == 1);

    const Polytope cube = prism(prism(simplex(1)));
    CHECK(faces_of_codim(cube, 2).size() == 12);
    CHECK(faces_of_codim(cube, 0).size() == 1);
    CHECK(faces_of_codim(cube, 0).front().facet_set.empty());
    CHECK(faces_of_codim(cube, 3).size() == 8);
    CHECK_THROWS_AS(faces_of_codim(cube, 4), std::invalid_argument);
    CHECK_THROWS_AS(faces_of_codim(cube, -1), std::invalid_argument);

    // every face's facet set is a subset of some vertex set
    for (int l = 0; l <= cube.dim(); ++l) {
        for (const Face& f : faces_of_codim(cube, l)) {
            bool supported = false;
            for (const FacetSet& v : cube.vertices()) {
                supported = std::includes(v.begin(), v.end(), f.facet_set.begin(),
                                          f.facet_set.end());
                if (supported) break;
            }
            CHECK(supported);
        }
    }
}

TEST_CASE("marking validation") {
    const Polytope cube = prism(prism(simplex(1)));
    const int bottom2 = cube.facet_index("BOTTOM_2");
    const int top2 = cube.facet_index("TOP_2");

    SUBCASE("opposite facets pass") {
        const ExceptionalMarking m(cube, {bottom2, top2});
        CHECK(validate_marking(cube, m).ok);
    }
    SUBCASE("single facet leaves vertices uncovered") {
        const ExceptionalMarking m(cube, {top2});
        const ValidationReport r = validate_marking(cube, m);
        CHECK_FALSE(r.ok);
        CHECK(r.issues.size() == 4);
        CHECK(r.issues.front().code == "marking/uncovered");
    }
    SUBCASE("adjacent facets overlap") {
        const ExceptionalMarking m(cube, {cube.facet_index("F1"), top2});
        const ValidationReport r = validate_marking(cube, m);
        CHECK_FALSE(r.ok);
        bool overlap = false;
        for (const Issue& issue : r.issues) overlap |= issue.code == "marking/overlap";
        CHECK(overlap);
    }
    SUBCASE("unknown facet names are rejected") {
        CHECK_THROWS_AS(ExceptionalMarking::from_names(cube, {"nope"}), std::invalid_argument);
    }
}

TEST_CASE("bad incidence data is rejected with witnesses") {
    // wrong vertex size (not simple)
    CHECK_THROWS_AS(Polytope(2, {"a", "b", "c"}, {{0, 1, 2}, {0, 1}, {1, 2}}), ModelError);
    // duplicate vertex
    CHECK_THROWS_AS(Polytope(1, {"a", "b"}, {{0}, {0}}), ModelError);
    // ridge on three vertices (edge with three endpoints)
    CHECK_THROWS_AS(
        Polytope(2, {"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
        ModelError);
    // facet below support
    CHECK_THROWS_AS(Polytope(2, {"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 0}}), ModelError);
    try {
        Polytope(2, {"a", "b", "c"}, {{0, 1, 2}, {0, 1}, {1, 2}});
        CHECK(false);
    } catch (const ModelError& e) {
        CHECK_FALSE(e.report().ok);
        CHECK_FALSE(e.report().issues.empty());
        CHECK(e.report().issues.front().code == "polytope/vertex-size");
    }
}

TEST_CASE("disconnected dual graphs are rejected") {
    // two disjoint triangles pretending to be one polygon
    try {
        Polytope(2, {"a", "b", "c", "d", "e", "f"},
                 {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        CHECK(false);
    } catch (const ModelError& e) {
        CHECK(e.report().issues.front().code == "polytope/disconnected");
    }
}
