#include "qtcob/charmodel.hpp"

#include <doctest.h>

#include "support/random_models.hpp"

#include <algorithm>
#include <random>

using namespace qtcob;
using qtcob::testing::polygon;
using qtcob::testing::standard_projective;

namespace {

IsotropyModel triangular_prism_model() {
    Polytope q = prism(simplex(2));
    ExceptionalMarking marking =
        ExceptionalMarking::from_names(q, {"TOP", "BOTTOM"});
    std::vector<std::optional<IntVec>> labels(5);
    labels[0] = int_vec({1, 0});
    labels[1] = int_vec({0, 1});
    labels[2] = int_vec({1, 1});
    return IsotropyModel(std::move(q), std::move(marking), std::move(labels));
}

IsotropyModel hexagon_model(const IntVec& a, const IntVec& b, const IntVec& c) {
    Polytope p = simplex(2);
    std::vector<std::string> cuts;
    const auto originals = p.vertices();
    for (const FacetSet& v : originals) {
        Truncation t = truncate_vertex(p, v);
        p = std::move(t.polytope);
        cuts.push_back(t.new_facet);
    }
    ExceptionalMarking marking = ExceptionalMarking::from_names(p, cuts);
    std::vector<std::optional<IntVec>> labels(static_cast<std::size_t>(p.facet_count()));
    labels[0] = a;
    labels[1] = b;
    labels[2] = c;
    return IsotropyModel(std::move(p), std::move(marking), std::move(labels));
}

}  // namespace

TEST_CASE("characteristic validation and smoothness") {
    SUBCASE("standard projective plane model is valid and smooth") {
        const CharacteristicModel m = standard_projective(2);
        CHECK(validate_characteristic(m).ok);
        CHECK(is_smooth(m));
        for (int v = 0; v < 3; ++v) CHECK(abs(vertex_determinant(m, v)) == 1);
    }
    SUBCASE("orbifold example: valid, not smooth, vertex orders {1,2,3}") {
        CharacteristicModel m(simplex(2),
                              {int_vec({1, 0}), int_vec({0, 1}), int_vec({-2, -3})});
        CHECK(validate_characteristic(m).ok);
        CHECK_FALSE(is_smooth(m));
        std::vector<Int> orders = vertex_orders(m);
        std::sort(orders.begin(), orders.end());
        CHECK(orders == std::vector<Int>{1, 2, 3});
    }
    SUBCASE("opposite-facet square model is valid and smooth") {
        Polytope square = prism(simplex(1));  // facets F1, F2, BOTTOM, TOP
        CharacteristicModel m(std::move(square), {int_vec({1, 0}), int_vec({1, 0}),
                                                  int_vec({0, 1}), int_vec({0, 1})});
        CHECK(validate_characteristic(m).ok);
        CHECK(is_smooth(m));
    }
    SUBCASE("dependent labels fail with the vertex as witness") {
        CharacteristicModel m(simplex(2),
                              {int_vec({1, 0}), int_vec({2, 0}), int_vec({0, 1})});
        const ValidationReport r = validate_characteristic(m);
        CHECK_FALSE(r.ok);
        REQUIRE(r.issues.size() == 1);
        CHECK(r.issues.front().facets == std::vector<std::string>{"F1", "F2"});
    }
    SUBCASE("shape errors throw") {
        CHECK_THROWS_AS(CharacteristicModel(simplex(2), {int_vec({1, 0}), int_vec({0, 1})}),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            CharacteristicModel(simplex(2), {int_vec({1}), int_vec({0, 1}), int_vec({1, 1})}),
            std::invalid_argument);
    }
}

TEST_CASE("isotropy validation") {
    SUBCASE("triangular prism with TOP/BOTTOM marked") {
        const IsotropyModel m = triangular_prism_model();
        CHECK(validate_isotropy(m).ok);
    }
    SUBCASE("hexagon with rank-1 labels") {
        const IsotropyModel m = hexagon_model(int_vec({1}), int_vec({1}), int_vec({2}));
        CHECK(validate_isotropy(m).ok);
    }
    SUBCASE("zero label is dependent as a singleton") {
        const IsotropyModel m = hexagon_model(int_vec({1}), int_vec({0}), int_vec({2}));
        const ValidationReport r = validate_isotropy(m);
        CHECK_FALSE(r.ok);
        CHECK(r.issues.front().code == "labels/dependent");
    }
    SUBCASE("proportional labels at a shared face fail with witness") {
        Polytope q = prism(simplex(2));
        ExceptionalMarking marking = ExceptionalMarking::from_names(q, {"TOP", "BOTTOM"});
        std::vector<std::optional<IntVec>> labels(5);
        labels[0] = int_vec({1, 1});
        labels[1] = int_vec({2, 2});
        labels[2] = int_vec({0, 1});
        const IsotropyModel m(std::move(q), std::move(marking), std::move(labels));
        const ValidationReport r = validate_isotropy(m);
        CHECK_FALSE(r.ok);
        bool witnessed = false;
        for (const Issue& issue : r.issues) {
            witnessed |= issue.facets == std::vector<std::string>{"F1", "F2"};
        }
        CHECK(witnessed);
    }
    SUBCASE("wrong label rank throws at construction") {
        Polytope q = prism(simplex(2));
        ExceptionalMarking marking = ExceptionalMarking::from_names(q, {"TOP", "BOTTOM"});
        std::vector<std::optional<IntVec>> labels(5);
        labels[0] = int_vec({1});
        labels[1] = int_vec({0});
        labels[2] = int_vec({2});
        CHECK_THROWS_AS(IsotropyModel(std::move(q), std::move(marking), std::move(labels)),
                        std::invalid_argument);
    }
}

TEST_CASE("characteristic extension") {
    const IsotropyModel m = triangular_prism_model();
    const CharacteristicModel eta = extend_to_characteristic(m);
    CHECK(eta.polytope().same_as(m.polytope()));
    CHECK(vec_equal(eta.label(m.polytope().facet_index("TOP")), int_vec({0, 0, 1})));
    CHECK(vec_equal(eta.label(m.polytope().facet_index("BOTTOM")), int_vec({0, 0, 1})));
    CHECK(vec_equal(eta.label(0), int_vec({1, 0, 0})));
    CHECK(validate_characteristic(eta).ok);

    SUBCASE("vertex determinants match the isotropy determinants up to sign") {
        for (int v = 0; v < m.polytope().vertex_count(); ++v) {
            std::vector<IntVec> side_labels;
            for (int f : m.polytope().vertex(v)) {
                if (!m.is_exceptional(f)) side_labels.push_back(m.label(f));
            }
            const Int inner = det(columns(side_labels));
            CHECK(abs(vertex_determinant(eta, v)) == abs(inner));
        }
    }

    SUBCASE("validity is preserved on random valid isotropy inputs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 30; ++trial) {
            Polytope base = qtcob::testing::random_polygon(rng, 10);
            Polytope q = prism(base);
            ExceptionalMarking marking = ExceptionalMarking::from_names(q, {"TOP", "BOTTOM"});
            // draw side labels until the isotropy model validates
            for (int attempt = 0; attempt < 200; ++attempt) {
                std::vector<std::optional<IntVec>> labels(
                    static_cast<std::size_t>(q.facet_count()));
                for (int f = 0; f < base.facet_count(); ++f) {
                    IntVec l(2);
                    l(0) = static_cast<long long>(rng() % 7) - 3;
                    l(1) = static_cast<long long>(rng() % 7) - 3;
                    if (l(0) == 0 && l(1) == 0) l(0) = 1;
                    labels[static_cast<std::size_t>(f)] = std::move(l);
                }
                IsotropyModel candidate(q, marking, std::move(labels));
                if (!validate_isotropy(candidate).ok) continue;
                CHECK(validate_characteristic(extend_to_characteristic(candidate)).ok);
                break;
            }
        }
    }
}

TEST_CASE("restriction to exceptional facets") {
    const IsotropyModel m = triangular_prism_model();
    const int top = m.polytope().facet_index("TOP");
    const CharacteristicModel r = restrict_to_exceptional(m, top);
    CHECK(r.polytope().dim() == 2);
    CHECK(r.polytope().facet_count() == 3);
    CHECK(vec_equal(r.label(0), int_vec({1, 0})));
    CHECK(vec_equal(r.label(1), int_vec({0, 1})));
    CHECK(vec_equal(r.label(2), int_vec({1, 1})));
    CHECK(validate_characteristic(r).ok);

    CHECK_THROWS_AS(restrict_to_exceptional(m, 0), std::invalid_argument);

    SUBCASE("hexagon restrictions trace the construction") {
        const IsotropyModel hex = hexagon_model(int_vec({1}), int_vec({1}), int_vec({2}));
        for (int e : hex.marking().facets()) {
            const CharacteristicModel piece = restrict_to_exceptional(hex, e);
            CHECK(is_simplex(piece.polytope()));
            CHECK(validate_characteristic(piece).ok);
        }
    }
}

TEST_CASE("translation equivalence") {
    const CharacteristicModel cp1(simplex(1), {int_vec({1}), int_vec({-1})});
    const CharacteristicModel cp1_swapped(simplex(1), {int_vec({-1}), int_vec({1})});

    SUBCASE("negation in rank 1") {
        const auto u = delta_translation(cp1, cp1_swapped, 1);
        REQUIRE(u.has_value());
        CHECK((*u)(0, 0) == -1);
    }
    SUBCASE("self-equivalence is the identity") {
        const auto u = delta_translation(cp1, cp1, 1);
        REQUIRE(u.has_value());
        CHECK((*u)(0, 0) == 1);
    }
    SUBCASE("swap matrix in rank 2") {
        const CharacteristicModel a = standard_projective(2);
        const CharacteristicModel b(simplex(2),
                                    {int_vec({0, 1}), int_vec({1, 0}), int_vec({-1, -1})});
        const auto u = delta_translation(a, b, 1);
        REQUIRE(u.has_value());
        CHECK((*u)(0, 0) == 0);
        CHECK((*u)(0, 1) == 1);
        CHECK((*u)(1, 0) == 1);
        CHECK((*u)(1, 1) == 0);
    }
    SUBCASE("not found within bound") {
        const CharacteristicModel c(simplex(1), {int_vec({1}), int_vec({1})});
        CHECK_FALSE(delta_translation(cp1, c, 1).has_value());
    }
    SUBCASE("polytope mismatch throws") {
        const CharacteristicModel tri = standard_projective(2);
        CHECK_THROWS_AS(delta_translation(cp1, tri, 1), std::invalid_argument);
    }
    SUBCASE("equivalence properties: symmetry via inverse") {
        const CharacteristicModel a = standard_projective(2);
        const CharacteristicModel b(simplex(2),
                                    {int_vec({0, 1}), int_vec({1, 0}), int_vec({-1, -1})});
        const auto u = delta_translation(a, b, 1);
        const auto v = delta_translation(b, a, 1);
        REQUIRE(u.has_value());
        REQUIRE(v.has_value());
        IntMat prod = (*u) * (*v);
        for (Eigen::Index i = 0; i < 2; ++i)
            for (Eigen::Index j = 0; j < 2; ++j)
                CHECK(prod(i, j) == (i == j ? Int(1) : Int(0)));
    }
}

TEST_CASE("orientation data and vertex signs") {
    SUBCASE("canonical orientation is coherent") {
        for (int n = 1; n <= 3; ++n) {
            const Polytope p = simplex(n);
            CHECK(orientation_consistent(p, canonical_orientation(p)));
        }
        const Polytope cube = qtcob::testing::cube();
        CHECK(orientation_consistent(cube, canonical_orientation(cube)));
        CHECK_FALSE(orientation_consistent(
            cube, canonical_orientation(cube).reversed().vertex_count() == 8
                      ? OrientationDatum(std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1})
                      : canonical_orientation(cube)));
    }
    SUBCASE("standard projective line: signs (+1, +1)") {
        const OmniorientedModel m(CharacteristicModel(simplex(1), {int_vec({1}), int_vec({-1})}));
        CHECK(vertex_sign(m, 0) == 1);
        CHECK(vertex_sign(m, 1) == 1);
    }
    SUBCASE("model (1),(1): signs (+1, -1)") {
        const OmniorientedModel m(CharacteristicModel(simplex(1), {int_vec({1}), int_vec({1})}));
        CHECK(vertex_sign(m, 0) == 1);
        CHECK(vertex_sign(m, 1) == -1);
    }
    SUBCASE("reversing the orientation negates every vertex sign") {
        const OmniorientedModel m(standard_projective(2));
        const OmniorientedModel r = m.with_reversed_orientation();
        for (int v = 0; v < 3; ++v) CHECK(vertex_sign(r, v) == -vertex_sign(m, v));
    }
    SUBCASE("flipping one facet flips exactly the signs of its vertices") {
        const OmniorientedModel m(standard_projective(2));
        const int f = 1;
        const OmniorientedModel flipped = m.with_facet_flipped(f);
        for (int v = 0; v < 3; ++v) {
            const FacetSet& vs = m.polytope().vertex(v);
            const bool contains = std::binary_search(vs.begin(), vs.end(), f);
            if (contains)
                CHECK(vertex_sign(flipped, v) == -vertex_sign(m, v));
            else
                CHECK(vertex_sign(flipped, v) == vertex_sign(m, v));
        }
    }
}
