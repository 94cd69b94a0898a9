// Deterministic corpus generation shared by the unit and acceptance suites:
// random simple 2- and 3-polytopes (polygons; truncation cascades over
// simplices, cubes and prisms) with random valid labelings, plus a few
// pinned smooth instances.

#pragma once

#include "qtcob/charmodel.hpp"
#include "qtcob/polytope.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtcob::testing {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;  // deterministic across platforms, unlike std distributions
}

inline Polytope polygon(int m) {
    if (m < 3) throw std::invalid_argument("polygon: need at least 3 edges");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) names.push_back("E" + std::to_string(i));
    std::vector<FacetSet> vertices;
    vertices.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) vertices.push_back({i, (i + 1) % m});
    return Polytope(2, std::move(names), std::move(vertices));
}

inline Polytope cube() { return prism(prism(simplex(1))); }

inline Polytope random_polygon(std::mt19937_64& rng, int max_vertices = 20) {
    return polygon(3 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_vertices - 2))));
}

inline Polytope random_simple_3polytope(std::mt19937_64& rng, int max_vertices = 20) {
    Polytope p = [&]() -> Polytope {
        switch (draw(rng, 3)) {
            case 0: return simplex(3);
            case 1: return cube();
            default:
                return prism(polygon(3 + static_cast<int>(draw(rng, 7))));
        }
    }();
    // vertex truncation preserves simplicity and adds two vertices in dim 3
    while (p.vertex_count() + 2 <= max_vertices && draw(rng, 4) != 0) {
        const int v = static_cast<int>(draw(rng, static_cast<std::uint64_t>(p.vertex_count())));
        p = truncate_vertex(p, v).polytope;
    }
    return p;
}

/// Random labeling with entries in [-range, range], redrawn until every
/// vertex carries independent labels.
inline CharacteristicModel random_valid_labels(const Polytope& p, std::mt19937_64& rng,
                                               int range = 3) {
    const int n = p.dim();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<IntVec> labels;
        labels.reserve(static_cast<std::size_t>(p.facet_count()));
        for (int f = 0; f < p.facet_count(); ++f) {
            IntVec l(n);
            bool zero = true;
            for (Eigen::Index i = 0; i < n; ++i) {
                const long long e =
                    static_cast<long long>(draw(rng, static_cast<std::uint64_t>(2 * range + 1))) -
                    range;
                l(i) = e;
                if (e != 0) zero = false;
            }
            if (zero) l(0) = 1;
            labels.push_back(std::move(l));
        }
        CharacteristicModel m(p, std::move(labels));
        if (validate_characteristic(m).ok) return m;
    }
    throw std::runtime_error("random_valid_labels: retries exhausted");
}

/// The standard projective-space model over the n-simplex:
/// e_1, ..., e_n, (-1, ..., -1).
inline CharacteristicModel standard_projective(int n) {
    Polytope p = simplex(n);
    std::vector<IntVec> labels;
    for (int f = 0; f < n; ++f) {
        IntVec e = IntVec::Zero(n);
        e(f) = 1;
        labels.push_back(std::move(e));
    }
    IntVec last(n);
    for (Eigen::Index i = 0; i < n; ++i) last(i) = -1;
    labels.push_back(std::move(last));
    return CharacteristicModel(std::move(p), std::move(labels));
}

/// Smooth product-style model over a 4k-gon: labels cycle through
/// (1,0),(0,1),(-1,0),(0,-1).
inline CharacteristicModel smooth_polygon_model(int m) {
    if (m % 4 != 0) throw std::invalid_argument("smooth_polygon_model: m must be divisible by 4");
    Polytope p = polygon(m);
    const std::vector<IntVec> cycle = {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, 0}),
                                       int_vec({0, -1})};
    std::vector<IntVec> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int f = 0; f < m; ++f) labels.push_back(cycle[static_cast<std::size_t>(f % 4)]);
    return CharacteristicModel(std::move(p), std::move(labels));
}

/// Smooth product model over the cube: opposite facets share the axis label.
inline CharacteristicModel smooth_cube_model() {
    Polytope p = cube();  // facets F1, F2 (segment), BOTTOM/TOP twice
    std::vector<IntVec> labels(6, IntVec());
    // facet order: F1, F2, BOTTOM, TOP, BOTTOM_2, TOP_2
    labels[0] = int_vec({1, 0, 0});
    labels[1] = int_vec({1, 0, 0});
    labels[2] = int_vec({0, 1, 0});
    labels[3] = int_vec({0, 1, 0});
    labels[4] = int_vec({0, 0, 1});
    labels[5] = int_vec({0, 0, 1});
    return CharacteristicModel(std::move(p), std::move(labels));
}

struct CorpusEntry {
    CharacteristicModel model;
    std::string origin;  // "random-2d", "random-3d", "pinned-smooth"
};

/// 200 random models (alternating dimension) plus pinned smooth instances.
inline std::vector<CorpusEntry> build_corpus(std::uint64_t seed, int random_count = 200) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> corpus;
    corpus.reserve(static_cast<std::size_t>(random_count) + 8);
    for (int i = 0; i < random_count; ++i) {
        if (i % 2 == 0) {
            Polytope p = random_polygon(rng);
            corpus.push_back({random_valid_labels(p, rng), "random-2d"});
        } else {
            Polytope p = random_simple_3polytope(rng);
            corpus.push_back({random_valid_labels(p, rng), "random-3d"});
        }
    }
    corpus.push_back({standard_projective(1), "pinned-smooth"});
    corpus.push_back({standard_projective(2), "pinned-smooth"});
    corpus.push_back({standard_projective(3), "pinned-smooth"});
    corpus.push_back({smooth_polygon_model(4), "pinned-smooth"});
    corpus.push_back({smooth_polygon_model(8), "pinned-smooth"});
    corpus.push_back({smooth_polygon_model(12), "pinned-smooth"});
    corpus.push_back({smooth_polygon_model(20), "pinned-smooth"});
    corpus.push_back({smooth_cube_model(), "pinned-smooth"});
    return corpus;
}

}  // namespace qtcob::testing
