// Embedding fixtures for the tests: hand-built planar rotation systems with
// known face structures, and helpers for randomized maps.
#ifndef EMN_TESTS_FIXTURES_HPP
#define EMN_TESTS_FIXTURES_HPP

#include <random>
#include <set>
#include <vector>

#include "emn/embedding.hpp"
#include "emn/graph.hpp"

namespace fixtures {

inline emn::CombinatorialMap map_from_rotation(std::vector<std::vector<int>> rotation,
                                               std::set<emn::Edge> negatives = {}) {
    int n = static_cast<int>(rotation.size());
    std::vector<emn::Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u : rotation[v])
            if (v < u) edges.push_back(emn::Edge{v, u});
    emn::Graph g = emn::Graph::from_edges(n, std::move(edges));
    return emn::CombinatorialMap::create(std::move(g), std::move(rotation),
                                         std::move(negatives));
}

/// K4 drawn in the plane: 4 triangular faces.
inline emn::CombinatorialMap k4_planar() {
    return map_from_rotation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

/// The cube drawn in the plane: 6 quadrilateral faces.
inline emn::CombinatorialMap q3_planar() {
    return map_from_rotation({{1, 4, 2},
                              {3, 5, 0},
                              {3, 0, 6},
                              {2, 7, 1},
                              {5, 6, 0},
                              {7, 4, 1},
                              {7, 2, 4},
                              {3, 6, 5}});
}

/// A cycle on the sphere: two faces.
inline emn::CombinatorialMap cycle_sphere(int n, std::set<emn::Edge> negatives = {}) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return map_from_rotation(std::move(rot), std::move(negatives));
}

/// Icosahedron drawn in the plane (vertex 0 on top, rings 1..5 and 6..10,
/// vertex 11 at the bottom): 20 triangular faces.
inline emn::CombinatorialMap icosahedron_planar() {
    return map_from_rotation({{1, 5, 4, 3, 2},
                              {0, 2, 7, 6, 5},
                              {0, 3, 8, 7, 1},
                              {0, 4, 9, 8, 2},
                              {0, 5, 10, 9, 3},
                              {0, 1, 6, 10, 4},
                              {1, 7, 11, 10, 5},
                              {2, 8, 11, 6, 1},
                              {3, 9, 11, 7, 2},
                              {4, 10, 11, 8, 3},
                              {5, 6, 11, 9, 4},
                              {6, 7, 8, 9, 10}});
}

/// A planar graph whose hub (vertex 0) has corner faces of sizes
/// 3, 3, 4, 4, 5: spokes to 1..5 with triangle edges 1-2, 2-3, square
/// detours through 6 and 7, and a pentagon detour through 8 and 9.
inline emn::CombinatorialMap mixed_corner_planar() {
    return map_from_rotation({{1, 5, 4, 3, 2},
                              {0, 2, 9},
                              {1, 0, 3},
                              {2, 0, 6},
                              {6, 0, 7},
                              {7, 0, 8},
                              {3, 4},
                              {4, 5},
                              {5, 9},
                              {8, 1}});
}

inline emn::CombinatorialMap random_map(const emn::Graph& g, std::mt19937& rng,
                                        bool random_signs = true) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        rot[v] = g.neighbors(v);
        std::shuffle(rot[v].begin(), rot[v].end(), rng);
    }
    std::set<emn::Edge> negatives;
    if (random_signs) {
        for (const emn::Edge& e : g.edges())
            if (rng() & 1) negatives.insert(e);
    }
    return emn::CombinatorialMap::create(g, std::move(rot), std::move(negatives));
}

} // namespace fixtures

#endif
