#ifndef EMN_EMBEDDING_HPP
#define EMN_EMBEDDING_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "emn/graph.hpp"
#include "emn/rational.hpp"
#include "emn/surfaces.hpp"

namespace emn {

/// Rotation system with edge signs. The cyclic order of incident edges at
/// every vertex plus a sign per edge determines a 2-cell embedding of the
/// graph on a unique closed surface; the surface is always computed from
/// the map, never supplied.
class CombinatorialMap {
public:
    /// Validates that rotation[v] is a permutation of the neighbors of v
    /// and that every negative edge exists.
    static CombinatorialMap create(Graph graph,
                                   std::vector<std::vector<int>> rotation,
                                   std::set<Edge> negative_edges = {});

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<std::vector<int>>& rotation() const noexcept { return rotation_; }
    const std::set<Edge>& negative_edges() const noexcept { return negative_; }
    int sign(Edge e) const { return negative_.count(e) ? -1 : 1; }

    bool operator==(const CombinatorialMap&) const = default;

private:
    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::set<Edge> negative_;
};

/// Closed facial walks. Every face appears once; each face walk is a
/// sequence of directed edge traversals, and the sizes sum to 2|E|.
struct FaceSet {
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::vector<int> sizes;

    int count() const noexcept { return static_cast<int>(faces.size()); }
};

/// Orbits of the face-tracing rule: advance to the next edge in rotation at
/// the head, flipping traversal side across negative edges. Requires a
/// connected underlying graph with at least one edge.
FaceSet trace_faces(const CombinatorialMap& map);

/// True iff the signs are switching-equivalent to all-positive, i.e. every
/// cycle has positive sign product (two-coloring over a spanning tree).
bool is_orientable_map(const CombinatorialMap& map);

/// Exact 1 - deg(v)/2 + sum of 1/f_i over the face corners at v. A face
/// incident to v several times contributes one term per corner.
Rational euler_contribution(const CombinatorialMap& map, int v);

struct EulerReport {
    int chi = 0;
    bool orientable = true;
    int genus = 0; // handles if orientable, crosscaps otherwise
    int face_count = 0;
    std::vector<Rational> phi;       // per vertex
    std::vector<int> control_points; // { v : phi(v) >= chi / |V| }, non-empty
};

/// Full surface accounting for a map; all equalities are checked in exact
/// rational arithmetic and a failure raises std::logic_error.
EulerReport euler_report(const CombinatorialMap& map);

/// (x, y): number of triangular face corners at v, and deg(v).
std::pair<int, int> triangular_corner_count(const CombinatorialMap& map, int v);

struct GenusBudget {
    std::uint64_t max_maps = 10'000'000; // a-priori search-space cap
    double timeout_secs = 0.0;           // 0 = no time limit
};

struct GenusResult {
    int genus = 0;
    CombinatorialMap witness;
    std::uint64_t maps_examined = 0;
};

/// Minimum genus over all rotation systems (all-positive signs for the
/// orientable kind; rotation systems times switching-inequivalent unbalanced
/// sign classes for the non-orientable kind), by exhaustive scan. The
/// witness is the first minimizer in scan order: rotations advance
/// lexicographically with the first neighbor at each vertex pinned, sign
/// classes ascend within a rotation. Raises budget_error when the a-priori
/// search-space size exceeds the budget.
GenusResult exhaustive_genus(const Graph& g, SurfaceKind kind,
                             const GenusBudget& budget = {});

/// Sound lower bound on the minimum genus from Euler's formula: every face
/// of a simple connected embedding has size >= 3 (>= girth when the minimum
/// degree is at least 2), which caps the face count and hence chi.
int genus_lower_bound(const Graph& g, SurfaceKind kind);

/// Decides whether some rotation system embeds g in the sphere. Scans
/// rotations only when the lower bound does not already settle the answer.
bool exhaustive_is_planar(const Graph& g, const GenusBudget& budget = {});

/// Text format: line 1 "n m"; then n lines "v: u1 u2 ... ud" giving the
/// cyclic neighbor order at v; then optional lines "sign u v -1" for
/// negative edges. Rejects rotations inconsistent with the edge set.
CombinatorialMap parse_rot(const std::string& text);
std::string write_rot(const CombinatorialMap& map);

} // namespace emn

#endif
