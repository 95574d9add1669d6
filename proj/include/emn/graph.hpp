#ifndef EMN_GRAPH_HPP
#define EMN_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace emn {

/// Unordered edge, stored normalized with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Normalizes endpoint order; loops are rejected.
Edge make_edge(int a, int b);

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
///
/// The edge list is kept sorted lexicographically, which fixes the iteration
/// order everywhere downstream (witness enumeration, serialization). The
/// vertex count is capped at 62 so every graph fits the single-byte graph6
/// size form and adjacency rows fit in one 64-bit mask.
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;

    /// Validates simplicity (no loops, no duplicate edges) and endpoint range.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint64_t adjacency_mask(int v) const { return adj_[v]; }
    std::vector<int> neighbors(int v) const; // ascending

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

/// Decodes one graph6 line (optional ">>graph6<<" header tolerated).
/// Malformed input raises parse_error carrying the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes in graph6; requires n <= 62 (single-byte size form).
std::string write_graph6(const Graph& g);

/// Builds one of the named graph families:
///   complete(n), cycle(n), complete-bipartite(a,b), q3, icosahedron,
///   petersen, join-counterexample(m).
/// join-counterexample(m) joins two mutually non-adjacent apex vertices to
/// every vertex of a complete graph on 2m vertices; the clique occupies
/// labels 0..2m-1 and the apices 2m and 2m+1.
Graph generate_family(const std::string& family, const std::vector<int>& params);

struct GraphStats {
    bool connected = false;
    int min_degree = 0;
    std::vector<int> degree_sequence; // by vertex label
};

/// connected is computed by graph search; n = 0 reports connected = false.
GraphStats graph_stats(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels; // labels[i] = original vertex of new vertex i
};

/// Subgraph induced by the neighborhood N(v), relabeled 0..deg(v)-1 in
/// ascending original-label order. Never contains v itself.
InducedSubgraph neighborhood_subgraph(const Graph& g, int v);

/// Exact minimum vertex cut size, by enumeration of removal sets
/// (n-1 for complete graphs). Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// Length of a shortest cycle, or 0 if the graph is acyclic.
int girth(const Graph& g);

/// Parses a whole graph6 stream, one graph per line; blank lines skipped.
std::vector<Graph> parse_graph6_lines(const std::string& text);

} // namespace emn

#endif
