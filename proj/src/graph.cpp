#include "emn/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "emn/errors.hpp"

namespace emn {

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    if (a < 0 || b < 0) throw std::invalid_argument("edge endpoints must be non-negative");
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > kMaxVertices)
        throw std::invalid_argument("graphs beyond " + std::to_string(kMaxVertices) +
                                    " vertices are unsupported");
    for (Edge& e : edges) e = make_edge(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        if (e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        g.adj_[e.u] |= std::uint64_t{1} << e.v;
        g.adj_[e.v] |= std::uint64_t{1} << e.u;
    }
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    std::vector<int> out;
    std::uint64_t m = adj_[v];
    while (m) {
        int u = std::countr_zero(m);
        out.push_back(u);
        m &= m - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// graph6
//
// Single line, 6 bits per byte biased by 63. The size is one byte for
// n <= 62; the body packs the upper triangle in column order: (0,1), (0,2),
// (1,2), (0,3), ... padded with zero bits to a byte boundary.
// ---------------------------------------------------------------------------

namespace {
constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
} // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw parse_error("empty graph6 input", base);

    unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126)
        throw parse_error("multi-byte graph6 size form unsupported (n > 62)", base);
    if (size_byte < 63 || size_byte > 125)
        throw parse_error("graph6 size byte out of range", base);
    int n = size_byte - kBias;

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() - 1 < nbytes)
        throw parse_error("graph6 body truncated", base + line.size());
    if (line.size() - 1 > nbytes)
        throw parse_error("trailing garbage after graph6 body", base + 1 + nbytes);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t byte_idx = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(line[byte_idx]);
            if (c < 63 || c > 126)
                throw parse_error("graph6 byte out of range", base + byte_idx);
            int val = c - kBias;
            if ((val >> (5 - bit % 6)) & 1) edges.push_back(Edge{i, j});
        }
    }
    // padding bits must be zero
    for (std::size_t pad = bit; pad < nbytes * 6; ++pad) {
        std::size_t byte_idx = 1 + pad / 6;
        int val = static_cast<unsigned char>(line[byte_idx]) - kBias;
        if ((val >> (5 - pad % 6)) & 1)
            throw parse_error("nonzero graph6 padding", base + byte_idx);
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > Graph::kMaxVertices)
        throw std::domain_error("graph6 single-byte form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    std::string body(nbytes, '\0');
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
        }
    }
    for (char& c : body) c += kBias;
    out += body;
    return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back(Edge{u, a + v});
    return Graph::from_edges(a + b, std::move(edges));
}

Graph hypercube_q3() {
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int bit = 0; bit < 3; ++bit) {
            int v = u ^ (1 << bit);
            if (u < v) edges.push_back(Edge{u, v});
        }
    return Graph::from_edges(8, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));         // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push_back(Edge{i, 5 + i});                    // spokes
    }
    return Graph::from_edges(10, std::move(edges));
}

// 0 = top apex, 1..5 upper ring, 6..10 lower ring, 11 = bottom apex.
Graph icosahedron_graph() {
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.push_back(Edge{0, i});
        edges.push_back(make_edge(i, i % 5 + 1));       // upper ring
        edges.push_back(make_edge(i + 5, i % 5 + 6));   // lower ring
        edges.push_back(Edge{i, i + 5});                // down-left
        edges.push_back(Edge{i, i % 5 + 6});            // down-right
        edges.push_back(Edge{i + 5, 11});
    }
    return Graph::from_edges(12, std::move(edges));
}

Graph join_counterexample(int m) {
    if (m < 1) throw std::invalid_argument("join-counterexample requires m >= 1");
    std::vector<Edge> edges;
    int clique = 2 * m;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) edges.push_back(Edge{u, v});
    for (int apex = clique; apex < clique + 2; ++apex)
        for (int v = 0; v < clique; ++v) edges.push_back(Edge{v, apex});
    return Graph::from_edges(clique + 2, std::move(edges));
}

void expect_params(const std::string& family, const std::vector<int>& params,
                   std::size_t count) {
    if (params.size() != count)
        throw std::invalid_argument("family '" + family + "' takes " +
                                    std::to_string(count) + " parameter(s)");
    for (int p : params)
        if (p <= 0) throw std::invalid_argument("family parameters must be positive");
}

} // namespace

Graph generate_family(const std::string& family, const std::vector<int>& params) {
    if (family == "complete") {
        expect_params(family, params, 1);
        return complete_graph(params[0]);
    }
    if (family == "cycle") {
        expect_params(family, params, 1);
        return cycle_graph(params[0]);
    }
    if (family == "complete-bipartite") {
        expect_params(family, params, 2);
        return complete_bipartite(params[0], params[1]);
    }
    if (family == "q3" || family == "hypercube") {
        expect_params(family, params, 0);
        return hypercube_q3();
    }
    if (family == "petersen") {
        expect_params(family, params, 0);
        return petersen_graph();
    }
    if (family == "icosahedron") {
        expect_params(family, params, 0);
        return icosahedron_graph();
    }
    if (family == "join-counterexample") {
        expect_params(family, params, 1);
        return join_counterexample(params[0]);
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

// ---------------------------------------------------------------------------
// structural queries
// ---------------------------------------------------------------------------

namespace {

// Connectivity of the subgraph induced by `alive` (a vertex mask).
bool mask_connected(const Graph& g, std::uint64_t alive) {
    if (alive == 0) return false;
    int start = std::countr_zero(alive);
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adjacency_mask(v) & alive;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return (seen & alive) == alive;
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return mask_connected(g, full_mask(g.vertex_count()));
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.connected = is_connected(g);
    s.degree_sequence.resize(g.vertex_count());
    s.min_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) s.degree_sequence[v] = g.degree(v);
    if (g.vertex_count() > 0)
        s.min_degree = *std::min_element(s.degree_sequence.begin(), s.degree_sequence.end());
    return s;
}

InducedSubgraph neighborhood_subgraph(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    InducedSubgraph out;
    out.labels = g.neighbors(v);
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < out.labels.size(); ++i) index[out.labels[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back(Edge{index[e.u], index[e.v]});
    out.graph = Graph::from_edges(static_cast<int>(out.labels.size()), std::move(edges));
    return out;
}

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("vertex connectivity undefined for n < 2");
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;

    std::uint64_t all = full_mask(n);
    // Smallest k such that removing some k vertices disconnects the rest.
    for (int k = 0; k <= n - 2; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            std::uint64_t removed = 0;
            for (int i : pick) removed |= std::uint64_t{1} << i;
            std::uint64_t alive = all & ~removed;
            if (std::popcount(alive) >= 2 && !mask_connected(g, alive)) return k;
            // next k-subset in lexicographic order
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return n - 1; // unreachable for non-complete graphs, defensive for n = 2
}

int girth(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    // BFS from every vertex; a cross/back edge at depths d1, d2 closes a
    // cycle of length d1 + d2 + 1 through the root.
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                } else if (u != parent[v]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

} // namespace emn
