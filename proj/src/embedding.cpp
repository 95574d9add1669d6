#include "emn/embedding.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "emn/errors.hpp"

namespace emn {

// ---------------------------------------------------------------------------
// CombinatorialMap
// ---------------------------------------------------------------------------

CombinatorialMap CombinatorialMap::create(Graph graph,
                                          std::vector<std::vector<int>> rotation,
                                          std::set<Edge> negative_edges) {
    if (static_cast<int>(rotation.size()) != graph.vertex_count())
        throw std::invalid_argument("rotation must list every vertex");
    for (int v = 0; v < graph.vertex_count(); ++v) {
        std::vector<int> sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph.neighbors(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
    }
    for (const Edge& e : negative_edges)
        if (!graph.has_edge(e.u, e.v))
            throw std::invalid_argument("signed edge not in graph");
    CombinatorialMap m;
    m.graph_ = std::move(graph);
    m.rotation_ = std::move(rotation);
    m.negative_ = std::move(negative_edges);
    return m;
}

// ---------------------------------------------------------------------------
// face tracing
//
// States are (dart, side) pairs: dart 2e is u->v for the edge {u,v} with
// u < v, dart 2e+1 is v->u; the side bit flips when a negative edge is
// crossed. From ((a->b), +) the walk continues to the successor of a in the
// rotation at b, from ((a->b), -) to the predecessor. The states are the
// darts of the orientation double cover, where every face has exactly two
// disjoint lifts, so the orbits of this rule pair up, the face count is half
// the orbit count, and every face corner at a vertex is registered by
// exactly two incoming states.
// ---------------------------------------------------------------------------

namespace {

struct TraceResult {
    FaceSet faces;
    std::vector<std::vector<int>> corner_sizes; // per vertex, sorted face sizes
};

struct DartTracer {
    const Graph& g;
    int n, m;
    std::vector<int> eu, ev;
    std::vector<int> eid;      // n*n edge index lookup
    std::vector<int> pos;      // n*n position of u in rotation at v
    std::vector<int> sign;     // per edge, +1/-1
    const std::vector<std::vector<int>>& rot;

    DartTracer(const CombinatorialMap& map)
        : g(map.graph()), n(g.vertex_count()), m(g.edge_count()), rot(map.rotation()) {
        eu.resize(m);
        ev.resize(m);
        eid.assign(static_cast<std::size_t>(n) * n, -1);
        pos.assign(static_cast<std::size_t>(n) * n, -1);
        sign.resize(m);
        for (int e = 0; e < m; ++e) {
            eu[e] = g.edges()[e].u;
            ev[e] = g.edges()[e].v;
            eid[eu[e] * n + ev[e]] = e;
            eid[ev[e] * n + eu[e]] = e;
            sign[e] = map.sign(g.edges()[e]);
        }
        for (int v = 0; v < n; ++v)
            for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v * n + rot[v][i]] = static_cast<int>(i);
    }

    int dart_tail(int d) const { return (d & 1) ? ev[d >> 1] : eu[d >> 1]; }
    int dart_head(int d) const { return (d & 1) ? eu[d >> 1] : ev[d >> 1]; }

    // state = dart * 2 + (side < 0)
    int next_state(int s) const {
        int d = s >> 1;
        bool negative_side = s & 1;
        int a = dart_tail(d), b = dart_head(d);
        int deg = static_cast<int>(rot[b].size());
        int idx = pos[b * n + a];
        int w = negative_side ? rot[b][(idx + deg - 1) % deg] : rot[b][(idx + 1) % deg];
        int e2 = eid[b * n + w];
        int d2 = 2 * e2 + (b < w ? 0 : 1);
        bool side2 = negative_side ^ (sign[e2] < 0);
        return d2 * 2 + (side2 ? 1 : 0);
    }

    // The second lift of a face in the orientation double cover: reverse the
    // dart, flip the side, and account for the sign of the edge itself.
    int mirror_state(int s) const {
        int d = s >> 1;
        int side = (s & 1) ^ 1;          // flip
        if (sign[d >> 1] < 0) side ^= 1; // crossing back over a negative edge
        return (d ^ 1) * 2 + side;
    }
};

TraceResult trace_full(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    if (!is_connected(g)) throw std::invalid_argument("face tracing requires a connected graph");
    if (g.edge_count() < 1) throw std::invalid_argument("face tracing requires at least one edge");

    DartTracer t(map);
    int states = 4 * t.m;
    std::vector<int> orbit_size(states, 0);
    std::vector<char> visited(states, 0);
    TraceResult out;

    auto walk = [&](int s0, std::vector<int>* collect) {
        int len = 0;
        int s = s0;
        do {
            if (visited[s]) throw std::logic_error("face orbits are not disjoint");
            visited[s] = 1;
            if (collect) collect->push_back(s);
            s = t.next_state(s);
            ++len;
        } while (s != s0);
        return len;
    };

    // Positive-side states first: on orientable maps every face is then
    // reported through its positive orbit, so the walks cover each dart
    // exactly once (non-orientable faces may legitimately use a dart twice).
    for (int idx = 0; idx < states; ++idx) {
        int s0 = idx < states / 2 ? 2 * idx : 2 * (idx - states / 2) + 1;
        if (visited[s0]) continue;
        std::vector<int> orbit;
        int len = walk(s0, &orbit);
        std::vector<int> mirror;
        int mlen = walk(t.mirror_state(s0), &mirror);
        if (mlen != len) throw std::logic_error("mirror face orbit length mismatch");
        for (int s : orbit) orbit_size[s] = len;
        for (int s : mirror) orbit_size[s] = len;

        std::vector<std::pair<int, int>> dart_walk;
        dart_walk.reserve(len);
        for (int s : orbit) dart_walk.emplace_back(t.dart_tail(s >> 1), t.dart_head(s >> 1));
        out.faces.faces.push_back(std::move(dart_walk));
        out.faces.sizes.push_back(len);
    }

    // Every corner at v is registered by two incoming states of equal orbit
    // size; halving the multiset recovers the deg(v) corners.
    out.corner_sizes.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> twice;
        for (int u : g.neighbors(v)) {
            int e = t.eid[v * t.n + u];
            int d = 2 * e + (t.ev[e] == v ? 0 : 1); // dart u -> v
            twice.push_back(orbit_size[2 * d]);
            twice.push_back(orbit_size[2 * d + 1]);
        }
        std::sort(twice.begin(), twice.end());
        for (std::size_t i = 0; i < twice.size(); i += 2) {
            if (twice[i] != twice[i + 1]) throw std::logic_error("corner pairing broken");
            out.corner_sizes[v].push_back(twice[i]);
        }
    }
    return out;
}

} // namespace

FaceSet trace_faces(const CombinatorialMap& map) {
    TraceResult t = trace_full(map);
    long total = 0;
    for (int s : t.faces.sizes) total += s;
    if (total != 2L * map.graph().edge_count())
        throw std::logic_error("face sizes do not cover every edge side");
    return std::move(t.faces);
}

bool is_orientable_map(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    if (!is_connected(g)) throw std::invalid_argument("orientability requires a connected graph");
    std::vector<int> potential(g.vertex_count(), 0);
    std::queue<int> q;
    potential[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            int s = map.sign(make_edge(u, v));
            if (potential[u] == 0) {
                potential[u] = potential[v] * s;
                q.push(u);
            }
        }
    }
    for (const Edge& e : g.edges())
        if (potential[e.u] * potential[e.v] != map.sign(e)) return false;
    return true;
}

namespace {

Rational phi_from_corners(const Graph& g, int v, const std::vector<int>& corners) {
    Rational phi = Rational(1) - Rational(g.degree(v), 2);
    for (int f : corners) phi += Rational(1, f);
    return phi;
}

} // namespace

Rational euler_contribution(const CombinatorialMap& map, int v) {
    if (v < 0 || v >= map.graph().vertex_count()) throw std::out_of_range("vertex out of range");
    TraceResult t = trace_full(map);
    return phi_from_corners(map.graph(), v, t.corner_sizes[v]);
}

std::pair<int, int> triangular_corner_count(const CombinatorialMap& map, int v) {
    if (v < 0 || v >= map.graph().vertex_count()) throw std::out_of_range("vertex out of range");
    TraceResult t = trace_full(map);
    int x = static_cast<int>(std::count(t.corner_sizes[v].begin(), t.corner_sizes[v].end(), 3));
    return {x, map.graph().degree(v)};
}

EulerReport euler_report(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    TraceResult t = trace_full(map);

    EulerReport r;
    r.face_count = t.faces.count();
    r.chi = g.vertex_count() - g.edge_count() + r.face_count;
    r.orientable = is_orientable_map(map);
    if (r.orientable) {
        if ((2 - r.chi) % 2 != 0) throw std::logic_error("orientable map with odd 2-chi");
        r.genus = (2 - r.chi) / 2;
    } else {
        r.genus = 2 - r.chi;
        if (r.genus < 1) throw std::logic_error("non-orientable map with genus < 1");
    }

    Rational total;
    r.phi.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        r.phi.push_back(phi_from_corners(g, v, t.corner_sizes[v]));
        total += r.phi.back();
    }
    if (total != Rational(r.chi))
        throw std::logic_error("Euler contributions do not sum to chi");

    Rational threshold(r.chi, g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (r.phi[v] >= threshold) r.control_points.push_back(v);
    if (r.control_points.empty()) throw std::logic_error("no control point found");
    return r;
}

// ---------------------------------------------------------------------------
// exhaustive genus
// ---------------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

u128 saturating_mul(u128 a, u128 b) {
    if (a != 0 && b > static_cast<u128>(-1) / a) return static_cast<u128>(-1);
    return a * b;
}

std::string u128_str(u128 v) {
    if (v == static_cast<u128>(-1)) return "huge";
    std::string s;
    if (v == 0) return "0";
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

u128 rotation_space(const Graph& g) {
    u128 space = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        u128 f = 1;
        for (int i = 2; i < g.degree(v); ++i) f = saturating_mul(f, static_cast<u128>(i));
        space = saturating_mul(space, f);
    }
    return space;
}

// Flat rotation-system scanner. The first neighbor at each vertex stays
// pinned (cyclic orders), the tails advance through permutations in
// lexicographic order, last vertex fastest.
struct RotationScanner {
    const Graph& g;
    int n, m;
    std::vector<int> eu, ev, deg;
    std::vector<int> eid; // n*n
    std::vector<int> pos; // n*n
    std::vector<std::vector<int>> rot;
    std::vector<char> visited;

    explicit RotationScanner(const Graph& graph)
        : g(graph), n(graph.vertex_count()), m(graph.edge_count()) {
        eu.resize(m);
        ev.resize(m);
        deg.resize(n);
        eid.assign(static_cast<std::size_t>(n) * n, -1);
        pos.assign(static_cast<std::size_t>(n) * n, -1);
        for (int e = 0; e < m; ++e) {
            eu[e] = g.edges()[e].u;
            ev[e] = g.edges()[e].v;
            eid[eu[e] * n + ev[e]] = e;
            eid[ev[e] * n + eu[e]] = e;
        }
        rot.resize(n);
        for (int v = 0; v < n; ++v) {
            rot[v] = g.neighbors(v);
            deg[v] = static_cast<int>(rot[v].size());
            rebuild_pos(v);
        }
        visited.assign(static_cast<std::size_t>(4) * m, 0);
    }

    void rebuild_pos(int v) {
        for (int i = 0; i < deg[v]; ++i) pos[v * n + rot[v][i]] = i;
    }

    bool advance() {
        for (int v = n - 1; v >= 0; --v) {
            if (deg[v] < 3) continue; // single cyclic order
            if (std::next_permutation(rot[v].begin() + 1, rot[v].end())) {
                rebuild_pos(v);
                return true;
            }
            rebuild_pos(v); // wrapped back to sorted order, carry on
        }
        return false;
    }

    int count_faces_positive() {
        int darts = 2 * m;
        std::fill(visited.begin(), visited.begin() + darts, 0);
        int faces = 0;
        for (int d0 = 0; d0 < darts; ++d0) {
            if (visited[d0]) continue;
            ++faces;
            int d = d0;
            do {
                visited[d] = 1;
                int e = d >> 1;
                int a = (d & 1) ? ev[e] : eu[e];
                int b = (d & 1) ? eu[e] : ev[e];
                int idx = pos[b * n + a] + 1;
                if (idx == deg[b]) idx = 0;
                int w = rot[b][idx];
                int e2 = eid[b * n + w];
                d = 2 * e2 + (b < w ? 0 : 1);
            } while (d != d0);
        }
        return faces;
    }

    // sign[] is per edge; returns the face count (orbit pairs).
    int count_faces_signed(const std::vector<int>& sign) {
        int states = 4 * m;
        std::fill(visited.begin(), visited.end(), 0);
        int orbits = 0;
        for (int s0 = 0; s0 < states; ++s0) {
            if (visited[s0]) continue;
            ++orbits;
            int s = s0;
            do {
                visited[s] = 1;
                int d = s >> 1;
                int neg = s & 1;
                int e = d >> 1;
                int a = (d & 1) ? ev[e] : eu[e];
                int b = (d & 1) ? eu[e] : ev[e];
                int idx = pos[b * n + a];
                int w = neg ? rot[b][(idx + deg[b] - 1) % deg[b]]
                            : rot[b][(idx + 1) % deg[b]];
                int e2 = eid[b * n + w];
                int d2 = 2 * e2 + (b < w ? 0 : 1);
                s = d2 * 2 + (neg ^ (sign[e2] < 0 ? 1 : 0));
            } while (s != s0);
        }
        if (orbits % 2 != 0) throw std::logic_error("odd signed orbit count");
        return orbits / 2;
    }
};

struct Deadline {
    std::chrono::steady_clock::time_point end;
    bool armed = false;

    explicit Deadline(double secs) {
        if (secs > 0) {
            armed = true;
            end = std::chrono::steady_clock::now() +
                  std::chrono::microseconds(static_cast<long long>(secs * 1e6));
        }
    }
    bool expired() const {
        return armed && std::chrono::steady_clock::now() > end;
    }
};

void require_scannable(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("genus search requires a connected graph");
    if (g.edge_count() < 1) throw std::invalid_argument("genus search requires at least one edge");
}

std::vector<int> cotree_edges(const Graph& g) {
    // BFS spanning tree; the remaining edge indices span the cycle space.
    std::vector<char> in_tree(g.edge_count(), 0);
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edges()[e];
            int other = -1;
            if (ed.u == v)
                other = ed.v;
            else if (ed.v == v)
                other = ed.u;
            else
                continue;
            if (!seen[other]) {
                seen[other] = 1;
                in_tree[e] = 1;
                q.push(other);
            }
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_tree[e]) out.push_back(e);
    return out;
}

} // namespace

int genus_lower_bound(const Graph& g, SurfaceKind kind) {
    int n = g.vertex_count();
    int m = g.edge_count();
    int gir = girth(g);
    if (gir == 0) // acyclic: embeds in the sphere, never non-orientably
        return kind == SurfaceKind::Orientable ? 0 : 1;
    int face_lb = 3;
    if (graph_stats(g).min_degree >= 2) face_lb = gir;
    int chi_ub = n - m + (2 * m) / face_lb;
    int d = 2 - chi_ub;
    if (kind == SurfaceKind::Orientable) return d <= 0 ? 0 : (d + 1) / 2;
    return d <= 1 ? 1 : d;
}

GenusResult exhaustive_genus(const Graph& g, SurfaceKind kind, const GenusBudget& budget) {
    require_scannable(g);

    int cycle_rank = g.edge_count() - g.vertex_count() + 1;
    if (kind == SurfaceKind::NonOrientable && cycle_rank == 0)
        throw std::domain_error("acyclic graphs have no non-orientable embedding");

    u128 space = rotation_space(g);
    if (kind == SurfaceKind::NonOrientable) {
        u128 classes = cycle_rank >= 127 ? static_cast<u128>(-1)
                                         : (static_cast<u128>(1) << cycle_rank) - 1;
        space = saturating_mul(space, classes);
    }
    if (space > budget.max_maps)
        throw budget_error("genus search space " + u128_str(space) + " exceeds budget " +
                           std::to_string(budget.max_maps));

    int lb = genus_lower_bound(g, kind);
    Deadline deadline(budget.timeout_secs);
    RotationScanner scan(g);

    int best = -1;
    std::vector<std::vector<int>> best_rot;
    std::uint64_t best_pattern = 0;
    std::uint64_t examined = 0;

    std::vector<int> cotree;
    std::vector<int> sign(g.edge_count(), 1);
    std::uint64_t patterns = 1;
    if (kind == SurfaceKind::NonOrientable) {
        cotree = cotree_edges(g);
        patterns = (std::uint64_t{1} << cycle_rank) - 1;
    }

    bool done = false;
    do {
        if (kind == SurfaceKind::Orientable) {
            ++examined;
            int faces = scan.count_faces_positive();
            int chi = g.vertex_count() - g.edge_count() + faces;
            if ((2 - chi) % 2 != 0) throw std::logic_error("odd 2-chi in orientable scan");
            int genus = (2 - chi) / 2;
            if (best < 0 || genus < best) {
                best = genus;
                best_rot = scan.rot;
                if (best == lb) done = true;
            }
        } else {
            for (std::uint64_t pat = 1; pat <= patterns && !done; ++pat) {
                ++examined;
                for (std::size_t i = 0; i < cotree.size(); ++i)
                    sign[cotree[i]] = (pat >> i) & 1 ? -1 : 1;
                int faces = scan.count_faces_signed(sign);
                int chi = g.vertex_count() - g.edge_count() + faces;
                int genus = 2 - chi;
                if (best < 0 || genus < best) {
                    best = genus;
                    best_rot = scan.rot;
                    best_pattern = pat;
                    if (best == lb) done = true;
                }
            }
        }
        if ((examined & 0x1fff) == 0 && deadline.expired())
            throw budget_error("genus search timed out after " +
                               std::to_string(examined) + " maps");
    } while (!done && scan.advance());

    std::set<Edge> negatives;
    if (kind == SurfaceKind::NonOrientable)
        for (std::size_t i = 0; i < cotree.size(); ++i)
            if ((best_pattern >> i) & 1) negatives.insert(g.edges()[cotree[i]]);

    GenusResult r;
    r.genus = best;
    r.witness = CombinatorialMap::create(g, std::move(best_rot), std::move(negatives));
    r.maps_examined = examined;
    return r;
}

bool exhaustive_is_planar(const Graph& g, const GenusBudget& budget) {
    require_scannable(g);
    if (girth(g) == 0) return true; // trees embed in the sphere
    if (genus_lower_bound(g, SurfaceKind::Orientable) >= 1) return false;

    u128 space = rotation_space(g);
    if (space > budget.max_maps)
        throw budget_error("planarity scan space " + u128_str(space) + " exceeds budget " +
                           std::to_string(budget.max_maps));

    Deadline deadline(budget.timeout_secs);
    RotationScanner scan(g);
    std::uint64_t examined = 0;
    do {
        ++examined;
        int faces = scan.count_faces_positive();
        if (g.vertex_count() - g.edge_count() + faces == 2) return true;
        if ((examined & 0x1fff) == 0 && deadline.expired())
            throw budget_error("planarity scan timed out after " +
                               std::to_string(examined) + " maps");
    } while (scan.advance());
    return false;
}

// ---------------------------------------------------------------------------
// .rot format
// ---------------------------------------------------------------------------

CombinatorialMap parse_rot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw parse_error("empty rotation file", 0, "line");
    std::istringstream head(line);
    int n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw parse_error("rotation header must be 'n m'", lineno, "line");
    std::string extra;
    if (head >> extra) throw parse_error("trailing tokens after rotation header", lineno, "line");

    std::vector<std::vector<int>> rotation(n);
    std::vector<char> given(n, 0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        if (!next_line()) throw parse_error("missing rotation line", lineno + 1, "line");
        std::istringstream ls(line);
        std::string vt;
        ls >> vt;
        if (vt.empty() || vt.back() != ':')
            throw parse_error("rotation line must start with 'v:'", lineno, "line");
        int v = -1;
        try {
            v = std::stoi(vt.substr(0, vt.size() - 1));
        } catch (...) {
            throw parse_error("bad vertex label in rotation line", lineno, "line");
        }
        if (v < 0 || v >= n || given[v])
            throw parse_error("vertex label out of range or repeated", lineno, "line");
        given[v] = 1;
        int u;
        while (ls >> u) {
            if (u < 0 || u >= n || u == v)
                throw parse_error("bad neighbor in rotation line", lineno, "line");
            rotation[v].push_back(u);
        }
        for (int w : rotation[v])
            if (w > v) edges.push_back(Edge{v, w});
    }

    std::set<Edge> negatives;
    while (next_line()) {
        std::istringstream ls(line);
        std::string kw;
        int u, v, s;
        if (!(ls >> kw >> u >> v >> s) || kw != "sign")
            throw parse_error("expected 'sign u v -1' line", lineno, "line");
        if (s != -1) throw parse_error("sign value must be -1", lineno, "line");
        Edge e = make_edge(u, v);
        if (!negatives.insert(e).second) throw parse_error("duplicate sign line", lineno, "line");
    }

    // Symmetry check: each edge must appear in both endpoint rotations.
    std::sort(edges.begin(), edges.end());
    Graph g = Graph::from_edges(n, edges); // rejects duplicates, range errors
    if (g.edge_count() != m)
        throw parse_error("edge count disagrees with rotation lines", 1, "line");
    for (const Edge& e : g.edges()) {
        auto check = [&](int a, int b) {
            return std::count(rotation[a].begin(), rotation[a].end(), b) == 1;
        };
        if (!check(e.u, e.v) || !check(e.v, e.u))
            throw parse_error("rotation lines are not symmetric", 1, "line");
    }
    for (const Edge& e : negatives)
        if (!g.has_edge(e.u, e.v)) throw parse_error("sign line names a non-edge", 1, "line");

    return CombinatorialMap::create(std::move(g), std::move(rotation), std::move(negatives));
}

std::string write_rot(const CombinatorialMap& map) {
    std::ostringstream out;
    const Graph& g = map.graph();
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (int u : map.rotation()[v]) out << ' ' << u;
        out << '\n';
    }
    for (const Edge& e : map.negative_edges())
        out << "sign " << e.u << ' ' << e.v << " -1\n";
    return out.str();
}

} // namespace emn
