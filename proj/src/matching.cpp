#include "emn/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace emn {

const char* outcome_name(EmnOutcome o) {
    switch (o) {
    case EmnOutcome::Holds: return "Holds";
    case EmnOutcome::Fails: return "Fails";
    case EmnOutcome::NotApplicable: return "NotApplicable";
    }
    return "?";
}

bool is_matching_in(const Graph& g, const std::vector<Edge>& edges) {
    std::uint64_t covered = 0;
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        if (covered & mask) return false;
        covered |= mask;
    }
    return true;
}

// ---------------------------------------------------------------------------
// maximum matching (Edmonds' blossom contraction, O(V^3))
// ---------------------------------------------------------------------------

namespace {

class Blossom {
public:
    explicit Blossom(const Graph& g) : n_(g.vertex_count()), adj_(n_) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
        match_.assign(n_, -1);
        p_.assign(n_, -1);
        base_.resize(n_);
        used_.assign(n_, 0);
        flower_.assign(n_, 0);
        // greedy seed, the search then only augments
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0)
                for (int u : adj_[v])
                    if (match_[u] < 0) {
                        match_[v] = u;
                        match_[u] = v;
                        break;
                    }
    }

    std::vector<Edge> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) {
                int leaf = find_path(v);
                if (leaf >= 0) augment(leaf);
            }
        std::vector<Edge> out;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) out.push_back(Edge{v, match_[v]});
        return out;
    }

private:
    // Common ancestor of a and b in the alternating forest, over blossom bases.
    int lca(int a, int b) {
        std::vector<char> mark(n_, 0);
        int cur = a;
        for (;;) {
            cur = base_[cur];
            mark[cur] = 1;
            if (match_[cur] < 0) break;
            cur = p_[match_[cur]];
        }
        cur = b;
        for (;;) {
            cur = base_[cur];
            if (mark[cur]) return cur;
            cur = p_[match_[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            flower_[base_[v]] = 1;
            flower_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    // BFS from an exposed root; returns an exposed leaf of an augmenting
    // path, or -1. p_ stores the path structure.
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    std::fill(flower_.begin(), flower_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (flower_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p_[to] < 0) {
                    p_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v >= 0) {
            int pv = p_[v];
            int ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, flower_;
};

} // namespace

Matching max_matching(const Graph& g) {
    Matching m;
    m.edges = Blossom(g).run();
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

// ---------------------------------------------------------------------------
// constrained perfect matching
// ---------------------------------------------------------------------------

std::optional<Matching> constrained_perfect_matching(const Graph& g,
                                                     const Matching& forced,
                                                     const std::vector<Edge>& forbidden) {
    if (!is_matching_in(g, forced.edges))
        throw std::invalid_argument("forced set is not a matching of the graph");
    for (const Edge& e : forbidden)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("forbidden edge not in graph");
    for (const Edge& e : forced.edges)
        if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end())
            throw std::invalid_argument("forced and forbidden sets overlap");

    std::uint64_t covered = 0;
    for (const Edge& e : forced.edges)
        covered |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);

    std::vector<int> keep;
    std::vector<int> index(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!((covered >> v) & 1)) {
            index[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    if (keep.size() % 2 != 0) return std::nullopt;

    std::vector<Edge> sub_edges;
    for (const Edge& e : g.edges()) {
        if (index[e.u] < 0 || index[e.v] < 0) continue;
        if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end()) continue;
        sub_edges.push_back(Edge{index[e.u], index[e.v]});
    }
    Graph h = Graph::from_edges(static_cast<int>(keep.size()), std::move(sub_edges));
    Matching mm = max_matching(h);
    if (2 * mm.size() != static_cast<int>(keep.size())) return std::nullopt;

    Matching out = forced;
    for (const Edge& e : mm.edges) out.edges.push_back(make_edge(keep[e.u], keep[e.v]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// ---------------------------------------------------------------------------
// E(m,n)
// ---------------------------------------------------------------------------

namespace {

// Enumerates size-k matchings in lexicographic order over the sorted edge
// list, restricted to edges vertex-disjoint from `blocked`. Calls fn for
// each; fn returning false stops the walk early.
template <typename Fn>
bool for_each_matching(const Graph& g, int k, std::uint64_t blocked, Fn&& fn) {
    const std::vector<Edge>& edges = g.edges();
    std::vector<Edge> current;
    current.reserve(k);

    auto rec = [&](auto&& self, int from, std::uint64_t used) -> bool {
        if (static_cast<int>(current.size()) == k) return fn(current);
        for (int i = from; i < static_cast<int>(edges.size()); ++i) {
            const Edge& e = edges[i];
            std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
            if (used & mask) continue;
            current.push_back(e);
            if (!self(self, i + 1, used | mask)) return false;
            current.pop_back();
        }
        return true;
    };
    return rec(rec, 0, blocked);
}

} // namespace

EmnVerdict has_property_emn(const Graph& g, EmnQuery q) {
    if (q.m < 0 || q.n < 0) throw std::invalid_argument("E(m,n) requires m, n >= 0");
    EmnVerdict verdict;
    if (!is_connected(g)) {
        verdict.outcome = EmnOutcome::NotApplicable;
        verdict.reason = "disconnected";
        return verdict;
    }
    if (g.vertex_count() < 2 * q.m + 2 * q.n + 2) {
        verdict.outcome = EmnOutcome::NotApplicable;
        verdict.reason = "too few vertices";
        return verdict;
    }
    if (g.vertex_count() % 2 != 0) {
        verdict.outcome = EmnOutcome::NotApplicable;
        verdict.reason = "odd vertex count";
        return verdict;
    }

    std::optional<EmnWitness> failing;
    for_each_matching(g, q.m, 0, [&](const std::vector<Edge>& forced) {
        std::uint64_t used = 0;
        for (const Edge& e : forced)
            used |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        return for_each_matching(g, q.n, used, [&](const std::vector<Edge>& forbidden) {
            ++verdict.pairs_checked;
            Matching m{forced};
            if (!constrained_perfect_matching(g, m, forbidden)) {
                failing = EmnWitness{Matching{forced}, Matching{forbidden}};
                return false;
            }
            return true;
        });
    });

    if (failing) {
        verdict.outcome = EmnOutcome::Fails;
        verdict.witness = std::move(failing);
    } else {
        verdict.outcome = EmnOutcome::Holds;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// witness audit / perfect matching enumeration
// ---------------------------------------------------------------------------

std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
    std::vector<Matching> out;
    int n = g.vertex_count();
    if (n % 2 != 0) return out;
    if (n == 0) {
        out.push_back(Matching{});
        return out;
    }
    std::vector<Edge> current;
    auto rec = [&](auto&& self, std::uint64_t covered) -> void {
        if (std::popcount(covered) == n) {
            Matching m{current};
            std::sort(m.edges.begin(), m.edges.end());
            out.push_back(std::move(m));
            return;
        }
        int v = std::countr_zero(~covered); // lowest uncovered vertex
        std::uint64_t cands = g.adjacency_mask(v) & ~covered;
        while (cands) {
            int u = std::countr_zero(cands);
            cands &= cands - 1;
            current.push_back(make_edge(v, u));
            self(self, covered | (std::uint64_t{1} << v) | (std::uint64_t{1} << u));
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

bool verify_witness(const Graph& g, const Matching& m, const Matching& n) {
    if (!is_matching_in(g, m.edges) || !is_matching_in(g, n.edges))
        throw std::invalid_argument("witness parts must be matchings of the graph");
    std::uint64_t mv = 0;
    for (const Edge& e : m.edges) mv |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    for (const Edge& e : n.edges) {
        std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        if (mv & mask) return false; // not vertex-disjoint
    }
    for (const Matching& f : enumerate_perfect_matchings(g)) {
        bool contains_m = std::includes(f.edges.begin(), f.edges.end(),
                                        m.edges.begin(), m.edges.end());
        if (!contains_m) continue;
        bool hits_n = false;
        for (const Edge& e : n.edges)
            if (std::binary_search(f.edges.begin(), f.edges.end(), e)) {
                hits_n = true;
                break;
            }
        if (!hits_n) return false; // extension exists, witness invalid
    }
    return true;
}

} // namespace emn
