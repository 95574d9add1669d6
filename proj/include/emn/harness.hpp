#ifndef EMN_HARNESS_HPP
#define EMN_HARNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "emn/embedding.hpp"
#include "emn/graph.hpp"
#include "emn/matching.hpp"

namespace emn {

/// Canonical graph6 encoding: the minimum adjacency bit string over all
/// vertex relabelings. Two graphs have equal canonical forms iff they are
/// isomorphic. Brute-force permutation search with prefix pruning;
/// budget-limited to n <= 10.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, in a deterministic order, optionally filtered by minimum
/// degree. Built by vertex augmentation with canonical-form deduplication;
/// budget-limited to n <= 8 (plug larger corpora in via graph6 files).
std::vector<Graph> enumerate_connected_graphs(int n,
                                              std::optional<int> min_degree = {});

struct CheckCounts {
    long tested = 0;         // premise applied and resolved
    long holds = 0;          // resolved consistent
    long fails = 0;          // resolved violation
    long not_applicable = 0; // premise vacuous on this graph
    long skipped = 0;        // unresolved (budget)
};

struct Violation {
    std::string graph6;
    std::string check;
    std::string detail;
};

struct ScanReport {
    std::string corpus;
    long corpus_size = 0;
    std::vector<std::string> checks;
    std::map<std::string, CheckCounts> counts;
    std::vector<Violation> violations;

    bool clean() const noexcept { return violations.empty(); }
};

/// Evaluates E(m,n) for all m <= max_m, n <= max_n on every corpus graph and
/// asserts the classical consistency implications:
///   connectivity_bound          E(m,0) graphs are (m+1)-connected
///   neighborhood_matching_bound a degree-(m+t) vertex of an E(m,0) graph
///                               has no t-matching in its neighborhood
///   implies_unrestricted        E(m,n) implies E(m,0)
///   implies_smaller_forced      E(m,n) implies E(m-1,n)
///   trade_forced_for_forbidden  E(m,0) implies E(m-1,1)
///   min_degree_bound            E(m,1) graphs have minimum degree >= m+2
///   witness_audit               every failure witness survives re-checking
///                               against plain perfect-matching enumeration
ScanReport run_lemma_suite(const std::vector<Graph>& corpus, int max_m, int max_n,
                           int jobs = 1);

struct EmbeddedGraph {
    Graph graph;
    std::optional<CombinatorialMap> map; // computed when absent and needed
};

/// Surface checks per graph:
///   surface_extendability_bound  no graph embedded on a surface S is
///                                E(mu(S)-1, 1)
///   vertex_count_bound           graphs with at least the threshold vertex
///                                count for (k, S) are not E(k-1,1)
///   control_point_bound          a control point with x triangular corners
///                                among its y corners rules out
///                                E(y - ceil(x/2), 1)
///   witness_audit                as in the lemma suite
/// When a map is given its surface is used; otherwise the orientable genus
/// is resolved exhaustively, but only when some verdict actually depends on
/// it, and graphs whose search space exceeds the budget are counted as
/// skipped rather than failed.
ScanReport run_theorem_suite(const std::vector<EmbeddedGraph>& corpus,
                             const GenusBudget& budget = {}, int jobs = 1);

nlohmann::ordered_json report_to_json(const ScanReport& report);
std::string report_to_table(const ScanReport& report);

nlohmann::ordered_json witness_to_json(const EmnWitness& w);
nlohmann::ordered_json verdict_to_json(const EmnVerdict& v);

} // namespace emn

#endif
