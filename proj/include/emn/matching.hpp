#ifndef EMN_MATCHING_HPP
#define EMN_MATCHING_HPP

#include <optional>
#include <string>
#include <vector>

#include "emn/graph.hpp"

namespace emn {

/// Set of pairwise vertex-disjoint edges, kept sorted.
struct Matching {
    std::vector<Edge> edges;

    int size() const noexcept { return static_cast<int>(edges.size()); }
    bool operator==(const Matching&) const = default;
};

/// True iff the edges are pairwise vertex-disjoint and all belong to g.
bool is_matching_in(const Graph& g, const std::vector<Edge>& edges);

/// Maximum-cardinality matching via augmenting paths with blossom
/// contraction. This is the one polynomial kernel every E(m,n) decision
/// reduces to.
Matching max_matching(const Graph& g);

/// Perfect matching F with forced ⊆ F and F ∩ forbidden = ∅, if one exists.
/// Deletes the vertices covered by `forced` and the forbidden edges, then
/// decides perfect matching on the remainder.
std::optional<Matching> constrained_perfect_matching(const Graph& g,
                                                     const Matching& forced,
                                                     const std::vector<Edge>& forbidden);

struct EmnQuery {
    int m = 0; // forced matching size
    int n = 0; // forbidden matching size
};

enum class EmnOutcome { Holds, Fails, NotApplicable };

struct EmnWitness {
    Matching forced;    // M
    Matching forbidden; // N
};

struct EmnVerdict {
    EmnOutcome outcome = EmnOutcome::NotApplicable;
    std::optional<EmnWitness> witness; // present iff outcome == Fails
    std::string reason;                // present iff outcome == NotApplicable
    long pairs_checked = 0;            // (M,N) pairs examined by the decision

    // Holds because no vertex-disjoint pair of the requested sizes exists at
    // all. The property is then true by empty quantification, but the
    // classical implications presuppose the matchings exist, so consistency
    // suites treat such graphs as out of the premise.
    bool vacuous() const noexcept {
        return outcome == EmnOutcome::Holds && pairs_checked == 0;
    }
};

const char* outcome_name(EmnOutcome o);

/// Decides property E(m,n): for every pair of vertex-disjoint matchings
/// M (size m) and N (size n) there is a perfect matching containing M and
/// avoiding N. Graphs that are disconnected, have fewer than 2m+2n+2
/// vertices, or an odd vertex count are NotApplicable. A failing graph
/// reports the lexicographically first failing pair under sorted edge
/// order, M chosen before N.
EmnVerdict has_property_emn(const Graph& g, EmnQuery q);

/// Independent audit of a failure witness: true iff m and n are vertex- and
/// edge-disjoint matchings and no perfect matching of g contains m while
/// avoiding n. Decided by enumerating all perfect matchings; does not touch
/// the blossom code path.
bool verify_witness(const Graph& g, const Matching& m, const Matching& n);

/// All perfect matchings of g, each sorted, in lexicographic order.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g);

} // namespace emn

#endif
