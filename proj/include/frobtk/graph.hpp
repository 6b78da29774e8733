// Generic graph machinery: matching numbers (pruning procedure and brute
// force), bipartite cover numbers, the graph index and skew adjacency ranks.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobtk/linalg.hpp"

namespace frobtk {

using Edge = std::pair<int, int>;  // stored with first < second

Edge make_edge(int a, int b);

/// Finite simple graph on integer labels, with an optional orientation per
/// edge (the ordered pair as drawn).
class Graph {
public:
    void add_vertex(int v);
    void add_edge(int a, int b);
    void add_arc(int from, int to);  // edge plus orientation

    bool has_vertex(int v) const { return vertices_.count(v) > 0; }
    bool has_edge(int a, int b) const { return edges_.count(make_edge(a, b)) > 0; }

    const std::set<int>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    const std::map<Edge, std::pair<int, int>>& orientation() const { return orientation_; }
    std::optional<std::pair<int, int>> arc(const Edge& e) const;

    int vx() const { return int(vertices_.size()); }
    std::set<int> neighbors(int v) const;
    int degree(int v) const;

    bool is_forest() const;
    bool oriented() const { return orientation_.size() == edges_.size(); }
    std::vector<std::set<int>> components() const;
    Graph induced(const std::set<int>& verts) const;

    /// 2-coloring when bipartite.
    std::optional<std::map<int, int>> bipartition() const;

private:
    std::set<int> vertices_;
    std::set<Edge> edges_;
    std::map<Edge, std::pair<int, int>> orientation_;
};

struct MatchingCertificate {
    std::set<Edge> edges;
    int number = 0;
};

/// Maximum matching of a forest by the pruning procedure: stars contribute 1,
/// terminal chains of length 2 are removed, otherwise a branch vertex with at
/// most one non-terminal edge loses its star.
MatchingCertificate matching_number_pruned(const Graph& g);

/// Exhaustive maximum matching; the oracle used in tests. Refuses more than
/// 24 edges.
MatchingCertificate matching_number_bruteforce(const Graph& g);

/// Dispatches to the pruning procedure, augmenting paths or brute force.
MatchingCertificate matching_number(const Graph& g);

struct CoverCertificate {
    std::set<int> cover;
    int number = 0;
};

/// Minimum vertex cover of a bipartite graph (equal to the matching number),
/// extracted from the alternating reachability of a maximum matching.
CoverCertificate cover_number_bipartite(const Graph& g);

/// vx - 2 mn.
int graph_index(const Graph& g);

/// Skew adjacency matrix M with +1 at (i,j) for an arrow i -> j, over the
/// given vertex order (defaults to sorted labels).
RationalMatrix skew_adjacency_matrix(const Graph& g, const std::vector<int>& order = {});

int skew_adjacency_rank(const Graph& g);

/// The +-1 diagonal conjugating the skew adjacency of `a` into that of `b`
/// when the two are orientations of the same forest: vertices behind every
/// reversed arrow flip sign.
std::vector<Rat> orientation_conjugator(const Graph& a, const Graph& b,
                                        const std::vector<int>& order);

bool graphs_isomorphic(const Graph& a, const Graph& b);

std::string graph_dot(const Graph& g, const std::string& header_comment = "");

}  // namespace frobtk
