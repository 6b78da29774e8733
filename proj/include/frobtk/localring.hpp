// The full and reduced local rings of a graph: radical power dimensions,
// graph connectedness from the presentation, and reconstruction with the
// triangle / three-pointed-star exception.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "frobtk/graph.hpp"

namespace frobtk {

/// K[e_1..e_k] / (e_a e_b = 0 whenever the edges share a vertex), captured
/// entirely by the conflict relation. Generator squares always vanish.
struct RingPresentation {
    int generators = 0;                       // labeled 0..generators-1
    std::vector<Edge> edge_of;                // source edge per generator
    std::set<std::pair<int, int>> conflicts;  // unordered, stored a < b

    bool conflicting(int a, int b) const;
};

RingPresentation present(const Graph& g);

/// dim J^k = number of k-matchings of the source graph, until the power dies;
/// the nilpotence index is one past the last entry.
std::vector<long long> radical_power_dims(const RingPresentation& p);

/// Connectivity of the generator set under the conflict relation, which holds
/// exactly when the source graph is connected.
bool graph_connected(const RingPresentation& p);

struct AmbiguousR3 {};

/// Rebuilds a connected graph from its presentation; R_3 (three generators in
/// pairwise conflict) is the triangle / three-pointed-star ambiguity.
std::variant<Graph, AmbiguousR3> reconstruct(const RingPresentation& p);

/// Degreewise dimensions of the image of the ring inside the even exterior
/// algebra on the vertices; exact ranks over Q. (In characteristic 2 these
/// dimensions differ; everything here is characteristic zero.)
std::vector<long long> reduced_radical_dims(const Graph& g);

std::string presentation_json(const RingPresentation& p);

}  // namespace frobtk
