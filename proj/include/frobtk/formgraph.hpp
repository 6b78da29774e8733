// The graph Gamma(S) organizing the Kirillov form of a small functional:
// construction, eigenpair components, rooted-tree checks, perfect matchings
// and the reduction-driven recursive rebuild.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobtk/gallery.hpp"
#include "frobtk/graph.hpp"
#include "frobtk/sln.hpp"

namespace frobtk {

/// Vertex of Gamma(S): a matrix unit e_ij (off-diagonal pair of the support,
/// including the pairs of S itself) or the dual Cartan element d_s, s in S.
struct FormVertex {
    enum Kind { MatrixUnit, Dual };
    Kind kind = MatrixUnit;
    IndexPair p{};

    static FormVertex unit(int i, int j) { return {MatrixUnit, {i, j}}; }
    static FormVertex dual(const IndexPair& s) { return {Dual, s}; }
    auto operator<=>(const FormVertex&) const = default;
};

std::string form_vertex_str(const FormVertex& v);

struct FormGraph {
    LieSupport g = LieSupport::parabolic(2, 1);
    std::set<IndexPair> s;
    std::vector<FormVertex> verts;        // canonical order: units lex, then duals
    std::set<std::pair<int, int>> arcs;   // indices into verts

    int index_of(const FormVertex& v) const;
    int vx() const { return int(verts.size()); }
    Graph undirected() const;  // vertex labels = indices, orientation kept
};

/// Arrows e_ij -> e_kl whenever j = k and (i,l) in S, plus d_s -> e_s.
FormGraph build_form_graph(const LieSupport& g, const std::set<IndexPair>& s);

struct FormComponent {
    int id = 0;                  // smallest contained vertex index
    std::vector<int> verts;
    std::optional<int> root;     // unique in-degree-0 vertex of a rooted tree
    long eigen_m = 0;            // component lives on the pair (m, 1-m)
    int mn = 0;
    int skew_rank = 0;
};

/// Components labeled by their (m, 1-m) eigenvalue pair; throws when a
/// component mixes more than one pair.
std::vector<FormComponent> eigenpair_components(const FormGraph& fg, const PrincipalElement& d);

/// True when every component is a tree with one in-degree-0 vertex and all
/// others of in-degree 1.
bool rooted_components_check(const FormGraph& fg);

struct PerfectMatchingResult {
    bool exists = false;
    bool unique = false;
    MatchingCertificate matching;  // edges over vertex indices
};

/// Leaf stripping on the forest: a leaf's edge is forced, so existence
/// certifies uniqueness constructively.
PerfectMatchingResult perfect_matching_unique(const FormGraph& fg);

/// Gamma(n,m) rebuilt from Gamma(n',m') along the stable/unstable block
/// reduction; equals build_form_graph on the cyclic support.
FormGraph build_form_graph_recursive(int n, int m);

std::string form_graph_dot(const FormGraph& fg, const PrincipalElement& d,
                           const std::string& header_comment = "");

std::string form_graph_summary_json(const FormGraph& fg, const PrincipalElement& d);

}  // namespace frobtk
