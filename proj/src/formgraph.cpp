#include "frobtk/formgraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace frobtk {

std::string form_vertex_str(const FormVertex& v) {
    std::string tag = v.kind == FormVertex::MatrixUnit ? "e" : "d";
    return tag + std::to_string(v.p.i) + "," + std::to_string(v.p.j);
}

int FormGraph::index_of(const FormVertex& v) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v)
        throw std::invalid_argument("form graph has no vertex " + form_vertex_str(v));
    return int(it - verts.begin());
}

Graph FormGraph::undirected() const {
    Graph g;
    for (int i = 0; i < vx(); ++i) g.add_vertex(i);
    for (const auto& [a, b] : arcs) g.add_arc(a, b);
    return g;
}

FormGraph build_form_graph(const LieSupport& g, const std::set<IndexPair>& s) {
    for (const auto& p : s)
        if (!g.contains(p.i, p.j))
            throw std::invalid_argument("support pair outside the algebra: " + pair_str(p));
    if (!is_tree(gamma_graph(g.n(), s)))
        throw std::invalid_argument("build_form_graph: gamma(S) is not a tree");

    FormGraph fg;
    fg.g = g;
    fg.s = s;
    for (const auto& p : g.pairs()) fg.verts.push_back(FormVertex::unit(p.i, p.j));
    for (const auto& p : s) fg.verts.push_back(FormVertex::dual(p));
    // already sorted: units in pair order, duals after (Kind order), duals by s

    for (const auto& p : g.pairs()) {
        int from = fg.index_of(FormVertex::unit(p.i, p.j));
        // e_ij -> e_jl exactly when (i,l) in S
        for (const auto& t : s) {
            if (t.i != p.i) continue;
            int l = t.j;
            if (l == p.j || !g.contains(p.j, l)) continue;
            fg.arcs.insert({from, fg.index_of(FormVertex::unit(p.j, l))});
        }
    }
    for (const auto& p : s) {
        int from = fg.index_of(FormVertex::dual(p));
        int to = fg.index_of(FormVertex::unit(p.i, p.j));
        fg.arcs.insert({from, to});
    }
    return fg;
}

namespace {

long vertex_eigenvalue(const FormVertex& v, const PrincipalElement& d) {
    if (v.kind == FormVertex::Dual) return 0;
    Rat val = d.diagonal[v.p.i - 1] - d.diagonal[v.p.j - 1];
    if (val.get_den() != 1) throw std::logic_error("non-integral eigenvalue");
    return long(val.get_num().get_si());
}

std::vector<std::vector<int>> undirected_components(const FormGraph& fg) {
    std::vector<std::set<int>> adj(fg.vx());
    for (const auto& [a, b] : fg.arcs) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(fg.vx(), false);
    for (int v = 0; v < fg.vx(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        seen[v] = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            comp.push_back(x);
            for (int w : adj[x])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // component ids are their smallest vertex, already the sort key
    return comps;
}

std::optional<int> component_root(const FormGraph& fg, const std::vector<int>& comp) {
    std::map<int, int> indeg;
    for (int v : comp) indeg[v] = 0;
    size_t arc_count = 0;
    for (const auto& [a, b] : fg.arcs)
        if (indeg.count(a) && indeg.count(b)) {
            indeg[b]++;
            ++arc_count;
        }
    if (arc_count != comp.size() - 1) return std::nullopt;  // not a tree
    int root = -1;
    for (const auto& [v, d] : indeg) {
        if (d == 0) {
            if (root >= 0) return std::nullopt;
            root = v;
        } else if (d != 1) {
            return std::nullopt;
        }
    }
    return root < 0 ? std::nullopt : std::optional<int>(root);
}

}  // namespace

std::vector<FormComponent> eigenpair_components(const FormGraph& fg, const PrincipalElement& d) {
    std::vector<FormComponent> out;
    for (const auto& comp : undirected_components(fg)) {
        FormComponent fc;
        fc.id = comp.front();
        fc.verts = comp;
        fc.root = component_root(fg, comp);

        std::set<long> values;
        for (int v : comp) values.insert(vertex_eigenvalue(fg.verts[v], d));
        long m;
        if (values.size() == 1) {
            m = *values.begin();
        } else if (values.size() == 2) {
            long a = *values.begin(), b = *values.rbegin();
            if (a + b != 1)
                throw std::logic_error("component eigenvalues are not a (m, 1-m) pair");
            m = a;
        } else {
            throw std::logic_error("component mixes more than two eigenvalues");
        }
        // present the pair through the root's eigenvalue when there is one
        if (fc.root)
            fc.eigen_m = vertex_eigenvalue(fg.verts[*fc.root], d);
        else
            fc.eigen_m = m;

        Graph sub;
        for (int v : comp) sub.add_vertex(v);
        for (const auto& [a, b] : fg.arcs)
            if (std::binary_search(comp.begin(), comp.end(), a) &&
                std::binary_search(comp.begin(), comp.end(), b))
                sub.add_arc(a, b);
        fc.mn = matching_number(sub).number;
        fc.skew_rank = sub.edges().empty() ? 0 : skew_adjacency_rank(sub);
        out.push_back(std::move(fc));
    }
    return out;
}

bool rooted_components_check(const FormGraph& fg) {
    for (const auto& comp : undirected_components(fg))
        if (!component_root(fg, comp)) return false;
    return true;
}

PerfectMatchingResult perfect_matching_unique(const FormGraph& fg) {
    Graph g = fg.undirected();
    if (!g.is_forest())
        throw std::invalid_argument("perfect matching check requires forest components");

    PerfectMatchingResult res;
    std::map<int, std::set<int>> adj;
    for (int v : g.vertices()) adj[v];
    for (const auto& e : g.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    // a leaf's edge is forced, so strip leaves; leftovers mean no matching
    std::queue<int> leaves;
    for (const auto& [v, nb] : adj)
        if (nb.size() == 1) leaves.push(v);
    std::set<int> gone;
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        if (gone.count(v) || adj[v].empty()) continue;
        int w = *adj[v].begin();
        res.matching.edges.insert(make_edge(v, w));
        res.matching.number++;
        for (int x : adj[w])
            if (x != v) {
                adj[x].erase(w);
                if (adj[x].size() == 1) leaves.push(x);
            }
        adj[v].clear();
        adj[w].clear();
        gone.insert(v);
        gone.insert(w);
    }
    size_t unmatched = 0;
    for (const auto& [v, nb] : adj)
        if (!gone.count(v)) ++unmatched;
    res.exists = unmatched == 0;
    res.unique = res.exists;  // forced edges all the way down
    if (!res.exists) {
        res.matching = {};
        res.unique = false;
    }
    return res;
}

FormGraph build_form_graph_recursive(int n, int m) {
    if (n == 2 && m == 1)
        return build_form_graph(LieSupport::parabolic(2, 1), cyclic_support(2, 1));

    Reduction red = cyclic_reduce(n, m);
    FormGraph smaller = build_form_graph_recursive(red.n, red.m);

    LieSupport g = LieSupport::parabolic(n, m);
    std::set<IndexPair> s = cyclic_support(n, m);
    SmallGraph gamma = gamma_graph(n, s);
    std::vector<int> pred(n + 1, 0);
    for (const auto& a : s) pred[a.j] = a.i;

    FormGraph fg;
    fg.g = g;
    fg.s = s;
    for (const auto& p : g.pairs()) fg.verts.push_back(FormVertex::unit(p.i, p.j));
    for (const auto& p : s) fg.verts.push_back(FormVertex::dual(p));

    // carry the smaller graph over, complementing labels after an unstable step
    auto relabel = [&](const FormVertex& v) {
        if (red.kind == ReductionKind::Stable) return v;
        IndexPair q{m + 1 - v.p.i, m + 1 - v.p.j};
        return FormVertex{v.kind, q};
    };
    for (const auto& [a, b] : smaller.arcs) {
        FormVertex va = relabel(smaller.verts[a]);
        FormVertex vb = relabel(smaller.verts[b]);
        fg.arcs.insert({fg.index_of(va), fg.index_of(vb)});
    }

    // the removed first block: rows n-m+1..n, columns m+1..n; each cell gains
    // its unique predecessor in the second block, as a terminal chain when
    // that predecessor has one of its own and as a disconnected arrow else
    for (int k = n - m + 1; k <= n; ++k)
        for (int l = m + 1; l <= n; ++l) {
            if (k == l) continue;
            int j = pred[l];
            int jk = fg.index_of(FormVertex::unit(j, k));
            int kl = fg.index_of(FormVertex::unit(k, l));
            fg.arcs.insert({jk, kl});
            int i = pred[k];
            if (i != 0 && i != j && g.contains(i, j))
                fg.arcs.insert({fg.index_of(FormVertex::unit(i, j)), jk});
        }

    // after an unstable step the second-block columns dip below m+1, so its
    // vertices can also feed back into the carried region
    for (int j = 1; j <= n - m; ++j)
        for (int k = n - m + 1; k <= n; ++k) {
            if (j == k) continue;
            for (const auto& t : s) {
                if (t.i != j || t.j == k) continue;
                if (g.contains(k, t.j))
                    fg.arcs.insert({fg.index_of(FormVertex::unit(j, k)),
                                    fg.index_of(FormVertex::unit(k, t.j))});
            }
        }

    // fresh d_s -> e_s links for the support pairs the reduction removed
    int lo = red.kind == ReductionKind::Stable ? n - 2 * m + 1 : 1;
    for (int i = std::max(1, lo); i <= n - m; ++i) {
        IndexPair sp{i, i + m};
        fg.arcs.insert({fg.index_of(FormVertex::dual(sp)), fg.index_of(FormVertex::unit(i, i + m))});
    }
    return fg;
}

std::string form_graph_dot(const FormGraph& fg, const PrincipalElement& d,
                           const std::string& header_comment) {
    std::ostringstream os;
    if (!header_comment.empty()) os << "// " << header_comment << "\n";
    os << "digraph formgraph {\n";
    auto comps = eigenpair_components(fg, d);
    int cluster = 0;
    for (const auto& c : comps) {
        os << "  subgraph cluster" << cluster++ << " {\n";
        os << "    label=\"(" << c.eigen_m << ", " << 1 - c.eigen_m << ")\";\n";
        for (int v : c.verts)
            os << "    n" << v << " [label=\"" << form_vertex_str(fg.verts[v]) << "\"];\n";
        os << "  }\n";
    }
    for (const auto& [a, b] : fg.arcs) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string form_graph_summary_json(const FormGraph& fg, const PrincipalElement& d) {
    nlohmann::json j;
    j["schema"] = 1;
    j["vertices"] = fg.vx();
    j["arcs"] = fg.arcs.size();
    auto comps = eigenpair_components(fg, d);
    j["components"] = nlohmann::json::array();
    for (const auto& c : comps) {
        nlohmann::json cj;
        cj["id"] = c.id;
        cj["vertices"] = c.verts.size();
        cj["eigenpair"] = {c.eigen_m, 1 - c.eigen_m};
        cj["mn"] = c.mn;
        cj["rank"] = c.skew_rank;
        cj["rooted"] = c.root.has_value();
        j["components"].push_back(cj);
    }
    return j.dump(2);
}

}  // namespace frobtk
