#include "frobtk/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace frobtk {

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    return a < b ? Edge{a, b} : Edge{b, a};
}

void Graph::add_vertex(int v) { vertices_.insert(v); }

void Graph::add_edge(int a, int b) {
    vertices_.insert(a);
    vertices_.insert(b);
    edges_.insert(make_edge(a, b));
}

void Graph::add_arc(int from, int to) {
    add_edge(from, to);
    orientation_[make_edge(from, to)] = {from, to};
}

std::optional<std::pair<int, int>> Graph::arc(const Edge& e) const {
    auto it = orientation_.find(e);
    if (it == orientation_.end()) return std::nullopt;
    return it->second;
}

std::set<int> Graph::neighbors(int v) const {
    std::set<int> out;
    for (const auto& e : edges_) {
        if (e.first == v) out.insert(e.second);
        if (e.second == v) out.insert(e.first);
    }
    return out;
}

int Graph::degree(int v) const { return int(neighbors(v).size()); }

std::vector<std::set<int>> Graph::components() const {
    std::map<int, std::set<int>> adj;
    for (int v : vertices_) adj[v];
    for (const auto& e : edges_) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::vector<std::set<int>> out;
    std::set<int> seen;
    for (int v : vertices_) {
        if (seen.count(v)) continue;
        std::set<int> comp;
        std::queue<int> q;
        q.push(v);
        comp.insert(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : adj[x])
                if (!comp.count(w)) {
                    comp.insert(w);
                    q.push(w);
                }
        }
        seen.insert(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph Graph::induced(const std::set<int>& verts) const {
    Graph g;
    for (int v : verts) g.add_vertex(v);
    for (const auto& e : edges_)
        if (verts.count(e.first) && verts.count(e.second)) {
            g.edges_.insert(e);
            auto it = orientation_.find(e);
            if (it != orientation_.end()) g.orientation_[e] = it->second;
        }
    return g;
}

bool Graph::is_forest() const {
    return edges_.size() + components().size() == vertices_.size();
}

std::optional<std::map<int, int>> Graph::bipartition() const {
    std::map<int, std::set<int>> adj;
    for (const auto& e : edges_) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::map<int, int> color;
    for (int v : vertices_) {
        if (color.count(v)) continue;
        color[v] = 0;
        std::queue<int> q;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : adj[x]) {
                if (!color.count(w)) {
                    color[w] = 1 - color[x];
                    q.push(w);
                } else if (color[w] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

MatchingCertificate matching_number_pruned(const Graph& g) {
    if (!g.is_forest()) throw std::invalid_argument("pruning requires a forest");

    std::map<int, std::set<int>> adj;
    for (int v : g.vertices()) adj[v];
    for (const auto& e : g.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }

    MatchingCertificate cert;
    auto remove_vertex = [&](int v) {
        for (int w : adj[v]) adj[w].erase(v);
        adj.erase(v);
    };

    while (true) {
        // drop isolated vertices
        for (auto it = adj.begin(); it != adj.end();)
            it = it->second.empty() ? adj.erase(it) : std::next(it);
        if (adj.empty()) break;

        // star component: some vertex meets every edge of its component
        {
            std::optional<std::pair<int, int>> hit;  // center, leaf
            std::set<int> seen;
            for (const auto& [v, nb] : adj) {
                if (seen.count(v)) continue;
                std::set<int> comp{v};
                std::queue<int> q;
                q.push(v);
                size_t edges = 0;
                while (!q.empty()) {
                    int x = q.front();
                    q.pop();
                    edges += adj[x].size();
                    for (int w : adj[x])
                        if (!comp.count(w)) {
                            comp.insert(w);
                            q.push(w);
                        }
                }
                edges /= 2;
                for (int x : comp)
                    if (adj[x].size() == edges) {
                        hit = {x, *adj[x].begin()};
                        break;
                    }
                if (hit) break;
                seen.insert(comp.begin(), comp.end());
            }
            if (hit) {
                cert.edges.insert(make_edge(hit->first, hit->second));
                cert.number++;
                std::vector<int> nb(adj[hit->first].begin(), adj[hit->first].end());
                remove_vertex(hit->first);
                for (int w : nb)
                    if (adj.count(w) && adj[w].empty()) adj.erase(w);
                continue;
            }
        }

        // terminal chain of length 2: end a, interior b of degree 2
        {
            std::optional<std::pair<int, int>> hit;  // end, interior
            for (const auto& [v, nb] : adj) {
                if (nb.size() != 1) continue;
                int mid = *nb.begin();
                if (adj[mid].size() == 2) {
                    hit = {v, mid};
                    break;
                }
            }
            if (hit) {
                cert.edges.insert(make_edge(hit->first, hit->second));
                cert.number++;
                remove_vertex(hit->first);
                remove_vertex(hit->second);
                continue;
            }
        }

        // branch vertex with at most one non-terminal incident edge
        {
            std::optional<std::pair<int, int>> hit;  // branch vertex, leaf
            for (const auto& [x, nb] : adj) {
                if (nb.size() < 3) continue;
                int nonterminal = 0;
                std::optional<int> best_leaf;
                for (int w : nb) {
                    if (adj[w].size() == 1) {
                        if (!best_leaf) best_leaf = w;
                    } else {
                        nonterminal++;
                    }
                }
                if (nonterminal <= 1 && best_leaf) {
                    hit = {x, *best_leaf};
                    break;
                }
            }
            if (!hit) throw std::logic_error("pruning: no reducible configuration found");
            cert.edges.insert(make_edge(hit->first, hit->second));
            cert.number++;
            remove_vertex(hit->first);
        }
    }
    return cert;
}

namespace {

void brute_recurse(const std::vector<Edge>& edges, size_t idx, std::set<int>& used,
                   std::set<Edge>& cur, MatchingCertificate& best) {
    if (cur.size() + (edges.size() - idx) <= best.edges.size()) return;
    if (idx == edges.size()) {
        if (int(cur.size()) > best.number) best = {cur, int(cur.size())};
        return;
    }
    const Edge& e = edges[idx];
    if (!used.count(e.first) && !used.count(e.second)) {
        used.insert(e.first);
        used.insert(e.second);
        cur.insert(e);
        brute_recurse(edges, idx + 1, used, cur, best);
        cur.erase(e);
        used.erase(e.first);
        used.erase(e.second);
    }
    brute_recurse(edges, idx + 1, used, cur, best);
}

// Kuhn's augmenting-path maximum matching on a bipartition.
struct BipartiteMatching {
    std::map<int, int> match;  // both directions
    int size = 0;
};

BipartiteMatching kuhn(const Graph& g, const std::map<int, int>& color) {
    BipartiteMatching bm;
    std::map<int, std::set<int>> adj;
    for (const auto& e : g.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::function<bool(int, std::set<int>&)> try_augment = [&](int v, std::set<int>& seen) {
        for (int w : adj[v]) {
            if (seen.count(w)) continue;
            seen.insert(w);
            if (!bm.match.count(w) || try_augment(bm.match[w], seen)) {
                bm.match[w] = v;
                bm.match[v] = w;
                return true;
            }
        }
        return false;
    };
    for (int v : g.vertices()) {
        if (color.at(v) != 0 || bm.match.count(v)) continue;
        std::set<int> seen;
        if (try_augment(v, seen)) bm.size++;
    }
    return bm;
}

}  // namespace

MatchingCertificate matching_number_bruteforce(const Graph& g) {
    if (g.edges().size() > 24)
        throw std::invalid_argument("brute force matching capped at 24 edges");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    MatchingCertificate best;
    std::set<int> used;
    std::set<Edge> cur;
    brute_recurse(edges, 0, used, cur, best);
    return best;
}

MatchingCertificate matching_number(const Graph& g) {
    if (g.is_forest()) return matching_number_pruned(g);
    auto color = g.bipartition();
    if (color) {
        BipartiteMatching bm = kuhn(g, *color);
        MatchingCertificate cert;
        cert.number = bm.size;
        for (const auto& [v, w] : bm.match)
            if (v < w) cert.edges.insert({v, w});
        return cert;
    }
    return matching_number_bruteforce(g);
}

CoverCertificate cover_number_bipartite(const Graph& g) {
    auto color = g.bipartition();
    if (!color) throw std::invalid_argument("cover_number_bipartite: graph is not bipartite");
    BipartiteMatching bm = kuhn(g, *color);

    // Koenig: alternating reachability from the unmatched left vertices
    std::map<int, std::set<int>> adj;
    for (const auto& e : g.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::set<int> reach;
    std::queue<int> q;
    for (int v : g.vertices())
        if (color->at(v) == 0 && !bm.match.count(v)) {
            reach.insert(v);
            q.push(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            bool matched_edge = bm.match.count(v) && bm.match.at(v) == w;
            // left -> right along unmatched edges, right -> left along matched
            if ((color->at(v) == 0) == matched_edge) continue;
            if (!reach.count(w)) {
                reach.insert(w);
                q.push(w);
            }
        }
    }

    CoverCertificate cert;
    for (int v : g.vertices()) {
        bool left = color->at(v) == 0;
        if ((left && !reach.count(v)) || (!left && reach.count(v))) cert.cover.insert(v);
    }
    cert.number = int(cert.cover.size());

    for (const auto& e : g.edges())
        if (!cert.cover.count(e.first) && !cert.cover.count(e.second))
            throw std::logic_error("cover extraction failed to cover an edge");
    if (cert.number != bm.size) throw std::logic_error("cover size differs from matching size");
    return cert;
}

int graph_index(const Graph& g) { return g.vx() - 2 * matching_number(g).number; }

RationalMatrix skew_adjacency_matrix(const Graph& g, const std::vector<int>& order) {
    if (!g.oriented())
        throw std::invalid_argument("skew adjacency requires a total orientation");
    std::vector<int> verts = order;
    if (verts.empty()) verts.assign(g.vertices().begin(), g.vertices().end());
    std::map<int, int> pos;
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = int(i);

    RationalMatrix m(int(verts.size()), int(verts.size()));
    for (const auto& [e, dir] : g.orientation()) {
        m.set(pos.at(dir.first), pos.at(dir.second), 1);
        m.set(pos.at(dir.second), pos.at(dir.first), -1);
    }
    return m;
}

int skew_adjacency_rank(const Graph& g) { return eliminate(skew_adjacency_matrix(g)).rank; }

std::vector<Rat> orientation_conjugator(const Graph& a, const Graph& b,
                                        const std::vector<int>& order) {
    if (a.edges() != b.edges()) throw std::invalid_argument("conjugator: different graphs");
    if (!a.is_forest()) throw std::invalid_argument("conjugator: forests only");

    std::map<int, std::set<int>> adj;
    for (const auto& e : a.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::map<int, int> flips;
    for (int v : order) flips[v] = 0;

    for (const auto& e : a.edges()) {
        auto da = a.arc(e), db = b.arc(e);
        if (*da == *db) continue;
        // vertices left connected to the head of the a-arrow change sign
        int head = da->second;
        std::set<int> side{head};
        std::queue<int> q;
        q.push(head);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (v == e.first && w == e.second) continue;
                if (v == e.second && w == e.first) continue;
                if (!side.count(w)) {
                    side.insert(w);
                    q.push(w);
                }
            }
        }
        for (int v : side) flips[v] ^= 1;
    }

    std::vector<Rat> d;
    d.reserve(order.size());
    for (int v : order) d.push_back(Rat(flips[v] ? -1 : 1));
    return d;
}

namespace {

// Weisfeiler-Leman style color refinement, then backtracking inside classes.
std::map<int, long> refine_colors(const Graph& g) {
    std::map<int, long> color;
    for (int v : g.vertices()) color[v] = g.degree(v);
    for (int round = 0; round < g.vx(); ++round) {
        std::map<int, std::vector<long>> sig;
        for (int v : g.vertices()) {
            std::vector<long> s{color[v]};
            std::vector<long> nb;
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = std::move(s);
        }
        // canonical class numbers: rank of the signature in sorted order, so
        // colors are comparable across graphs
        std::map<std::vector<long>, long> relabel;
        for (const auto& [v, s] : sig) relabel[s];
        long rank = 0;
        for (auto& [s, r] : relabel) r = rank++;
        std::map<int, long> next;
        for (const auto& [v, s] : sig) next[v] = relabel[s];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool iso_backtrack(const std::vector<int>& va, const Graph& a, const Graph& b,
                   const std::map<int, long>& ca, const std::map<int, long>& cb,
                   std::map<int, int>& image, std::set<int>& used, size_t idx) {
    if (idx == va.size()) return true;
    int v = va[idx];
    for (int w : b.vertices()) {
        if (used.count(w) || cb.at(w) != ca.at(v)) continue;
        bool ok = true;
        for (const auto& [x, y] : image) {
            if (a.has_edge(v, x) != b.has_edge(w, y)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[v] = w;
        used.insert(w);
        if (iso_backtrack(va, a, b, ca, cb, image, used, idx + 1)) return true;
        image.erase(v);
        used.erase(w);
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vx() != b.vx() || a.edges().size() != b.edges().size()) return false;
    auto ca = refine_colors(a), cb = refine_colors(b);
    std::map<long, int> ha, hb;
    for (const auto& [v, c] : ca) ha[c]++;
    for (const auto& [v, c] : cb) hb[c]++;
    // refinement colors are only canonical per-graph up to histogram
    std::vector<int> hav, hbv;
    for (const auto& [c, k] : ha) hav.push_back(k);
    for (const auto& [c, k] : hb) hbv.push_back(k);
    std::sort(hav.begin(), hav.end());
    std::sort(hbv.begin(), hbv.end());
    if (hav != hbv) return false;

    std::vector<int> va(a.vertices().begin(), a.vertices().end());
    std::sort(va.begin(), va.end(), [&](int x, int y) {
        return std::make_pair(ha[ca[x]], ca[x]) < std::make_pair(ha[ca[y]], ca[y]);
    });
    std::map<int, int> image;
    std::set<int> used;
    return iso_backtrack(va, a, b, ca, cb, image, used, 0);
}

std::string graph_dot(const Graph& g, const std::string& header_comment) {
    std::ostringstream os;
    if (!header_comment.empty()) os << "// " << header_comment << "\n";
    bool directed = g.oriented();
    os << (directed ? "digraph" : "graph") << " g {\n";
    for (int v : g.vertices()) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& e : g.edges()) {
        if (directed) {
            auto d = g.arc(e);
            os << "  v" << d->first << " -> v" << d->second << ";\n";
        } else {
            os << "  v" << e.first << " -- v" << e.second << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace frobtk
