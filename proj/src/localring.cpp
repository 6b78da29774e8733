#include "frobtk/localring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace frobtk {

bool RingPresentation::conflicting(int a, int b) const {
    if (a == b) return true;  // squares vanish
    return conflicts.count(a < b ? std::pair{a, b} : std::pair{b, a}) > 0;
}

RingPresentation present(const Graph& g) {
    RingPresentation p;
    p.edge_of.assign(g.edges().begin(), g.edges().end());
    p.generators = int(p.edge_of.size());
    for (int a = 0; a < p.generators; ++a)
        for (int b = a + 1; b < p.generators; ++b) {
            const Edge& ea = p.edge_of[a];
            const Edge& eb = p.edge_of[b];
            if (ea.first == eb.first || ea.first == eb.second || ea.second == eb.first ||
                ea.second == eb.second)
                p.conflicts.insert({a, b});
        }
    return p;
}

namespace {

// count independent k-subsets of the conflict graph (= k-matchings of the
// source)
long long count_independent(const RingPresentation& p, int k) {
    long long count = 0;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (int(chosen.size()) == k) {
            ++count;
            return;
        }
        for (int g = start; g < p.generators; ++g) {
            bool ok = true;
            for (int c : chosen)
                if (p.conflicting(c, g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(g);
            rec(g + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

}  // namespace

std::vector<long long> radical_power_dims(const RingPresentation& p) {
    std::vector<long long> dims;
    for (int k = 1;; ++k) {
        long long d = count_independent(p, k);
        if (d == 0) break;
        dims.push_back(d);
    }
    return dims;
}

bool graph_connected(const RingPresentation& p) {
    if (p.generators <= 1) return true;
    std::vector<int> comp(p.generators, -1);
    std::queue<int> q;
    q.push(0);
    comp[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w = 0; w < p.generators; ++w)
            if (comp[w] < 0 && p.conflicting(v, w)) {
                comp[w] = 0;
                q.push(w);
            }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace {

// Realize the conflict relation as the line graph of a simple graph: each
// generator receives two endpoint vertices and every conflict must route
// through exactly one shared vertex. Every processed generator has both
// endpoints materialized, so a later generator only ever joins existing
// vertices of its conflict partners or opens fresh ones.
struct Realizer {
    const RingPresentation& p;
    std::vector<std::set<int>> vertex_gens;      // incident generators per vertex
    std::vector<std::vector<int>> gen_vertices;  // assigned endpoints per generator

    explicit Realizer(const RingPresentation& pres) : p(pres) {
        gen_vertices.assign(p.generators, {});
    }

    bool can_join(int v, int g) const {
        if (gen_vertices[g].size() >= 2) return false;
        for (int x : gen_vertices[g])
            if (x == v) return false;
        for (int other : vertex_gens[v]) {
            if (other == g || !p.conflicting(other, g)) return false;
            // a simple graph never has two edges sharing both endpoints
            for (int w : gen_vertices[g])
                for (int u : gen_vertices[other])
                    if (w == u) return false;
        }
        return true;
    }

    void attach(int v, int g) {
        vertex_gens[v].insert(g);
        gen_vertices[g].push_back(v);
    }
    void detach(int v, int g) {
        vertex_gens[v].erase(g);
        gen_vertices[g].pop_back();
    }

    bool verify() const {
        for (int a = 0; a < p.generators; ++a)
            for (int b = a + 1; b < p.generators; ++b) {
                int shared = 0;
                for (int v : gen_vertices[a])
                    for (int w : gen_vertices[b])
                        if (v == w) ++shared;
                if ((shared == 1) != p.conflicting(a, b) || shared > 1) return false;
            }
        return true;
    }

    bool solve(int g) {
        if (g == p.generators) return verify();
        std::set<int> pending;
        for (int h = 0; h < g; ++h)
            if (p.conflicting(h, g)) pending.insert(h);
        return place(g, std::move(pending));
    }

    bool place(int g, std::set<int> todo) {
        for (auto it = todo.begin(); it != todo.end();) {
            bool satisfied = false;
            for (int v : gen_vertices[g])
                if (vertex_gens[v].count(*it)) satisfied = true;
            it = satisfied ? todo.erase(it) : std::next(it);
        }
        if (todo.empty()) {
            if (gen_vertices[g].size() == 2) return solve(g + 1);
            int v = int(vertex_gens.size());
            vertex_gens.push_back({});
            attach(v, g);
            bool ok = place(g, {});
            if (!ok) {
                detach(v, g);
                vertex_gens.pop_back();
            }
            return ok;
        }
        if (gen_vertices[g].size() >= 2) return false;
        int pick = *todo.begin();
        for (int v : gen_vertices[pick]) {
            if (!can_join(v, g)) continue;
            attach(v, g);
            if (place(g, todo)) return true;
            detach(v, g);
        }
        return false;
    }
};

}  // namespace

std::variant<Graph, AmbiguousR3> reconstruct(const RingPresentation& p) {
    if (!graph_connected(p)) throw std::invalid_argument("reconstruct: presentation not connected");

    // R_3: three generators in pairwise conflict is the one ambiguous ring
    if (p.generators == 3 && p.conflicts.size() == 3) return AmbiguousR3{};

    if (p.generators == 0) return Graph{};

    Realizer r(p);
    if (!r.solve(0)) throw std::logic_error("reconstruct: presentation is not a line graph");

    Graph g;
    for (int e = 0; e < p.generators; ++e)
        g.add_edge(r.gen_vertices[e][0], r.gen_vertices[e][1]);
    return g;
}

std::vector<long long> reduced_radical_dims(const Graph& g) {
    if (!g.oriented())
        throw std::invalid_argument("reduced_radical_dims: orientation required");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    std::map<int, int> vpos;
    for (size_t i = 0; i < verts.size(); ++i) vpos[verts[i]] = int(i);

    std::vector<long long> dims;
    for (int k = 1;; ++k) {
        // rows: k-matchings as signed wedge monomials over 2k-subsets
        std::vector<std::map<std::vector<int>, int>> rows;
        std::vector<int> chosen;
        std::function<void(int)> rec = [&](int start) {
            if (int(chosen.size()) == k) {
                std::vector<int> word;
                for (int e : chosen) {
                    auto arc = g.arc(edges[e]);
                    word.push_back(vpos[arc->first]);
                    word.push_back(vpos[arc->second]);
                }
                // sort the wedge word, tracking the sign
                int sign = 1;
                for (size_t a = 0; a < word.size(); ++a)
                    for (size_t b = a + 1; b < word.size(); ++b)
                        if (word[a] > word[b]) sign = -sign;
                std::vector<int> sorted = word;
                std::sort(sorted.begin(), sorted.end());
                rows.push_back({{sorted, sign}});
                return;
            }
            for (int e = start; e < int(edges.size()); ++e) {
                bool disjoint = true;
                for (int c : chosen) {
                    const Edge& x = edges[c];
                    const Edge& y = edges[e];
                    if (x.first == y.first || x.first == y.second || x.second == y.first ||
                        x.second == y.second)
                        disjoint = false;
                }
                if (!disjoint) continue;
                chosen.push_back(e);
                rec(e + 1);
                chosen.pop_back();
            }
        };
        rec(0);
        if (rows.empty()) break;

        // exact rank of the monomial matrix
        std::map<std::vector<int>, int> colpos;
        for (const auto& row : rows)
            for (const auto& [mono, s] : row)
                if (!colpos.count(mono)) colpos[mono] = int(colpos.size());
        RationalMatrix m(int(rows.size()), int(colpos.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [mono, s] : rows[r]) m.set(int(r), colpos[mono], Rat(s));
        dims.push_back(eliminate(m).rank);
    }
    return dims;
}

std::string presentation_json(const RingPresentation& p) {
    nlohmann::json j;
    j["schema"] = 1;
    j["generators"] = p.generators;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : p.edge_of) j["edges"].push_back({e.first, e.second});
    j["conflicts"] = nlohmann::json::array();
    for (const auto& [a, b] : p.conflicts) j["conflicts"].push_back({a, b});
    return j.dump(2);
}

}  // namespace frobtk
