#include "frobtk/gallery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace frobtk {

namespace {

int gcd_int(int a, int b) { return std::gcd(a, b); }

std::vector<std::set<int>> undirected_adj(const SmallGraph& g) {
    std::vector<std::set<int>> adj(g.n + 1);
    for (const auto& a : g.arcs) {
        adj[a.i].insert(a.j);
        adj[a.j].insert(a.i);
    }
    return adj;
}

}  // namespace

SmallGraph gamma_graph(int n, const std::set<IndexPair>& s) {
    for (const auto& p : s)
        if (p.i < 1 || p.i > n || p.j < 1 || p.j > n || p.i == p.j)
            throw std::invalid_argument("gamma_graph: bad arc " + pair_str(p));
    return SmallGraph{n, s};
}

bool is_tree(const SmallGraph& g) {
    if (int(g.arcs.size()) != g.n - 1) return false;
    auto adj = undirected_adj(g);
    std::vector<bool> seen(g.n + 1, false);
    std::queue<int> q;
    q.push(1);
    seen[1] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == g.n;
}

std::optional<int> rooted_tree_root(const SmallGraph& g) {
    if (!is_tree(g)) return std::nullopt;
    std::vector<int> indeg(g.n + 1, 0);
    for (const auto& a : g.arcs) indeg[a.j]++;
    int root = 0;
    for (int v = 1; v <= g.n; ++v) {
        if (indeg[v] == 0) {
            if (root != 0) return std::nullopt;
            root = v;
        } else if (indeg[v] != 1) {
            return std::nullopt;
        }
    }
    return root == 0 ? std::nullopt : std::optional<int>(root);
}

std::vector<int> cyclic_sequence(int n, int m) {
    std::vector<int> seq(n);
    for (int k = 0; k < n; ++k) seq[k] = (k * m) % n + 1;
    return seq;
}

std::set<IndexPair> cyclic_support(int n, int m, CyclicTrace* trace) {
    if (!(1 <= m && m < n)) throw std::invalid_argument("cyclic: need 1 <= m < n");
    if (gcd_int(n, m) != 1) throw std::invalid_argument("cyclic: gcd(n,m) must be 1");

    std::set<IndexPair> s;
    std::vector<int> word = cyclic_sequence(n, m);
    bool forward = true;  // arrows smaller -> larger at odd levels

    while (word.size() >= 2) {
        const int len = int(word.size());
        auto pred = [&](int i) { return word[(i + len - 1) % len]; };
        auto succ = [&](int i) { return word[(i + 1) % len]; };

        CyclicLevel lv;
        lv.word = word;
        lv.forward_arrows = forward;

        // arrows between cyclically consecutive ascending entries
        for (int i = 0; i < len; ++i) {
            int u = word[i], v = succ(i);
            if (u < v) {
                IndexPair arc = forward ? IndexPair{u, v} : IndexPair{v, u};
                s.insert(arc);
                lv.arrows.push_back(arc);
            }
        }

        // ascending strings, cut at the descents, listed starting with the
        // string that carries the first entry of the word
        if (trace) {
            std::vector<int> heads;
            for (int i = 0; i < len; ++i)
                if (word[i] < pred(i)) heads.push_back(i);
            if (!heads.empty() && heads.front() != 0)
                std::rotate(heads.begin(), heads.end() - 1, heads.end());
            for (int h : heads) {
                std::vector<int> run{word[h]};
                for (int i = (h + 1) % len; word[i] > word[(i + len - 1) % len];
                     i = (i + 1) % len)
                    run.push_back(word[i]);
                lv.strings.push_back(std::move(run));
            }
            trace->levels.push_back(lv);
        }

        // next word keeps the forward cyclic order of the survivors, listed
        // at the descent where each is observed: string heads (drops) after a
        // forward level, string tails (rises) after a backward one
        std::vector<int> next;
        for (int i = 0; i < len; ++i) {
            int u = word[i], v = succ(i);
            if (u > v) next.push_back(forward ? v : u);
        }
        word = std::move(next);
        forward = !forward;
    }
    return s;
}

std::set<IndexPair> prime_support(int n) {
    if (n < 2) throw std::invalid_argument("prime: need n >= 2");
    std::set<IndexPair> s;
    for (int i = 1; i < n; ++i) s.insert({i, i + 1});
    return s;
}

std::set<IndexPair> subprime_support(int n, int m) {
    if (!(1 < m && m < n)) throw std::invalid_argument("subprime: need 1 < m < n");
    std::set<IndexPair> s;
    for (int i = 1; i <= n - m; ++i) s.insert({i, i + m});
    for (int i = 1; i <= m - 1; ++i) s.insert({i + 1, i});
    return s;
}

std::set<IndexPair> upper_triangular_support(int n, int m, UpperTrace* trace) {
    if (!(1 <= m && m < n)) throw std::invalid_argument("upper: need 1 <= m < n");
    if (gcd_int(n, m) != 1) throw std::invalid_argument("upper: gcd(n,m) must be 1");

    std::set<IndexPair> s;
    std::vector<int> word = cyclic_sequence(n, m);
    int cn = n, cm = m;
    bool forward = cn >= 2 * cm;

    while (word.size() >= 2) {
        const int len = int(word.size());
        const int count = cn > 2 * cm ? cm : cn - cm;

        std::vector<int> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        std::set<int> struck;
        if (forward)
            struck.insert(sorted.end() - count, sorted.end());
        else
            struck.insert(sorted.begin(), sorted.begin() + count);

        UpperStep step;
        step.n = cn;
        step.m = cm;
        step.forward = forward;

        for (int i = 0; i < len; ++i) {
            int v = word[i];
            if (!struck.count(v)) continue;
            int p = word[(i + len - 1) % len];
            if (struck.count(p))
                throw std::logic_error("upper: struck value has struck predecessor");
            IndexPair taken = forward ? IndexPair{p, v} : IndexPair{v, p};
            s.insert(taken);
            step.struck.push_back(v);
            step.taken.push_back(taken);
        }
        if (trace) trace->steps.push_back(step);

        std::vector<int> next;
        for (int v : word)
            if (!struck.count(v)) next.push_back(v);
        word = std::move(next);

        if (cn > 2 * cm) {
            cn = cn - cm;
        } else {
            int t = cm;
            cm = cn - cm;
            cn = t;
        }
        if (cn < 2 * cm) forward = !forward;
    }

    for (const auto& p : s)
        if (p.i >= p.j) throw std::logic_error("upper: produced a non-upper pair");
    return s;
}

std::set<IndexPair> dk_support(const LieSupport& g) {
    if (!g.is_seaweed())
        throw std::invalid_argument("dk_support: seaweed or parabolic support required");
    std::set<IndexPair> s;
    int pos = 0;
    for (int a : g.top()) {
        // corner (pos+1, pos+a), antidiagonal down to the main diagonal
        for (int k = 1; pos + k < pos + a + 1 - k; ++k) s.insert({pos + k, pos + a + 1 - k});
        pos += a;
    }
    pos = 0;
    for (int b : g.bottom()) {
        for (int k = 1; pos + k < pos + b + 1 - k; ++k) s.insert({pos + b + 1 - k, pos + k});
        pos += b;
    }
    return s;
}

namespace {

// components of the tree after deleting one edge; returns the side containing
// `from`
std::set<int> side_of(const SmallGraph& g, const IndexPair& removed, int from) {
    auto adj = undirected_adj(g);
    adj[removed.i].erase(removed.j);
    adj[removed.j].erase(removed.i);
    std::set<int> side;
    std::queue<int> q;
    q.push(from);
    side.insert(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!side.count(w)) {
                side.insert(w);
                q.push(w);
            }
    }
    return side;
}

}  // namespace

std::vector<DualBasisElement> dual_basis(int n, const std::set<IndexPair>& s) {
    SmallGraph g = gamma_graph(n, s);
    if (!is_tree(g)) throw std::invalid_argument("dual_basis: gamma(S) is not a tree");

    std::vector<DualBasisElement> out;
    for (const auto& e : s) {
        DualBasisElement d;
        d.s = e;
        std::set<int> tail_side = side_of(g, e, e.i);
        if (tail_side.count(n)) {
            // negative of the head side keeps eps_n out of the expression
            std::set<int> head_side = side_of(g, e, e.j);
            for (int k : head_side) d.coeff[k] = -1;
        } else {
            for (int k : tail_side) d.coeff[k] = 1;
        }
        out.push_back(std::move(d));
    }

    // duality audit through the bracket: B(d_s, e_{s'}) = delta
    Functional f = Functional::indicator(s);
    for (const auto& d : out)
        for (const auto& e : s) {
            Rat b(0);
            for (const auto& [k, c] : d.coeff)
                b += c * f(bracket(n, BasisElement::eps(k), BasisElement::offdiag(e.i, e.j)));
            if (b != Rat(d.s == e ? 1 : 0))
                throw std::logic_error("dual_basis: duality audit failed at " + pair_str(d.s));
        }
    return out;
}

PrincipalElement principal_candidate(int n, const std::set<IndexPair>& s) {
    SmallGraph g = gamma_graph(n, s);
    if (!is_tree(g)) throw std::invalid_argument("principal: gamma(S) is not a tree");

    // route (a): sum the dual basis elements
    std::vector<Rat> via_duals(n + 1, Rat(0));
    {
        std::vector<Rat> c(n + 1, Rat(0));
        for (const auto& d : dual_basis(n, s))
            for (const auto& [k, v] : d.coeff) c[k] += v;
        Rat total(0);
        for (int k = 1; k <= n; ++k) total += c[k];
        for (int k = 1; k <= n; ++k) via_duals[k] = c[k] - total / n;
    }

    // route (b): c_1 = 0 and c_i - c_j = 1 along every arrow, then reduce the
    // trace to zero
    std::vector<Rat> via_rule(n + 1, Rat(0));
    {
        std::vector<std::map<int, int>> step(n + 1);  // neighbor -> c difference
        for (const auto& a : s) {
            step[a.i][a.j] = -1;  // c_j = c_i - 1
            step[a.j][a.i] = 1;
        }
        std::vector<bool> seen(n + 1, false);
        std::vector<Rat> c(n + 1, Rat(0));
        std::queue<int> q;
        q.push(1);
        seen[1] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& [w, dstep] : step[v])
                if (!seen[w]) {
                    seen[w] = true;
                    c[w] = c[v] + dstep;
                    q.push(w);
                }
        }
        Rat total(0);
        for (int k = 1; k <= n; ++k) total += c[k];
        for (int k = 1; k <= n; ++k) via_rule[k] = c[k] - total / n;
    }

    if (via_duals != via_rule)
        throw std::logic_error("principal: dual-basis sum and c-rule disagree");

    PrincipalElement d;
    d.diagonal.assign(via_rule.begin() + 1, via_rule.end());
    return d;
}

long eigenvalue_on(const SmallGraph& g, const IndexPair& p) {
    if (p.i == p.j) throw std::invalid_argument("eigenvalue_on: need i != j");
    if (!is_tree(g)) throw std::invalid_argument("eigenvalue_on: gamma is not a tree");
    // BFS for the unique path, arrows forward count +1, backward -1
    auto adj = undirected_adj(g);
    std::vector<int> from(g.n + 1, 0);
    std::queue<int> q;
    q.push(p.i);
    from[p.i] = p.i;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == p.j) break;
        for (int w : adj[v])
            if (from[w] == 0) {
                from[w] = v;
                q.push(w);
            }
    }
    long val = 0;
    for (int v = p.j; v != p.i; v = from[v])
        val += g.arcs.count({from[v], v}) ? 1 : -1;
    return val;
}

Reduction cyclic_reduce(int n, int m) {
    if (gcd_int(n, m) != 1 || !(1 <= m && m < n))
        throw std::invalid_argument("cyclic_reduce: bad (n,m)");
    if (n == 2 && m == 1) throw std::invalid_argument("cyclic_reduce: (2,1) is terminal");
    if (n > 2 * m) return {n - m, m, ReductionKind::Stable};
    return {m, 2 * m - n, ReductionKind::Unstable};
}

namespace {

int cyclic_root_recursion(int n, int m) {
    if (n == 2 && m == 1) return 1;
    Reduction r = cyclic_reduce(n, m);
    int sub = cyclic_root_recursion(r.n, r.m);
    return r.kind == ReductionKind::Stable ? sub : m + 1 - sub;
}

}  // namespace

int cyclic_root(int n, int m) {
    int via_recursion = cyclic_root_recursion(n, m);
    auto direct = rooted_tree_root(gamma_graph(n, cyclic_support(n, m)));
    if (!direct || *direct != via_recursion)
        throw std::logic_error("cyclic_root: recursion and tree inspection disagree");
    return via_recursion;
}

MeanderCensus meander_index(const LieSupport& g) {
    std::set<IndexPair> s = dk_support(g);
    // the meander is a multigraph: a top arc and a bottom arc joining the
    // same two vertices close up into a loop
    std::vector<std::vector<int>> adj(g.n() + 1);
    for (const auto& a : s) {
        adj[a.i].push_back(a.j);
        adj[a.j].push_back(a.i);
    }
    for (int v = 1; v <= g.n(); ++v)
        if (adj[v].size() > 2) throw std::logic_error("meander: vertex of degree > 2");

    MeanderCensus census;
    std::vector<bool> seen(g.n() + 1, false);
    for (int v = 1; v <= g.n(); ++v) {
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
        size_t degsum = 0;
        for (int x : comp) degsum += adj[x].size();
        size_t edges = degsum / 2;
        if (comp.size() == 1 && edges == 0)
            census.isolated++;
        else if (edges == comp.size() - 1)
            census.chains++;
        else if (edges == comp.size())
            census.loops++;
        else
            throw std::logic_error("meander: component is neither chain nor loop");
    }
    census.index = 2 * census.loops + census.chains + census.isolated - 1;
    return census;
}

std::string small_graph_dot(const SmallGraph& g, const std::string& header_comment) {
    std::ostringstream os;
    if (!header_comment.empty()) os << "// " << header_comment << "\n";
    os << "digraph gamma {\n";
    auto root = rooted_tree_root(g);
    for (int v = 1; v <= g.n; ++v) {
        os << "  v" << v << " [label=\"" << v << "\"";
        if (root && *root == v) os << " shape=doublecircle";
        os << "];\n";
    }
    for (const auto& a : g.arcs) os << "  v" << a.i << " -> v" << a.j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace frobtk
