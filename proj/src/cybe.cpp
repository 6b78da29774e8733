#include "frobtk/cybe.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace frobtk {

void WedgeTwo::add(const BasisElement& a, const BasisElement& b, const Rat& c) {
    if (c == 0) return;
    if (a == b) return;  // x ^ x = 0
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    Rat v = a < b ? c : Rat(-c);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms[key] = v;
    } else {
        it->second += v;
        if (it->second == 0) terms.erase(it);
    }
}

void WedgeTwo::add_combo(const Combo& a, const Combo& b) {
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) add(x, y, Rat(cx * cy));
}

WedgeTwo WedgeTwo::scaled(const Rat& c) const {
    WedgeTwo out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms) out.terms[k] = v * c;
    return out;
}

WedgeTwo r_from_inverse(const KirillovMatrix& km) {
    RationalMatrix binv = invert(km.mat);
    WedgeTwo r;
    for (const auto& [k, v] : binv.entries()) {
        if (k.first < k.second) r.add(km.basis[k.first], km.basis[k.second], Rat(2 * v));
    }
    return r;
}

LagrangianSplit lagrangian_split(const LieSupport& g, const Functional& f,
                                 const PrincipalElement& d) {
    const int n = g.n();
    auto eig = [&](const BasisElement& b) -> long {
        if (b.kind == BasisElement::Eps) return 0;
        Rat v = d.diagonal[b.p.i - 1] - d.diagonal[b.p.j - 1];
        if (v.get_den() != 1)
            throw std::invalid_argument("lagrangian_split: non-integral eigenvalue");
        return long(v.get_num().get_si());
    };

    std::map<long, std::vector<BasisElement>> spaces;
    for (const auto& b : g.basis()) spaces[eig(b)].push_back(b);

    LagrangianSplit out;
    for (const auto& [m, fm] : spaces) {
        if (m % 2 != 0) continue;
        auto it = spaces.find(1 - m);
        if (it == spaces.end() || it->second.size() != fm.size())
            throw std::invalid_argument("lagrangian_split: unpaired eigenspace for m = " +
                                        std::to_string(m));
        const auto& fdual = it->second;
        const int k = int(fm.size());

        // pairing block P[a][b] = B(fm[a], fdual[b]); its inverse yields the
        // dual combinations
        RationalMatrix pairing(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                Rat v = f(bracket(n, fm[a], fdual[b]));
                if (v != 0) pairing.set(a, b, v);
            }
        RationalMatrix pinv;
        try {
            pinv = invert(pairing);
        } catch (const SingularMatrixError&) {
            throw std::invalid_argument("lagrangian_split: singular pairing block at m = " +
                                        std::to_string(m));
        }
        for (int c = 0; c < k; ++c) {
            Combo basis_vec{{fm[c], Rat(1)}};
            Combo dual_vec;
            for (int b = 0; b < k; ++b) {
                const Rat& w = pinv.at(b, c);
                if (w != 0) dual_vec[fdual[b]] = w;
            }
            out.even.push_back(std::move(basis_vec));
            out.odd.push_back(std::move(dual_vec));
        }
    }
    return out;
}

WedgeTwo r_from_lagrangian(const LagrangianSplit& ls) {
    WedgeTwo r;
    for (size_t i = 0; i < ls.even.size(); ++i) r.add_combo(ls.even[i], ls.odd[i]);
    return r;
}

namespace {

Combo vertex_value(const FormVertex& v, const std::vector<DualBasisElement>& duals) {
    Combo c;
    if (v.kind == FormVertex::MatrixUnit) {
        c[BasisElement::offdiag(v.p.i, v.p.j)] = 1;
        return c;
    }
    for (const auto& d : duals)
        if (d.s == v.p) {
            for (const auto& [k, w] : d.coeff) c[BasisElement::eps(k)] = w;
            return c;
        }
    throw std::logic_error("no dual value for " + form_vertex_str(v));
}

void combo_add(Combo& a, const Combo& b) {
    for (const auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end()) {
            a[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) a.erase(it);
        }
    }
}

}  // namespace

WedgeTwo r_from_peeling(const FormGraph& fg, PeelTrace* trace) {
    auto duals = dual_basis(fg.g.n(), fg.s);

    std::vector<Combo> value(fg.vx());
    for (int v = 0; v < fg.vx(); ++v) value[v] = vertex_value(fg.verts[v], duals);

    std::map<int, int> parent;
    std::map<int, std::set<int>> children;
    for (const auto& [a, b] : fg.arcs) {
        if (parent.count(b)) throw std::invalid_argument("peeling: vertex with two predecessors");
        parent[b] = a;
        children[a].insert(b);
    }

    // depths from the component roots
    std::map<int, int> depth;
    for (int v = 0; v < fg.vx(); ++v)
        if (!parent.count(v)) {
            std::queue<int> q;
            q.push(v);
            depth[v] = 0;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int w : children[x]) {
                    depth[w] = depth[x] + 1;
                    q.push(w);
                }
            }
        }
    if (int(depth.size()) != fg.vx())
        throw std::invalid_argument("peeling: components are not rooted trees");

    // component ids for the trace
    std::map<int, int> comp_of;
    for (int v = 0; v < fg.vx(); ++v) {
        int r = v;
        while (parent.count(r)) r = parent[r];
        comp_of[v] = r;
    }

    std::set<int> alive;
    for (int v = 0; v < fg.vx(); ++v) alive.insert(v);

    WedgeTwo r;
    auto emit = [&](int v, int w) {
        r.add_combo(value[v], value[w]);
        if (trace) trace->links.push_back({comp_of[v], value[v], value[w]});
    };

    while (!alive.empty()) {
        // deepest leaf, ties by canonical vertex order
        int w = -1;
        for (int v : alive)
            if (children[v].empty() && (w < 0 || depth[v] > depth[w])) w = v;
        if (w < 0) throw std::logic_error("peeling: no leaf found");

        if (!parent.count(w)) {
            // isolated vertex: a singular component
            throw std::invalid_argument("peeling: component without perfect matching");
        }
        int v = parent[w];
        if (children[v].size() != 1)
            throw std::invalid_argument("peeling: component without perfect matching");

        if (!parent.count(v)) {
            // the component is down to the isolated link v -> w
            emit(v, w);
            alive.erase(v);
            alive.erase(w);
            continue;
        }
        // detach the terminal chain u -> v -> w: the link v -> w splits off
        // and w's value rides up onto u
        int u = parent[v];
        emit(v, w);
        combo_add(value[u], value[w]);
        children[u].erase(v);
        alive.erase(v);
        alive.erase(w);
    }
    return r;
}

WedgeTwo closed_form_r_n1(int n) {
    if (n < 2) throw std::invalid_argument("closed_form_r_n1: need n >= 2");
    auto duals = dual_basis(n, prime_support(n));
    WedgeTwo r;
    for (int p = 1; p <= n - 1; ++p) {
        Combo dp;
        for (const auto& d : duals)
            if (d.s == IndexPair{p, p + 1})
                for (const auto& [k, w] : d.coeff) dp[BasisElement::eps(k)] = w;
        Combo e{{BasisElement::offdiag(p, p + 1), Rat(1)}};
        r.add_combo(dp, e);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int m = 1; m <= j - i - 1; ++m)
                r.add(BasisElement::offdiag(i, j - m + 1), BasisElement::offdiag(j, i + m), Rat(1));
    return r;
}

WedgeTwo closed_form_r_n2(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("closed_form_r_n2: need odd n >= 3");
    std::set<IndexPair> s = cyclic_support(n, 2);
    auto duals = dual_basis(n, s);
    auto dual_combo = [&](const IndexPair& p) {
        Combo c;
        for (const auto& d : duals)
            if (d.s == p)
                for (const auto& [k, w] : d.coeff) c[BasisElement::eps(k)] = w;
        return c;
    };

    WedgeTwo r;
    for (const auto& p : s) {
        if (p == IndexPair{2, 1}) continue;
        Combo e{{BasisElement::offdiag(p.i, p.j), Rat(1)}};
        r.add_combo(dual_combo(p), e);
    }
    {
        Combo tail{{BasisElement::offdiag(2, 1), Rat(1)}};
        for (int k = 2; 2 * k <= n; ++k) tail[BasisElement::offdiag(2 * k, 2 * k - 1)] = 1;
        r.add_combo(dual_combo({2, 1}), tail);
    }
    // the sum ranges over i<j with j != i+2, except that the pairs (i, i+1)
    // with even i are interior to the superdiagonal chain and head no wedge;
    // including them would break R B = -I
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j == i + 2) continue;
            if (j == i + 1 && i % 2 == 0) continue;
            for (int k = 0; j + 2 * k <= n && i + 2 * k + 2 <= n; ++k)
                r.add(BasisElement::offdiag(i, j), BasisElement::offdiag(j + 2 * k, i + 2 * k + 2),
                      Rat(1));
        }
    return r;
}

PrincipalElement principal_formula_n2(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("principal_formula_n2: need odd n >= 3");
    // diag(0, 1, -1, 0, -2, -1, -3, ..., (5-n)/2, (1-n)/2) + (n-1)(n-3)/(4n) I
    std::vector<Rat> base;
    base.push_back(0);
    base.push_back(1);
    // two interleaved arithmetic strands: odd slots -1,-2,-3,... and even
    // slots 0,-1,-2,...
    for (int k = 3; k <= n; ++k) {
        if (k % 2 == 1)
            base.push_back(Rat(-(k - 1) / 2));
        else
            base.push_back(Rat(-(k - 4) / 2));
    }
    Rat shift = Rat((n - 1) * (n - 3)) / Rat(4 * n);
    PrincipalElement d;
    for (int k = 0; k < n; ++k) d.diagonal.push_back(base[k] + shift);
    return d;
}

std::optional<Rat> defining_property_scalar(const WedgeTwo& r, const KirillovMatrix& km) {
    const int d = int(km.basis.size());
    std::map<BasisElement, int> pos;
    for (int i = 0; i < d; ++i) pos[km.basis[i]] = i;

    RationalMatrix coeff(d, d);
    for (const auto& [k, v] : r.terms) {
        auto a = pos.find(k.first), b = pos.find(k.second);
        if (a == pos.end() || b == pos.end()) return std::nullopt;
        coeff.set(a->second, b->second, v);
        coeff.set(b->second, a->second, Rat(-v));
    }
    RationalMatrix prod = coeff * km.mat;
    Rat c = prod.at(0, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (prod.at(i, j) != (i == j ? c : Rat(0))) return std::nullopt;
    return c;
}

WedgeThree cybe_check(const WedgeTwo& r, const LieSupport& g) {
    const int n = g.n();
    std::vector<BasisElement> basis = g.basis();
    const int d = int(basis.size());
    std::map<BasisElement, int> pos;
    for (int i = 0; i < d; ++i) pos[basis[i]] = i;

    // r as an antisymmetric coefficient list
    std::vector<std::tuple<int, int, Rat>> rt;
    for (const auto& [k, v] : r.terms) {
        auto a = pos.find(k.first), b = pos.find(k.second);
        if (a == pos.end() || b == pos.end())
            throw std::invalid_argument("cybe_check: r is not supported on the algebra basis");
        rt.push_back({a->second, b->second, v});
        rt.push_back({b->second, a->second, Rat(-v)});
    }

    // bracket table over basis indices
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> br(
        d, std::vector<std::vector<std::pair<int, Rat>>>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            for (const auto& [e, c] : bracket(n, basis[a], basis[b])) {
                auto it = pos.find(e);
                if (it == pos.end())
                    throw std::invalid_argument("cybe_check: bracket leaves the algebra");
                br[a][b].push_back({it->second, c});
            }
        }

    auto key = [&](int a, int b, int c) {
        return (std::uint64_t(a) * d + std::uint64_t(b)) * d + std::uint64_t(c);
    };
    std::unordered_map<std::uint64_t, Rat> acc;
    auto put = [&](int a, int b, int c, const Rat& v) {
        auto [it, fresh] = acc.try_emplace(key(a, b, c), v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) acc.erase(it);
        }
    };

    for (const auto& [a, b, c1] : rt)
        for (const auto& [g2, dd, c2] : rt) {
            const auto& b1 = br[a][g2];
            const auto& b2 = br[b][g2];
            const auto& b3 = br[b][dd];
            if (b1.empty() && b2.empty() && b3.empty()) continue;
            Rat c = c1 * c2;
            for (const auto& [e, w] : b1) put(e, b, dd, Rat(c * w));   // [r12, r13]
            for (const auto& [e, w] : b2) put(a, e, dd, Rat(c * w));   // [r12, r23]
            for (const auto& [e, w] : b3) put(a, g2, e, Rat(c * w));   // [r13, r23]
        }

    // the expression for a skew r is a fully antisymmetric tensor; read it
    // off the ordered triples and certify the symmetry instead of assuming it
    WedgeThree out;
    auto unpack = [&](std::uint64_t k) {
        int c = int(k % std::uint64_t(d));
        int b = int((k / std::uint64_t(d)) % std::uint64_t(d));
        int a = int(k / (std::uint64_t(d) * std::uint64_t(d)));
        return std::array<int, 3>{a, b, c};
    };
    for (const auto& [k, v] : acc) {
        auto [a, b, c] = unpack(k);
        if (a == b || b == c || a == c)
            throw std::logic_error("cybe_check: tensor has a repeated-index entry");
        if (a < b && b < c)
            out.terms[std::make_tuple(basis[a], basis[b], basis[c])] = v;
    }
    for (const auto& [k, v] : acc) {
        auto idx = unpack(k);
        auto sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::find(sorted.begin(), sorted.end(), idx[i]) >
                    std::find(sorted.begin(), sorted.end(), idx[j]))
                    ++inv;
        auto tkey = std::make_tuple(basis[sorted[0]], basis[sorted[1]], basis[sorted[2]]);
        auto it = out.terms.find(tkey);
        Rat expect = it == out.terms.end() ? Rat(0) : it->second;
        if (inv % 2 == 1) expect = -expect;
        if (v != expect) throw std::logic_error("cybe_check: tensor is not antisymmetric");
    }
    return out;
}

std::string wedge_str(const WedgeTwo& r) {
    if (r.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : r.terms) {
        if (!first) os << " + ";
        first = false;
        if (v != 1) os << rat_str(v) << "*";
        os << basis_str(k.first) << "^" << basis_str(k.second);
    }
    return os.str();
}

namespace {

nlohmann::json basis_json(const BasisElement& b) {
    if (b.kind == BasisElement::OffDiag) return {{"e", {b.p.i, b.p.j}}};
    return {{"eps", b.k}};
}

}  // namespace

std::string wedge_json(const WedgeTwo& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, v] : r.terms)
        j["terms"].push_back({{"a", basis_json(k.first)},
                              {"b", basis_json(k.second)},
                              {"coeff", rat_str(v)}});
    return j.dump(2);
}

std::string wedge_three_json(const WedgeThree& w) {
    nlohmann::json j;
    j["schema"] = 1;
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, v] : w.terms)
        j["terms"].push_back({{"a", basis_json(std::get<0>(k))},
                              {"b", basis_json(std::get<1>(k))},
                              {"c", basis_json(std::get<2>(k))},
                              {"coeff", rat_str(v)}});
    return j.dump(2);
}

namespace {

std::string combo_str(const Combo& c) {
    std::ostringstream os;
    if (c.size() > 1) os << "(";
    bool first = true;
    for (const auto& [b, v] : c) {
        if (!first) os << (v > 0 ? "+" : "");
        first = false;
        if (v == -1)
            os << "-";
        else if (v != 1)
            os << rat_str(v) << "*";
        os << basis_str(b);
    }
    if (c.size() > 1) os << ")";
    return os.str();
}

}  // namespace

std::string peel_str(const PeelTrace& trace) {
    std::ostringstream os;
    for (const auto& link : trace.links)
        os << combo_str(link.detached_tail) << "^" << combo_str(link.detached_head) << "\n";
    return os.str();
}

}  // namespace frobtk
