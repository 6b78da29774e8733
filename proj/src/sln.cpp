#include "frobtk/sln.hpp"

#include <stdexcept>

#include "json.hpp"

namespace frobtk {

std::string pair_str(const IndexPair& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string basis_str(const BasisElement& b) {
    if (b.kind == BasisElement::OffDiag)
        return "e" + std::to_string(b.p.i) + "," + std::to_string(b.p.j);
    return "eps" + std::to_string(b.k);
}

namespace {

// eps_i - eps_j over eps_1..eps_{n-1}, using eps_n = -(eps_1+...+eps_{n-1}).
LinComb eps_difference(int n, int i, int j) {
    LinComb out;
    if (i == j) return out;
    if (i <= n - 1 && j <= n - 1) {
        out.push_back({BasisElement::eps(i), Rat(1)});
        out.push_back({BasisElement::eps(j), Rat(-1)});
    } else if (j == n) {
        // eps_i - eps_n = 2 eps_i + sum_{k != i} eps_k
        for (int k = 1; k <= n - 1; ++k)
            out.push_back({BasisElement::eps(k), Rat(k == i ? 2 : 1)});
    } else {
        // i == n
        for (int k = 1; k <= n - 1; ++k)
            out.push_back({BasisElement::eps(k), Rat(k == j ? -2 : -1)});
    }
    return out;
}

}  // namespace

LinComb bracket(int n, const BasisElement& a, const BasisElement& b) {
    LinComb out;
    if (a.kind == BasisElement::Eps && b.kind == BasisElement::Eps) return out;
    if (a.kind == BasisElement::Eps) {
        // [eps_k, e_ij] = (delta_ki - delta_kj) e_ij
        int c = (a.k == b.p.i ? 1 : 0) - (a.k == b.p.j ? 1 : 0);
        if (c != 0) out.push_back({b, Rat(c)});
        return out;
    }
    if (b.kind == BasisElement::Eps) {
        int c = (b.k == a.p.i ? 1 : 0) - (b.k == a.p.j ? 1 : 0);
        if (c != 0) out.push_back({a, Rat(-c)});
        return out;
    }
    // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
    const int i = a.p.i, j = a.p.j, k = b.p.i, l = b.p.j;
    if (j == k && l == i) return eps_difference(n, i, j);
    if (j == k) out.push_back({BasisElement::offdiag(i, l), Rat(1)});
    if (l == i) out.push_back({BasisElement::offdiag(k, j), Rat(-1)});
    return out;
}

LieSupport LieSupport::parabolic(int n, int m) {
    if (!(1 <= m && m < n)) throw std::invalid_argument("parabolic: need 1 <= m < n");
    LieSupport g;
    g.n_ = n;
    g.m_ = m;
    g.kind_ = Kind::Parabolic;
    g.top_ = {n};
    g.bottom_ = {m, n - m};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && !(i >= m + 1 && j <= m)) g.pairs_.insert({i, j});
    g.check_closure();
    return g;
}

LieSupport LieSupport::seaweed(int n, std::vector<int> top, std::vector<int> bottom) {
    auto check = [&](const std::vector<int>& c, const char* name) {
        int s = 0;
        for (int a : c) {
            if (a <= 0) throw std::invalid_argument(std::string(name) + ": nonpositive part");
            s += a;
        }
        if (s != n) throw std::invalid_argument(std::string(name) + ": parts must sum to n");
    };
    check(top, "top composition");
    check(bottom, "bottom composition");

    // block index of each row/column under a composition
    auto blocks = [&](const std::vector<int>& c) {
        std::vector<int> blk(n + 1, 0);
        int pos = 1, b = 0;
        for (int a : c) {
            for (int t = 0; t < a; ++t) blk[pos++] = b;
            ++b;
        }
        return blk;
    };
    std::vector<int> tb = blocks(top), bb = blocks(bottom);

    LieSupport g;
    g.n_ = n;
    g.kind_ = Kind::Seaweed;
    g.top_ = std::move(top);
    g.bottom_ = std::move(bottom);
    // above the diagonal the shape is cut by the top blocks, below by the
    // bottom blocks
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (i < j ? tb[i] == tb[j] : bb[i] == bb[j]) g.pairs_.insert({i, j});
        }
    g.check_closure();
    return g;
}

LieSupport LieSupport::custom(int n, std::set<IndexPair> pairs) {
    LieSupport g;
    g.n_ = n;
    g.kind_ = Kind::Custom;
    for (const auto& p : pairs) {
        if (p.i < 1 || p.i > n || p.j < 1 || p.j > n || p.i == p.j)
            throw std::invalid_argument("custom support: bad pair " + pair_str(p));
    }
    g.pairs_ = std::move(pairs);
    g.check_closure();
    return g;
}

LieSupport LieSupport::full_sl(int n) {
    std::set<IndexPair> all;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) all.insert({i, j});
    return custom(n, std::move(all));
}

void LieSupport::check_closure() const {
    for (const auto& a : pairs_)
        for (const auto& b : pairs_)
            if (a.j == b.i && a.i != b.j && !pairs_.count({a.i, b.j}))
                throw std::invalid_argument("support not closed under bracket: " +
                                            pair_str(a) + "," + pair_str(b));
}

std::vector<BasisElement> LieSupport::basis() const {
    std::vector<BasisElement> out;
    out.reserve(dim());
    for (const auto& p : pairs_) out.push_back(BasisElement::offdiag(p.i, p.j));
    for (int k = 1; k <= n_ - 1; ++k) out.push_back(BasisElement::eps(k));
    return out;
}

std::string LieSupport::kind_str() const {
    switch (kind_) {
        case Kind::Parabolic: return "parabolic";
        case Kind::Seaweed: return "seaweed";
        default: return "custom";
    }
}

Functional Functional::indicator(const std::set<IndexPair>& s) {
    Functional f;
    for (const auto& p : s) f.coeff[p] = 1;
    return f;
}

Rat Functional::operator()(const IndexPair& p) const {
    auto it = coeff.find(p);
    return it == coeff.end() ? Rat(0) : it->second;
}

Rat Functional::operator()(const LinComb& c) const {
    Rat v(0);
    for (const auto& [b, w] : c)
        if (b.kind == BasisElement::OffDiag) v += w * (*this)(b.p);
    return v;
}

KirillovMatrix kirillov_matrix(const LieSupport& g, const Functional& f) {
    for (const auto& [p, v] : f.coeff)
        if (v != 0 && !g.contains(p.i, p.j))
            throw std::invalid_argument("functional support outside the algebra: " + pair_str(p));

    KirillovMatrix km;
    km.basis = g.basis();
    const int d = int(km.basis.size());
    km.mat = RationalMatrix(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Rat v = f(bracket(g.n(), km.basis[a], km.basis[b]));
            if (v != 0) {
                km.mat.set(a, b, v);
                km.mat.set(b, a, Rat(-v));
            }
        }
    return km;
}

std::string kirillov_json(const KirillovMatrix& km) {
    nlohmann::json j;
    j["schema"] = 1;
    j["basis"] = nlohmann::json::array();
    for (const auto& b : km.basis) {
        if (b.kind == BasisElement::OffDiag)
            j["basis"].push_back({{"e", {b.p.i, b.p.j}}});
        else
            j["basis"].push_back({{"eps", b.k}});
    }
    j["rows"] = km.mat.rows();
    j["cols"] = km.mat.cols();
    j["entries"] = nlohmann::json::array();
    for (const auto& [k, v] : km.mat.entries())
        j["entries"].push_back({k.first, k.second, rat_str(v)});
    return j.dump(2);
}

FrobeniusCertificate is_frobenius(const LieSupport& g, const Functional& f) {
    KirillovMatrix km = kirillov_matrix(g, f);
    Elimination e = eliminate(km.mat);
    FrobeniusCertificate cert;
    cert.dim = g.dim();
    cert.rank = e.rank;
    cert.kernel_dim = cert.dim - e.rank;
    cert.frobenius = cert.kernel_dim == 0;
    cert.determinant = e.determinant.value_or(Rat(0));
    return cert;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long SplitMix64::range(long long lo, long long hi) {
    return lo + (long long)(next() % (std::uint64_t)(hi - lo + 1));
}

Functional random_functional(const LieSupport& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Functional f;
    const long long bound = 10LL * g.n();
    for (const auto& p : g.pairs()) {
        long v = long(rng.range(-bound, bound));
        if (v != 0) f.coeff[p] = Rat(v);
    }
    return f;
}

int algebra_index_estimate(const LieSupport& g, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    int best = g.dim();
    for (int s = 0; s < samples; ++s) {
        Functional f = random_functional(g, seed + std::uint64_t(s));
        KirillovMatrix km = kirillov_matrix(g, f);
        best = std::min(best, kernel_dimension(km.mat));
        if (best == 0) break;
    }
    return best;
}

}  // namespace frobtk
