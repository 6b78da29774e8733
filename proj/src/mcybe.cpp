#include "frobtk/mcybe.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace frobtk {

TripleValidation validate_triple(const AdmissibleTriple& t) {
    if (t.s1.size() != t.s2.size() || t.s1.size() != t.t.size())
        return {false, "T is not a bijection S1 -> S2"};
    std::set<int> image;
    for (const auto& [i, j] : t.t) {
        if (!t.s1.count(i)) return {false, "T defined outside S1"};
        if (!t.s2.count(j)) return {false, "T maps outside S2"};
        image.insert(j);
    }
    if (image != t.s2) return {false, "T is not onto S2"};
    for (int i : t.s1) {
        if (i < 1 || i > t.n - 1) return {false, "root label out of range"};
        // nilpotency: iterating T must leave S1
        int x = i;
        int steps = 0;
        while (t.s1.count(x)) {
            x = t.t.at(x);
            if (++steps > t.n) return {false, "orbit of " + std::to_string(i) + " never leaves S1"};
        }
    }
    for (int i : t.s1)
        for (int j : t.s1)
            if (std::abs(i - j) == 1 && std::abs(t.t.at(i) - t.t.at(j)) != 1)
                return {false, "adjacency broken at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")"};
    return {true, ""};
}

AdmissibleTriple maximal_triple(int n, int m) {
    if (!(1 <= m && m < n) || std::gcd(n, m) != 1)
        throw std::invalid_argument("maximal_triple: need coprime 1 <= m < n");
    AdmissibleTriple t;
    t.n = n;
    for (int i = 1; i <= n - 1; ++i) {
        if (i != n - m) t.s1.insert(i);
        if (i != m) t.s2.insert(i);
    }
    for (int i : t.s1) t.t[i] = (i + m) % n;
    auto v = validate_triple(t);
    if (!v.valid) throw std::logic_error("maximal_triple failed validation: " + v.violation);
    return t;
}

bool triple_precedes(const AdmissibleTriple& a, const AdmissibleTriple& b) {
    if (a.n != b.n) return false;
    for (int i : a.s1)
        if (!b.s1.count(i) || b.t.at(i) != a.t.at(i)) return false;
    return true;
}

AdmissibleTriple restrict_triple(const AdmissibleTriple& t, const std::set<int>& s1) {
    AdmissibleTriple out;
    out.n = t.n;
    for (int i : s1) {
        if (!t.s1.count(i)) throw std::invalid_argument("restriction outside S1");
        out.s1.insert(i);
        out.t[i] = t.t.at(i);
        out.s2.insert(t.t.at(i));
    }
    return out;
}

std::vector<std::pair<int, int>> RootProgression::mapped_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (size_t k = 0; k + 1 < order.size(); ++k) out.push_back({order[k], order[k + 1]});
    return out;
}

RootProgression root_progression(int n, int m) {
    if (std::gcd(n, m) != 1 || !(1 <= m && m < n))
        throw std::invalid_argument("root_progression: need coprime 1 <= m < n");

    RootProgression p;
    p.n = n;
    p.m = m;

    PrincipalElement d = principal_candidate(n, cyclic_support(n, m));
    for (int i = 1; i <= n - 1; ++i) p.lambda[i] = d.diagonal[i - 1] - d.diagonal[i];

    // cyclic sequence with the entry n deleted
    std::vector<int> word;
    int cut_after_n = 0;  // index (into word) of the entry following n
    for (int v : cyclic_sequence(n, m)) {
        if (v == n)
            cut_after_n = int(word.size());
        else
            word.push_back(v);
    }
    const int len = int(word.size());

    auto monotone_from = [&](int start, bool nondecreasing) {
        for (int k = 0; k + 1 < len; ++k) {
            const Rat& a = p.lambda.at(word[(start + k) % len]);
            const Rat& b = p.lambda.at(word[(start + k + 1) % len]);
            if (nondecreasing ? a > b : a < b) return false;
        }
        return true;
    };
    // the conjugation limit removes the unequal-weight pairs; the progression
    // rotation is the monotone one under which only reverse-direction
    // mappings (larger root to smaller) get removed, nondecreasing weights
    // preferred, ties cut right after the deleted entry n
    auto descents_only = [&](int start) {
        for (int k = 0; k + 1 < len; ++k) {
            int a = word[(start + k) % len], b = word[(start + k + 1) % len];
            if (p.lambda.at(a) != p.lambda.at(b) && a < b) return false;
        }
        return true;
    };
    auto pick = [&](bool nondecreasing, bool want_descents) -> int {
        std::vector<int> hits;
        for (int s = 0; s < len; ++s)
            if (monotone_from(s, nondecreasing) && (!want_descents || descents_only(s)))
                hits.push_back(s);
        if (hits.empty()) return -1;
        for (int s : hits)
            if (s == cut_after_n % len) return s;
        return hits[0];
    };

    int start = pick(true, true);
    if (start < 0) start = pick(false, true);
    if (start < 0) start = pick(true, false);
    if (start < 0) start = pick(false, false);
    if (start < 0)
        throw std::runtime_error("root_progression: no monotone rotation of the weights");
    for (int k = 0; k < len; ++k) p.order.push_back(word[(start + k) % len]);
    for (int k = 0; k < len; ++k) p.renumbering[p.order[k]] = k + 1;
    return p;
}

DivergentDirectionError::DivergentDirectionError(std::pair<int, int> pr)
    : std::runtime_error("divergent direction at pair " + std::to_string(pr.first) + "->" +
                         std::to_string(pr.second)),
      pair(pr) {}

DegenerationResult degeneration_limit(const RootProgression& p,
                                      const std::vector<Rat>& h_diagonal) {
    if (int(h_diagonal.size()) != p.n)
        throw std::invalid_argument("degeneration_limit: h has wrong size");
    std::map<int, Rat> lam;
    for (int i = 1; i <= p.n - 1; ++i) lam[i] = h_diagonal[i - 1] - h_diagonal[i];

    auto pairs = p.mapped_pairs();
    // the conjugation has a limit only when the weights run monotonely along
    // the progression; either direction gives one (t -> +infinity or -infinity)
    std::optional<std::pair<int, int>> descent, ascent;
    for (const auto& pr : pairs) {
        if (lam.at(pr.first) > lam.at(pr.second) && !descent) descent = pr;
        if (lam.at(pr.first) < lam.at(pr.second) && !ascent) ascent = pr;
    }
    if (descent && ascent) throw DivergentDirectionError(*ascent);

    DegenerationResult out;
    for (const auto& pr : pairs) {
        if (lam.at(pr.first) == lam.at(pr.second))
            out.surviving.push_back(pr);
        else
            out.removed.push_back(pr);
    }
    return out;
}

std::vector<long> find_separating_h(const RootProgression& p,
                                    const std::set<std::pair<int, int>>& keep) {
    auto pairs = p.mapped_pairs();
    std::set<std::pair<int, int>> all(pairs.begin(), pairs.end());
    for (const auto& pr : keep)
        if (!all.count(pr))
            throw std::invalid_argument("find_separating_h: keep-set has a non-progression pair");

    // weights along the progression: flat on kept pairs, a strict step on the
    // rest
    std::map<int, long> lam;
    long level = 0;
    lam[p.order.front()] = 0;
    for (const auto& pr : pairs) {
        if (!keep.count(pr)) ++level;
        lam[pr.second] = level;
    }

    std::vector<long> h(p.n, 0);
    for (int i = p.n - 1; i >= 1; --i) h[i - 1] = h[i] + lam.at(i);
    return h;
}

std::string triple_json(const AdmissibleTriple& t) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = t.n;
    j["s1"] = t.s1;
    j["s2"] = t.s2;
    j["t"] = nlohmann::json::array();
    for (const auto& [a, b] : t.t) j["t"].push_back({a, b});
    return j.dump(2);
}

std::string progression_str(const RootProgression& p) {
    std::ostringstream os;
    for (size_t k = 0; k < p.order.size(); ++k) {
        if (k) os << " -> ";
        os << p.order[k];
    }
    return os.str();
}

std::string progression_json(const RootProgression& p) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = p.n;
    j["m"] = p.m;
    j["order"] = p.order;
    j["lambda"] = nlohmann::json::object();
    for (const auto& [i, v] : p.lambda) j["lambda"][std::to_string(i)] = rat_str(v);
    j["renumbering"] = nlohmann::json::object();
    for (const auto& [i, k] : p.renumbering) j["renumbering"][std::to_string(i)] = k;
    return j.dump(2);
}

}  // namespace frobtk
