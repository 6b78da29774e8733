#include <functional>
#include <map>
#include <set>
#include <numeric>

#include "doctest.h"
#include "frobtk/gallery.hpp"
#include "frobtk/sln.hpp"
#include "testutil.hpp"

using namespace frobtk;
using testutil::pairs;

TEST_CASE("cyclic support anchors") {
    CHECK(cyclic_support(7, 3) ==
          pairs({{1, 4}, {2, 3}, {2, 5}, {3, 1}, {3, 6}, {4, 7}}));
    CHECK(cyclic_support(5, 2) == pairs({{1, 3}, {3, 5}, {2, 4}, {2, 1}}));
    CHECK(*rooted_tree_root(gamma_graph(5, cyclic_support(5, 2))) == 2);
    CHECK(*rooted_tree_root(gamma_graph(5, cyclic_support(5, 3))) == 3);
    CHECK_THROWS_AS(cyclic_support(6, 3), std::invalid_argument);
}

TEST_CASE("cyclic strings of (13,5)") {
    CyclicTrace trace;
    cyclic_support(13, 5, &trace);
    REQUIRE(trace.levels.size() >= 2);
    CHECK(trace.levels[0].word ==
          std::vector<int>{1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9});
    CHECK(trace.levels[0].strings ==
          std::vector<std::vector<int>>{{1, 6, 11}, {3, 8, 13}, {5, 10}, {2, 7, 12}, {4, 9}});
    // second cycle: the drops arranged in ascending strings
    CHECK(trace.levels[1].word == std::vector<int>{3, 5, 2, 4, 1});
    CHECK(trace.levels[1].strings == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});
    CHECK(!trace.levels[1].forward_arrows);
    // the rises 5, 4 feed the third cycle and contribute 4 -> 5
    REQUIRE(trace.levels.size() == 3);
    CHECK(trace.levels[2].word == std::vector<int>{5, 4});
    CHECK(trace.levels[2].arrows == std::vector<IndexPair>{{4, 5}});
    CHECK(*rooted_tree_root(gamma_graph(13, cyclic_support(13, 5))) == 4);
}

TEST_CASE("the m-th superdiagonal is filled") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m < n; ++m) {
            if (std::gcd(n, m) != 1) continue;
            auto s = cyclic_support(n, m);
            for (int i = 1; i + m <= n; ++i) CHECK(s.count({i, i + m}));
        }
}

TEST_CASE("prime support") {
    CHECK(prime_support(3) == pairs({{1, 2}, {2, 3}}));
    CHECK(prime_support(2) == pairs({{1, 2}}));
    for (int n = 2; n <= 10; ++n) CHECK(prime_support(n) == cyclic_support(n, 1));
}

TEST_CASE("subprime support") {
    CHECK(subprime_support(5, 2) == pairs({{1, 3}, {2, 4}, {3, 5}, {2, 1}}));
    auto g73 = LieSupport::parabolic(7, 3);
    CHECK(is_frobenius(g73, Functional::indicator(subprime_support(7, 3))).frobenius);
    // 8 = 3*3 - 1 is congruent to -1 mod 3: Frobenius, and equal to the cyclic
    CHECK(subprime_support(8, 3) == cyclic_support(8, 3));
    auto g83 = LieSupport::parabolic(8, 3);
    CHECK(is_frobenius(g83, Functional::indicator(subprime_support(8, 3))).frobenius);
    // 8 mod 5 = 3 is not congruent to +-1: not Frobenius
    auto g85 = LieSupport::parabolic(8, 5);
    CHECK(!is_frobenius(g85, Functional::indicator(subprime_support(8, 5))).frobenius);
}

TEST_CASE("upper triangular support") {
    CHECK(upper_triangular_support(12, 5) ==
          pairs({{3, 8}, {4, 9}, {5, 10}, {6, 11}, {7, 12}, {1, 3}, {2, 4}, {3, 5},
                 {4, 6}, {6, 7}, {5, 6}}));
    for (int n = 2; n <= 9; ++n) CHECK(upper_triangular_support(n, 1) == prime_support(n));
    // the final entry taken is always (m, m+1)
    for (int n = 3; n <= 12; ++n)
        for (int m = 2; m < n; ++m) {
            if (std::gcd(n, m) != 1) continue;
            UpperTrace trace;
            upper_triangular_support(n, m, &trace);
            REQUIRE(!trace.steps.empty());
            CHECK(trace.steps.back().taken.back() == IndexPair{m, m + 1});
        }
    UpperTrace t52;
    upper_triangular_support(5, 2, &t52);
    CHECK(t52.steps.back().taken.back() == IndexPair{2, 3});
}

TEST_CASE("upper triangular supports stay above the diagonal") {
    // the striking procedure is certified degenerate in general (see the
    // acceptance suite), so only the structural facts are asserted here
    for (int n = 2; n <= 10; ++n)
        for (int m = 1; m < n; ++m) {
            if (std::gcd(n, m) != 1) continue;
            auto s = upper_triangular_support(n, m);
            for (const auto& p : s) CHECK(p.i < p.j);
            CHECK(int(s.size()) == n - 1);
            CHECK(is_tree(gamma_graph(n, s)));
        }
}

TEST_CASE("Dergachev-Kirillov support") {
    auto g = LieSupport::parabolic(7, 3);
    CHECK(dk_support(g) == pairs({{1, 7}, {2, 6}, {3, 5}, {3, 1}, {6, 5}, {7, 4}}));
    // gamma is the chain 2 -> 6 -> 5 <- 3 -> 1 -> 7 -> 4
    auto gamma = gamma_graph(7, dk_support(g));
    CHECK(is_tree(gamma));
    CHECK(!rooted_tree_root(gamma));  // vertex 5 has two predecessors
    // for m = 1 the first corner set is empty and the other two survive
    auto g51 = LieSupport::parabolic(5, 1);
    CHECK(dk_support(g51) == pairs({{1, 5}, {2, 4}, {5, 2}, {4, 3}}));
    CHECK_THROWS_AS(dk_support(LieSupport::full_sl(3)), std::invalid_argument);
}

TEST_CASE("gamma graphs of the families are trees") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m < n; ++m) {
            auto check_tree = [&](const std::set<IndexPair>& s) {
                CHECK(int(s.size()) == n - 1);
                CHECK(is_tree(gamma_graph(n, s)));
            };
            if (std::gcd(n, m) == 1) {
                check_tree(cyclic_support(n, m));
                check_tree(upper_triangular_support(n, m));
                CHECK(rooted_tree_root(gamma_graph(n, cyclic_support(n, m))));
            }
            if (m > 1) check_tree(subprime_support(n, m));
            if (std::gcd(n, m) == 1) check_tree(dk_support(LieSupport::parabolic(n, m)));
        }
}

TEST_CASE("dual basis anchors") {
    // Gamma(3,2): d_13 = eps1 + eps2 and d_21 = eps2
    auto duals = dual_basis(3, cyclic_support(3, 2));
    for (const auto& d : duals) {
        if (d.s == IndexPair{1, 3})
            CHECK(d.coeff == std::map<int, Rat>{{1, Rat(1)}, {2, Rat(1)}});
        if (d.s == IndexPair{2, 1}) CHECK(d.coeff == std::map<int, Rat>{{2, Rat(1)}});
    }
    // prime: d_(i,i+1) = eps1 + ... + eps_i
    for (int n = 3; n <= 8; ++n) {
        for (const auto& d : dual_basis(n, prime_support(n))) {
            std::map<int, Rat> expect;
            for (int k = 1; k <= d.s.i; ++k) expect[k] = 1;
            CHECK(d.coeff == expect);
        }
    }
    // P(n,2): d_21 = eps2 + eps4 + ... + eps_{n-1} (an upper limit of n-2
    // would break duality; the tree rule gives n-1)
    for (int n = 5; n <= 9; n += 2) {
        for (const auto& d : dual_basis(n, cyclic_support(n, 2)))
            if (d.s == IndexPair{2, 1}) {
                std::map<int, Rat> expect;
                for (int k = 2; k <= n - 1; k += 2) expect[k] = 1;
                CHECK(d.coeff == expect);
            }
    }
    CHECK_THROWS_AS(dual_basis(3, pairs({{1, 2}, {2, 1}})), std::invalid_argument);
}

TEST_CASE("principal elements of P(7,3)") {
    auto dk = principal_candidate(7, dk_support(LieSupport::parabolic(7, 3)));
    std::vector<long> dk_ints{1, 3, 2, -1, 1, 2, 0};
    for (int k = 0; k < 7; ++k) {
        Rat expect = Rat(dk_ints[k]) - Rat(8, 7);
        CHECK(dk.diagonal[k] == expect);
    }

    auto cyc = principal_candidate(7, cyclic_support(7, 3));
    std::vector<long> cyc_ints{2, 4, 3, 1, 3, 2, 0};
    for (int k = 0; k < 7; ++k) {
        Rat expect = Rat(cyc_ints[k]) - Rat(15, 7);
        CHECK(cyc.diagonal[k] == expect);
    }

    // eigenvalue multisets agree on the pairs of P(7,3)
    std::multiset<Rat> a, b;
    auto g73 = LieSupport::parabolic(7, 3);
    for (const auto& p : g73.pairs()) {
        a.insert(Rat(cyc.diagonal[p.i - 1] - cyc.diagonal[p.j - 1]));
        b.insert(Rat(dk.diagonal[p.i - 1] - dk.diagonal[p.j - 1]));
    }
    CHECK(a == b);
}

TEST_CASE("prime principal element") {
    for (int n = 2; n <= 9; ++n) {
        auto d = principal_candidate(n, prime_support(n));
        for (int k = 0; k < n; ++k) {
            Rat expect(n - 1 - 2 * k, 2);
            expect.canonicalize();
            CHECK(d.diagonal[k] == expect);
        }
    }
}

TEST_CASE("eigenvalue path rule") {
    auto s = cyclic_support(7, 3);
    auto gamma = gamma_graph(7, s);
    auto d = principal_candidate(7, s);
    // the 12 transpose-excluded pairs, by rows
    std::vector<long> expected{1, -1, 0, 2, 3, 1, 2, 4, 2, 0, 1, 3};
    int idx = 0;
    long sum = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 7; ++j) {
            long ev = eigenvalue_on(gamma, {i, j});
            CHECK(ev == expected[idx++]);
            CHECK(Rat(ev) == Rat(d.diagonal[i - 1] - d.diagonal[j - 1]));
            sum += ev;
        }
    CHECK(sum == 18);
    // single arrows give 1, reversal negates
    for (const auto& p : s) {
        CHECK(eigenvalue_on(gamma, p) == 1);
        CHECK(eigenvalue_on(gamma, {p.j, p.i}) == -1);
    }
}

TEST_CASE("principal consistency across families") {
    for (int n = 2; n <= 10; ++n)
        for (int m = 1; m < n; ++m) {
            if (std::gcd(n, m) == 1) {
                CHECK_NOTHROW(principal_candidate(n, cyclic_support(n, m)));
                CHECK_NOTHROW(principal_candidate(n, upper_triangular_support(n, m)));
                CHECK_NOTHROW(principal_candidate(n, dk_support(LieSupport::parabolic(n, m))));
            }
            if (m > 1) CHECK_NOTHROW(principal_candidate(n, subprime_support(n, m)));
        }
}

TEST_CASE("the functional is fixed by ad of its principal element") {
    // F([D_S, x]) = F(x) on every basis element, through the actual bracket
    for (auto [n, m, fam] : std::vector<std::tuple<int, int, const char*>>{
             {7, 3, "cyclic"}, {5, 2, "cyclic"}, {7, 3, "dk"}, {7, 3, "subprime"}, {6, 1, "prime"}}) {
        auto g = LieSupport::parabolic(n, m);
        std::set<IndexPair> s;
        if (std::string(fam) == "cyclic") s = cyclic_support(n, m);
        if (std::string(fam) == "dk") s = dk_support(g);
        if (std::string(fam) == "subprime") s = subprime_support(n, m);
        if (std::string(fam) == "prime") s = prime_support(n);
        Functional f = Functional::indicator(s);
        REQUIRE(is_frobenius(g, f).frobenius);
        auto d = principal_candidate(n, s);
        for (const auto& x : g.basis()) {
            // expand [D, x] = sum_k t_k [eps_k-part...] via diagonal action
            Rat lhs(0);
            if (x.kind == BasisElement::OffDiag)
                lhs = Rat(d.diagonal[x.p.i - 1] - d.diagonal[x.p.j - 1]) * f(x.p);
            Rat bracket_lhs(0);
            for (int k = 1; k <= n - 1; ++k) {
                // D = sum_k c_k eps_k with c_k = t_k - t_n
                Rat c = d.diagonal[k - 1] - d.diagonal[n - 1];
                bracket_lhs += c * f(bracket(n, BasisElement::eps(k), x));
            }
            CHECK(bracket_lhs == lhs);
            Rat rhs = x.kind == BasisElement::OffDiag ? f(x.p) : Rat(0);
            CHECK(bracket_lhs == rhs);
        }
    }
}

TEST_CASE("single vertex is a rooted tree with root 1") {
    SmallGraph g{1, {}};
    CHECK(is_tree(g));
    CHECK(*rooted_tree_root(g) == 1);
}

TEST_CASE("cyclic reduction chain") {
    auto r = cyclic_reduce(7, 3);
    CHECK(r.n == 4);
    CHECK(r.m == 3);
    CHECK(r.kind == ReductionKind::Stable);
    r = cyclic_reduce(4, 3);
    CHECK(r.n == 3);
    CHECK(r.m == 2);
    CHECK(r.kind == ReductionKind::Unstable);
    r = cyclic_reduce(17, 6);
    CHECK(r.n == 11);
    CHECK(r.m == 6);
    CHECK(r.kind == ReductionKind::Stable);
    r = cyclic_reduce(11, 6);
    CHECK(r.n == 6);
    CHECK(r.m == 1);
    CHECK(r.kind == ReductionKind::Unstable);
    // iterating terminates at (2,1)
    for (int n = 2; n <= 14; ++n)
        for (int m = 1; m < n; ++m) {
            if (std::gcd(n, m) != 1) continue;
            int cn = n, cm = m, guard = 0;
            while (!(cn == 2 && cm == 1)) {
                auto red = cyclic_reduce(cn, cm);
                cn = red.n;
                cm = red.m;
                REQUIRE(++guard < 64);
            }
            CHECK((cn == 2 && cm == 1));
        }
}

TEST_CASE("cyclic roots by recursion and tree agree") {
    CHECK(cyclic_root(17, 6) == 6);
    CHECK(cyclic_root(5, 2) == 2);
    CHECK(cyclic_root(7, 3) == 2);
    CHECK(cyclic_root(12, 5) == 3);
    CHECK(cyclic_root(18, 7) == 6);
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m < n; ++m)
            if (std::gcd(n, m) == 1) CHECK_NOTHROW(cyclic_root(n, m));
}

TEST_CASE("meander index") {
    CHECK(meander_index(LieSupport::parabolic(7, 3)).index == 0);
    auto cartan = meander_index(LieSupport::seaweed(2, {1, 1}, {1, 1}));
    CHECK(cartan.isolated == 2);
    CHECK(cartan.loops == 0);
    CHECK(cartan.chains == 0);
    CHECK(cartan.index == 1);
    CHECK(meander_index(LieSupport::parabolic(4, 2)).index == 1);
    // a single chain for every coprime parabolic
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m < n; ++m)
            if (std::gcd(n, m) == 1) {
                auto c = meander_index(LieSupport::parabolic(n, m));
                CHECK(c.chains == 1);
                CHECK(c.index == 0);
            }
}

TEST_CASE("small functionals with fewer than n-1 arrows are never Frobenius") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m < n; ++m) {
            auto g = LieSupport::parabolic(n, m);
            std::vector<IndexPair> off(g.pairs().begin(), g.pairs().end());
            const int k = int(off.size());
            // all supports of size < n-1
            std::vector<int> idx;
            std::function<void(int, int)> rec = [&](int start, int want) {
                if (want == 0) {
                    std::set<IndexPair> s;
                    for (int t : idx) s.insert(off[t]);
                    CHECK(!is_frobenius(g, Functional::indicator(s)).frobenius);
                    return;
                }
                for (int t = start; t + want <= k; ++t) {
                    idx.push_back(t);
                    rec(t + 1, want - 1);
                    idx.pop_back();
                }
            };
            for (int size = 0; size < n - 1; ++size) rec(0, size);
        }
}

TEST_CASE("unitriangular change of basis") {
    // after renumbering, the matrix of the d_s over eps has determinant 1;
    // chains are literally lower unitriangular when rows follow arrow heads
    for (int n = 3; n <= 9; ++n) {
        auto duals = dual_basis(n, prime_support(n));
        RationalMatrix m(n - 1, n - 1);
        for (const auto& d : duals)
            for (const auto& [k, v] : d.coeff) m.set(d.s.i - 1, k - 1, v);
        for (int r = 0; r < n - 1; ++r) {
            CHECK(m.at(r, r) == Rat(1));
            for (int c = r + 1; c < n - 1; ++c) CHECK(m.at(r, c) == Rat(0));
        }
        CHECK(*eliminate(m).determinant == Rat(1));
    }
    // branched rooted trees: renumber by an order-compatible preorder (the
    // last label lands on a terminal vertex), rows by arrow head
    for (int n = 2; n <= 10; ++n)
        for (int m = 1; m < n; ++m) {
            if (std::gcd(n, m) != 1) continue;
            auto s = cyclic_support(n, m);
            auto root = rooted_tree_root(gamma_graph(n, s));
            REQUIRE(root);
            std::map<int, std::vector<int>> kids;
            for (const auto& a : s) kids[a.i].push_back(a.j);
            std::map<int, int> sigma;
            std::vector<int> stack{*root};
            int next = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                sigma[v] = next++;
                auto& k = kids[v];
                std::sort(k.rbegin(), k.rend());
                for (int w : k) stack.push_back(w);
            }
            std::set<IndexPair> s2;
            for (const auto& a : s) s2.insert({sigma[a.i], sigma[a.j]});
            RationalMatrix M(n - 1, n - 1);
            for (const auto& d : dual_basis(n, s2))
                for (const auto& [k, v] : d.coeff) M.set(d.s.j - 2, k - 1, v);
            CHECK(*eliminate(M).determinant == Rat(1));
        }
}

TEST_CASE("dot output marks the root") {
    auto dot = small_graph_dot(gamma_graph(5, cyclic_support(5, 2)), "cmd");
    CHECK(dot.find("// cmd") == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("v2 [label=\"2\" shape=doublecircle]") != std::string::npos);
}
