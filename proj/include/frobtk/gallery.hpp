// The functional families on P(n,m) and seaweeds: cyclic, prime, subprime,
// upper triangular and Dergachev-Kirillov, their tree graphs gamma(S), dual
// bases d_s, principal elements, the reduction recursion and the meander index.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobtk/sln.hpp"

namespace frobtk {

/// Directed graph on vertices 1..n with an arrow i -> j for each (i,j) in S.
struct SmallGraph {
    int n = 0;
    std::set<IndexPair> arcs;
};

SmallGraph gamma_graph(int n, const std::set<IndexPair>& s);

bool is_tree(const SmallGraph& g);

/// Root when the graph is a tree with a unique in-degree-0 vertex and all
/// other vertices of in-degree 1; nullopt otherwise.
std::optional<int> rooted_tree_root(const SmallGraph& g);

/// One alternation level of the cyclic construction.
struct CyclicLevel {
    std::vector<int> word;                   // current cyclic word
    std::vector<std::vector<int>> strings;   // ascending strings, cyclicly cut
    bool forward_arrows = true;              // smaller->larger vs larger->smaller
    std::vector<IndexPair> arrows;
};

struct CyclicTrace {
    std::vector<CyclicLevel> levels;
};

/// Cyclic sequence 1, m+1, 2m+1, ... reduced mod n (n stays n).
std::vector<int> cyclic_sequence(int n, int m);

std::set<IndexPair> cyclic_support(int n, int m, CyclicTrace* trace = nullptr);

std::set<IndexPair> prime_support(int n);

std::set<IndexPair> subprime_support(int n, int m);

/// One block-striking step of the upper triangular construction.
struct UpperStep {
    int n = 0, m = 0;
    bool forward = true;          // reading direction
    std::vector<int> struck;      // values removed this step
    std::vector<IndexPair> taken;
};

struct UpperTrace {
    std::vector<UpperStep> steps;
};

std::set<IndexPair> upper_triangular_support(int n, int m, UpperTrace* trace = nullptr);

/// Corner antidiagonals of every top and bottom block.
std::set<IndexPair> dk_support(const LieSupport& g);

/// Dual-basis Cartan element for s in S: the signed sum of eps_k over the
/// component of the tree gamma(S) left attached to the tail of s.
struct DualBasisElement {
    IndexPair s;
    std::map<int, Rat> coeff;  // over eps_1..eps_{n-1}
};

std::vector<DualBasisElement> dual_basis(int n, const std::set<IndexPair>& s);

/// Traceless diagonal with integer ad-eigenvalue i - j differences.
struct PrincipalElement {
    std::vector<Rat> diagonal;  // n entries, trace zero
};

/// D_S computed both as sum of dual basis elements and by the c_i - c_j = 1
/// rule; the two must agree.
PrincipalElement principal_candidate(int n, const std::set<IndexPair>& s);

/// Path-counted eigenvalue of ad(D_S) on e_ij.
long eigenvalue_on(const SmallGraph& g, const IndexPair& p);

enum class ReductionKind { Stable, Unstable };

struct Reduction {
    int n = 0, m = 0;
    ReductionKind kind = ReductionKind::Stable;
};

/// (n-m, m) when n > 2m, (m, 2m-n) when n < 2m.
Reduction cyclic_reduce(int n, int m);

/// Root of gamma(n,m) by the reduction recursion, cross-checked against the
/// directly constructed tree.
int cyclic_root(int n, int m);

struct MeanderCensus {
    int loops = 0;
    int chains = 0;
    int isolated = 0;
    int index = 0;  // 2*loops + chains + isolated - 1
};

MeanderCensus meander_index(const LieSupport& g);

/// DOT rendering; when the graph is a rooted tree the root is highlighted.
std::string small_graph_dot(const SmallGraph& g, const std::string& header_comment = "");

}  // namespace frobtk
