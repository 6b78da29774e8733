// Admissible triples for sl(n), their partial order, root progressions and
// the degeneration of modified-CYBE solutions under exp(th) conjugation.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "frobtk/gallery.hpp"

namespace frobtk {

/// Bijection T: S1 -> S2 between subsets of the simple roots 1..n-1.
struct AdmissibleTriple {
    int n = 0;
    std::set<int> s1, s2;
    std::map<int, int> t;
};

struct TripleValidation {
    bool valid = false;
    std::string violation;  // empty when valid
};

/// Nilpotency (every T-orbit escapes S1) and adjacency preservation.
TripleValidation validate_triple(const AdmissibleTriple& t);

/// S1 = {1..n-1} minus n-m, S2 = {1..n-1} minus m, T(i) = i+m mod n.
AdmissibleTriple maximal_triple(int n, int m);

/// a precedes b when T_a is the restriction of T_b to a subset of S1(b).
bool triple_precedes(const AdmissibleTriple& a, const AdmissibleTriple& b);

AdmissibleTriple restrict_triple(const AdmissibleTriple& t, const std::set<int>& s1);

struct RootProgression {
    int n = 0, m = 0;
    std::vector<int> order;            // the n-1 root labels in progression order
    std::map<int, Rat> lambda;         // label -> h_i - h_{i+1}
    std::map<int, int> renumbering;    // label -> position (1-based)

    std::vector<std::pair<int, int>> mapped_pairs() const;
};

/// The cyclic sequence with the entry n deleted, cut at the unique rotation
/// with monotone weights (nondecreasing preferred; ties cut after n).
RootProgression root_progression(int n, int m);

struct DegenerationResult {
    std::vector<std::pair<int, int>> surviving;
    std::vector<std::pair<int, int>> removed;
};

class DivergentDirectionError : public std::runtime_error {
public:
    DivergentDirectionError(std::pair<int, int> pair);
    std::pair<int, int> pair;
};

/// Conjugation by exp(th): pairs of equal weight survive, unequal ones vanish;
/// non-monotone weights along the progression have no limit.
DegenerationResult degeneration_limit(const RootProgression& p,
                                      const std::vector<Rat>& h_diagonal);

/// Integer diagonal h whose weights are nondecreasing along the progression
/// and strictly increasing exactly at the pairs not kept.
std::vector<long> find_separating_h(const RootProgression& p,
                                    const std::set<std::pair<int, int>>& keep);

std::string triple_json(const AdmissibleTriple& t);
std::string progression_str(const RootProgression& p);
std::string progression_json(const RootProgression& p);

}  // namespace frobtk
