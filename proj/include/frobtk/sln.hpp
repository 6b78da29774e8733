// sl(n), its parabolic and seaweed subalgebras as index-pair supports, the
// bracket on the standard basis, functionals F_S and the Kirillov form.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "frobtk/linalg.hpp"

namespace frobtk {

struct IndexPair {
    int i = 0, j = 0;
    auto operator<=>(const IndexPair&) const = default;
};

std::string pair_str(const IndexPair& p);

/// Basis element of a subalgebra containing the Cartan: either a matrix unit
/// e_ij with i != j, or eps_k = e_kk - (1/n) I for k = 1..n-1.
struct BasisElement {
    enum Kind { OffDiag, Eps };
    Kind kind = OffDiag;
    IndexPair p{};  // OffDiag
    int k = 0;      // Eps

    static BasisElement offdiag(int i, int j) { return {OffDiag, {i, j}, 0}; }
    static BasisElement eps(int k) { return {Eps, {}, k}; }
    auto operator<=>(const BasisElement&) const = default;
};

std::string basis_str(const BasisElement& b);

using LinComb = std::vector<std::pair<BasisElement, Rat>>;

/// [a, b] over the canonical basis; diagonal output is re-expressed over
/// eps_1..eps_{n-1} via eps_1 + ... + eps_n = 0.
LinComb bracket(int n, const BasisElement& a, const BasisElement& b);

class LieSupport {
public:
    enum class Kind { Parabolic, Seaweed, Custom };

    static LieSupport parabolic(int n, int m);
    static LieSupport seaweed(int n, std::vector<int> top, std::vector<int> bottom);
    static LieSupport custom(int n, std::set<IndexPair> pairs);
    static LieSupport full_sl(int n);

    int n() const { return n_; }
    Kind kind() const { return kind_; }
    int parabolic_m() const { return m_; }
    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }
    bool is_seaweed() const { return kind_ != Kind::Custom; }

    const std::set<IndexPair>& pairs() const { return pairs_; }
    bool contains(int i, int j) const { return pairs_.count({i, j}) > 0; }
    int dim() const { return int(pairs_.size()) + n_ - 1; }

    /// Canonical ordered basis: off-diagonal pairs lexicographic, then eps_k.
    std::vector<BasisElement> basis() const;

    std::string kind_str() const;

private:
    LieSupport() = default;
    void check_closure() const;

    int n_ = 0;
    int m_ = 0;  // parabolic only
    std::vector<int> top_, bottom_;
    Kind kind_ = Kind::Custom;
    std::set<IndexPair> pairs_;
};

/// Functional with off-diagonal support; F_S has all coefficients 1.
struct Functional {
    std::map<IndexPair, Rat> coeff;

    static Functional indicator(const std::set<IndexPair>& s);
    Rat operator()(const IndexPair& p) const;
    Rat operator()(const LinComb& c) const;  // eps terms evaluate to 0
};

struct KirillovMatrix {
    std::vector<BasisElement> basis;
    RationalMatrix mat;
};

/// B_F(x, y) = F([x, y]) on the canonical ordered basis of g.
KirillovMatrix kirillov_matrix(const LieSupport& g, const Functional& f);

struct FrobeniusCertificate {
    int dim = 0;
    int rank = 0;
    int kernel_dim = 0;
    bool frobenius = false;
    Rat determinant;
};

FrobeniusCertificate is_frobenius(const LieSupport& g, const Functional& f);

/// Documented schema: basis as e/eps tags, entries as exact "p/q" strings.
std::string kirillov_json(const KirillovMatrix& km);

/// Minimum kernel dimension of B_F over seeded random integer functionals
/// with coefficients in [-10n, 10n]; an upper bound on idx(g) that is exact
/// with overwhelming probability.
int algebra_index_estimate(const LieSupport& g, int samples, std::uint64_t seed);

Functional random_functional(const LieSupport& g, std::uint64_t seed);

/// Deterministic cross-platform PRNG used for all sampling.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// uniform value in [lo, hi]
    long long range(long long lo, long long hi);
};

}  // namespace frobtk
