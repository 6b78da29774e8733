// Wedge-tensor algebra and r-matrices: inversion of the Kirillov form, the
// Lagrangian even/odd splitting, graph chain-peeling, the closed forms for
// P(n,1) and P(n,2) and the exact classical Yang-Baxter check.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobtk/formgraph.hpp"
#include "frobtk/gallery.hpp"
#include "frobtk/sln.hpp"

namespace frobtk {

/// Linear combination of basis elements, canonically keyed.
using Combo = std::map<BasisElement, Rat>;

/// Sum of c * a^b over ordered pairs a < b, with a^b <-> a(x)b - b(x)a.
struct WedgeTwo {
    std::map<std::pair<BasisElement, BasisElement>, Rat> terms;

    void add(const BasisElement& a, const BasisElement& b, const Rat& c);
    void add_combo(const Combo& a, const Combo& b);  // bilinear expansion of a^b
    WedgeTwo scaled(const Rat& c) const;
    bool operator==(const WedgeTwo&) const = default;
    bool zero() const { return terms.empty(); }
};

struct WedgeThree {
    std::map<std::tuple<BasisElement, BasisElement, BasisElement>, Rat> terms;
    bool zero() const { return terms.empty(); }
};

/// r = sum over i<j of 2 (B^-1)_ij x_i ^ x_j; satisfies R B = 2 I.
WedgeTwo r_from_inverse(const KirillovMatrix& km);

struct LagrangianSplit {
    std::vector<Combo> even;  // basis of the even eigenvalue sum
    std::vector<Combo> odd;   // B-dual basis inside the odd sum
};

/// Even/odd principal-eigenvalue split into dual Lagrangian halves; the dual
/// basis is produced blockwise from the (m, 1-m) pairings.
LagrangianSplit lagrangian_split(const LieSupport& g, const Functional& f,
                                 const PrincipalElement& d);

/// r = sum x_i ^ x_i'; satisfies R B = -I.
WedgeTwo r_from_lagrangian(const LagrangianSplit& ls);

struct PeelStep {
    int component = 0;
    Combo detached_tail;  // v of the isolated link v -> w
    Combo detached_head;  // w, the accumulated chain value
};

struct PeelTrace {
    std::vector<PeelStep> links;
};

/// Chain detachment: terminal chains of length two collapse by pushing the
/// chain tail onto the attachment vertex; the leftover links sum to r with
/// R B = -I. Components must be rooted trees with a perfect matching.
WedgeTwo r_from_peeling(const FormGraph& fg, PeelTrace* trace = nullptr);

/// Printed closed form for the prime functional on P(n,1).
WedgeTwo closed_form_r_n1(int n);

/// Printed closed form for the cyclic functional on P(n,2), odd n.
WedgeTwo closed_form_r_n2(int n);

/// diag(0,1,-1,0,-2,...) + (n-1)(n-3)/(4n) I for P(n,2), odd n.
PrincipalElement principal_formula_n2(int n);

/// The scalar c with R * B = c I, when one exists.
std::optional<Rat> defining_property_scalar(const WedgeTwo& r, const KirillovMatrix& km);

/// [r12,r13] + [r12,r23] + [r13,r23] expanded over the basis of g and
/// antisymmetrized; zero certifies the CYBE.
WedgeThree cybe_check(const WedgeTwo& r, const LieSupport& g);

std::string wedge_str(const WedgeTwo& r);
std::string wedge_json(const WedgeTwo& r);
std::string wedge_three_json(const WedgeThree& w);
std::string peel_str(const PeelTrace& trace);

}  // namespace frobtk
