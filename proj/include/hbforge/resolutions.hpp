#pragma once

#include <map>
#include <string>
#include <vector>

#include "hbforge/ideal.hpp"
#include "hbforge/matrix.hpp"

namespace hbforge {

// Graded Betti numbers beta_{i,j}: homological index i, internal degree j.
class BettiTable {
public:
    BettiTable() = default;
    void add(int i, int j, int count = 1);
    int get(int i, int j) const;
    // Degrees with nonzero entries at homological index i.
    std::map<int, int> row(int i) const;
    const std::map<int, std::map<int, int>>& entries() const { return beta_; }
    int length() const;  // largest index with a nonzero entry, -1 if empty
    int rank(int i) const;
    int regularity() const;  // max j - i over nonzero entries
    bool empty() const { return beta_.empty(); }
    // Table of I from the table of R/I: drops index 0 and shifts the rest down.
    BettiTable ideal_table() const;
    // Hilbert function value at t of the module resolved, in nvars variables.
    long long hilbert_value(int nvars, int t) const;
    // Macaulay-style grid: columns are homological indices, rows are j - i.
    std::string to_text() const;
    // "0 -> R(-4)^3 -> R(-3)^4", highest index first.
    std::string to_sequence(const std::string& ring_symbol = "R") const;
    bool operator==(const BettiTable& o) const { return beta_ == o.beta_; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
    std::map<int, std::map<int, int>> beta_;
};

// Complex of graded free modules F_0 <- F_1 <- ... ; maps[i] is F_{i+1} -> F_i
// with row shifts of F_i and column shifts of F_{i+1}.
struct FreeResolution {
    RingPtr ring;
    std::vector<PolyMatrix> maps;
    std::vector<std::vector<int>> shifts;  // shifts[i] are the degrees of the basis of F_i
    bool minimal = false;

    std::size_t length() const { return maps.size(); }
    BettiTable betti() const;
    bool composes_to_zero() const;
    bool has_unit_entries() const;
};

// Columns generate the kernel of M; returned with row shifts equal to M's
// column shifts. When `certified` is given, the Groebner basis of the kernel is
// re-checked by reducing all its S-pairs.
PolyMatrix syzygies(const PolyMatrix& m, const Budget& budget = {}, bool* certified = nullptr);

// True when every column of `cols` lies in the column span of `gens`.
bool column_span_contains(const PolyMatrix& gens, const PolyMatrix& cols, const Budget& budget = {});

// Minimal homogeneous generators of the column span of M (subset of columns).
PolyMatrix minimal_columns(const PolyMatrix& m, const Budget& budget = {});

// Minimal graded free resolution of R/I.
FreeResolution minimal_resolution(const Ideal& ideal);
// Minimal graded free resolution of coker M.
FreeResolution minimal_resolution(const PolyMatrix& m, const Budget& budget = {});
// Removes unit entries by cancelling trivial summands, pivoting in (index, row, column) order.
FreeResolution minimalize(FreeResolution complex);

// Delta_i = (-1)^{i+1} det(phi without row i), for an n x (n-1) matrix.
std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& phi);

struct TwoDegreeShape {
    int n = 0, a = 0, eps1 = 0, eps2 = 0;
    PolyMatrix phi;  // n x (n-1); rows 0..a-1 form Phi_1, the rest Phi_2

    PolyMatrix phi1() const;
    PolyMatrix phi2() const;
    int D() const { return a * eps1 + (n - a) * eps2; }
    // Checks dimensions and entry degrees; throws on violation.
    void validate() const;
};
// Maximal minors whose row sets contain every row of Phi_2; f_i omits row i of
// Phi_1 and carries the sign (-1)^{i+1}.
std::vector<Polynomial> fixed_minors(const TwoDegreeShape& shape);
Ideal fixed_minors_ideal(const TwoDegreeShape& shape, const Budget& budget = {});

// Buchsbaum-Rim complex of psi: F = R^s -> G = R^r with entries of one degree.
// maps[0] = psi, maps[1] = theta, then the divided-power differentials.
FreeResolution buchsbaum_rim(const PolyMatrix& psi);
// Basis of the divided powers D_i of a rank-r module: exponent vectors, lex order.
std::vector<std::vector<int>> divided_power_basis(int r, int i);

struct MinorHeight {
    int height = 0;         // exact when complete, otherwise a lower bound >= target
    bool complete = false;  // every k-minor was used
    bool zero = false;      // all k-minors vanish
};
// Height of I_k(m). Minors are generated lazily in a fixed order and the search stops
// once the height reaches `target`; target < 0 forces the exact value.
MinorHeight minor_ideal_height(const PolyMatrix& m, std::size_t k, int target = -1, const Budget& budget = {});

struct AcyclicityCertificate {
    bool acyclic = false;
    std::vector<int> ranks;    // expected rank of each map, index 0 is d_1
    std::vector<int> heights;  // height of I_{r_i}(d_i), a lower bound once it reaches i
    std::vector<bool> passed;
    std::string to_string() const;
};
// Buchsbaum-Eisenbud criterion for a complex with d^2 = 0.
AcyclicityCertificate acyclicity_check(const FreeResolution& complex, const Budget& budget = {});

}  // namespace hbforge
