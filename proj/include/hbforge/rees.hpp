#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbforge/ideal.hpp"
#include "hbforge/matrix.hpp"

namespace hbforge {

using Bidegree = std::vector<int>;
using BidegreeTable = std::map<Bidegree, int>;

// Bigraded ring R[t1..tn]: base variables weigh (w,0), the t's weigh (0,1);
// block order [base | t], grevlex inside each block.
RingPtr rees_ambient(const RingPtr& base, std::size_t n, const std::string& prefix = "t");
// The polynomial ring k[t1..tn] of the fiber, standard graded.
RingPtr fiber_ring(const RingPtr& ambient, std::size_t base_nvars);

// I_1([t1..tn] * phi) in the ambient ring. When `gens` is given, checks that
// the columns of phi are syzygies of gens.
Ideal symmetric_ideal(const PolyMatrix& phi, const RingPtr& ambient, const std::vector<Polynomial>* gens = nullptr,
                      const Budget& budget = {});

// Kernel of R[t] -> R[u], t_i -> f_i u, by eliminating u.
Ideal rees_ideal_elimination(const std::vector<Polynomial>& gens, const RingPtr& ambient, const Budget& budget = {});
// L : f_1^infinity with L the symmetric ideal of a presentation of the f_i.
Ideal rees_ideal_saturation(const std::vector<Polynomial>& gens, const RingPtr& ambient, const Budget& budget = {});
// Both algorithms; throws InternalError when they disagree.
Ideal rees_ideal(const std::vector<Polynomial>& gens, const RingPtr& ambient, const Budget& budget = {});

struct ReesPresentation {
    RingPtr base;
    RingPtr ambient;
    std::vector<Polynomial> generators;
    PolyMatrix presentation;
    Ideal symmetric;
    Ideal rees;
    Ideal fiber;  // in fiber_ring(ambient, base nvars)
    int spread = 0;
    long long fiber_multiplicity = 0;
};
ReesPresentation rees_presentation(const std::vector<Polynomial>& gens, const Budget& budget = {});

struct FiberData {
    Ideal fiber;
    int spread = 0;
    long long multiplicity = 0;
};
// Fiber ideal Q = Jrees ∩ k[t], the analytic spread dim k[t]/Q and e(k[t]/Q).
FiberData fiber_and_spread(const Ideal& rees, std::size_t base_nvars, const std::vector<Polynomial>& gens);

// True when the symmetric and Rees ideals coincide.
bool is_linear_type(const std::vector<Polynomial>& gens, const PolyMatrix& phi, const Budget& budget = {});
bool is_linear_type(const std::vector<Polynomial>& gens, const Budget& budget = {});

struct SylvesterForm {
    Polynomial h;
    PolyMatrix content;  // rows (f, g), columns (a, b)
    std::optional<Bidegree> bidegree;
};
SylvesterForm sylvester_form(const Polynomial& f, const Polynomial& g, const Polynomial& a, const Polynomial& b);

// Minimal bihomogeneous generators, in (total degree, bidegree, input) order.
std::vector<Polynomial> bigraded_minimal_generators(const Ideal& ideal);
BidegreeTable bigraded_min_gens(const Ideal& ideal);
std::string bidegree_table_to_string(const BidegreeTable& table);

struct CmReport {
    int pd = 0;
    int height = 0;
    bool cm = false;
};
// Cohen-Macaulayness of S/A via projective dimension = height.
CmReport cm_via_pd(const Ideal& ideal);

struct ReductionCertificate {
    bool holds = false;
    int r = 0;  // reduction number when holds, else the exhausted bound
};
ReductionCertificate is_reduction(const Ideal& j, const Ideal& i, int r_max = 6);

struct GConditionReport {
    bool holds = true;
    std::optional<int> witness;           // first failing j
    std::vector<std::pair<int, int>> heights;  // (j, certified height of I_j)
};
// ht I_j(phi) >= n - j + 1 for n - s + 1 <= j <= n - 1, n = rows of phi.
GConditionReport g_condition(const PolyMatrix& phi, int s, const Budget& budget = {});

}  // namespace hbforge
