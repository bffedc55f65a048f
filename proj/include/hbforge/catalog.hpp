#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hbforge/ideal.hpp"
#include "hbforge/matrix.hpp"
#include "hbforge/resolutions.hpp"

namespace hbforge {

// Named 3x2 matrices and seeded instance families over k[x,y,z].

RingPtr plane_ring(CoeffField field = CoeffField());

// Random form of the given degree in the listed variables; coefficients in [-9, 9].
Polynomial random_form(const RingPtr& ring, const std::vector<std::size_t>& vars, int degree, std::mt19937_64& rng);

PolyMatrix deg4_matrix(const RingPtr& r);
PolyMatrix degree6_matrix(const RingPtr& r);
// 3x2 matrix whose 2-minors define 8 points with s = 3, h = 2.
PolyMatrix redone_matrix(const RingPtr& r);
// 4x3 matrix whose 3-minors define 18 points with four on the line y = 0.
PolyMatrix non_uniform_matrix(const RingPtr& r);
// 3x2 matrix whose minors generate the degree-5 part of that ideal.
PolyMatrix non_uniform_j_matrix(const RingPtr& r);
// The same shape with general quadrics in the upper 3x3 block, resampled until
// the maximal minors have height 2.
PolyMatrix modified_non_uniform_matrix(const RingPtr& r, std::uint64_t seed);

// [[x, g1], [y, g2], [0, g3]] with g_i = z*a_i + b_i, a_i, b_i forms in x, y of
// degrees d-2 and d-1, resampled until the minors have height 2.
PolyMatrix dejonq_matrix(const RingPtr& r, int d, std::uint64_t seed);

struct ZaqInstance {
    int m = 1, n = 1, eps = 1;
    std::uint64_t seed = 0;
    std::vector<Polynomial> q, qp;  // p_i = q_i x^m + qp_i y^n
    PolyMatrix phi;
    std::vector<Polynomial> minors;
};

// [[x^m, p1], [y^m, p2], [0, p3]], resampled until the height, primary
// component and z-degree hypotheses hold.
ZaqInstance zaq_instance(const RingPtr& r, int m, int n, int eps, std::uint64_t seed);

// The 3x2 matrix [[t1, t2 y^(m-n)], [sum q_i t_i, sum qp_i t_i], [-y^n, x^m]] over the Rees ambient.
PolyMatrix zaq_rees_matrix(const ZaqInstance& z, const RingPtr& ambient);

// n x (n-1) matrix over `r` with random rows of degree eps1 (first a rows) and
// eps2 (the rest), resampled until ht I_{n-a}(Phi_2) = a.
TwoDegreeShape random_two_degree_shape(const RingPtr& r, int n, int a, int eps1, int eps2, std::uint64_t seed);

// Betti table of R/J for the fixed minors J when ht I_{n-a}(Phi_2) = a:
// R <- R(-(D-eps1))^a <- R(-((n-a+i)eps2+D))^{b_i}, b_i = C(n-a-1+i, i) C(n-1, i+n-a+1).
BettiTable fixed_minors_betti(int n, int a, int eps1, int eps2);

long long binomial(long long n, long long k);

}  // namespace hbforge
