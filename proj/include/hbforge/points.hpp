#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbforge/ideal.hpp"
#include "hbforge/resolutions.hpp"

namespace hbforge {

using Point = std::array<Scalar, 3>;

// Points of P^2; each is scaled so that its last nonzero coordinate is 1.
struct PointSet {
    CoeffField field;
    std::vector<Point> points;
    std::uint64_t seed = 0;

    std::size_t size() const { return points.size(); }
};

Point normalize_point(const CoeffField& f, Point p);
PointSet make_point_set(const CoeffField& f, const std::vector<std::array<std::int64_t, 3>>& coords);
// n distinct points of the affine chart z = 1, uniform per seed.
PointSet random_points(std::size_t n, const CoeffField& field, std::uint64_t seed);

// Ideal of one point: two independent 2-minors of [[x,y,z],[a,b,c]].
Ideal point_ideal(const RingPtr& ring, const Point& p);
// Generated by the kernels of evaluation up to degree reg(I).
Ideal ideal_of_points(const PointSet& pts, const Budget& budget = {});
// Intersection of the point ideals; independent of the evaluation route.
Ideal ideal_of_points_by_intersection(const PointSet& pts, const Budget& budget = {});
// All GF(p)-rational points of a homogeneous ideal with zero-dimensional zero set.
PointSet rational_points(const Ideal& ideal);

struct PositionReport {
    int n = 0, s = 0, h = 0;
    long long dim_is = 0, dim_is1 = 0, dim_r1is = 0;
    bool generic = false, tight = false;
    std::optional<bool> uniform;
    int reg = 0;  // regularity of I
};

// least s with n < C(s+2, 2)
int initial_degree_for(int n);
PositionReport position_report(const Ideal& ideal, int n);
// dim_k R_1 I_t, by the rank of the products x_i * (basis of I_t).
long long dim_linear_span(const Ideal& ideal, int t);

struct UniformResult {
    bool uniform = true;
    std::vector<std::size_t> witness;  // indices into the point set
    int subset_size = 0;               // size of the first failing subset
    int degree = 0;                    // degree of the unexpected vanishing forms
};

// True when the subset is in generic position for its own size (evaluation ranks).
bool in_generic_position(const CoeffField& f, const std::vector<Point>& pts);
// Checks every subset of size <= m_max. A failure is widened to all points on
// the common zeros of the forms that vanish on the failing subset; the largest
// such witness at the smallest failing size is reported.
UniformResult uniform_check(const PointSet& pts, std::size_t m_max, bool allow_large = false);
// Necessary condition only: no 3 points on a line and no 6 on a conic.
UniformResult uniform_screen(const PointSet& pts);

BettiTable predicted_betti(int s, int h);  // table of I: index 0 = generators
int predicted_regularity(int s, int h);

// Degree of the rational map of an equigenerated ideal of k[x,y,z].
long long map_degree(const Ideal& j);

struct ArrangementResult {
    Polynomial form;
    std::vector<Polynomial> lines;
    Ideal gradient;
    bool linear_type = false;
    bool g_condition = false;  // G_d for the ideal of (n-1)-fold products
};
ArrangementResult arrangement_gradient(int d, int n, std::uint64_t seed, const CoeffField& field = CoeffField());

struct Sector2Report {
    bool skipped = false;
    std::string skip_reason;
    PositionReport position;
    int s = 0;
    Ideal j;
    int minors_height = 0;  // height of I_{s-4}(L)
    bool finite_quotient = false;
    bool minors_condition = false;
    bool saturation_is_i = false;
    std::optional<bool> linear_type, rees_cm;
    std::vector<long long> numerator, expected_numerator;
    long long multiplicity = 0, expected_multiplicity = 0;
    std::optional<long long> degree;
    long long expected_degree = 0;

    bool condition_a() const { return finite_quotient && minors_condition && saturation_is_i; }
    // All consequences hold; meaningful only when condition_a().
    bool consequences_hold() const;
};
Sector2Report sector2_audit(const Ideal& ideal, int n);
Sector2Report sector2_audit(const PointSet& pts);

}  // namespace hbforge
