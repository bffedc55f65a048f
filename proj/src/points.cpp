#include "hbforge/points.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hbforge/catalog.hpp"
#include "hbforge/errors.hpp"
#include "hbforge/linalg.hpp"
#include "hbforge/rees.hpp"

namespace hbforge {

namespace {

constexpr std::size_t kUniformCap = 14;
constexpr int kArrangementRetries = 100;

long long binom2(int t) { return t < 0 ? 0 : static_cast<long long>(t + 2) * (t + 1) / 2; }  // C(t+2, 2)

bool same_point(const CoeffField& f, const Point& a, const Point& b) {
    for (int k = 0; k < 3; ++k)
        if (!f.equal(a[k], b[k])) return false;
    return true;
}

Scalar eval_monomial(const CoeffField& f, const Monomial& m, const Point& p) {
    Scalar v = f.one();
    for (int k = 0; k < 3; ++k)
        if (m.e[k]) v = f.mul(v, f.pow(p[k], m.e[k]));
    return v;
}

std::vector<ScalarRow> evaluation_rows(const CoeffField& f, const std::vector<Monomial>& monos,
                                       const std::vector<Point>& pts) {
    std::vector<ScalarRow> rows;
    for (const auto& p : pts) {
        ScalarRow row;
        for (const auto& m : monos) row.push_back(eval_monomial(f, m, p));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Degree at which the evaluation rank falls short of the generic value, or -1.
int failing_degree(const CoeffField& f, const RingPtr& ring, const std::vector<Point>& pts) {
    const long long m = static_cast<long long>(pts.size());
    if (m <= 1) return -1;
    int t0 = 0;
    while (binom2(t0) < m) ++t0;
    if (t0 >= 1 && static_cast<long long>(matrix_rank(f, evaluation_rows(f, monomials_of_degree(*ring, t0 - 1), pts))) <
                       binom2(t0 - 1))
        return t0 - 1;
    if (static_cast<long long>(matrix_rank(f, evaluation_rows(f, monomials_of_degree(*ring, t0), pts))) < m) return t0;
    return -1;
}

// Basis of the degree-t forms vanishing on pts, as coefficient vectors over monos.
std::vector<ScalarRow> vanishing_forms(const CoeffField& f, const std::vector<Monomial>& monos,
                                       const std::vector<Point>& pts) {
    Echelon e = row_echelon(f, evaluation_rows(f, monos, pts));
    std::vector<ScalarRow> kernel;
    std::vector<bool> pivot(monos.size(), false);
    for (auto c : e.pivots) pivot[c] = true;
    for (std::size_t free = 0; free < monos.size(); ++free) {
        if (pivot[free]) continue;
        ScalarRow v(monos.size(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = f.neg(e.rows[r][free]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Points of `all` on which every degree-t form vanishing on `subset` vanishes.
std::vector<std::size_t> common_zeros(const CoeffField& f, const RingPtr& ring, const std::vector<Point>& subset,
                                      const std::vector<Point>& all, int t) {
    auto monos = monomials_of_degree(*ring, t);
    auto kernel = vanishing_forms(f, monos, subset);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool zero = true;
        for (const auto& v : kernel) {
            Scalar acc = f.zero();
            for (std::size_t k = 0; k < monos.size(); ++k)
                if (!f.is_zero(v[k])) acc = f.add(acc, f.mul(v[k], eval_monomial(f, monos[k], all[i])));
            if (!f.is_zero(acc)) {
                zero = false;
                break;
            }
        }
        if (zero) out.push_back(i);
    }
    return out;
}

UniformResult check_sizes(const PointSet& pts, const std::vector<std::size_t>& sizes) {
    const CoeffField& f = pts.field;
    RingPtr ring = plane_ring(f);
    const std::size_t n = pts.size();
    UniformResult res;
    for (std::size_t m : sizes) {
        if (m > n || m < 2) continue;
        std::vector<std::size_t> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        std::set<std::vector<std::size_t>> seen;
        while (true) {
            std::vector<Point> sub;
            for (auto i : idx) sub.push_back(pts.points[i]);
            int t = failing_degree(f, ring, sub);
            if (t >= 0) {
                auto w = common_zeros(f, ring, sub, pts.points, t);
                if (res.uniform || w.size() > res.witness.size()) {
                    res.uniform = false;
                    res.witness = w;
                    res.subset_size = static_cast<int>(m);
                    res.degree = t;
                }
            }
            // next combination in lexicographic order
            std::size_t k = m;
            while (k > 0 && idx[k - 1] == n - m + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!res.uniform) return res;
    }
    return res;
}

PolyMatrix graded_row(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    PolyMatrix row = PolyMatrix::row(ring, gens);
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.degree());
    row.set_shifts({0}, degs);
    return row;
}

Ideal maximal_ideal(const RingPtr& r) {
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < r->nvars(); ++i) v.push_back(Polynomial::variable(r, i));
    return Ideal(r, v);
}

std::vector<long long> trimmed(std::vector<long long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

Point normalize_point(const CoeffField& f, Point p) {
    int last = -1;
    for (int k = 2; k >= 0 && last < 0; --k)
        if (!f.is_zero(p[k])) last = k;
    if (last < 0) throw Error("the zero vector is not a point");
    Scalar inv = f.inv(p[last]);
    for (auto& c : p) c = f.mul(c, inv);
    return p;
}

PointSet make_point_set(const CoeffField& f, const std::vector<std::array<std::int64_t, 3>>& coords) {
    PointSet ps;
    ps.field = f;
    for (const auto& c : coords) {
        Point p = normalize_point(f, {f.from_int(c[0]), f.from_int(c[1]), f.from_int(c[2])});
        for (const auto& q : ps.points)
            if (same_point(f, p, q)) throw Error("points are not distinct");
        ps.points.push_back(p);
    }
    return ps;
}

PointSet random_points(std::size_t n, const CoeffField& field, std::uint64_t seed) {
    if (field.is_prime() && static_cast<unsigned long long>(field.modulus()) * field.modulus() < n)
        throw Error("field too small for " + std::to_string(n) + " distinct points");
    std::mt19937_64 rng(seed);
    PointSet ps;
    ps.field = field;
    ps.seed = seed;
    auto draw = [&]() -> Scalar {
        if (field.is_prime()) return field.from_int(static_cast<std::int64_t>(rng() % field.modulus()));
        return field.from_int(static_cast<std::int64_t>(rng() % 201) - 100);
    };
    while (ps.points.size() < n) {
        Point p{draw(), draw(), field.one()};
        bool dup = std::any_of(ps.points.begin(), ps.points.end(), [&](const Point& q) { return same_point(field, p, q); });
        if (!dup) ps.points.push_back(p);
    }
    return ps;
}

Ideal point_ideal(const RingPtr& ring, const Point& p) {
    const CoeffField& f = ring->field();
    Point q = normalize_point(f, p);
    Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1), z = Polynomial::variable(ring, 2);
    // minors of [[x,y,z],[a,b,c]] through the last nonzero coordinate
    if (!f.is_zero(q[2])) return Ideal(ring, {x - z.scaled(q[0]), y - z.scaled(q[1])});
    if (!f.is_zero(q[1])) return Ideal(ring, {x - y.scaled(q[0]), z});
    return Ideal(ring, {y, z});
}

Ideal ideal_of_points(const PointSet& pts, const Budget& budget) {
    RingPtr ring = plane_ring(pts.field);
    const CoeffField& f = pts.field;
    const long long n = static_cast<long long>(pts.size());
    if (n == 0) return Ideal::unit(ring, budget);
    // I_t is the kernel of evaluation in degree t; I is generated in degrees
    // up to reg(I) = 1 + (first t where the evaluation rank reaches n).
    std::vector<Polynomial> gens;
    for (int t = 1;; ++t) {
        auto monos = monomials_of_degree(*ring, t);
        auto kernel = vanishing_forms(f, monos, pts.points);
        for (const auto& v : kernel) {
            std::vector<Term> terms;
            for (std::size_t k = 0; k < monos.size(); ++k)
                if (!f.is_zero(v[k])) terms.push_back({monos[k], v[k]});
            gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
        }
        if (static_cast<long long>(monos.size() - kernel.size()) == n) {
            auto monos1 = monomials_of_degree(*ring, t + 1);
            for (const auto& v : vanishing_forms(f, monos1, pts.points)) {
                std::vector<Term> terms;
                for (std::size_t k = 0; k < monos1.size(); ++k)
                    if (!f.is_zero(v[k])) terms.push_back({monos1[k], v[k]});
                gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
            }
            break;
        }
    }
    Ideal out(ring, minimal_generators(gens, budget), budget);
    auto dh = dimension_height(out);
    if (dh.dim != 1 || dh.height != 2) throw InternalError("ideal of points has the wrong dimension");
    return out;
}

// Iterated intersection of the point ideals, balanced; used as a cross-check.
Ideal ideal_of_points_by_intersection(const PointSet& pts, const Budget& budget) {
    RingPtr ring = plane_ring(pts.field);
    if (pts.points.empty()) return Ideal::unit(ring, budget);
    std::function<Ideal(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) -> Ideal {
        if (hi - lo == 1) return point_ideal(ring, pts.points[lo]);
        std::size_t mid = (lo + hi) / 2;
        return intersect(rec(lo, mid), rec(mid, hi));
    };
    return rec(0, pts.points.size());
}

PointSet rational_points(const Ideal& ideal) {
    const PolyRing& r = ideal.ring();
    const CoeffField& f = r.field();
    if (!f.is_prime()) throw Error("rational point enumeration needs a prime field");
    if (r.nvars() != 3) throw Error("rational points are enumerated in P^2 only");
    if (dimension_height(ideal).dim > 1) throw Error("zero set is not finite");
    PointSet ps;
    ps.field = f;
    const auto& gens = ideal.generators();
    auto vanishes = [&](const Point& p) {
        std::vector<Scalar> v(p.begin(), p.end());
        return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return f.is_zero(g.evaluate(v)); });
    };
    const std::uint32_t p = f.modulus();
    // roots of a univariate polynomial in variable v, by evaluation
    auto roots = [&](const std::vector<Polynomial>& polys, std::size_t v, const Point& base) {
        std::vector<Scalar> out;
        auto nonzero = std::find_if(polys.begin(), polys.end(), [](const Polynomial& q) { return !q.is_zero(); });
        if (nonzero == polys.end()) throw Error("zero set is not finite");
        for (std::uint32_t a = 0; a < p; ++a) {
            std::vector<Scalar> pt(base.begin(), base.end());
            pt[v] = f.from_int(a);
            if (std::all_of(polys.begin(), polys.end(), [&](const Polynomial& q) { return f.is_zero(q.evaluate(pt)); }))
                out.push_back(pt[v]);
        }
        return out;
    };
    RingPtr ring = ideal.ring_ptr();
    // projections to the y and x coordinates: binary forms in (y,z) and (x,z)
    auto ys = roots(eliminate(gens, std::vector<std::string>{"x"}), 1, {f.zero(), f.zero(), f.one()});
    auto xs = roots(eliminate(gens, std::vector<std::string>{"y"}), 0, {f.zero(), f.zero(), f.one()});
    for (const auto& a : xs)
        for (const auto& b : ys) {
            Point q{a, b, f.one()};
            if (vanishes(q)) ps.points.push_back(q);
        }
    // the line z = 0
    std::vector<Polynomial> at_infinity;
    for (const auto& g : gens)
        at_infinity.push_back(g.substitute(ring, {Polynomial::variable(ring, 0), Polynomial::from_int(ring, 1),
                                                  Polynomial(ring)}));
    bool whole_line = std::all_of(at_infinity.begin(), at_infinity.end(), [](const Polynomial& q) { return q.is_zero(); });
    if (whole_line) throw Error("zero set is not finite");
    for (const auto& a : roots(at_infinity, 0, {f.zero(), f.one(), f.zero()})) ps.points.push_back({a, f.one(), f.zero()});
    Point e1{f.one(), f.zero(), f.zero()};
    if (vanishes(e1)) ps.points.push_back(e1);
    return ps;
}

int initial_degree_for(int n) {
    if (n < 1) throw Error("need at least one point");
    int s = 0;
    while (n >= binom2(s)) ++s;
    return s;
}

long long dim_linear_span(const Ideal& ideal, int t) {
    const RingPtr& ring = ideal.ring_ptr();
    GradedPiece piece = graded_piece(ideal, t);
    auto monos = monomials_of_degree(*ring, t + 1);
    std::vector<ScalarRow> rows;
    const CoeffField& f = ring->field();
    for (const auto& b : piece.basis)
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            Polynomial prod = b * Polynomial::variable(ring, v);
            ScalarRow row(monos.size(), f.zero());
            for (const auto& term : prod.terms()) {
                auto it = std::find_if(monos.begin(), monos.end(), [&](const Monomial& m) { return m.e == term.m.e; });
                if (it == monos.end()) throw InternalError("product outside the expected degree");
                row[static_cast<std::size_t>(it - monos.begin())] = term.c;
            }
            rows.push_back(std::move(row));
        }
    return static_cast<long long>(matrix_rank(f, std::move(rows)));
}

PositionReport position_report(const Ideal& ideal, int n) {
    if (ideal.ring().nvars() != 3) throw Error("position report needs k[x,y,z]");
    HilbertData hd = hilbert(ideal);
    if (hd.dim != 1 || hd.multiplicity != n) throw Error("ideal does not define " + std::to_string(n) + " points");
    PositionReport rep;
    rep.n = n;
    rep.s = initial_degree_for(n);
    rep.h = n - static_cast<int>(binom2(rep.s - 1));
    rep.dim_is = static_cast<long long>(graded_piece(ideal, rep.s).dim);
    rep.dim_is1 = static_cast<long long>(graded_piece(ideal, rep.s + 1).dim);
    rep.dim_r1is = dim_linear_span(ideal, rep.s);
    rep.generic = true;
    for (int t = 0; t <= rep.s; ++t)
        if (hd.hfun(t) != std::min<long long>(binom2(t), n)) rep.generic = false;
    rep.tight = rep.generic && rep.dim_r1is == std::min(3 * rep.dim_is, rep.dim_is1);
    int t = 0;
    while (hd.hfun(t) != n) ++t;
    rep.reg = t + 1;
    return rep;
}

bool in_generic_position(const CoeffField& f, const std::vector<Point>& pts) {
    return failing_degree(f, plane_ring(f), pts) < 0;
}

UniformResult uniform_check(const PointSet& pts, std::size_t m_max, bool allow_large) {
    if (pts.size() > kUniformCap && !allow_large)
        throw Error("uniform check over more than " + std::to_string(kUniformCap) + " points needs an explicit override");
    std::vector<std::size_t> sizes;
    for (std::size_t m = 3; m <= std::min(m_max, pts.size()); ++m) sizes.push_back(m);
    return check_sizes(pts, sizes);
}

UniformResult uniform_screen(const PointSet& pts) { return check_sizes(pts, {3, 6}); }

BettiTable predicted_betti(int s, int h) {
    if (s < 2 || h < 0 || h > s) throw Error("need s >= 2 and 0 <= h <= s");
    BettiTable b;
    if (2 * h <= s) {
        b.add(0, s, s - h + 1);
        if (s - 2 * h > 0) b.add(1, s + 1, s - 2 * h);
        if (h > 0) b.add(1, s + 2, h);
    } else {
        b.add(0, s, s - h + 1);
        b.add(0, s + 1, 2 * h - s);
        b.add(1, s + 2, h);
    }
    return b;
}

int predicted_regularity(int s, int h) { return h == 0 ? s : s + 1; }

long long map_degree(const Ideal& j) {
    const RingPtr& r = j.ring_ptr();
    if (r->nvars() != 3) throw Error("map degree needs k[x,y,z]");
    const auto& gens = j.generators();
    if (gens.empty()) throw Error("map degree of the zero ideal");
    int s = gens.front().standard_degree();
    for (const auto& g : gens)
        if (!g.is_standard_homogeneous() || g.standard_degree() != s) throw Error("map degree needs an equigenerated ideal");
    FiberData fd = fiber_and_spread(rees_ideal(gens, rees_ambient(r, gens.size()), j.budget()), 3, gens);
    if (fd.multiplicity == 0) throw Error("zero fiber multiplicity");
    if (fd.spread != 3) throw Error("map is not generically finite onto its image");
    Ideal sat = saturate(j, maximal_ideal(r)).ideal;
    long long e = 0;
    if (!sat.is_unit()) {
        HilbertData hd = hilbert(sat);
        if (hd.dim != 1) throw Error("base locus is not zero-dimensional");
        e = hd.multiplicity;
    }
    long long num = static_cast<long long>(s) * s - e;
    if (num % fd.multiplicity != 0) throw InternalError("map degree is not an integer");
    return num / fd.multiplicity;
}

ArrangementResult arrangement_gradient(int d, int n, std::uint64_t seed, const CoeffField& field) {
    if (d < 2) throw Error("need d >= 2");
    if (n < d + 1) throw Error("need n >= d + 1");
    if (field.is_prime() && n % static_cast<int>(field.modulus()) == 0)
        throw Error("field characteristic divides n");
    std::vector<std::string> names;
    if (d == 3) {
        names = {"x", "y", "z"};
    } else {
        for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    }
    RingPtr r = PolyRing::standard(names, field);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(static_cast<std::size_t>(d));
    std::iota(all.begin(), all.end(), 0);
    for (int attempt = 0; attempt < kArrangementRetries; ++attempt) {
        std::vector<Polynomial> lines;
        std::vector<ScalarRow> coeffs;
        for (int i = 0; i < n; ++i) {
            Polynomial l = random_form(r, all, 1, rng);
            ScalarRow row(static_cast<std::size_t>(d), field.zero());
            for (const auto& t : l.terms())
                for (std::size_t v = 0; v < all.size(); ++v)
                    if (t.m.e[v]) row[v] = t.c;
            lines.push_back(l);
            coeffs.push_back(row);
        }
        // every d of the forms must be independent
        bool generic = true;
        std::vector<std::size_t> idx(static_cast<std::size_t>(d));
        std::iota(idx.begin(), idx.end(), 0);
        while (generic) {
            std::vector<ScalarRow> sub;
            for (auto i : idx) sub.push_back(coeffs[i]);
            if (matrix_rank(field, sub) < static_cast<std::size_t>(d)) generic = false;
            std::size_t k = idx.size();
            while (k > 0 && idx[k - 1] == static_cast<std::size_t>(n) - idx.size() + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!generic) continue;
        ArrangementResult res;
        res.lines = lines;
        res.form = Polynomial::from_int(r, 1);
        for (const auto& l : lines) res.form *= l;
        std::vector<Polynomial> partials;
        for (std::size_t v = 0; v < all.size(); ++v) partials.push_back(res.form.derivative(v));
        res.gradient = Ideal(r, partials);
        res.linear_type = is_linear_type(partials);
        std::vector<Polynomial> products;
        for (int i = 0; i < n; ++i) {
            Polynomial p = Polynomial::from_int(r, 1);
            for (int k = 0; k < n; ++k)
                if (k != i) p *= lines[static_cast<std::size_t>(k)];
            products.push_back(p);
        }
        res.g_condition = g_condition(syzygies(graded_row(r, products)), d).holds;
        return res;
    }
    throw Error("no generic arrangement sample");
}

bool Sector2Report::consequences_hold() const {
    return linear_type.value_or(false) && rees_cm.value_or(false) && numerator == expected_numerator &&
           multiplicity == expected_multiplicity && degree.has_value() && *degree == expected_degree;
}

Sector2Report sector2_audit(const Ideal& ideal, int n) {
    Sector2Report rep;
    rep.position = position_report(ideal, n);
    const int s = rep.s = rep.position.s;
    if (s < 5 || rep.position.h != s - 2 || !rep.position.tight) {
        rep.skipped = true;
        rep.skip_reason = "needs a tight configuration with s >= 5 and h = s - 2";
        return rep;
    }
    const RingPtr& r = ideal.ring_ptr();
    rep.j = Ideal(r, graded_piece(ideal, s).basis, ideal.budget());
    FreeResolution res = minimal_resolution(ideal);
    const PolyMatrix& phi = res.maps.at(1);
    std::vector<std::size_t> lrows, cols(phi.cols());
    std::iota(cols.begin(), cols.end(), 0);
    for (std::size_t i = 0; i < phi.rows(); ++i)
        if (phi.row_shifts()[i] == s + 1) lrows.push_back(i);
    if (lrows.size() != static_cast<std::size_t>(s - 4) || phi.cols() != static_cast<std::size_t>(s - 2))
        throw InternalError("unexpected resolution shape for h = s - 2");
    rep.minors_height = minor_ideal_height(phi.submatrix(lrows, cols), static_cast<std::size_t>(s - 4)).height;
    rep.minors_condition = rep.minors_height == 3;
    rep.finite_quotient = dimension_height(quotient(rep.j, ideal)).dim <= 0;
    rep.saturation_is_i = saturate(rep.j, maximal_ideal(r)).ideal == ideal;

    rep.expected_numerator.assign(static_cast<std::size_t>(2 * s), 0);
    rep.expected_numerator[0] = 1;
    rep.expected_numerator[static_cast<std::size_t>(s)] = -3;
    rep.expected_numerator[static_cast<std::size_t>(2 * s - 2)] = s - 2;
    rep.expected_numerator[static_cast<std::size_t>(2 * s - 1)] = -(s - 4);
    rep.expected_numerator = trimmed(rep.expected_numerator);
    rep.expected_multiplicity = (static_cast<long long>(s) * s + 3 * s - 4) / 2;
    rep.expected_degree = (static_cast<long long>(s) * s - 3 * s + 4) / 2;
    HilbertData hd = hilbert(rep.j);
    rep.numerator = trimmed(hd.numerator);
    rep.multiplicity = hd.multiplicity;
    if (rep.condition_a()) {
        const auto& gens = rep.j.generators();
        RingPtr amb = rees_ambient(r, gens.size());
        Ideal rees = rees_ideal(gens, amb, ideal.budget());
        rep.linear_type = rees == symmetric_ideal(syzygies(graded_row(r, gens)), amb, &gens, ideal.budget());
        rep.rees_cm = cm_via_pd(rees).cm;
        rep.degree = map_degree(rep.j);
    }
    return rep;
}

Sector2Report sector2_audit(const PointSet& pts) {
    return sector2_audit(ideal_of_points(pts), static_cast<int>(pts.size()));
}

}  // namespace hbforge
