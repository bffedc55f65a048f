// Acceptance run: one PASS/FAIL line per criterion, with wall-clock caps.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "hbforge/catalog.hpp"
#include "hbforge/errors.hpp"
#include "hbforge/groebner.hpp"
#include "hbforge/linalg.hpp"
#include "hbforge/points.hpp"
#include "hbforge/rees.hpp"
#include "hbforge/resolutions.hpp"
#include "support.hpp"

using namespace hbforge;
using testing_support::P;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void need(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

// Every resolution built during the run, with the ideal it resolves when there is one.
struct LoggedComplex {
    FreeResolution complex;
    std::optional<Ideal> ideal;
};
std::vector<LoggedComplex> complex_log;

FreeResolution logged_resolution(const Ideal& i) {
    FreeResolution res = minimal_resolution(i);
    complex_log.push_back({res, i});
    return res;
}

Polynomial content_row_form(const PolyMatrix& phi, std::size_t col, const RingPtr& s) {
    Polynomial f(s);
    for (std::size_t i = 0; i < phi.rows(); ++i)
        f += phi.at(i, col).map_to(s) * Polynomial::variable(s, phi.ring().nvars() + i);
    return f;
}

std::string table(const BidegreeTable& t) {
    std::string s;
    for (const auto& [deg, count] : t)
        s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(deg[0]) + "," + std::to_string(deg[1]) +
             ")x" + std::to_string(count);
    return s;
}

Ideal piece_ideal(const Ideal& i, int t) { return Ideal(i.ring_ptr(), graded_piece(i, t).basis); }

std::string c1_deg4() {
    RingPtr r = plane_ring();
    auto gens = signed_maximal_minors(deg4_matrix(r));
    RingPtr s = rees_ambient(r, 3);
    Ideal rees = rees_ideal(gens, s);
    BidegreeTable expected{{{2, 1}, 2}, {{2, 2}, 1}, {{1, 3}, 1}};
    need(bigraded_min_gens(rees) == expected, "bidegrees " + table(bigraded_min_gens(rees)));
    Polynomial f = P("x^2*t1+y^2*t2", s), g = P("y*z*t1+x*z*t2+y^2*t3", s);
    need(symmetric_ideal(syzygies([&] {
             PolyMatrix row = PolyMatrix::row(r, gens);
             row.set_shifts({0}, {4, 4, 4});
             return row;
         }()), s) == Ideal(s, {f, g}),
         "symmetric ideal is not (f, g)");
    Polynomial h1 = sylvester_form(f, g, P("x", s), P("y", s)).h;
    need(h1.normalized() == P("t1*t3*x*y+t1^2*x*z-t2^2*y*z", s).normalized(), "h1 = " + h1.to_string());
    need(quotient(Ideal(s, {f, g, h1}), Ideal(s, {P("x", s), P("y", s)})) == rees, "(f,g,h1):(x,y) differs");
    need(!cm_via_pd(rees).cm, "Rees algebra reported CM");
    need(!is_linear_type(gens), "reported linear type");
    return "bidegrees " + table(expected);
}

std::string c2_degree6() {
    RingPtr r = plane_ring();
    auto gens = signed_maximal_minors(degree6_matrix(r));
    RingPtr s = rees_ambient(r, 3);
    Ideal rees = rees_ideal(gens, s);
    Polynomial f = P("x^2*t1+y^2*t2", s), g = P("(x^3*z+y^4)*t1+(x^4+y^3*z)*t2+(x^4+y^4)*t3", s);
    Polynomial h1 = sylvester_form(f, g, P("x^2", s), P("y^2", s)).h;
    Polynomial h2 = sylvester_form(f, h1, P("x-y", s), P("y^2", s)).h;
    need(h1.normalized() == P("-t2^2*x^2-t2*t3*x^2+t1^2*y^2+t1*t3*y^2-t1*t2*x*z+t1*t2*y*z", s).normalized(),
         "h1 = " + h1.to_string());
    need(h2.normalized() ==
             P("-t1^3*x-t2^3*x-t1^2*t3*x-t2^2*t3*x-t1^3*y-t2^3*y-t1^2*t3*y-t2^2*t3*y-t1^2*t2*z-t1*t2^2*z", s)
                 .normalized(),
         "h2 = " + h2.to_string());
    need(rees.contains(h1) && rees.contains(h2), "Sylvester forms outside the Rees ideal");
    return "h1, h2 reproduced and in the Rees ideal";
}

std::string c3_dejonq() {
    RingPtr r = plane_ring();
    int cases = 0;
    for (int d : {3, 4})
        for (std::uint64_t seed : {std::uint64_t(10 + d), std::uint64_t(20 + d)}) {
            Ideal rees = rees_ideal(signed_maximal_minors(dejonq_matrix(r, d, seed)), rees_ambient(r, 3));
            BidegreeTable expected{{{1, 1}, 1}};
            for (int k = 1; k <= d - 1; ++k) ++expected[{d - k, k}];
            BidegreeTable got = bigraded_min_gens(rees);
            need(got == expected, "d=" + std::to_string(d) + " seed " + std::to_string(seed) + ": " + table(got));
            need(cm_via_pd(rees).cm == (d <= 3), "CM flag wrong for d=" + std::to_string(d));
            ++cases;
        }
    return std::to_string(cases) + " instances, d = 3, 4";
}

std::string c4_zaq() {
    RingPtr r = plane_ring();
    RingPtr s = rees_ambient(r, 3);
    struct Params {
        int m, n, eps;
    };
    int cases = 0;
    for (Params p : {Params{1, 1, 1}, Params{2, 1, 1}, Params{2, 2, 1}, Params{3, 2, 1}, Params{2, 2, 2}}) {
        std::string tag = "(m,n,eps)=(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," + std::to_string(p.eps) + ")";
        ZaqInstance z = zaq_instance(r, p.m, p.n, p.eps, 100 + static_cast<std::uint64_t>(cases));
        Ideal rees = rees_ideal(z.minors, s);
        Polynomial f = content_row_form(z.phi, 0, s), g = content_row_form(z.phi, 1, s);
        SylvesterForm h =
            sylvester_form(f, g, Polynomial::variable(s, 0).pow(p.m), Polynomial::variable(s, 1).pow(p.n));
        need(h.bidegree && (*h.bidegree)[0] == p.eps && (*h.bidegree)[1] == 2, tag + ": bidegree of h");
        need(Ideal(s, {f, g, h.h}) == rees, tag + ": Rees ideal is not (f, g, h)");
        need(cm_via_pd(rees).cm, tag + ": not CM");
        ++cases;
    }
    return std::to_string(cases) + " instances including m > n and m = n";
}

std::string c5_tight(int s, int h) {
    int n = s * (s + 1) / 2 + h;
    PointSet ps = random_points(static_cast<std::size_t>(n), CoeffField(), 1);
    Ideal i = ideal_of_points(ps);
    PositionReport rep = position_report(i, n);
    need(rep.tight && rep.s == s && rep.h == h, "seed 1 is not tight");
    BettiTable b = logged_resolution(i).betti().ideal_table();
    need(b == predicted_betti(s, h), "Betti table " + b.to_sequence());
    need(b.regularity() == predicted_regularity(s, h), "regularity " + std::to_string(b.regularity()));
    return b.to_sequence();
}

std::string c6_resofj() {
    int cases = 0;
    for (auto [n, a] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}})
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            int eps1 = seed <= 3 ? 1 : 2;
            RingPtr r = seed % 2 ? plane_ring() : PolyRing::standard({"x", "y", "z", "w"});
            TwoDegreeShape sh = random_two_degree_shape(r, n, a, eps1, 1, seed);
            std::string tag = "(n,a,eps1)=(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(eps1) +
                              ") seed " + std::to_string(seed);
            need(minor_ideal_height(sh.phi2(), static_cast<std::size_t>(n - a)).height == a, tag + ": height");
            BettiTable b = logged_resolution(fixed_minors_ideal(sh)).betti();
            // Oracle: the shifts and ranks written out from the binomial formula.
            BettiTable expected;
            int D = sh.D();
            expected.add(0, 0);
            expected.add(1, D - eps1, a);
            for (int i = 0; i <= a - 2; ++i)
                expected.add(i + 2, (n - a + i) * 1 + D,
                             static_cast<int>(binomial(n - a - 1 + i, i) * binomial(n - 1, i + n - a + 1)));
            need(b == expected, tag + ": " + b.to_sequence());
            need(b == fixed_minors_betti(n, a, eps1, 1), tag + ": library formula disagrees");
            FreeResolution br = buchsbaum_rim(sh.phi2());
            complex_log.push_back({br, std::nullopt});
            need(br.composes_to_zero(), tag + ": Buchsbaum-Rim d^2 != 0");
            need(acyclicity_check(br).acyclic, tag + ": Buchsbaum-Rim not acyclic");
            ++cases;
        }
    return std::to_string(cases) + " shapes";
}

// Linear 5x4 matrix whose z-coefficients have rank 2, so I_3 vanishes at (0:0:1).
PolyMatrix non_g3_matrix(const RingPtr& r, std::uint64_t seed) {
    TwoDegreeShape sh = random_two_degree_shape(r, 5, 3, 1, 1, seed);
    std::mt19937_64 rng(seed);
    const CoeffField& f = r->field();
    Polynomial z = Polynomial::variable(r, 2);
    std::vector<Scalar> e1{f.zero(), f.zero(), f.one()};
    PolyMatrix phi = sh.phi;
    for (std::size_t i = 0; i < 3; ++i) {
        Scalar c3 = f.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
        Scalar c4 = f.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar target = f.add(f.mul(c3, phi.at(3, j).evaluate(e1)), f.mul(c4, phi.at(4, j).evaluate(e1)));
            Scalar now = phi.at(i, j).evaluate(e1);
            phi.set(i, j, phi.at(i, j) + z.scaled(f.sub(target, now)));
        }
    }
    return phi;
}

std::string c7_main_thm() {
    RingPtr r = plane_ring();
    int cases = 0, g3 = 0;
    auto check = [&](const PolyMatrix& phi, const std::string& tag, std::optional<bool> expect_g) {
        TwoDegreeShape sh{5, 3, 1, 1, phi};
        need(minor_ideal_height(sh.phi2(), 2).height == 3, tag + ": height of I_2(Phi_2)");
        auto j = fixed_minors(sh);
        Ideal jj(r, j), ii(r, signed_maximal_minors(phi));
        ReductionCertificate rc = is_reduction(jj, ii);
        need(rc.holds && rc.r <= 2, tag + ": reduction fails (r = " + std::to_string(rc.r) + ")");
        bool g = g_condition(phi, 3).holds;
        if (expect_g) need(g == *expect_g, tag + ": unexpected G_3 value");
        need(is_linear_type(j) == g, tag + ": linear type and G_3 disagree");
        g3 += g;
        ++cases;
    };
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        check(random_two_degree_shape(r, 5, 3, 1, 1, seed).phi, "seed " + std::to_string(seed), std::nullopt);
    check(non_g3_matrix(r, 7), "non-G_3 instance", false);
    return std::to_string(cases) + " instances, G_3 held in " + std::to_string(g3);
}

std::string c8_arrangements() {
    int cases = 0;
    for (int n : {4, 5})
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            ArrangementResult a = arrangement_gradient(3, n, seed);
            need(a.linear_type, "n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": not of linear type");
            ++cases;
        }
    return std::to_string(cases) + " arrangements, all of linear type";
}

std::string c9_non_uniform() {
    RingPtr r = plane_ring(CoeffField::prime_field(32009));
    Ideal i(r, signed_maximal_minors(non_uniform_matrix(r)));
    PositionReport rep = position_report(i, 18);
    need(rep.n == 18 && rep.s == 5 && rep.h == 3, "n, s, h");
    need(rep.tight, "not tight");
    need(rep.dim_r1is == 9, "dim R1 I_5 = " + std::to_string(rep.dim_r1is));
    PointSet pts = rational_points(i);
    for (const auto& q : pts.points)
        for (const auto& g : i.generators())
            need(r->field().is_zero(g.evaluate({q[0], q[1], q[2]})), "a rational point is off the scheme");
    UniformResult u = uniform_check(pts, pts.size(), true);
    need(!u.uniform && u.degree == 1 && u.witness.size() == 4, "no 4-point collinear witness");
    for (auto k : u.witness) need(r->field().is_zero(pts.points[k][1]), "witness is not on y = 0");
    Ideal j = piece_ideal(i, 5);
    Ideal m(r, {P("x", r), P("y", r), P("z", r)});
    need(saturate(j, m).ideal == j, "J is not saturated");
    need(j != i, "J = I");
    need(j == Ideal(r, signed_maximal_minors(non_uniform_j_matrix(r))), "J is not the displayed minor ideal");
    return std::to_string(pts.size()) + " rational points, 4 of them on y = 0";
}

std::string c10_sector2() {
    int screened = 0, audited = 0, held = 0;
    std::vector<long long> b_expected{1, 0, 0, 0, 0, -3, 0, 0, 3, -1};
    for (std::uint64_t seed = 1; screened < 20 && seed <= 200; ++seed) {
        PointSet ps = random_points(18, CoeffField(), seed);
        if (!uniform_screen(ps).uniform) continue;
        ++screened;
        Sector2Report rep = sector2_audit(ps);
        if (rep.skipped) continue;
        ++audited;
        if (!rep.minors_condition) continue;
        ++held;
        std::string tag = "seed " + std::to_string(seed);
        need(rep.saturation_is_i, tag + ": J^sat != I");
        need(rep.linear_type.value_or(false), tag + ": not of linear type");
        need(rep.rees_cm.value_or(false), tag + ": Rees algebra not CM");
        need(rep.numerator == b_expected, tag + ": Hilbert numerator");
        need(rep.multiplicity == 18, tag + ": e(R/J) = " + std::to_string(rep.multiplicity));
        need(rep.degree.value_or(-1) == 7, tag + ": map degree");
    }
    need(screened >= 20, "fewer than 20 screened seeds");
    std::ostringstream out;
    out << "ht I_1(L) = 3 in " << held << "/" << audited << " audited of " << screened << " screened seeds";
    return out.str();
}

// Oracle: dim (R/I)_t from the rank of the Macaulay matrix of monomial multiples.
long long macaulay_hilbert(const Ideal& i, int t) {
    const PolyRing& r = i.ring();
    auto mons = monomials_of_degree(r, t);
    std::map<std::vector<int>, std::size_t> column;
    for (std::size_t k = 0; k < mons.size(); ++k)
        column[std::vector<int>(mons[k].e.begin(), mons[k].e.begin() + r.nvars())] = k;
    std::vector<ScalarRow> rows;
    for (const auto& g : i.generators()) {
        int d = g.standard_degree();
        if (d > t) continue;
        for (const auto& m : monomials_of_degree(r, t - d)) {
            ScalarRow row(mons.size(), r.field().zero());
            Polynomial multiple = g.mul_term(m, r.field().one());
            for (const auto& term : multiple.terms())
                row[column.at(std::vector<int>(term.m.e.begin(), term.m.e.begin() + r.nvars()))] = term.c;
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long long>(mons.size()) - static_cast<long long>(matrix_rank(r.field(), rows));
}

std::string c11_oracles() {
    std::mt19937_64 rng(11);
    RingPtr r = plane_ring();
    for (int k = 0; k < 50; ++k) {
        std::vector<Polynomial> gens;
        int count = 2 + static_cast<int>(rng() % 3);
        for (int c = 0; c < count; ++c) gens.push_back(random_form(r, {0, 1, 2}, 1 + static_cast<int>(rng() % 3), rng));
        Ideal i(r, gens);
        HilbertData h = hilbert(i);
        for (int t = 0; t <= 8; ++t)
            need(h.hfun(t) == macaulay_hilbert(i, t), "Hilbert function differs on ideal " + std::to_string(k));
        if (k % 10 == 0) logged_resolution(i);
    }
    int dual = 0;
    RingPtr s = rees_ambient(r, 3);
    std::vector<std::vector<Polynomial>> inputs{
        signed_maximal_minors(deg4_matrix(r)), signed_maximal_minors(degree6_matrix(r)),
        signed_maximal_minors(dejonq_matrix(r, 3, 13)), signed_maximal_minors(dejonq_matrix(r, 4, 14)),
        zaq_instance(r, 2, 1, 1, 2).minors, signed_maximal_minors(redone_matrix(r))};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::mt19937_64 g(seed);
        PolyMatrix phi(r, 3, 2);
        for (std::size_t row = 0; row < 3; ++row) {
            phi.set(row, 0, random_form(r, {0, 1, 2}, 1, g));
            phi.set(row, 1, random_form(r, {0, 1, 2}, 1 + static_cast<int>(seed % 3), g));
        }
        inputs.push_back(signed_maximal_minors(phi));
    }
    for (const auto& gens : inputs) {
        need(rees_ideal_elimination(gens, s) == rees_ideal_saturation(gens, s), "Rees algorithms disagree");
        ++dual;
    }
    int checked = 0;
    for (const auto& entry : complex_log) {
        need(entry.complex.composes_to_zero(), "d^2 != 0 on a logged complex");
        if (entry.ideal) {
            HilbertData h = hilbert(*entry.ideal);
            BettiTable b = entry.complex.betti();
            int nv = static_cast<int>(entry.ideal->ring().nvars());
            for (int t = 0; t <= b.regularity() + nv + 2; ++t)
                need(b.hilbert_value(nv, t) == h.hfun(t), "Betti/Hilbert alternating sum fails");
        }
        ++checked;
    }
    return "50 Hilbert functions, " + std::to_string(dual) + " dual Rees inputs, " + std::to_string(checked) +
           " logged complexes";
}

std::string c12_kernel() {
    std::mt19937_64 rng(12);
    for (CoeffField f : {CoeffField(), CoeffField::rationals()}) {
        RingPtr r = testing_support::ring_xyz(f);
        for (int k = 0; k < 250; ++k) {
            Polynomial p = testing_support::random_poly(r, rng, 8, 6, false, 9);
            std::vector<Polynomial> divisors;
            for (int c = 0; c < 1 + static_cast<int>(rng() % 4); ++c)
                divisors.push_back(testing_support::random_poly(r, rng, 3, 3, false, 9));
            divisors.erase(std::remove_if(divisors.begin(), divisors.end(), [](const Polynomial& d) { return d.is_zero(); }),
                           divisors.end());
            if (divisors.empty()) divisors.push_back(Polynomial::variable(r, 0));
            DivisionResult res = divide_track(p, divisors);
            Polynomial sum = res.remainder;
            for (std::size_t i = 0; i < divisors.size(); ++i) sum += res.quotients[i] * divisors[i];
            need(sum == p, "division identity fails");
            for (const auto& t : res.remainder.terms())
                for (const auto& d : divisors) {
                    const Monomial& lm = d.lead_monomial();
                    bool divides = true;
                    for (std::size_t v = 0; v < r->nvars(); ++v) divides = divides && lm.e[v] <= t.m.e[v];
                    need(!divides, "remainder term divisible by a lead monomial");
                }
        }
    }
    RingPtr r = plane_ring();
    int bases = 0;
    for (int k = 0; k < 50; ++k) {
        std::vector<Polynomial> gens;
        for (int c = 0; c < 3; ++c) gens.push_back(testing_support::random_poly(r, rng, 4, 3, k % 2 == 0, 9));
        GroebnerBasis gb = groebner_basis(gens);
        need(spair_check(gb), "S-pair check fails");
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        need(groebner_basis(shuffled).basis() == gb.basis(), "reduced basis depends on generator order");
        ++bases;
    }
    return "500 divisions, " + std::to_string(bases) + " bases";
}

struct Criterion {
    std::string id;
    std::string title;
    double cap;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1", "deg4 suite", 30, c1_deg4},
        {"2", "degree6 Sylvester forms", 60, c2_degree6},
        {"3", "de Jonquieres bidegrees and CM", 60, c3_dejonq},
        {"4", "(f, g, h) generation and CM", 120, c4_zaq},
        {"5a", "tight Betti table (3,0)", 120, [] { return c5_tight(3, 0); }},
        {"5b", "tight Betti table (3,2)", 120, [] { return c5_tight(3, 2); }},
        {"5c", "tight Betti table (4,1)", 120, [] { return c5_tight(4, 1); }},
        {"5d", "tight Betti table (4,3)", 120, [] { return c5_tight(4, 3); }},
        {"5e", "tight Betti table (5,3)", 120, [] { return c5_tight(5, 3); }},
        {"6", "fixed-minor resolutions and Buchsbaum-Rim", 120, c6_resofj},
        {"7", "reduction and linear type vs G_3", 180, c7_main_thm},
        {"8", "line arrangement gradients", 180, c8_arrangements},
        {"9", "18 non-uniform points", 180, c9_non_uniform},
        {"10", "s = 5 conditional audit", 600, c10_sector2},
        {"11", "oracle suites", 120, c11_oracles},
        {"12", "kernel properties", 60, c12_kernel},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure& e) {
            ok = false;
            detail = e.what();
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.cap) {
            ok = false;
            detail += " (over the time cap)";
        }
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << std::left << std::setw(4) << c.id << std::setw(44) << c.title
                  << std::right << std::fixed << std::setprecision(2) << std::setw(8) << secs << " s / "
                  << std::setprecision(0) << c.cap << " s  " << detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria PASS"
              << std::endl;
    return failed ? 1 : 0;
}
