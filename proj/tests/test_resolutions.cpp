#include <doctest.h>

#include <random>

#include "hbforge/errors.hpp"
#include "hbforge/resolutions.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

Polynomial random_form(const RingPtr& r, std::mt19937_64& rng, int degree) {
    std::vector<Term> terms;
    std::vector<Monomial> ms;
    // dense random form of the given degree
    std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t v, int left, Monomial m) {
        if (v + 1 == r->nvars()) {
            m.e[v] = static_cast<Exponent>(left);
            m.refresh();
            ms.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.e[v] = static_cast<Exponent>(e);
            rec(v + 1, left - e, m);
        }
    };
    rec(0, degree, Monomial{});
    for (const auto& m : ms) terms.push_back({m, r->field().from_int(static_cast<std::int64_t>(rng() % 32003))});
    return Polynomial::from_terms(r, terms);
}

PolyMatrix random_matrix(const RingPtr& r, std::mt19937_64& rng, std::size_t rows, std::size_t cols, int degree) {
    PolyMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_form(r, rng, degree));
    return m;
}

Ideal points_ideal(const RingPtr& r, std::mt19937_64& rng, int n) {
    std::vector<Ideal> primes;
    const CoeffField& f = r->field();
    Polynomial z = P("z", r);
    for (int k = 0; k < n; ++k) {
        auto a = f.from_int(static_cast<std::int64_t>(rng() % 32003));
        auto b = f.from_int(static_cast<std::int64_t>(rng() % 32003));
        primes.push_back(Ideal(r, {P("x", r) - z.scaled(a), P("y", r) - z.scaled(b)}));
    }
    return intersect(primes);
}

void check_resolution_invariants(const FreeResolution& res, const Ideal* ideal) {
    CHECK(res.composes_to_zero());
    if (res.minimal) CHECK_FALSE(res.has_unit_entries());
    if (ideal) {
        auto h = hilbert(*ideal);
        BettiTable b = res.betti();
        int reg = b.regularity();
        for (int t = 0; t <= 2 * reg + 2; ++t)
            CHECK(b.hilbert_value(static_cast<int>(ideal->ring().nvars()), t) == h.hfun(t));
    }
}

}  // namespace

TEST_CASE("Koszul syzygies") {
    auto r = ring_xyz();
    bool cert = false;
    PolyMatrix s = syzygies(PolyMatrix::parse(r, {{"x", "y"}}), {}, &cert);
    CHECK(cert);
    REQUIRE(s.cols() == 1);
    Ideal entries(r, s.column_entries(0));
    CHECK(((s.at(0, 0) == P("-y", r) && s.at(1, 0) == P("x", r)) ||
           (s.at(0, 0) == P("y", r) && s.at(1, 0) == P("-x", r))));
    PolyMatrix s3 = syzygies(PolyMatrix::parse(r, {{"x", "y", "z"}}), {}, &cert);
    CHECK(cert);
    CHECK(s3.cols() == 3);
    CHECK((PolyMatrix::parse(r, {{"x", "y", "z"}}) * s3).is_zero());
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) CHECK(s3.at(i, j).degree() <= 1);
}

TEST_CASE("signed maximal minors") {
    auto r = ring_xyz();
    auto phi = PolyMatrix::parse(r, {{"x^2", "y*z"}, {"y^2", "x*z"}, {"0", "y^2"}});
    auto d = signed_maximal_minors(phi);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == P("y^4", r));
    CHECK(d[1] == P("-x^2*y^2", r));
    CHECK(d[2] == P("x^3*z - y^3*z", r));
    auto col = PolyMatrix::parse(r, {{"x"}, {"y"}});
    auto e = signed_maximal_minors(col);
    CHECK(e[0] == P("y", r));
    CHECK(e[1] == P("-x", r));
    CHECK_THROWS_AS(signed_maximal_minors(PolyMatrix::parse(r, {{"x", "y"}})), Error);

    // the columns of phi are syzygies of the minors
    PolyMatrix row = PolyMatrix::row(r, d);
    row.grade_by_rows({0});
    bool cert = false;
    PolyMatrix syz = syzygies(row, {}, &cert);
    CHECK(cert);
    CHECK((row * syz).is_zero());
    CHECK(column_span_contains(syz, phi));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + trial % 4;
        auto m = random_matrix(r, rng, n, n - 1, 1);
        auto minors_ = signed_maximal_minors(m);
        auto lap = m.transpose() * PolyMatrix::column(r, minors_);
        CHECK(lap.is_zero());
    }
}

TEST_CASE("Koszul resolution of (x,y)") {
    auto r = ring_xyz();
    Ideal a = Ideal::parse({"x", "y"}, r);
    FreeResolution res = minimal_resolution(a);
    check_resolution_invariants(res, &a);
    BettiTable it = res.betti().ideal_table();
    CHECK(it.get(0, 1) == 2);
    CHECK(it.get(1, 2) == 1);
    CHECK(it.to_sequence() == "0 -> R(-2) -> R(-1)^2");
}

TEST_CASE("resolution of six generic points") {
    auto r = ring_xyz();
    std::mt19937_64 rng(17);
    Ideal pts = points_ideal(r, rng, 6);
    FreeResolution res = minimal_resolution(pts);
    check_resolution_invariants(res, &pts);
    BettiTable it = res.betti().ideal_table();
    CHECK(it.to_sequence() == "0 -> R(-4)^3 -> R(-3)^4");
    CHECK(res.betti().regularity() == 2);
    CHECK(it.regularity() == 3);
    CHECK(res.betti().to_text().find("total:") != std::string::npos);
}

TEST_CASE("resolutions of random homogeneous ideals satisfy the invariants") {
    std::mt19937_64 rng(99);
    auto r = ring_xyz();
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 3, 3, true, 4));
        Ideal a(r, gens);
        if (a.is_zero() || a.is_unit()) continue;
        FreeResolution res = minimal_resolution(a);
        CHECK(res.length() <= 3);
        check_resolution_invariants(res, &a);
    }
}

TEST_CASE("cokernel resolution and minimalization") {
    auto r = ring_xyz();
    FreeResolution c;
    c.ring = r;
    PolyMatrix d1 = PolyMatrix::parse(r, {{"x", "y", "x"}});
    PolyMatrix d2 = PolyMatrix::parse(r, {{"-y", "1"}, {"x", "0"}, {"0", "-1"}});
    d1.set_shifts({0}, {1, 1, 1});
    d2.set_shifts({1, 1, 1}, {2, 1});
    c.maps = {d1, d2};
    c.shifts = {{0}, {1, 1, 1}, {2, 1}};
    REQUIRE(c.composes_to_zero());
    FreeResolution m = minimalize(c);
    CHECK(m.composes_to_zero());
    CHECK_FALSE(m.has_unit_entries());
    Ideal xy = Ideal::parse({"x", "y"}, r);
    CHECK(m.betti() == minimal_resolution(xy).betti());

    PolyMatrix koszul = PolyMatrix::parse(r, {{"x", "y", "z"}});
    FreeResolution ck = minimal_resolution(koszul);
    CHECK(ck.betti().rank(0) == 1);
    CHECK(ck.betti().rank(1) == 3);
    CHECK(ck.betti().rank(2) == 3);
    CHECK(ck.betti().rank(3) == 1);
}

TEST_CASE("fixed minors of a two-degree shape") {
    auto r = ring_xyz();
    std::mt19937_64 rng(8);
    for (int n = 3; n <= 5; ++n) {
        TwoDegreeShape sh;
        sh.n = n;
        sh.a = n - 1;
        sh.eps1 = 2;
        sh.eps2 = 1;
        sh.phi = PolyMatrix(r, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < n; ++j)
                sh.phi.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                           random_form(r, rng, i < sh.a ? 2 : 1));
        auto f = fixed_minors(sh);
        CHECK(f.size() == static_cast<std::size_t>(n - 1));
        Ideal all(r, minors(sh.phi, static_cast<std::size_t>(n - 1)));
        for (const auto& g : f) {
            CHECK(g.degree() == sh.D() - sh.eps1);
            CHECK(all.contains(g));
        }
    }
    TwoDegreeShape bad;
    bad.n = 3;
    bad.a = 1;
    bad.eps1 = 1;
    bad.eps2 = 2;
    bad.phi = PolyMatrix::parse(r, {{"x", "y"}, {"y", "z"}, {"z", "x"}});
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("Buchsbaum-Rim complex of a row is the Koszul complex") {
    auto r = ring_xyz();
    FreeResolution c = buchsbaum_rim(PolyMatrix::parse(r, {{"x", "y", "z"}}));
    REQUIRE(c.maps.size() == 3);
    CHECK(c.composes_to_zero());
    BettiTable b = c.betti();
    CHECK(b.rank(0) == 1);
    CHECK(b.rank(1) == 3);
    CHECK(b.rank(2) == 3);
    CHECK(b.rank(3) == 1);
    auto cert = acyclicity_check(c);
    CHECK(cert.acyclic);
    for (std::size_t i = 0; i < 3; ++i) CHECK(cert.heights[i] >= static_cast<int>(i + 1));
    CHECK(minor_ideal_height(c.maps[1], 2).height == 3);
    CHECK(acyclicity_check(minimal_resolution(PolyMatrix::parse(r, {{"x", "y", "z"}}))).acyclic);
}

TEST_CASE("Buchsbaum-Rim ranks, shifts and acyclicity") {
    std::mt19937_64 rng(41);
    auto binom = [](int a, int b) {
        long long c = 1;
        for (int k = 1; k <= b; ++k) c = c * (a - b + k) / k;
        return static_cast<int>(c);
    };
    auto r5 = PolyRing::standard({"x1", "x2", "x3", "x4", "x5"});
    for (auto [rr, s] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {1, 4}}) {
        PolyMatrix psi = random_matrix(r5, rng, static_cast<std::size_t>(rr), static_cast<std::size_t>(s), 1);
        FreeResolution c = buchsbaum_rim(psi);
        CHECK(c.composes_to_zero());
        BettiTable b = c.betti();
        CHECK(b.rank(0) == rr);
        CHECK(b.rank(1) == s);
        for (int i = 0; rr + 1 + i <= s; ++i) {
            CHECK(b.rank(i + 2) == binom(rr - 1 + i, i) * binom(s, i + rr + 1));
            CHECK(b.get(i + 2, rr + 1 + i) == b.rank(i + 2));
        }
        auto cert = acyclicity_check(c);
        CHECK(cert.acyclic == (s - rr + 1 <= 5));
        FreeResolution mr = minimal_resolution(psi);
        CHECK(mr.betti() == b);
    }
}

TEST_CASE("Buchsbaum-Rim in corank two is skew-symmetric with last map psi transpose") {
    std::mt19937_64 rng(77);
    auto r5 = PolyRing::standard({"x1", "x2", "x3", "x4", "x5"});
    for (int s = 3; s <= 5; ++s) {
        PolyMatrix psi = random_matrix(r5, rng, static_cast<std::size_t>(s - 2), static_cast<std::size_t>(s), 1);
        FreeResolution c = buchsbaum_rim(psi);
        REQUIRE(c.maps.size() == 3);
        const PolyMatrix& theta = c.maps[1];
        CHECK(theta.rows() == static_cast<std::size_t>(s));
        CHECK(theta.cols() == static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                CHECK(theta.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ==
                      -theta.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)));
        CHECK(c.maps[2].entries() == psi.transpose().entries());
        CHECK(c.composes_to_zero());
        BettiTable b = c.betti();
        CHECK(b.get(3, s) == s - 2);
        CHECK(b.get(2, s - 1) == s);
    }
}

TEST_CASE("Buchsbaum-Rim complex that is not acyclic") {
    auto r = ring_xyz();
    FreeResolution c = buchsbaum_rim(PolyMatrix::parse(r, {{"x", "y", "x+y"}}));
    CHECK(c.composes_to_zero());
    auto cert = acyclicity_check(c);
    CHECK_FALSE(cert.acyclic);
    CHECK_THROWS_AS(buchsbaum_rim(PolyMatrix::parse(r, {{"x", "y^2"}})), Error);
}
