#include <doctest.h>

#include <algorithm>

#include "hbforge/errors.hpp"
#include "hbforge/groebner.hpp"
#include "support.hpp"

using namespace hbforge;
using namespace testing_support;

namespace {

RingPtr rees_ring() {
    std::vector<std::string> names{"x", "y", "z", "t1", "t2", "t3"};
    return PolyRing::make(names, CoeffField(), MonomialOrder::parse("block:x,y,z|t1,t2,t3", names),
                          {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}});
}

Polynomial combine(const std::vector<Polynomial>& q, const std::vector<Polynomial>& d, const Polynomial& r) {
    Polynomial s = r;
    for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * d[i];
    return s;
}

}  // namespace

TEST_CASE("division with quotient tracking") {
    auto s = rees_ring();
    auto d1 = divide_track(P("x^2*t1 + y^2*t2", s), Ps({"x", "y"}, s));
    CHECK(d1.quotients[0] == P("x*t1", s));
    CHECK(d1.quotients[1] == P("y*t2", s));
    CHECK(d1.remainder.is_zero());
    auto d2 = divide_track(P("y*z*t1 + x*z*t2 + y^2*t3", s), Ps({"x", "y"}, s));
    CHECK(d2.quotients[0] == P("z*t2", s));
    CHECK(d2.quotients[1] == P("z*t1 + y*t3", s));
    auto r = ring_xyz();
    auto d3 = divide_track(P("x^2", r), Ps({"y"}, r));
    CHECK(d3.quotients[0].is_zero());
    CHECK(d3.remainder == P("x^2", r));
    CHECK_THROWS_AS(divide_track(P("x", r), Ps({"x"}, s)), Error);
}

TEST_CASE("division identity on random instances") {
    std::mt19937_64 rng(2024);
    auto r = ring_xyz();
    for (int it = 0; it < 500; ++it) {
        auto p = random_poly(r, rng, 6, 5);
        std::vector<Polynomial> ds;
        int k = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(ds.size()) < k) {
            auto d = random_poly(r, rng, 3, 3);
            if (!d.is_zero()) ds.push_back(d);
        }
        auto res = divide_track(p, ds);
        CHECK(combine(res.quotients, ds, res.remainder) == p);
        for (const auto& t : res.remainder.terms())
            for (const auto& d : ds) CHECK_FALSE(mono_divides(d.lead_monomial(), t.m));
    }
}

TEST_CASE("small bases") {
    auto r = ring_xyz();
    auto g1 = groebner_basis(Ps({"x^2", "y^3"}, r));
    CHECK(g1.basis() == Ps({"x^2", "y^3"}, r));
    auto g2 = groebner_basis(Ps({"x^2+y", "y"}, r));
    CHECK(g2.basis() == Ps({"y", "x^2"}, r));
    auto g3 = groebner_basis(Ps({"x", "y", "z"}, r));
    CHECK(g3.normal_form(P("1", r)) == P("1", r));
    auto fg = Ps({"x^2 + y*z", "x*y - z^2"}, r);
    auto g4 = groebner_basis(fg);
    CHECK(g4.normal_form(fg[0]).is_zero());
    CHECK(spair_check(g4));
    auto unit = groebner_basis(Ps({"x*y - 1", "x"}, r));
    CHECK(unit.is_unit());
}

TEST_CASE("normal form is linear") {
    std::mt19937_64 rng(7);
    auto r = ring_xyz();
    auto gb = groebner_basis(Ps({"x^2 - y*z", "x*y*z - z^3", "y^3 + x*z"}, r));
    for (int it = 0; it < 50; ++it) {
        auto a = random_poly(r, rng, 5, 5), b = random_poly(r, rng, 5, 5);
        auto c = r->field().from_int(static_cast<std::int64_t>(rng() % 100));
        CHECK(gb.normal_form(a + b.scaled(c)) == gb.normal_form(a) + gb.normal_form(b).scaled(c));
    }
}

TEST_CASE("cofactor identity") {
    std::mt19937_64 rng(99);
    auto r = ring_xyz();
    for (int it = 0; it < 20; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 3, 3));
        GbOptions opt;
        opt.track_cofactors = true;
        auto gb = groebner_basis(gens, opt);
        REQUIRE(gb.cofactors().has_value());
        const auto& c = *gb.cofactors();
        for (std::size_t k = 0; k < gb.basis().size(); ++k) {
            Polynomial s(r);
            for (std::size_t j = 0; j < gens.size(); ++j) s += c.at(k, j) * gens[j];
            CHECK(s == gb.basis()[k]);
        }
    }
}

TEST_CASE("reduced basis is unique under permutation and passes the S-pair check") {
    std::mt19937_64 rng(31337);
    std::vector<std::string> names{"x", "y", "z"};
    for (int it = 0; it < 50; ++it) {
        auto ord = it % 3 == 0 ? MonomialOrder::grevlex() : it % 3 == 1 ? MonomialOrder::lex()
                                                                        : MonomialOrder::parse("block:x|y,z", names);
        auto r = PolyRing::make(names, CoeffField(), ord);
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 3, 3, it % 2 == 0));
        auto gb = groebner_basis(gens);
        CHECK(spair_check(gb));
        for (const auto& g : gens) CHECK(gb.contains(g));
        auto perm = gens;
        std::reverse(perm.begin(), perm.end());
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        CHECK(groebner_basis(perm).basis() == gb.basis());
        // Reducedness.
        for (std::size_t a = 0; a < gb.basis().size(); ++a)
            for (std::size_t b = 0; b < gb.basis().size(); ++b)
                if (a != b)
                    for (const auto& t : gb.basis()[a].terms())
                        CHECK_FALSE(mono_divides(gb.basis()[b].lead_monomial(), t.m));
    }
}

TEST_CASE("rationals") {
    auto r = ring_xyz(CoeffField::rationals());
    auto gb = groebner_basis(Ps({"2*x^2 + 3*y*z", "5*x*y - 7*z^2"}, r));
    CHECK(spair_check(gb));
    CHECK(gb.contains(P("2*x^2 + 3*y*z", r)));
}

TEST_CASE("budget") {
    auto r = ring_xyz();
    GbOptions opt;
    opt.budget.max_degree = 3;
    CHECK_THROWS_AS(groebner_basis(Ps({"x^5 + y^5 + z^5", "x^4*y + z^5"}, r), opt), BudgetExceeded);
}

TEST_CASE("elimination") {
    auto r = PolyRing::standard({"x", "t"});
    auto e = eliminate(Ps({"t - x^2", "x"}, r), std::vector<std::string>{"x"});
    REQUIRE(e.size() == 1);
    CHECK(e[0] == P("t", r));

    // Rees ideal of (x^2, xy, y^2) through one tag variable.
    std::vector<std::string> names{"u", "x", "y", "t1", "t2", "t3"};
    auto tr = PolyRing::make(names, CoeffField(), MonomialOrder::grevlex(), {{0, 1, 1, 2, 2, 2}});
    auto el = eliminate(Ps({"u*x^2 - t1", "u*x*y - t2", "u*y^2 - t3"}, tr), std::vector<std::string>{"u"});
    auto expect = Ps({"x*t2 - y*t1", "x*t3 - y*t2", "t1*t3 - t2^2"}, tr);
    auto gb_el = groebner_basis(el), gb_ex = groebner_basis(expect);
    for (const auto& p : expect) CHECK(gb_el.contains(p));
    for (const auto& p : el) {
        CHECK_FALSE(p.involves(0));
        CHECK(gb_ex.contains(p));
        // Vanishes under t_i -> f_i * u.
        std::vector<Polynomial> img = Ps({"u", "x", "y", "u*x^2", "u*x*y", "u*y^2"}, tr);
        CHECK(p.substitute(tr, img).is_zero());
    }
}

TEST_CASE("minimal generators") {
    auto r = ring_xyz();
    auto m = minimal_generators(Ps({"x^2", "x*y", "x^2*y + x*y^2", "y^3", "x^3"}, r));
    CHECK(m == Ps({"x^2", "x*y", "y^3"}, r));
}
