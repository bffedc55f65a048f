#include <doctest.h>

#include <random>

#include "hbforge/errors.hpp"
#include "hbforge/ideal.hpp"
#include "hbforge/linalg.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

Ideal I(const std::vector<std::string>& gens, const RingPtr& r) { return Ideal::parse(gens, r); }

long long binom(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    long long c = 1;
    for (long long i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return c;
}

// Dimension of the degree-t part of a homogeneous ideal, by linear algebra only.
std::size_t piece_dim(const Ideal& a, int t) { return graded_piece(a, t).dim; }

// dim (A : b)_t = dim R_t - (rank(A_{t+d} + b R_t) - rank(A_{t+d})), by linear algebra only.
long long colon_dim_oracle(const Ideal& a, const Polynomial& b, int t) {
    const RingPtr& r = a.ring_ptr();
    int d = b.standard_degree();
    auto base = graded_piece(a, t + d).basis;
    auto with = base;
    for (const auto& m : monomials_of_degree(*r, t))
        with.push_back(b.mul_term(m, r->field().one()));
    long long rank_with = static_cast<long long>(graded_piece(Ideal(r, with), t + d).dim);
    long long rn = binom(t + static_cast<long long>(r->nvars()) - 1, static_cast<long long>(r->nvars()) - 1);
    return rn - (rank_with - static_cast<long long>(base.size()));
}

Ideal random_homogeneous_ideal(const RingPtr& r, std::mt19937_64& rng, int ngens, int maxdeg) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < ngens; ++k) {
        Polynomial p = random_poly(r, rng, 1 + static_cast<int>(rng() % 4), maxdeg, true, 5);
        if (!p.is_zero() && !p.is_constant()) gens.push_back(p);
    }
    return Ideal(r, gens);
}

}  // namespace

TEST_CASE("ideal generators are normalized and distinct") {
    auto r = ring_xyz();
    Ideal a(r, Ps({"2*x", "x", "0", "y"}, r));
    CHECK(a.size() == 2);
    CHECK(a.generators()[0] == P("x", r));
    CHECK(Ideal::zero(r).is_zero());
    CHECK(Ideal::unit(r).is_unit());
    CHECK(I({"x", "y"}, r) == I({"x+y", "x-y"}, r));
    CHECK(I({"x", "y"}, r) != I({"x", "z"}, r));
}

TEST_CASE("sums products and powers") {
    auto r = ring_xyz();
    CHECK(product(I({"x"}, r), I({"y"}, r)).generators() == Ps({"x*y"}, r));
    CHECK(power(I({"x", "y"}, r), 2).generators() == Ps({"x^2", "x*y", "y^2"}, r));
    auto p4 = PolyRing::standard({"x", "y", "z", "w"});
    CHECK(power(I({"x", "y", "z"}, p4), 4 - 3) == I({"x", "y", "z"}, p4));
    CHECK(power(I({"x", "y"}, r), 0).is_unit());
    CHECK(sum(I({"x"}, r), I({"y"}, r)).generators() == Ps({"x", "y"}, r));
    auto other = PolyRing::standard({"a", "b"});
    CHECK_THROWS_AS(sum(I({"x"}, r), I({"a"}, other)), Error);
}

TEST_CASE("intersections") {
    auto r = ring_xyz();
    CHECK(intersect(I({"x"}, r), I({"y"}, r)) == I({"x*y"}, r));
    Ideal m = intersect(I({"x^2", "y"}, r), I({"x"}, r));
    CHECK(m == I({"x^2", "x*y"}, r));
    // degree-by-degree linear algebra up to degree 4
    Ideal a = I({"x^2", "y"}, r), b = I({"x"}, r);
    for (int t = 0; t <= 4; ++t) {
        auto expected = static_cast<long long>(piece_dim(a, t) + piece_dim(b, t)) -
                        static_cast<long long>(piece_dim(sum(a, b), t));
        CHECK(static_cast<long long>(piece_dim(m, t)) == expected);
    }

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Ideal p = random_homogeneous_ideal(r, rng, 2, 3);
        Ideal q = random_homogeneous_ideal(r, rng, 2, 3);
        if (p.is_zero() || q.is_zero()) continue;
        Ideal meet = intersect(p, q);
        CHECK(p.contains(meet));
        CHECK(q.contains(meet));
        for (int t = 0; t <= 6; ++t) {
            auto expected = static_cast<long long>(piece_dim(p, t) + piece_dim(q, t)) -
                            static_cast<long long>(piece_dim(sum(p, q), t));
            CHECK(static_cast<long long>(piece_dim(meet, t)) == expected);
        }
    }
}

TEST_CASE("intersection of six generic points has four cubic generators") {
    auto r = ring_xyz();
    std::mt19937_64 rng(5);
    std::vector<Ideal> primes;
    const CoeffField& f = r->field();
    for (int k = 0; k < 6; ++k) {
        // point (a : b : 1) has ideal (x - a z, y - b z)
        auto a = f.from_int(static_cast<std::int64_t>(rng() % 30000));
        auto b = f.from_int(static_cast<std::int64_t>(rng() % 30000));
        Polynomial z = P("z", r);
        primes.push_back(Ideal(r, {P("x", r) - z.scaled(a), P("y", r) - z.scaled(b)}));
    }
    Ideal pts = intersect(primes).minimalized();
    REQUIRE(pts.size() == 4);
    for (const auto& g : pts.generators()) CHECK(g.standard_degree() == 3);
    auto dh = dimension_height(pts);
    CHECK(dh.dim == 1);
    CHECK(dh.height == 2);
    auto h = hilbert(pts);
    CHECK(h.multiplicity == 6);
    CHECK(h.hfun(0) == 1);
    CHECK(h.hfun(1) == 3);
    CHECK(h.hfun(2) == 6);
    CHECK(h.hfun(5) == 6);
}

TEST_CASE("quotients") {
    auto r = ring_xyz();
    CHECK(quotient(I({"x*y"}, r), I({"x"}, r)) == I({"y"}, r));
    Ideal first = quotient(I({"x^2", "x*y"}, r), I({"x", "y"}, r));
    CHECK(first == I({"x"}, r));
    CHECK(quotient(I({"x"}, r), P("x", r)).is_unit());
    CHECK_THROWS_AS(quotient(I({"x"}, r), Ideal::zero(r)), Error);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        Ideal a = random_homogeneous_ideal(r, rng, 3, 3);
        Polynomial b = random_poly(r, rng, 2, 2, true, 3);
        if (a.is_zero() || b.is_zero() || b.is_constant()) continue;
        Ideal q = quotient(a, b);
        CHECK(q.contains(a));
        for (const auto& g : q.generators()) CHECK(a.contains(g * b));
        for (int t = 0; t <= 4; ++t)
            CHECK(static_cast<long long>(piece_dim(q, t)) == colon_dim_oracle(a, b, t));
    }
}

TEST_CASE("saturation") {
    auto r = ring_xyz();
    Saturation s = saturate(I({"x^2*y", "x*y^2"}, r), I({"x", "y"}, r));
    CHECK(s.ideal == I({"x*y"}, r));
    CHECK(s.steps == 1);
    CHECK(quotient(s.ideal, I({"x", "y"}, r)) == s.ideal);

    // containment chain and stabilization
    Ideal a = I({"x^3", "x^2*y^2", "y^4*z"}, r);
    Ideal m = I({"x", "y", "z"}, r);
    Saturation t = saturate(a, m);
    Ideal cur = a;
    for (int k = 0; k < t.steps; ++k) {
        Ideal next = quotient(cur, m);
        CHECK(next.contains(cur));
        CHECK(next != cur);
        cur = next;
    }
    CHECK(cur == t.ideal);
    CHECK(quotient(t.ideal, m) == t.ideal);
}

TEST_CASE("dimension and height") {
    auto r = ring_xyz();
    auto dh = dimension_height(I({"x", "y"}, r));
    CHECK(dh.dim == 1);
    CHECK(dh.height == 2);
    dh = dimension_height(Ideal::unit(r));
    CHECK(dh.dim == -1);
    CHECK(dh.height == 3);
    dh = dimension_height(Ideal::zero(r));
    CHECK(dh.dim == 3);
    CHECK(dh.height == 0);
    dh = dimension_height(I({"x*y", "x*z"}, r));
    CHECK(dh.dim == 2);
    CHECK(dh.height == 1);
    dh = dimension_height(I({"x^2-y", "y^2-1"}, r));  // inhomogeneous
    CHECK(dh.dim == 1);
}

TEST_CASE("Hilbert data") {
    auto r = ring_xyz();
    auto h = hilbert(I({"x", "y"}, r));
    CHECK(h.numerator == std::vector<long long>{1, -2, 1});
    CHECK(h.numerator_string() == "1 - 2*t + t^2");
    CHECK(h.dim == 1);
    CHECK(h.multiplicity == 1);
    for (int t = 0; t < 10; ++t) CHECK(h.hfun(t) == 1);
    auto hz = hilbert(Ideal::zero(r));
    CHECK(hz.hfun(2) == 6);
    CHECK(hz.multiplicity == 1);
    auto hc = hilbert(I({"x^2", "y^3", "z^4"}, r));
    CHECK(hc.dim == 0);
    CHECK(hc.multiplicity == 24);
    CHECK_THROWS_AS(hilbert(I({"x^2-y"}, r)), Error);
}

TEST_CASE("Hilbert function agrees with linear algebra on random ideals") {
    std::mt19937_64 rng(2024);
    int tested = 0;
    for (int trial = 0; tested < 50; ++trial) {
        std::size_t nv = 1 + trial % 3;
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(nv);
        auto r = PolyRing::standard(names);
        Ideal a = random_homogeneous_ideal(r, rng, 1 + static_cast<int>(rng() % 4), 4);
        if (a.is_zero()) continue;
        ++tested;
        auto h = hilbert(a);
        for (int t = 0; t <= 8; ++t) {
            long long rn = binom(t + static_cast<long long>(nv) - 1, static_cast<long long>(nv) - 1);
            CHECK(h.hfun(t) == rn - static_cast<long long>(piece_dim(a, t)));
        }
        if (!a.is_unit()) CHECK(h.multiplicity >= 1);
        CHECK(nv - h.dim == static_cast<std::size_t>(h.height));
    }
}

TEST_CASE("graded pieces") {
    auto r = ring_xyz();
    auto g = graded_piece(I({"x", "y"}, r), 1);
    CHECK(g.dim == 2);
    CHECK(graded_piece(I({"x", "y"}, r), 2).dim == 5);
    CHECK(graded_piece(I({"x^2"}, r), 1).dim == 0);
    for (const auto& b : graded_piece(I({"x^2+y*z", "x*y"}, r), 3).basis)
        CHECK(I({"x^2+y*z", "x*y"}, r).contains(b));
}
