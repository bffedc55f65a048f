#include "hbforge/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hbforge/errors.hpp"
#include "hbforge/resolutions.hpp"

namespace hbforge {

namespace {

constexpr int kResample = 50;

Polynomial xpow(const RingPtr& r, std::size_t v, int e) {
    Monomial m;
    m.e[v] = static_cast<Exponent>(e);
    m.refresh();
    return Polynomial::monomial(r, m, r->field().one());
}

int z_degree(const Polynomial& p) {
    int best = 0;
    for (const auto& t : p.terms()) best = std::max<int>(best, t.m.e[2]);
    return best;
}

}  // namespace

RingPtr plane_ring(CoeffField field) { return PolyRing::standard({"x", "y", "z"}, field); }

Polynomial random_form(const RingPtr& ring, const std::vector<std::size_t>& vars, int degree, std::mt19937_64& rng) {
    std::vector<Term> terms;
    if (vars.empty()) throw Error("random form needs variables");
    std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t k, int left, Monomial m) {
        if (k + 1 == vars.size()) {
            m.e[vars[k]] = static_cast<Exponent>(left);
            m.refresh();
            auto c = static_cast<std::int64_t>(rng() % 19) - 9;
            if (c) terms.push_back({m, ring->field().from_int(c)});
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.e[vars[k]] = static_cast<Exponent>(e);
            rec(k + 1, left - e, m);
        }
    };
    rec(0, degree, Monomial{});
    return Polynomial::from_terms(ring, terms);
}

PolyMatrix deg4_matrix(const RingPtr& r) { return PolyMatrix::parse(r, {{"x^2", "y*z"}, {"y^2", "x*z"}, {"0", "y^2"}}); }

PolyMatrix degree6_matrix(const RingPtr& r) {
    return PolyMatrix::parse(r, {{"x^2", "x^3*z+y^4"}, {"y^2", "x^4+y^3*z"}, {"0", "x^4+y^4"}});
}

PolyMatrix redone_matrix(const RingPtr& r) {
    return PolyMatrix::parse(r, {{"3*y*z+3*z^2", "-y^2+z^2"}, {"y^2-4*y*z", "x^2-y^2"}, {"-x", "0"}});
}

PolyMatrix non_uniform_matrix(const RingPtr& r) {
    return PolyMatrix::parse(r, {{"x^2", "0", "z^2"}, {"y^2", "x^2", "0"}, {"z^2", "y^2", "x^2"}, {"0", "z", "y"}});
}

PolyMatrix non_uniform_j_matrix(const RingPtr& r) {
    return PolyMatrix::parse(r, {{"z^2", "-y^3+x^2*z"}, {"-y^2", "x^2*y"}, {"x^2", "z^3"}});
}

PolyMatrix modified_non_uniform_matrix(const RingPtr& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kResample; ++attempt) {
        PolyMatrix m = PolyMatrix::parse(r, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}, {"0", "z", "y"}});
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.set(i, j, random_form(r, {0, 1, 2}, 2, rng));
        if (dimension_height(Ideal(r, signed_maximal_minors(m))).height == 2) return m;
    }
    throw Error("no height-2 sample for the modified example");
}

PolyMatrix dejonq_matrix(const RingPtr& r, int d, std::uint64_t seed) {
    if (d < 3) throw Error("de Jonquieres family needs d >= 3");
    std::mt19937_64 rng(seed);
    Polynomial z = Polynomial::variable(r, 2);
    for (int attempt = 0; attempt < kResample; ++attempt) {
        std::vector<Polynomial> g;
        for (int i = 0; i < 3; ++i) g.push_back(z * random_form(r, {0, 1}, d - 2, rng) + random_form(r, {0, 1}, d - 1, rng));
        if (std::none_of(g.begin(), g.end(), [](const Polynomial& p) { return p.involves(2); })) continue;
        PolyMatrix phi = PolyMatrix::from_rows(r, {{Polynomial::variable(r, 0), g[0]},
                                                  {Polynomial::variable(r, 1), g[1]},
                                                  {Polynomial(r), g[2]}});
        auto minors = signed_maximal_minors(phi);
        if (std::any_of(minors.begin(), minors.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
        if (dimension_height(Ideal(r, minors)).height == 2) return phi;
    }
    throw Error("no admissible de Jonquieres sample");
}

ZaqInstance zaq_instance(const RingPtr& r, int m, int n, int eps, std::uint64_t seed) {
    if (n < 1 || n > m || eps < std::max(m - n, 1)) throw Error("parameters outside 1 <= n <= m, eps >= max(m-n,1)");
    std::mt19937_64 rng(seed);
    Polynomial xm = xpow(r, 0, m), ym = xpow(r, 1, m), yn = xpow(r, 1, n);
    Ideal primary(r, {xm, yn});
    for (int attempt = 0; attempt < kResample; ++attempt) {
        ZaqInstance z;
        z.m = m;
        z.n = n;
        z.eps = eps;
        z.seed = seed;
        std::vector<Polynomial> p;
        for (int i = 0; i < 3; ++i) {
            z.q.push_back(random_form(r, {0, 1, 2}, n + eps - m, rng));
            z.qp.push_back(random_form(r, {0, 1, 2}, eps, rng));
            p.push_back(z.q[i] * xm + z.qp[i] * yn);
        }
        if (std::any_of(p.begin(), p.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
        z.phi = PolyMatrix::from_rows(r, {{xm, p[0]}, {ym, p[1]}, {Polynomial(r), p[2]}});
        z.minors = signed_maximal_minors(z.phi);
        if (std::any_of(z.minors.begin(), z.minors.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
        if (dimension_height(Ideal(r, z.minors)).height != 2) continue;
        // the (x,y)-primary component of I_1 is I_1 : z^infinity
        Ideal i1(r, {xm, ym, p[0], p[1], p[2]});
        if (saturate(i1, Ideal(r, {Polynomial::variable(r, 2)})).ideal != primary) continue;
        if (m == n) {
            Polynomial delta = xm * p[1] - ym * p[0];
            if (z_degree(delta) != eps && z_degree(p[2]) != eps) continue;
        }
        return z;
    }
    throw Error("no admissible sample for the given parameters");
}

PolyMatrix zaq_rees_matrix(const ZaqInstance& z, const RingPtr& ambient) {
    auto t = [&](std::size_t i) { return Polynomial::variable(ambient, 3 + i); };
    Polynomial a(ambient), b(ambient);
    for (std::size_t i = 0; i < 3; ++i) {
        a += z.q[i].map_to(ambient) * t(i);
        b += z.qp[i].map_to(ambient) * t(i);
    }
    return PolyMatrix::from_rows(ambient, {{t(0), t(1) * xpow(ambient, 1, z.m - z.n)},
                                           {a, b},
                                           {-xpow(ambient, 1, z.n), xpow(ambient, 0, z.m)}});
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

TwoDegreeShape random_two_degree_shape(const RingPtr& r, int n, int a, int eps1, int eps2, std::uint64_t seed) {
    if (n < 3 || a < 1 || a >= n) throw Error("need n >= 3 and 1 <= a < n");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> vars(r->nvars());
    std::iota(vars.begin(), vars.end(), 0);
    for (int attempt = 0; attempt < kResample; ++attempt) {
        TwoDegreeShape sh;
        sh.n = n;
        sh.a = a;
        sh.eps1 = eps1;
        sh.eps2 = eps2;
        sh.phi = PolyMatrix(r, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < n; ++j)
                sh.phi.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                           random_form(r, vars, i < a ? eps1 : eps2, rng));
        sh.validate();
        MinorHeight mh = minor_ideal_height(sh.phi2(), static_cast<std::size_t>(n - a));
        if (!mh.zero && mh.height == a) return sh;
    }
    throw Error("no admissible sample for the given shape");
}

BettiTable fixed_minors_betti(int n, int a, int eps1, int eps2) {
    const int d = a * eps1 + (n - a) * eps2;
    BettiTable b;
    b.add(0, 0, 1);
    b.add(1, d - eps1, a);
    for (int i = 0; i <= a - 2; ++i)
        b.add(i + 2, (n - a + i) * eps2 + d, static_cast<int>(binomial(n - a - 1 + i, i) * binomial(n - 1, i + n - a + 1)));
    return b;
}

}  // namespace hbforge
