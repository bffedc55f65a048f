#include "hbforge/groebner.hpp"

#include <algorithm>

#include "hbforge/errors.hpp"

namespace hbforge {

namespace engine {

Vec to_vec(const Polynomial& p, std::uint16_t comp) {
    Vec v = p.terms();
    for (auto& t : v) t.m.comp = comp;
    return v;
}

Polynomial to_poly(const RingPtr& ring, const Vec& v) {
    std::vector<Term> terms = v;
    for (auto& t : terms) t.m.comp = 0;
    return Polynomial::from_sorted_terms(ring, std::move(terms));
}

}  // namespace engine

DivisionResult divide_track(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    const RingPtr& ring = p.ring_ptr();
    for (const auto& d : divisors) {
        require_same_ring(*ring, d.ring());
        if (d.is_zero()) throw Error("division by the zero polynomial");
    }
    const CoeffField& f = ring->field();
    std::vector<std::vector<Term>> q(divisors.size());
    std::vector<Term> rem;
    std::vector<Term> cur = p.terms();
    std::size_t pos = 0;
    while (pos < cur.size()) {
        const Term& lt = cur[pos];
        std::size_t k = 0;
        while (k < divisors.size() && !mono_divides(divisors[k].lead_monomial(), lt.m)) ++k;
        if (k == divisors.size()) {
            rem.push_back(lt);
            ++pos;
            continue;
        }
        Scalar c = f.div(lt.c, divisors[k].lead_coeff());
        Monomial m = mono_div(lt.m, divisors[k].lead_monomial());
        q[k].push_back(Term{m, c});
        std::vector<Term> tail(cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end());
        cur = axpy_terms(*ring, tail, f.neg(c), m, divisors[k].terms());
        pos = 0;
    }
    DivisionResult r;
    // Quotient terms are produced in decreasing order.
    for (auto& terms : q) r.quotients.push_back(Polynomial::from_sorted_terms(ring, std::move(terms)));
    r.remainder = Polynomial::from_sorted_terms(ring, std::move(rem));
    return r;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators, std::vector<Polynomial> basis,
                             std::optional<PolyMatrix> cofactors)
    : ring_(std::move(ring)), generators_(std::move(generators)), basis_(std::move(basis)),
      cofactors_(std::move(cofactors)) {
    for (const auto& b : basis_) vecs_.push_back(engine::to_vec(b));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
    require_same_ring(*ring_, p.ring());
    engine::Context ctx(*ring_, 1);
    return engine::to_poly(ring_, engine::reduce(ctx, engine::to_vec(p), vecs_));
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
    std::vector<Monomial> out;
    for (const auto& b : basis_) out.push_back(b.lead_monomial());
    return out;
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const GbOptions& opt) {
    if (gens.empty()) throw Error("groebner_basis needs the ring of at least one generator");
    const RingPtr& ring = gens.front().ring_ptr();
    std::vector<engine::Vec> vecs;
    for (const auto& g : gens) {
        require_same_ring(*ring, g.ring());
        vecs.push_back(engine::to_vec(g));
    }
    engine::Context ctx(*ring, 1);
    engine::Options eo;
    eo.budget = opt.budget;
    eo.track_cofactors = opt.track_cofactors;
    engine::Result res = engine::buchberger(ctx, vecs, eo);
    std::vector<Polynomial> basis;
    for (const auto& v : res.basis) basis.push_back(engine::to_poly(ring, v));
    std::optional<PolyMatrix> cof;
    if (opt.track_cofactors) {
        PolyMatrix m(ring, basis.size(), gens.size());
        for (std::size_t k = 0; k < res.cofactors.size(); ++k) {
            std::vector<std::vector<Term>> split(gens.size());
            for (const auto& t : res.cofactors[k]) {
                Term u = t;
                u.m.comp = 0;
                split[t.m.comp].push_back(u);
            }
            for (std::size_t j = 0; j < gens.size(); ++j)
                m.set(k, j, Polynomial::from_sorted_terms(ring, std::move(split[j])));
        }
        cof = std::move(m);
    }
    return GroebnerBasis(ring, gens, std::move(basis), std::move(cof));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& drop,
                                  const Budget& budget) {
    if (gens.empty()) return {};
    const RingPtr& ring = gens.front().ring_ptr();
    const std::size_t n = ring->nvars();
    std::vector<char> dropped(n, 0);
    for (auto d : drop) {
        if (d >= n) throw Error("eliminated variable out of range");
        dropped[d] = 1;
    }
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < n; ++i) (dropped[i] ? first : second).push_back(i);
    if (first.empty()) return gens;
    std::vector<std::vector<std::size_t>> blocks{first};
    if (!second.empty()) blocks.push_back(second);
    RingPtr elim = PolyRing::make(ring->names(), ring->field(), MonomialOrder::block(blocks), ring->grading());
    std::vector<Polynomial> mapped;
    for (const auto& g : gens) mapped.push_back(g.map_to(elim));
    GbOptions opt;
    opt.budget = budget;
    GroebnerBasis gb = groebner_basis(mapped, opt);
    std::vector<Polynomial> out;
    for (const auto& b : gb.basis()) {
        bool free = std::none_of(first.begin(), first.end(), [&](std::size_t v) { return b.involves(v); });
        if (free) out.push_back(b.map_to(ring));
    }
    return out;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::string>& drop,
                                  const Budget& budget) {
    if (gens.empty()) return {};
    std::vector<std::size_t> idx;
    for (const auto& name : drop) {
        int i = gens.front().ring().index_of(name);
        if (i < 0) throw Error("unknown variable '" + name + "'");
        idx.push_back(static_cast<std::size_t>(i));
    }
    return eliminate(gens, idx, budget);
}

bool spair_check(const GroebnerBasis& gb) {
    engine::Context ctx(*gb.ring_ptr(), 1);
    std::vector<engine::Vec> vecs;
    for (const auto& b : gb.basis()) vecs.push_back(engine::to_vec(b));
    return engine::spair_check(ctx, vecs);
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens, const Budget& budget) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {};
    const RingPtr& ring = nonzero.front().ring_ptr();
    std::vector<engine::Vec> vecs;
    for (const auto& g : nonzero) {
        if (!g.is_homogeneous()) throw Error("minimal generators need homogeneous input");
        vecs.push_back(engine::to_vec(g));
    }
    engine::Context ctx(*ring, 1);
    engine::Options eo;
    eo.budget = budget;
    eo.minimal = true;
    eo.interreduce = false;
    engine::Result res = engine::buchberger(ctx, vecs, eo);
    std::vector<Polynomial> out;
    for (auto k : res.minimal_inputs) out.push_back(nonzero[k]);
    return out;
}

}  // namespace hbforge
