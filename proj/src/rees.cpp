#include "hbforge/rees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hbforge/errors.hpp"
#include "hbforge/resolutions.hpp"

namespace hbforge {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    return name;
}

PolyMatrix graded_row(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    PolyMatrix row = PolyMatrix::row(ring, gens);
    std::vector<int> degs;
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw Error("generators must be homogeneous");
        degs.push_back(g.is_zero() ? 0 : g.degree());
    }
    row.set_shifts({0}, degs);
    return row;
}

void require_ambient(const RingPtr& ambient, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw Error("no generators");
    const PolyRing& base = gens.front().ring();
    if (ambient->nvars() != base.nvars() + gens.size()) throw Error("ambient ring does not match the generators");
    for (std::size_t i = 0; i < base.nvars(); ++i)
        if (ambient->name(i) != base.name(i)) throw Error("ambient ring does not extend the base ring");
}

}  // namespace

RingPtr rees_ambient(const RingPtr& base, std::size_t n, const std::string& prefix) {
    const std::size_t nb = base->nvars();
    std::vector<std::string> names = base->names();
    std::vector<int> w1, w2;
    for (std::size_t i = 0; i < nb; ++i) {
        w1.push_back(base->variable_weight(i));
        w2.push_back(0);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(fresh_name(names, prefix + std::to_string(i)));
        w1.push_back(0);
        w2.push_back(1);
    }
    std::vector<std::size_t> b1(nb), b2(n);
    std::iota(b1.begin(), b1.end(), 0);
    std::iota(b2.begin(), b2.end(), nb);
    std::vector<std::vector<std::size_t>> blocks;
    if (!b1.empty()) blocks.push_back(b1);
    if (!b2.empty()) blocks.push_back(b2);
    return PolyRing::make(names, base->field(), MonomialOrder::block(blocks), {w1, w2});
}

RingPtr fiber_ring(const RingPtr& ambient, std::size_t base_nvars) {
    std::vector<std::string> names(ambient->names().begin() + static_cast<std::ptrdiff_t>(base_nvars),
                                   ambient->names().end());
    return PolyRing::standard(names, ambient->field());
}

Ideal symmetric_ideal(const PolyMatrix& phi, const RingPtr& ambient, const std::vector<Polynomial>* gens,
                      const Budget& budget) {
    const std::size_t n = phi.rows();
    const std::size_t nb = ambient->nvars() - n;
    if (ambient->nvars() < n || phi.ring().nvars() != nb) throw Error("presentation shape does not match the ambient ring");
    if (gens) {
        if (gens->size() != n) throw Error("presentation shape does not match the generators");
        PolyMatrix row = PolyMatrix::row(phi.ring_ptr(), *gens);
        if (!(row * phi).is_zero()) throw Error("matrix columns are not syzygies of the generators");
    }
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < phi.cols(); ++j) {
        Polynomial acc(ambient);
        for (std::size_t i = 0; i < n; ++i) {
            if (phi.at(i, j).is_zero()) continue;
            acc += Polynomial::variable(ambient, nb + i) * phi.at(i, j).map_to(ambient);
        }
        out.push_back(acc);
    }
    return Ideal(ambient, out, budget);
}

Ideal rees_ideal_elimination(const std::vector<Polynomial>& gens, const RingPtr& ambient, const Budget& budget) {
    require_ambient(ambient, gens);
    const PolyRing& base = gens.front().ring();
    const std::size_t nb = base.nvars(), n = gens.size();
    std::vector<std::string> names{fresh_name(ambient->names(), "_u")};
    names.insert(names.end(), ambient->names().begin(), ambient->names().end());
    // weights: u (0,1), base (w,0), t_i (deg f_i, 1)
    std::vector<int> w1{0}, w2{1};
    int top = 1;
    for (std::size_t i = 0; i < nb; ++i) {
        w1.push_back(base.variable_weight(i));
        w2.push_back(0);
    }
    for (const auto& f : gens) {
        if (!f.is_homogeneous()) throw Error("Rees ideal needs homogeneous generators");
        w1.push_back(f.is_zero() ? 0 : f.degree());
        w2.push_back(1);
        top = std::max(top, w1.back());
    }
    // t_i carries weight deg f_i + 1, so the degree cap scales with it
    Budget scaled = budget;
    scaled.max_degree = budget.max_degree * (top + 1);
    std::vector<std::size_t> rest(nb + n);
    std::iota(rest.begin(), rest.end(), 1);
    RingPtr tr = PolyRing::make(names, base.field(), MonomialOrder::block({{0}, rest}), {w1, w2});
    Polynomial u = Polynomial::variable(tr, 0);
    std::vector<Polynomial> tagged;
    for (std::size_t i = 0; i < n; ++i)
        tagged.push_back(Polynomial::variable(tr, 1 + nb + i) - u * gens[i].map_to(tr));
    std::vector<Polynomial> out;
    for (const auto& p : eliminate(tagged, std::vector<std::size_t>{0}, scaled)) out.push_back(p.map_to(ambient));
    return Ideal(ambient, out, budget);
}

Ideal rees_ideal_saturation(const std::vector<Polynomial>& gens, const RingPtr& ambient, const Budget& budget) {
    require_ambient(ambient, gens);
    auto first = std::find_if(gens.begin(), gens.end(), [](const Polynomial& g) { return !g.is_zero(); });
    if (first == gens.end()) throw Error("Rees ideal of the zero ideal");
    PolyMatrix phi = syzygies(graded_row(gens.front().ring_ptr(), gens), budget);
    Ideal l = symmetric_ideal(phi, ambient, &gens, budget);
    Ideal f(ambient, {first->map_to(ambient)}, budget);
    return saturate(l, f).ideal;
}

Ideal rees_ideal(const std::vector<Polynomial>& gens, const RingPtr& ambient, const Budget& budget) {
    Ideal a = rees_ideal_elimination(gens, ambient, budget);
    Ideal b = rees_ideal_saturation(gens, ambient, budget);
    if (a != b) throw InternalError("Rees ideal algorithms disagree");
    return Ideal(ambient, a.gb().basis(), budget);
}

FiberData fiber_and_spread(const Ideal& rees, std::size_t base_nvars, const std::vector<Polynomial>& gens) {
    int d = -1;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw Error("fiber needs homogeneous generators");
        if (d >= 0 && g.degree() != d) throw Error("fiber needs equigenerated input");
        d = g.degree();
    }
    const RingPtr& s = rees.ring_ptr();
    RingPtr fr = fiber_ring(s, base_nvars);
    std::vector<Polynomial> q;
    for (const auto& b : rees.gb().basis()) {
        bool free = true;
        for (std::size_t v = 0; v < base_nvars && free; ++v) free = !b.involves(v);
        if (free) q.push_back(b.map_to(fr));
    }
    FiberData out;
    out.fiber = Ideal(fr, q, rees.budget());
    auto h = hilbert(out.fiber);
    out.spread = h.dim;
    out.multiplicity = h.multiplicity;
    return out;
}

ReesPresentation rees_presentation(const std::vector<Polynomial>& gens, const Budget& budget) {
    if (gens.empty()) throw Error("no generators");
    ReesPresentation rp;
    rp.base = gens.front().ring_ptr();
    rp.generators = gens;
    rp.ambient = rees_ambient(rp.base, gens.size());
    rp.presentation = syzygies(graded_row(rp.base, gens), budget);
    rp.symmetric = symmetric_ideal(rp.presentation, rp.ambient, &gens, budget);
    rp.rees = rees_ideal(gens, rp.ambient, budget);
    if (!rp.rees.contains(rp.symmetric)) throw InternalError("symmetric ideal not contained in the Rees ideal");
    FiberData fd = fiber_and_spread(rp.rees, rp.base->nvars(), gens);
    rp.fiber = fd.fiber;
    rp.spread = fd.spread;
    rp.fiber_multiplicity = fd.multiplicity;
    return rp;
}

bool is_linear_type(const std::vector<Polynomial>& gens, const PolyMatrix& phi, const Budget& budget) {
    if (gens.empty()) throw Error("no generators");
    RingPtr s = rees_ambient(gens.front().ring_ptr(), gens.size());
    Ideal l = symmetric_ideal(phi, s, &gens, budget);
    Ideal j = rees_ideal(gens, s, budget);
    return l == j;
}

bool is_linear_type(const std::vector<Polynomial>& gens, const Budget& budget) {
    if (gens.empty()) throw Error("no generators");
    return is_linear_type(gens, syzygies(graded_row(gens.front().ring_ptr(), gens), budget), budget);
}

SylvesterForm sylvester_form(const Polynomial& f, const Polynomial& g, const Polynomial& a, const Polynomial& b) {
    require_same_ring(f.ring(), g.ring());
    require_same_ring(f.ring(), a.ring());
    require_same_ring(f.ring(), b.ring());
    DivisionResult df = divide_track(f, {a, b});
    DivisionResult dg = divide_track(g, {a, b});
    if (!df.remainder.is_zero() || !dg.remainder.is_zero())
        throw Error("Sylvester form: polynomial not in the ideal of the divisors");
    SylvesterForm out;
    out.content = PolyMatrix::from_rows(f.ring_ptr(), {{df.quotients[0], df.quotients[1]}, {dg.quotients[0], dg.quotients[1]}});
    out.h = df.quotients[0] * dg.quotients[1] - df.quotients[1] * dg.quotients[0];
    MultiDegree md = out.h.multidegree();
    if (md.homogeneous()) out.bidegree = md.value;
    return out;
}

std::vector<Polynomial> bigraded_minimal_generators(const Ideal& ideal) {
    struct Item {
        int total;
        Bidegree deg;
        std::size_t index;
    };
    std::vector<Item> items;
    const auto& gens = ideal.generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        MultiDegree md = gens[k].multidegree();
        if (!md.homogeneous()) throw Error("bigraded generators need a bihomogeneous ideal");
        items.push_back({gens[k].degree(), md.value, k});
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        if (x.total != y.total) return x.total < y.total;
        if (x.deg != y.deg) return x.deg < y.deg;
        return x.index < y.index;
    });
    std::vector<Polynomial> sorted;
    for (const auto& it : items) sorted.push_back(gens[it.index]);
    return minimal_generators(sorted, ideal.budget());
}

BidegreeTable bigraded_min_gens(const Ideal& ideal) {
    BidegreeTable t;
    for (const auto& g : bigraded_minimal_generators(ideal)) ++t[g.multidegree().value];
    return t;
}

std::string bidegree_table_to_string(const BidegreeTable& table) {
    std::ostringstream out;
    for (const auto& [deg, count] : table) {
        out << "(";
        for (std::size_t i = 0; i < deg.size(); ++i) out << (i ? "," : "") << deg[i];
        out << "): " << count << "\n";
    }
    return out.str();
}

CmReport cm_via_pd(const Ideal& ideal) {
    CmReport r;
    FreeResolution res = minimal_resolution(ideal);
    r.pd = static_cast<int>(res.length());
    r.height = dimension_height(ideal).height;
    r.cm = r.pd == r.height;
    return r;
}

ReductionCertificate is_reduction(const Ideal& j, const Ideal& i, int r_max) {
    if (!i.contains(j)) throw Error("reduction candidate is not contained in the ideal");
    ReductionCertificate c;
    Ideal ir = Ideal::unit(i.ring_ptr(), i.budget());  // I^r
    for (int r = 0; r <= r_max; ++r) {
        Ideal next = product(ir, i);  // I^{r+1}
        Ideal jir = product(j, ir);
        if (jir.contains(next) && next.contains(jir)) {
            c.holds = true;
            c.r = r;
            return c;
        }
        ir = next.minimalized();
    }
    c.r = r_max;
    return c;
}

GConditionReport g_condition(const PolyMatrix& phi, int s, const Budget& budget) {
    GConditionReport rep;
    const int n = static_cast<int>(phi.rows());
    for (int j = std::max(1, n - s + 1); j <= n - 1; ++j) {
        int need = n - j + 1;
        MinorHeight mh = minor_ideal_height(phi, static_cast<std::size_t>(j), need, budget);
        int h = mh.zero ? 0 : mh.height;
        rep.heights.emplace_back(j, h);
        if (h < need) {
            rep.holds = false;
            rep.witness = j;
            return rep;
        }
    }
    return rep;
}

}  // namespace hbforge
