#include "hbforge/engine.hpp"

#include <algorithm>
#include <limits>

#include "hbforge/errors.hpp"

namespace hbforge::engine {

Vec canonical(const Context& ctx, Vec v) {
    std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return ctx.compare(a.m, b.m) > 0; });
    const CoeffField& f = ctx.ring->field();
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        Term t = v[i];
        std::size_t j = i + 1;
        while (j < v.size() && v[j].m == t.m) t.c = f.add(t.c, v[j++].c);
        if (!f.is_zero(t.c)) v[out++] = std::move(t);
        i = j;
    }
    v.resize(out);
    return v;
}

namespace {

// a[from..] + c * m * b, merged.
Vec axpy_from(const Context& ctx, const Vec& a, std::size_t from, const Scalar& c, const Monomial& m,
              const Vec& b) {
    const CoeffField& f = ctx.ring->field();
    Vec out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    Term tb;
    bool have_b = false;
    auto load_b = [&]() {
        have_b = j < b.size();
        if (have_b) {
            tb.m = mono_mul(m, b[j].m);
            tb.c = f.mul(c, b[j].c);
        }
    };
    load_b();
    while (i < a.size() || have_b) {
        int cmp = i == a.size() ? -1 : !have_b ? 1 : ctx.compare(a[i].m, tb.m);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(tb);
            ++j;
            load_b();
        } else {
            Scalar s = f.add(a[i].c, tb.c);
            if (!f.is_zero(s)) out.push_back(Term{a[i].m, s});
            ++i;
            ++j;
            load_b();
        }
    }
    return out;
}

constexpr std::size_t kGenPair = std::numeric_limits<std::size_t>::max();

struct Pair {
    std::size_t i, j;  // j == kGenPair marks input generator i
    Monomial lcm;
    int deg;
};

bool pair_before(const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    bool ga = a.j == kGenPair, gb = b.j == kGenPair;
    if (ga != gb) return !ga;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

class Engine {
public:
    Engine(const Context& ctx, const std::vector<Vec>& gens, const Options& opt)
        : ctx_(ctx), cof_ctx_(*ctx.ring, std::max<std::size_t>(gens.size(), 1), ModuleOrder::pot),
          gens_(gens), opt_(opt), f_(ctx.ring->field()), product_criterion_(ctx.rank() == 1) {}

    Result run() {
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if (gens_[k].empty()) continue;
            pairs_.push_back(Pair{k, kGenPair, gens_[k].front().m, ctx_.degree(gens_[k].front().m)});
        }
        Result res;
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t q = 1; q < pairs_.size(); ++q)
                if (pair_before(pairs_[q], pairs_[best])) best = q;
            Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            if (p.deg > opt_.budget.max_degree)
                throw BudgetExceeded("S-pair degree " + std::to_string(p.deg) + " exceeds budget " +
                                     std::to_string(opt_.budget.max_degree));
            Vec h, hcof;
            if (p.j == kGenPair) {
                h = gens_[p.i];
                if (opt_.track_cofactors) hcof = Vec{Term{Monomial::one(static_cast<std::uint16_t>(p.i)), f_.one()}};
            } else {
                h = spoly_tracked(p.i, p.j, hcof);
            }
            top_reduce(h, hcof);
            if (h.empty()) continue;
            if (p.j == kGenPair) res.minimal_inputs.push_back(p.i);
            insert(std::move(h), std::move(hcof));
        }
        std::sort(res.minimal_inputs.begin(), res.minimal_inputs.end());
        if (opt_.interreduce) finish(res);
        return res;
    }

private:
    Vec spoly_tracked(std::size_t i, std::size_t j, Vec& cof) {
        const Vec& a = basis_[i];
        const Vec& b = basis_[j];
        Monomial l = mono_lcm(a.front().m, b.front().m);
        Monomial ma = mono_div(l, a.front().m), mb = mono_div(l, b.front().m);
        // Basis elements are monic.
        Vec s = axpy_from(ctx_, Vec{}, 0, f_.one(), ma, a);
        s = axpy_from(ctx_, s, 0, f_.from_int(-1), mb, b);
        if (opt_.track_cofactors) {
            cof = axpy_from(cof_ctx_, Vec{}, 0, f_.one(), ma, cofs_[i]);
            cof = axpy_from(cof_ctx_, cof, 0, f_.from_int(-1), mb, cofs_[j]);
        }
        return s;
    }

    std::size_t find_reducer(const Monomial& m) const {
        for (std::size_t k : active_)
            if (mono_divides(basis_[k].front().m, m)) return k;
        return kGenPair;
    }

    void top_reduce(Vec& h, Vec& hcof) {
        while (!h.empty()) {
            std::size_t k = find_reducer(h.front().m);
            if (k == kGenPair) return;
            Scalar c = f_.neg(h.front().c);
            Monomial m = mono_div(h.front().m, basis_[k].front().m);
            h = axpy_from(ctx_, h, 0, c, m, basis_[k]);
            if (opt_.track_cofactors) hcof = axpy_from(cof_ctx_, hcof, 0, c, m, cofs_[k]);
        }
    }

    // Reduces every term after the lead.
    void tail_reduce(Vec& h, Vec& hcof, const std::vector<std::size_t>& by) {
        Vec done;
        done.push_back(h.front());
        Vec rest(h.begin() + 1, h.end());
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t k = kGenPair;
            for (std::size_t q : by)
                if (mono_divides(basis_[q].front().m, rest[pos].m)) {
                    k = q;
                    break;
                }
            if (k == kGenPair) {
                done.push_back(rest[pos++]);
                continue;
            }
            Scalar c = f_.neg(rest[pos].c);
            Monomial m = mono_div(rest[pos].m, basis_[k].front().m);
            rest = axpy_from(ctx_, rest, pos, c, m, basis_[k]);
            pos = 0;
            if (opt_.track_cofactors) hcof = axpy_from(cof_ctx_, hcof, 0, c, m, cofs_[k]);
        }
        h = std::move(done);
    }

    void make_monic(Vec& h, Vec& hcof) {
        if (f_.is_one(h.front().c)) return;
        Scalar inv = f_.inv(h.front().c);
        for (auto& t : h) t.c = f_.mul(t.c, inv);
        for (auto& t : hcof) t.c = f_.mul(t.c, inv);
    }

    void insert(Vec h, Vec hcof) {
        make_monic(h, hcof);
        if (!active_.empty()) tail_reduce(h, hcof, active_);
        std::size_t k = basis_.size();
        if (k + 1 > opt_.budget.max_basis)
            throw BudgetExceeded("basis size exceeds budget " + std::to_string(opt_.budget.max_basis));
        basis_.push_back(std::move(h));
        cofs_.push_back(std::move(hcof));
        update(k);
    }

    // Gebauer-Moeller installation of element k.
    void update(std::size_t k) {
        const Monomial& hk = basis_[k].front().m;
        std::vector<std::size_t> cand;
        std::vector<Monomial> lcms;
        for (std::size_t j : active_)
            if (basis_[j].front().m.comp == hk.comp) {
                cand.push_back(j);
                lcms.push_back(mono_lcm(hk, basis_[j].front().m));
            }
        const std::size_t nc = cand.size();
        std::vector<char> state(nc, 0);  // 0 pending, 1 kept, 2 dropped
        for (std::size_t a = 0; a < nc; ++a) {
            bool coprime = product_criterion_ && mono_coprime(hk, basis_[cand[a]].front().m);
            bool dominated = false;
            if (!coprime)
                for (std::size_t b = 0; b < nc && !dominated; ++b)
                    if (b != a && state[b] != 2 && mono_divides(lcms[b], lcms[a])) dominated = true;
            state[a] = dominated ? 2 : 1;
        }
        // Chain criterion on old pairs.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (auto& p : pairs_) {
            if (p.j != kGenPair && mono_divides(hk, p.lcm)) {
                Monomial li = mono_lcm(basis_[p.i].front().m, hk);
                Monomial lj = mono_lcm(basis_[p.j].front().m, hk);
                if (li != p.lcm && lj != p.lcm) continue;
            }
            kept.push_back(std::move(p));
        }
        pairs_ = std::move(kept);
        for (std::size_t a = 0; a < nc; ++a) {
            if (state[a] != 1) continue;
            if (product_criterion_ && mono_coprime(hk, basis_[cand[a]].front().m)) continue;
            pairs_.push_back(Pair{cand[a], k, lcms[a], ctx_.degree(lcms[a])});
        }
        std::vector<std::size_t> next;
        for (std::size_t j : active_)
            if (!mono_divides(hk, basis_[j].front().m)) next.push_back(j);
        next.push_back(k);
        active_ = std::move(next);
    }

    void finish(Result& res) {
        std::vector<std::size_t> order = active_;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return ctx_.compare(basis_[a].front().m, basis_[b].front().m) < 0;
        });
        for (std::size_t idx = 0; idx < order.size(); ++idx) {
            std::size_t k = order[idx];
            std::vector<std::size_t> others;
            for (std::size_t q : order)
                if (q != k) others.push_back(q);
            Vec h = basis_[k];
            Vec hc = opt_.track_cofactors ? cofs_[k] : Vec{};
            tail_reduce(h, hc, others);
            basis_[k] = std::move(h);
            if (opt_.track_cofactors) cofs_[k] = std::move(hc);
        }
        for (std::size_t k : order) {
            res.basis.push_back(basis_[k]);
            if (opt_.track_cofactors) res.cofactors.push_back(cofs_[k]);
        }
    }

    const Context& ctx_;
    Context cof_ctx_;
    const std::vector<Vec>& gens_;
    Options opt_;
    const CoeffField& f_;
    bool product_criterion_;
    std::vector<Vec> basis_;
    std::vector<Vec> cofs_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

Vec axpy(const Context& ctx, const Vec& a, const Scalar& c, const Monomial& m, const Vec& b) {
    return axpy_from(ctx, a, 0, c, m, b);
}

Result buchberger(const Context& ctx, const std::vector<Vec>& gens, const Options& opt) {
    return Engine(ctx, gens, opt).run();
}

Vec make_monic(const Context& ctx, Vec v) {
    if (v.empty()) return v;
    const CoeffField& f = ctx.ring->field();
    Scalar inv = f.inv(v.front().c);
    for (auto& t : v) t.c = f.mul(t.c, inv);
    return v;
}

Vec reduce(const Context& ctx, Vec p, const std::vector<Vec>& by) {
    const CoeffField& f = ctx.ring->field();
    Vec done;
    std::size_t pos = 0;
    while (pos < p.size()) {
        const Vec* r = nullptr;
        for (const auto& g : by)
            if (!g.empty() && mono_divides(g.front().m, p[pos].m)) {
                r = &g;
                break;
            }
        if (!r) {
            done.push_back(p[pos++]);
            continue;
        }
        Scalar c = f.neg(f.div(p[pos].c, r->front().c));
        Monomial m = mono_div(p[pos].m, r->front().m);
        p = axpy_from(ctx, p, pos, c, m, *r);
        pos = 0;
    }
    return done;
}

Vec spoly(const Context& ctx, const Vec& a, const Vec& b) {
    const CoeffField& f = ctx.ring->field();
    Monomial l = mono_lcm(a.front().m, b.front().m);
    Vec s = axpy_from(ctx, Vec{}, 0, f.inv(a.front().c), mono_div(l, a.front().m), a);
    return axpy_from(ctx, s, 0, f.neg(f.inv(b.front().c)), mono_div(l, b.front().m), b);
}

bool spair_check(const Context& ctx, const std::vector<Vec>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].front().m.comp != basis[j].front().m.comp) continue;
            if (!reduce(ctx, spoly(ctx, basis[i], basis[j]), basis).empty()) return false;
        }
    return true;
}

}  // namespace hbforge::engine
