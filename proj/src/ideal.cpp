#include "hbforge/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "hbforge/errors.hpp"
#include "hbforge/linalg.hpp"

namespace hbforge {

struct Ideal::Cache {
    std::mutex mu;
    std::optional<GroebnerBasis> gb;
};

Ideal::Ideal(RingPtr ring, const std::vector<Polynomial>& generators, Budget budget)
    : ring_(std::move(ring)), budget_(budget), cache_(std::make_shared<Cache>()) {
    for (const auto& g : generators) {
        require_same_ring(*ring_, g.ring());
        if (g.is_zero()) continue;
        Polynomial n = g.normalized();
        if (std::find(gens_.begin(), gens_.end(), n) == gens_.end()) gens_.push_back(std::move(n));
    }
}

Ideal Ideal::unit(RingPtr ring, Budget budget) {
    auto one = Polynomial::from_int(ring, 1);
    return Ideal(std::move(ring), {one}, budget);
}

Ideal Ideal::zero(RingPtr ring, Budget budget) { return Ideal(std::move(ring), {}, budget); }

Ideal Ideal::parse(const std::vector<std::string>& generators, RingPtr ring, Budget budget) {
    std::vector<Polynomial> gens;
    for (const auto& s : generators) gens.push_back(Polynomial::parse(s, ring));
    return Ideal(std::move(ring), gens, budget);
}

const GroebnerBasis& Ideal::gb() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) {
        if (gens_.empty()) {
            cache_->gb = GroebnerBasis(ring_, {}, {}, std::nullopt);
        } else {
            GbOptions opt;
            opt.budget = budget_;
            cache_->gb = groebner_basis(gens_, opt);
        }
    }
    return *cache_->gb;
}

bool Ideal::is_unit() const {
    for (const auto& g : gens_)
        if (g.is_constant()) return true;
    return gb().is_unit();
}

bool Ideal::is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::contains(const Polynomial& p) const {
    require_same_ring(*ring_, p.ring());
    if (p.is_zero()) return true;
    if (gens_.empty()) return false;
    return gb().contains(p);
}

bool Ideal::contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
    if (gens_.empty()) return p;
    return gb().normal_form(p);
}

Ideal Ideal::map_to(const RingPtr& target) const {
    std::vector<Polynomial> out;
    for (const auto& g : gens_) out.push_back(g.map_to(target));
    return Ideal(target, out, budget_);
}

Ideal Ideal::minimalized() const {
    if (gens_.empty() || !is_homogeneous()) return *this;
    return Ideal(ring_, minimal_generators(gens_, budget_), budget_);
}

bool Ideal::operator==(const Ideal& o) const {
    require_same_ring(*ring_, *o.ring_);
    if (gens_.empty() || o.gens_.empty()) return gens_.empty() == o.gens_.empty();
    return gb().basis() == o.gb().basis();
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

Ideal sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring_ptr(), gens, a.budget());
}

Ideal product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring_ptr(), gens, a.budget());
}

Ideal power(const Ideal& a, int exponent) {
    if (exponent < 0) throw Error("negative ideal power");
    if (exponent == 0) return Ideal::unit(a.ring_ptr(), a.budget());
    const auto& g = a.generators();
    std::vector<Polynomial> gens;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, int, const Polynomial&)> rec = [&](std::size_t start, int left,
                                                                      const Polynomial& acc) {
        if (left == 0) {
            gens.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < g.size(); ++i) rec(i, left - 1, acc * g[i]);
    };
    rec(0, exponent, Polynomial::from_int(a.ring_ptr(), 1));
    return Ideal(a.ring_ptr(), gens, a.budget());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring_ptr(), a.budget());
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    const PolyRing& r = a.ring();
    const std::size_t n = r.nvars();
    if (n + 1 > kMaxVariables) throw Error("too many variables for intersection");
    std::string tag = "_u";
    while (r.index_of(tag) >= 0) tag += "_";
    std::vector<std::string> names{tag};
    names.insert(names.end(), r.names().begin(), r.names().end());
    Grading grading;
    for (const auto& w : r.grading()) {
        std::vector<int> v{0};
        v.insert(v.end(), w.begin(), w.end());
        grading.push_back(v);
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i <= n; ++i) rest.push_back(i);
    RingPtr tr = PolyRing::make(names, r.field(), MonomialOrder::block({{0}, rest}), grading);
    Polynomial u = Polynomial::variable(tr, 0);
    Polynomial one_minus_u = Polynomial::from_int(tr, 1) - u;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(u * f.map_to(tr));
    for (const auto& g : b.generators()) gens.push_back(one_minus_u * g.map_to(tr));
    std::vector<Polynomial> kept = eliminate(gens, std::vector<std::size_t>{0}, a.budget());
    std::vector<Polynomial> out;
    for (const auto& k : kept) out.push_back(k.map_to(a.ring_ptr()));
    return Ideal(a.ring_ptr(), out, a.budget());
}

Ideal intersect(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw Error("empty intersection");
    Ideal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

Ideal quotient(const Ideal& a, const Polynomial& f) {
    require_same_ring(a.ring(), f.ring());
    if (f.is_zero() || a.contains(f)) return Ideal::unit(a.ring_ptr(), a.budget());
    if (a.is_zero()) return a;
    Polynomial fn = f.normalized();
    Ideal meet = intersect(a, Ideal(a.ring_ptr(), {fn}, a.budget()));
    std::vector<Polynomial> out;
    for (const auto& g : meet.generators()) {
        DivisionResult d = divide_track(g, {fn});
        if (!d.remainder.is_zero()) throw InternalError("inexact division in ideal quotient");
        out.push_back(d.quotients[0]);
    }
    return Ideal(a.ring_ptr(), out, a.budget());
}

Ideal quotient(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw Error("quotient by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& g : b.generators()) {
        Ideal q = quotient(a, g);
        acc = acc ? intersect(*acc, q) : q;
    }
    return *acc;
}

Saturation saturate(const Ideal& a, const Ideal& b) {
    Saturation s{a, 0};
    for (;;) {
        Ideal next = quotient(s.ideal, b);
        if (next == s.ideal) return s;
        s.ideal = next;
        ++s.steps;
    }
}

DimHeight dimension_height(const Ideal& a) {
    const int n = static_cast<int>(a.ring().nvars());
    if (a.is_zero()) return {n, 0};
    if (a.is_unit()) return {-1, n};
    std::vector<std::uint32_t> masks;
    for (const auto& m : a.gb().lead_monomials()) masks.push_back(m.mask);
    int best = 0;
    std::function<void(int, std::uint32_t, int)> rec = [&](int i, std::uint32_t set, int size) {
        if (size + (n - i) <= best) return;
        if (i == n) {
            best = size;
            return;
        }
        std::uint32_t with = set | (1u << i);
        bool ok = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & ~with) == 0; });
        if (ok) rec(i + 1, with, size + 1);
        rec(i + 1, set, size);
    };
    rec(0, 0, 0);
    return {best, n - best};
}

namespace {

using IntPoly = std::vector<long long>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_sub_shift(const IntPoly& a, const IntPoly& b, std::size_t shift) {
    IntPoly r(std::max(a.size(), b.size() + shift), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i];
    trim(r);
    return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.e < b.e;
    });
    std::vector<Monomial> out;
    for (const auto& m : g) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return mono_divides(o, m); });
        if (!redundant) out.push_back(m);
    }
    return out;
}

struct MonoVecLess {
    bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].e != b[i].e) return a[i].e < b[i].e;
        return false;
    }
};

class NumeratorSolver {
public:
    IntPoly solve(std::vector<Monomial> gens) {
        gens = minimalize(std::move(gens));
        auto it = memo_.find(gens);
        if (it != memo_.end()) return it->second;
        IntPoly r = compute(gens);
        memo_.emplace(std::move(gens), r);
        return r;
    }

private:
    IntPoly compute(const std::vector<Monomial>& gens) {
        std::array<int, kMaxVariables> count{};
        std::uint32_t seen = 0;
        bool coprime = true;
        for (const auto& g : gens) {
            if (g.mask & seen) coprime = false;
            seen |= g.mask;
            for (std::size_t v = 0; v < kMaxVariables; ++v)
                if (g.e[v]) ++count[v];
        }
        if (coprime) {
            IntPoly r{1};
            for (const auto& g : gens) r = poly_sub_shift(r, r, g.deg);
            return r;
        }
        std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
        int pure = 0;
        int amin = 1 << 30;
        for (const auto& g : gens) {
            if (!g.e[v]) continue;
            if (g.mask == (1u << v))
                pure = g.e[v];
            else
                amin = std::min<int>(amin, g.e[v]);
        }
        int k = pure ? std::min(amin, pure - 1) : amin;
        Monomial p = Monomial::variable(v, static_cast<std::uint32_t>(k));
        std::vector<Monomial> plus = gens;
        plus.push_back(p);
        std::vector<Monomial> colon;
        for (const auto& g : gens) {
            Monomial q = g;
            q.e[v] = static_cast<Exponent>(q.e[v] > k ? q.e[v] - k : 0);
            q.refresh();
            colon.push_back(q);
        }
        IntPoly a = solve(std::move(plus));
        IntPoly b = solve(std::move(colon));
        IntPoly r = a;
        IntPoly shifted(k, 0);
        shifted.insert(shifted.end(), b.begin(), b.end());
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            if (i >= r.size()) r.resize(i + 1, 0);
            r[i] += shifted[i];
        }
        trim(r);
        return r;
    }

    std::map<std::vector<Monomial>, IntPoly, MonoVecLess> memo_;
};

// Divides by (1 - t); returns false when there is a remainder.
bool divide_one_minus_t(IntPoly& p) {
    if (p.empty()) return true;
    // p = (1 - t) q  <=>  q_k = sum_{i<=k} p_i
    IntPoly q(p.size() - 1, 0);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        acc += p[k];
        q[k] = acc;
    }
    if (acc + p.back() != 0) return false;
    trim(q);
    p = q;
    return true;
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    (void)nvars;
    for (const auto& g : gens)
        if (g.deg == 0) return {};
    NumeratorSolver solver;
    return solver.solve(std::move(gens));
}

long long HilbertData::hfun(int t) const {
    if (t < 0) return 0;
    __int128 total = 0;
    for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= t; ++k) {
        if (!numerator[k]) continue;
        // binomial(t - k + n - 1, n - 1)
        long long m = t - static_cast<long long>(k);
        __int128 c = 1;
        if (nvars == 0) {
            c = m == 0 ? 1 : 0;
        } else {
            for (int i = 1; i < nvars; ++i) c = c * (m + i) / i;
        }
        total += c * numerator[k];
    }
    return static_cast<long long>(total);
}

std::string HilbertData::numerator_string() const {
    if (numerator.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        long long c = numerator[k];
        if (!c) continue;
        long long a = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (k == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a) + "*";
        s += "t";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

HilbertData hilbert(const Ideal& a) {
    for (const auto& g : a.generators())
        if (!g.is_standard_homogeneous()) throw Error("Hilbert data needs a homogeneous ideal");
    HilbertData h;
    h.nvars = static_cast<int>(a.ring().nvars());
    DimHeight dh = dimension_height(a);
    h.dim = dh.dim;
    h.height = dh.height;
    if (a.is_zero()) {
        h.numerator = {1};
    } else {
        h.numerator = hilbert_numerator(a.gb().lead_monomials(), a.ring().nvars());
    }
    if (h.numerator.empty()) return h;
    IntPoly p = h.numerator;
    for (int i = 0; i < h.height; ++i)
        if (!divide_one_minus_t(p)) throw InternalError("Hilbert numerator not divisible by (1-t)^height");
    long long e = 0;
    for (auto c : p) e += c;
    h.multiplicity = e;
    return h;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int t) {
    std::vector<Monomial> out;
    const std::size_t n = ring.nvars();
    if (t < 0) return out;
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            m.e[i] = static_cast<Exponent>(left);
            Monomial c = m;
            c.refresh();
            out.push_back(c);
            return;
        }
        for (int k = left; k >= 0; --k) {
            m.e[i] = static_cast<Exponent>(k);
            rec(i + 1, left - k);
        }
        m.e[i] = 0;
    };
    if (n == 0) {
        if (t == 0) out.push_back(Monomial::one());
        return out;
    }
    rec(0, t);
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return ring.compare(x, y) > 0; });
    return out;
}

GradedPiece graded_piece(const Ideal& a, int t) {
    const PolyRing& r = a.ring();
    for (const auto& g : a.generators())
        if (!g.is_standard_homogeneous()) throw Error("graded piece needs a homogeneous ideal");
    GradedPiece out;
    auto cols = monomials_of_degree(r, t);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
    const CoeffField& f = r.field();
    std::vector<ScalarRow> rows;
    for (const auto& g : a.generators()) {
        int d = g.standard_degree();
        if (d > t) continue;
        for (const auto& m : monomials_of_degree(r, t - d)) {
            ScalarRow row(cols.size(), f.zero());
            for (const auto& term : g.terms()) row[index.at(mono_mul(m, term.m))] = term.c;
            rows.push_back(std::move(row));
        }
    }
    Echelon e = row_echelon(f, std::move(rows));
    out.dim = e.rank;
    for (const auto& row : e.rows) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!f.is_zero(row[c])) terms.push_back({cols[c], row[c]});
        out.basis.push_back(Polynomial::from_sorted_terms(a.ring_ptr(), std::move(terms)));
    }
    return out;
}

}  // namespace hbforge
