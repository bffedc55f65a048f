#include "hbforge/resolutions.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hbforge/errors.hpp"

namespace hbforge {

void BettiTable::add(int i, int j, int count) {
    if (count == 0) return;
    beta_[i][j] += count;
}

int BettiTable::get(int i, int j) const {
    auto it = beta_.find(i);
    if (it == beta_.end()) return 0;
    auto jt = it->second.find(j);
    return jt == it->second.end() ? 0 : jt->second;
}

std::map<int, int> BettiTable::row(int i) const {
    auto it = beta_.find(i);
    return it == beta_.end() ? std::map<int, int>{} : it->second;
}

int BettiTable::length() const { return beta_.empty() ? -1 : beta_.rbegin()->first; }

int BettiTable::rank(int i) const {
    int total = 0;
    for (const auto& [j, b] : row(i)) total += b;
    return total;
}

int BettiTable::regularity() const {
    int reg = 0;
    bool any = false;
    for (const auto& [i, row] : beta_)
        for (const auto& [j, b] : row)
            if (b) {
                reg = any ? std::max(reg, j - i) : j - i;
                any = true;
            }
    return reg;
}

BettiTable BettiTable::ideal_table() const {
    BettiTable t;
    for (const auto& [i, row] : beta_)
        if (i > 0)
            for (const auto& [j, b] : row) t.add(i - 1, j, b);
    return t;
}

long long BettiTable::hilbert_value(int nvars, int t) const {
    auto binom = [](long long a, long long b) -> long long {
        if (b < 0 || a < b) return 0;
        __int128 c = 1;
        for (long long k = 1; k <= b; ++k) c = c * (a - b + k) / k;
        return static_cast<long long>(c);
    };
    long long total = 0;
    for (const auto& [i, row] : beta_)
        for (const auto& [j, b] : row) {
            long long m = t - j;
            if (m < 0) continue;
            long long c = nvars == 0 ? (m == 0 ? 1 : 0) : binom(m + nvars - 1, nvars - 1);
            total += (i % 2 ? -1 : 1) * b * c;
        }
    return total;
}

std::string BettiTable::to_text() const {
    if (beta_.empty()) return "(empty)\n";
    int imax = length();
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [i, row] : beta_)
        for (const auto& [j, b] : row) {
            if (!b) continue;
            lo = first ? j - i : std::min(lo, j - i);
            hi = first ? j - i : std::max(hi, j - i);
            first = false;
        }
    std::size_t width = 1;
    for (int i = 0; i <= imax; ++i) width = std::max(width, std::to_string(rank(i)).size());
    auto cell = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
    std::ostringstream out;
    out << "      ";
    for (int i = 0; i <= imax; ++i) out << cell(std::to_string(i));
    out << "\ntotal:";
    for (int i = 0; i <= imax; ++i) out << cell(std::to_string(rank(i)));
    out << "\n";
    for (int d = lo; d <= hi; ++d) {
        std::string label = std::to_string(d) + ":";
        out << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
        for (int i = 0; i <= imax; ++i) {
            int b = get(i, i + d);
            out << cell(b ? std::to_string(b) : ".");
        }
        out << "\n";
    }
    return out.str();
}

std::string BettiTable::to_sequence(const std::string& ring_symbol) const {
    std::string s = "0";
    for (int i = length(); i >= 0; --i) {
        std::string term;
        for (const auto& [j, b] : row(i)) {
            if (!b) continue;
            if (!term.empty()) term += " + ";
            term += j == 0 ? ring_symbol : ring_symbol + "(" + std::to_string(-j) + ")";
            if (b != 1) term += "^" + std::to_string(b);
        }
        if (term.empty()) term = "0";
        s += " -> " + term;
    }
    return s;
}

BettiTable FreeResolution::betti() const {
    BettiTable t;
    for (std::size_t i = 0; i < shifts.size(); ++i)
        for (int d : shifts[i]) t.add(static_cast<int>(i), d);
    return t;
}

bool FreeResolution::composes_to_zero() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!(maps[i] * maps[i + 1]).is_zero()) return false;
    return true;
}

bool FreeResolution::has_unit_entries() const {
    return std::any_of(maps.begin(), maps.end(), [](const PolyMatrix& m) { return m.has_unit_entry(); });
}

namespace {

PolyMatrix ensure_graded(const PolyMatrix& m) {
    if (m.graded()) return m;
    PolyMatrix g = m;
    g.grade_by_rows(std::vector<int>(m.rows(), 0));
    return g;
}

engine::Vec column_vec(const engine::Context& ctx, const PolyMatrix& m, std::size_t j, std::uint16_t offset = 0) {
    engine::Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& t : m.at(i, j).terms()) {
            Term c = t;
            c.m.comp = static_cast<std::uint16_t>(i + offset);
            v.push_back(c);
        }
    return engine::canonical(ctx, std::move(v));
}

// Indices of minimal generators among homogeneous module elements.
std::vector<std::size_t> minimal_subset(const PolyRing& ring, const std::vector<engine::Vec>& vecs,
                                        const std::vector<int>& shifts, const Budget& budget) {
    engine::Context ctx(ring, shifts.size(), engine::ModuleOrder::top, shifts);
    std::vector<engine::Vec> in;
    std::vector<std::size_t> where;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        if (vecs[k].empty()) continue;
        in.push_back(engine::canonical(ctx, vecs[k]));
        where.push_back(k);
    }
    if (in.empty()) return {};
    engine::Options eo;
    eo.budget = budget;
    eo.minimal = true;
    eo.interreduce = false;
    engine::Result res = engine::buchberger(ctx, in, eo);
    std::vector<std::size_t> out;
    for (auto k : res.minimal_inputs) out.push_back(where[k]);
    std::sort(out.begin(), out.end());
    return out;
}

PolyMatrix matrix_from_vecs(const RingPtr& ring, const std::vector<engine::Vec>& vecs, const std::vector<int>& row_shifts) {
    PolyMatrix m(ring, row_shifts.size(), vecs.size());
    std::vector<int> col_shifts;
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        std::vector<std::vector<Term>> rows(row_shifts.size());
        for (const auto& t : vecs[j]) {
            Term c = t;
            std::size_t comp = c.m.comp;
            c.m.comp = 0;
            rows[comp].push_back(c);
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].empty()) m.set(i, j, Polynomial::from_terms(ring, std::move(rows[i])));
        const Term& lead = vecs[j].front();
        col_shifts.push_back(ring->weight(lead.m) + row_shifts[lead.m.comp]);
    }
    m.set_shifts(row_shifts, col_shifts);
    return m;
}

}  // namespace

PolyMatrix syzygies(const PolyMatrix& m0, const Budget& budget, bool* certified) {
    PolyMatrix m = ensure_graded(m0);
    const RingPtr& ring = m.ring_ptr();
    const std::size_t r = m.rows(), c = m.cols();
    if (r + c > 0xFFFF) throw Error("free module rank too large");
    std::vector<int> shifts = m.row_shifts();
    shifts.insert(shifts.end(), m.col_shifts().begin(), m.col_shifts().end());
    engine::Context ctx(*ring, r + c, engine::ModuleOrder::pot, shifts);
    std::vector<engine::Vec> gens;
    for (std::size_t j = 0; j < c; ++j) {
        engine::Vec v = column_vec(ctx, m, j);
        v.push_back(Term{Monomial::one(static_cast<std::uint16_t>(r + j)), ring->field().one()});
        gens.push_back(engine::canonical(ctx, std::move(v)));
    }
    std::vector<engine::Vec> kernel;
    if (!gens.empty()) {
        engine::Options eo;
        eo.budget = budget;
        engine::Result res = engine::buchberger(ctx, gens, eo);
        for (const auto& b : res.basis) {
            if (b.front().m.comp < r) continue;
            engine::Vec v = b;
            for (auto& t : v) t.m.comp = static_cast<std::uint16_t>(t.m.comp - r);
            kernel.push_back(std::move(v));
        }
    }
    if (certified) {
        engine::Context kctx(*ring, c, engine::ModuleOrder::pot, m.col_shifts());
        *certified = c == 0 || engine::spair_check(kctx, kernel);
    }
    auto keep = minimal_subset(*ring, kernel, m.col_shifts(), budget);
    std::vector<engine::Vec> chosen;
    for (auto k : keep) chosen.push_back(kernel[k]);
    return matrix_from_vecs(ring, chosen, m.col_shifts());
}

bool column_span_contains(const PolyMatrix& gens, const PolyMatrix& cols, const Budget& budget) {
    if (gens.rows() != cols.rows()) throw Error("column span: row count mismatch");
    require_same_ring(gens.ring(), cols.ring());
    engine::Context ctx(gens.ring(), gens.rows(), engine::ModuleOrder::top);
    std::vector<engine::Vec> in;
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        auto v = column_vec(ctx, gens, j);
        if (!v.empty()) in.push_back(std::move(v));
    }
    std::vector<engine::Vec> basis;
    if (!in.empty()) {
        engine::Options eo;
        eo.budget = budget;
        basis = engine::buchberger(ctx, in, eo).basis;
    }
    for (std::size_t j = 0; j < cols.cols(); ++j)
        if (!engine::reduce(ctx, column_vec(ctx, cols, j), basis).empty()) return false;
    return true;
}

PolyMatrix minimal_columns(const PolyMatrix& m0, const Budget& budget) {
    PolyMatrix m = ensure_graded(m0);
    engine::Context ctx(m.ring(), m.rows(), engine::ModuleOrder::top, m.row_shifts());
    std::vector<engine::Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(column_vec(ctx, m, j));
    auto keep = minimal_subset(m.ring(), cols, m.row_shifts(), budget);
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return m.submatrix(rows, keep);
}

namespace {

FreeResolution extend(const RingPtr& ring, PolyMatrix first, const Budget& budget) {
    FreeResolution res;
    res.ring = ring;
    res.minimal = true;
    res.shifts.push_back(first.row_shifts());
    if (first.cols() == 0) return res;
    res.maps.push_back(first);
    res.shifts.push_back(first.col_shifts());
    const std::size_t cap = ring->nvars() + 1;
    for (;;) {
        PolyMatrix next = syzygies(res.maps.back(), budget);
        if (next.cols() == 0) break;
        if (res.maps.size() > cap) throw InternalError("resolution longer than the number of variables");
        res.shifts.push_back(next.col_shifts());
        res.maps.push_back(std::move(next));
    }
    return res;
}

}  // namespace

FreeResolution minimal_resolution(const Ideal& ideal) {
    if (!ideal.is_homogeneous()) throw Error("resolution needs a homogeneous ideal");
    if (ideal.is_unit()) throw Error("resolution of the unit ideal");
    const RingPtr& ring = ideal.ring_ptr();
    auto gens = minimal_generators(ideal.generators(), ideal.budget());
    PolyMatrix row = PolyMatrix::row(ring, gens);
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.degree());
    row.set_shifts({0}, degs);
    return extend(ring, row, ideal.budget());
}

FreeResolution minimal_resolution(const PolyMatrix& m, const Budget& budget) {
    return extend(m.ring_ptr(), minimal_columns(m, budget), budget);
}

FreeResolution minimalize(FreeResolution complex) {
    const CoeffField& f = complex.ring->field();
    for (;;) {
        bool found = false;
        std::size_t pi = 0, pr = 0, pc = 0;
        int best = 0;
        for (std::size_t i = 0; i < complex.maps.size() && !found; ++i) {
            const PolyMatrix& d = complex.maps[i];
            for (std::size_t c = 0; c < d.cols(); ++c)
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    const Polynomial& e = d.at(r, c);
                    if (e.is_zero() || !e.is_constant()) continue;
                    int deg = complex.shifts[i + 1][c];
                    if (!found || deg < best || (deg == best && (r < pr || (r == pr && c < pc)))) {
                        found = true;
                        best = deg;
                        pi = i;
                        pr = r;
                        pc = c;
                    }
                }
        }
        if (!found) break;
        PolyMatrix& d = complex.maps[pi];
        Scalar inv = f.inv(d.at(pr, pc).lead_coeff());
        std::vector<std::size_t> keep_rows, keep_cols;
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (r != pr) keep_rows.push_back(r);
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (c != pc) keep_cols.push_back(c);
        PolyMatrix nd(complex.ring, keep_rows.size(), keep_cols.size());
        for (std::size_t a = 0; a < keep_rows.size(); ++a)
            for (std::size_t b = 0; b < keep_cols.size(); ++b) {
                std::size_t r = keep_rows[a], c = keep_cols[b];
                Polynomial v = d.at(r, c);
                if (!d.at(r, pc).is_zero() && !d.at(pr, c).is_zero())
                    v -= (d.at(r, pc) * d.at(pr, c)).scaled(inv);
                nd.set(a, b, v);
            }
        auto erase = [](std::vector<int> v, std::size_t k) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
            return v;
        };
        complex.shifts[pi] = erase(complex.shifts[pi], pr);
        complex.shifts[pi + 1] = erase(complex.shifts[pi + 1], pc);
        nd.set_shifts(complex.shifts[pi], complex.shifts[pi + 1]);
        d = nd;
        if (pi > 0) {
            PolyMatrix& prev = complex.maps[pi - 1];
            std::vector<std::size_t> all(prev.rows());
            for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
            prev = prev.submatrix(all, keep_rows);
        }
        if (pi + 1 < complex.maps.size()) {
            PolyMatrix& next = complex.maps[pi + 1];
            std::vector<std::size_t> all(next.cols());
            for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
            next = next.submatrix(keep_cols, all);
        }
    }
    while (!complex.maps.empty() && complex.maps.back().cols() == 0) {
        complex.maps.pop_back();
        complex.shifts.pop_back();
    }
    complex.minimal = true;
    return complex;
}

std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& phi) {
    const std::size_t n = phi.rows();
    if (n < 2 || phi.cols() + 1 != n) throw Error("signed maximal minors need an n x (n-1) matrix");
    MinorCalculator mc(phi);
    std::vector<std::size_t> cols(n - 1);
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) rows.push_back(k);
        Polynomial m = mc.minor(rows, cols);
        out.push_back(i % 2 ? -m : m);
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Polynomial acc(phi.ring_ptr());
        for (std::size_t i = 0; i < n; ++i) acc += phi.at(i, j) * out[i];
        if (!acc.is_zero()) throw InternalError("Laplace identity failed for signed minors");
    }
    return out;
}

PolyMatrix TwoDegreeShape::phi1() const {
    std::vector<std::size_t> rows, cols;
    for (int i = 0; i < a; ++i) rows.push_back(static_cast<std::size_t>(i));
    for (int j = 0; j + 1 < n; ++j) cols.push_back(static_cast<std::size_t>(j));
    return phi.submatrix(rows, cols);
}

PolyMatrix TwoDegreeShape::phi2() const {
    std::vector<std::size_t> rows, cols;
    for (int i = a; i < n; ++i) rows.push_back(static_cast<std::size_t>(i));
    for (int j = 0; j + 1 < n; ++j) cols.push_back(static_cast<std::size_t>(j));
    return phi.submatrix(rows, cols);
}

void TwoDegreeShape::validate() const {
    if (n < 2 || phi.rows() != static_cast<std::size_t>(n) || phi.cols() + 1 != static_cast<std::size_t>(n))
        throw Error("shape: matrix must be n x (n-1)");
    if (a < 1 || a > n - 1) throw Error("shape: need 1 <= a <= n-1");
    if (eps2 < 1 || eps2 > eps1) throw Error("shape: need 1 <= eps2 <= eps1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
            const Polynomial& e = phi.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (e.is_zero()) continue;
            int want = i < a ? eps1 : eps2;
            if (!e.is_homogeneous() || e.degree() != want)
                throw Error("shape: entry (" + std::to_string(i) + "," + std::to_string(j) + ") must have degree " +
                            std::to_string(want));
        }
}

std::vector<Polynomial> fixed_minors(const TwoDegreeShape& shape) {
    shape.validate();
    auto all = signed_maximal_minors(shape.phi);
    return std::vector<Polynomial>(all.begin(), all.begin() + shape.a);
}

Ideal fixed_minors_ideal(const TwoDegreeShape& shape, const Budget& budget) {
    return Ideal(shape.phi.ring_ptr(), fixed_minors(shape), budget);
}

std::vector<std::vector<int>> divided_power_basis(int r, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == r - 1) {
            cur[static_cast<std::size_t>(k)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(k)] = e;
            rec(k + 1, left - e);
        }
    };
    if (r == 0) {
        if (i == 0) out.push_back({});
        return out;
    }
    rec(0, i);
    return out;
}

FreeResolution buchsbaum_rim(const PolyMatrix& psi) {
    const std::size_t r = psi.rows(), s = psi.cols();
    if (r < 1 || s < r) throw Error("Buchsbaum-Rim complex needs rank F >= rank G >= 1");
    const RingPtr& ring = psi.ring_ptr();
    int delta = -1;
    for (const auto& e : psi.entries()) {
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) throw Error("nonuniform column degrees");
        if (delta < 0)
            delta = e.degree();
        else if (e.degree() != delta)
            throw Error("nonuniform column degrees");
    }
    if (delta < 0) throw Error("Buchsbaum-Rim complex of the zero map");

    FreeResolution c;
    c.ring = ring;
    c.shifts.push_back(std::vector<int>(r, 0));
    c.shifts.push_back(std::vector<int>(s, delta));
    PolyMatrix d1 = psi;
    d1.set_shifts(c.shifts[0], c.shifts[1]);
    c.maps.push_back(d1);
    if (s == r) return c;

    MinorCalculator mc(psi);
    std::vector<std::size_t> all_rows(r);
    for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
    auto top = subsets(s, r + 1);
    PolyMatrix theta(ring, s, top.size());
    for (std::size_t col = 0; col < top.size(); ++col) {
        const auto& J = top[col];
        for (std::size_t l = 0; l <= r; ++l) {
            std::vector<std::size_t> rest;
            for (std::size_t q = 0; q <= r; ++q)
                if (q != l) rest.push_back(J[q]);
            Polynomial m = mc.minor(all_rows, rest);
            theta.set(J[l], col, (r - l) % 2 ? -m : m);
        }
    }
    c.shifts.push_back(std::vector<int>(top.size(), static_cast<int>(r + 1) * delta));
    theta.set_shifts(c.shifts[1], c.shifts[2]);
    c.maps.push_back(theta);

    for (std::size_t i = 1; r + 1 + i <= s; ++i) {
        auto dom_alpha = divided_power_basis(static_cast<int>(r), static_cast<int>(i));
        auto dom_sub = subsets(s, r + 1 + i);
        auto cod_alpha = divided_power_basis(static_cast<int>(r), static_cast<int>(i - 1));
        auto cod_sub = subsets(s, r + i);
        std::map<std::vector<int>, std::size_t> alpha_index;
        for (std::size_t k = 0; k < cod_alpha.size(); ++k) alpha_index[cod_alpha[k]] = k;
        std::map<std::vector<std::size_t>, std::size_t> sub_index;
        for (std::size_t k = 0; k < cod_sub.size(); ++k) sub_index[cod_sub[k]] = k;
        PolyMatrix d(ring, cod_alpha.size() * cod_sub.size(), dom_alpha.size() * dom_sub.size());
        for (std::size_t a = 0; a < dom_alpha.size(); ++a)
            for (std::size_t b = 0; b < dom_sub.size(); ++b) {
                std::size_t col = a * dom_sub.size() + b;
                const auto& J = dom_sub[b];
                for (std::size_t m = 0; m < J.size(); ++m) {
                    std::vector<std::size_t> rest = J;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
                    std::size_t sub = sub_index.at(rest);
                    for (std::size_t k = 0; k < r; ++k) {
                        if (dom_alpha[a][k] == 0 || psi.at(k, J[m]).is_zero()) continue;
                        auto alpha = dom_alpha[a];
                        --alpha[k];
                        std::size_t row = alpha_index.at(alpha) * cod_sub.size() + sub;
                        Polynomial e = m % 2 ? -psi.at(k, J[m]) : psi.at(k, J[m]);
                        d.set(row, col, d.at(row, col) + e);
                    }
                }
            }
        c.shifts.push_back(std::vector<int>(d.cols(), static_cast<int>(r + 1 + i) * delta));
        d.set_shifts(c.shifts[c.shifts.size() - 2], c.shifts.back());
        c.maps.push_back(d);
    }

    if (r + 2 == s) {
        // Basis b_m = (-1)^{s-m} e_{[s] minus m}, m = 1..s; the last basis is scaled by (-1)^{s+1}.
        PolyMatrix& th = c.maps[1];
        PolyMatrix& last = c.maps[2];
        PolyMatrix nth(ring, s, s), nlast(ring, s, last.cols());
        for (std::size_t m0 = 0; m0 < s; ++m0) {
            std::size_t q = s - 1 - m0;  // lex position of the subset missing m0
            std::size_t m = m0 + 1;
            bool neg = (s - m) % 2 == 1;
            for (std::size_t j = 0; j < s; ++j) nth.set(j, m0, neg ? -th.at(j, q) : th.at(j, q));
            bool neg_last = neg != ((s + 1) % 2 == 1);
            for (std::size_t k = 0; k < last.cols(); ++k)
                nlast.set(m0, k, neg_last ? -last.at(q, k) : last.at(q, k));
        }
        nth.set_shifts(c.shifts[1], c.shifts[2]);
        nlast.set_shifts(c.shifts[2], c.shifts[3]);
        th = nth;
        last = nlast;
    }
    return c;
}

MinorHeight minor_ideal_height(const PolyMatrix& m, std::size_t k, int target, const Budget& budget) {
    MinorHeight out;
    const RingPtr& ring = m.ring_ptr();
    const int nvars = static_cast<int>(ring->nvars());
    if (k == 0) {
        out.height = nvars;
        out.complete = true;
        return out;
    }
    if (k > std::min(m.rows(), m.cols())) {
        out.complete = true;
        out.zero = true;
        return out;
    }
    MinorCalculator mc(m);
    auto row_sets = subsets(m.rows(), k);
    auto col_sets = subsets(m.cols(), k);
    std::vector<Polynomial> gens;
    std::size_t next_check = 1;
    auto measure = [&]() {
        Ideal ideal(ring, gens, budget);
        out.height = ideal.is_unit() ? nvars : dimension_height(ideal).height;
    };
    // Certificate for height >= target: under a linear map onto a polynomial ring in
    // `target` variables each linear form lowers dimension by at most one, so an
    // image of finite colength forces dim R/I <= nvars - target. A failed attempt
    // proves nothing and the exact computation runs at the end.
    RingPtr small;
    std::vector<Polynomial> images;
    if (target > 0 && target < nvars) {
        std::vector<std::string> names;
        for (int i = 0; i < target; ++i) names.push_back("_y" + std::to_string(i));
        small = PolyRing::standard(names, ring->field());
        std::mt19937_64 rng(0xc0ffee);
        for (int v = 0; v < nvars; ++v) {
            Polynomial form(small);
            for (int i = 0; i < target; ++i)
                form += Polynomial::variable(small, static_cast<std::size_t>(i))
                            .scaled(ring->field().from_int(static_cast<std::int64_t>(rng() % 1000003)));
            images.push_back(form);
        }
    }
    auto projected_certificate = [&]() {
        if (!small) return false;
        std::vector<Polynomial> img;
        for (const auto& g : gens) {
            if (!g.is_homogeneous()) return false;
            img.push_back(g.substitute(small, images));
        }
        Ideal ideal(small, img, budget);
        return ideal.is_unit() || dimension_height(ideal).dim == 0;
    };
    // A fixed pseudo-random visiting order reaches the target height much sooner
    // than lex order, whose first minors tend to share factors.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
    for (std::uint32_t a = 0; a < row_sets.size(); ++a)
        for (std::uint32_t b = 0; b < col_sets.size(); ++b) order.emplace_back(a, b);
    if (target >= 0) {
        std::mt19937_64 rng(0x5eed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    for (const auto& [a, b] : order) {
        Polynomial p = mc.minor(row_sets[a], col_sets[b]);
        if (p.is_zero()) continue;
        p = p.normalized();
        if (std::find(gens.begin(), gens.end(), p) != gens.end()) continue;
        gens.push_back(p);
        if (target >= 0 && gens.size() >= next_check) {
            next_check *= 2;
            if (projected_certificate()) {
                out.height = target;
                return out;
            }
            if (!small) {
                measure();
                if (out.height >= target) return out;
            }
        }
    }
    out.complete = true;
    out.zero = gens.empty();
    if (!out.zero) measure();
    return out;
}

std::string AcyclicityCertificate::to_string() const {
    std::ostringstream out;
    out << (acyclic ? "acyclic" : "not acyclic");
    for (std::size_t i = 0; i < ranks.size(); ++i)
        out << "; d" << i + 1 << ": rank " << ranks[i] << ", height " << heights[i] << (passed[i] ? " ok" : " FAIL");
    return out.str();
}

AcyclicityCertificate acyclicity_check(const FreeResolution& complex, const Budget& budget) {
    AcyclicityCertificate cert;
    const std::size_t k = complex.maps.size();
    cert.ranks.assign(k, 0);
    cert.heights.assign(k, 0);
    cert.passed.assign(k, false);
    if (!complex.composes_to_zero()) return cert;
    long long next = 0;
    bool ok = true;
    for (std::size_t i = k; i-- > 0;) {
        long long ri = static_cast<long long>(complex.maps[i].cols()) - next;
        cert.ranks[i] = static_cast<int>(ri);
        next = ri;
    }
    const int nvars = static_cast<int>(complex.ring->nvars());
    for (std::size_t i = 0; i < k; ++i) {
        int ri = cert.ranks[i];
        const PolyMatrix& d = complex.maps[i];
        bool pass = false;
        if (ri < 0 || static_cast<std::size_t>(ri) > std::min(d.rows(), d.cols())) {
            pass = false;
        } else if (ri == 0) {
            cert.heights[i] = nvars;
            pass = true;
        } else {
            MinorHeight mh = minor_ideal_height(d, static_cast<std::size_t>(ri), static_cast<int>(i + 1), budget);
            cert.heights[i] = mh.height;
            pass = !mh.zero && mh.height >= static_cast<int>(i + 1);
        }
        cert.passed[i] = pass;
        ok = ok && pass;
    }
    cert.acyclic = ok;
    return cert;
}

}  // namespace hbforge
