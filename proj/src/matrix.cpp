#include "hbforge/matrix.hpp"

#include <algorithm>

#include "hbforge/errors.hpp"

namespace hbforge {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    PolyMatrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw Error("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

PolyMatrix PolyMatrix::parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Polynomial>> polys;
    for (const auto& r : rows) {
        polys.emplace_back();
        for (const auto& s : r) polys.back().push_back(Polynomial::parse(s, ring));
    }
    return from_rows(ring, polys);
}

PolyMatrix PolyMatrix::row(RingPtr ring, const std::vector<Polynomial>& entries) {
    return from_rows(std::move(ring), {entries});
}

PolyMatrix PolyMatrix::column(RingPtr ring, const std::vector<Polynomial>& entries) {
    PolyMatrix m(ring, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    require_same_ring(*ring_, p.ring());
    data_[i * cols_ + j] = std::move(p);
}

void PolyMatrix::set_shifts(std::vector<int> row_shifts, std::vector<int> col_shifts) {
    if (row_shifts.size() != rows_ || col_shifts.size() != cols_) throw Error("shift vector length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Polynomial& p = at(i, j);
            if (p.is_zero()) continue;
            int want = col_shifts[j] - row_shifts[i];
            for (const auto& t : p.terms())
                if (ring_->weight(t.m) != want)
                    throw Error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not homogeneous of degree " + std::to_string(want));
        }
    row_shifts_ = std::move(row_shifts);
    col_shifts_ = std::move(col_shifts);
}

std::vector<int> PolyMatrix::infer_col_shifts(const std::vector<int>& row_shifts, int fallback) const {
    std::vector<int> out(cols_, fallback);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) {
                out[j] = row_shifts[i] + at(i, j).degree();
                break;
            }
    return out;
}

void PolyMatrix::grade_by_rows(std::vector<int> row_shifts, int fallback) {
    auto cols = infer_col_shifts(row_shifts, fallback);
    set_shifts(std::move(row_shifts), std::move(cols));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    require_same_ring(*ring_, o.ring());
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            std::vector<Term> acc;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
                Polynomial prod = at(i, k) * o.at(k, j);
                acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
            }
            r.data_[i * r.cols_ + j] = Polynomial::from_terms(ring_, std::move(acc));
        }
    if (graded() && o.graded() && o.row_shifts_ == col_shifts_) {
        r.row_shifts_ = row_shifts_;
        r.col_shifts_ = o.col_shifts_;
    }
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    PolyMatrix r(ring_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.data_[i * cols.size() + j] = at(rows[i], cols[j]);
    if (graded()) {
        for (auto i : rows) r.row_shifts_.push_back(row_shifts_[i]);
        for (auto j : cols) r.col_shifts_.push_back(col_shifts_[j]);
    }
    return r;
}

std::vector<Polynomial> PolyMatrix::column_entries(std::size_t j) const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

std::vector<Polynomial> PolyMatrix::row_entries(std::size_t i) const {
    return std::vector<Polynomial>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::has_unit_entry() const {
    return std::any_of(data_.begin(), data_.end(),
                       [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string PolyMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
        s += "]\n";
    }
    return s;
}

MinorCalculator::MinorCalculator(const PolyMatrix& m) : m_(m) {
    if (m.rows() > 64 || m.cols() > 64) throw Error("matrix too large for minor expansion");
}

Polynomial MinorCalculator::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw Error("non-square minor");
    std::uint64_t rm = 0, cm = 0;
    for (auto r : rows) rm |= 1ULL << r;
    for (auto c : cols) cm |= 1ULL << c;
    // Masks sort indices ascending; a permuted request changes the sign.
    auto parity = [](const std::vector<std::size_t>& v) {
        int inv = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] > v[j]) ++inv;
        return inv & 1;
    };
    Polynomial d = det(rm, cm);
    return (parity(rows) ^ parity(cols)) ? -d : d;
}

Polynomial MinorCalculator::det(std::uint64_t rows, std::uint64_t cols) {
    if (rows == 0) return Polynomial::from_int(m_.ring_ptr(), 1);
    auto key = std::make_pair(rows, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::size_t c0 = static_cast<std::size_t>(__builtin_ctzll(cols));
    std::uint64_t rest_cols = cols & (cols - 1);
    std::vector<Term> acc;
    int sign = 1;
    for (std::uint64_t r = rows; r; r &= r - 1) {
        std::size_t ri = static_cast<std::size_t>(__builtin_ctzll(r));
        const Polynomial& a = m_.at(ri, c0);
        if (!a.is_zero()) {
            Polynomial sub = det(rows & ~(1ULL << ri), rest_cols);
            if (!sub.is_zero()) {
                Polynomial prod = a * sub;
                if (sign < 0) prod = -prod;
                acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
            }
        }
        sign = -sign;
    }
    Polynomial result = Polynomial::from_terms(m_.ring_ptr(), std::move(acc));
    memo_.emplace(key, result);
    return result;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
    std::vector<Polynomial> out;
    if (k == 0) return {Polynomial::from_int(m.ring_ptr(), 1)};
    MinorCalculator calc(m);
    for (const auto& rs : subsets(m.rows(), k))
        for (const auto& cs : subsets(m.cols(), k)) {
            Polynomial d = calc.minor(rs, cs);
            if (d.is_zero()) continue;
            Polynomial n = d.normalized();
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        }
    return out;
}

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    MinorCalculator calc(m);
    return calc.minor(idx, idx);
}

}  // namespace hbforge
