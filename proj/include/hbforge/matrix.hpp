#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hbforge/polynomial.hpp"

namespace hbforge {

// Matrix of polynomials. With shifts it is the graded map
// sum_j R(-colShift_j) -> sum_i R(-rowShift_i); entry (i,j) is then homogeneous
// of degree colShift_j - rowShift_i.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
    static PolyMatrix parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows);
    static PolyMatrix row(RingPtr ring, const std::vector<Polynomial>& entries);
    static PolyMatrix column(RingPtr ring, const std::vector<Polynomial>& entries);

    const RingPtr& ring_ptr() const { return ring_; }
    const PolyRing& ring() const { return *ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Polynomial p);

    bool graded() const { return !row_shifts_.empty() || (rows_ == 0 && !col_shifts_.empty()); }
    const std::vector<int>& row_shifts() const { return row_shifts_; }
    const std::vector<int>& col_shifts() const { return col_shifts_; }
    // Validates homogeneity of every entry; throws on violation.
    void set_shifts(std::vector<int> row_shifts, std::vector<int> col_shifts);
    // Column shifts forced by the given row shifts (zero columns get `fallback`).
    std::vector<int> infer_col_shifts(const std::vector<int>& row_shifts, int fallback = 0) const;
    // Attaches row shifts and the inferred column shifts.
    void grade_by_rows(std::vector<int> row_shifts, int fallback = 0);

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    std::vector<Polynomial> column_entries(std::size_t j) const;
    std::vector<Polynomial> row_entries(std::size_t i) const;
    std::vector<Polynomial> entries() const { return data_; }
    bool is_zero() const;
    bool has_unit_entry() const;

    bool operator==(const PolyMatrix& o) const;
    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
    std::vector<int> row_shifts_, col_shifts_;
};

// Determinants of square submatrices by cofactor expansion along the first
// selected column, memoized over (row set, column set).
class MinorCalculator {
public:
    explicit MinorCalculator(const PolyMatrix& m);
    Polynomial minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

private:
    Polynomial det(std::uint64_t rows, std::uint64_t cols);
    const PolyMatrix& m_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo_;
};

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);
// Nonzero k x k minors, distinct after normalization; k = 0 gives {1}.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);
Polynomial determinant(const PolyMatrix& m);

}  // namespace hbforge
