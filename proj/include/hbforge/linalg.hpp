#pragma once

#include <vector>

#include "hbforge/field.hpp"

namespace hbforge {

using ScalarRow = std::vector<Scalar>;

struct Echelon {
    std::size_t rank = 0;
    std::vector<ScalarRow> rows;     // reduced row echelon form, nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form by Gauss-Jordan elimination.
Echelon row_echelon(const CoeffField& f, std::vector<ScalarRow> rows);
std::size_t matrix_rank(const CoeffField& f, std::vector<ScalarRow> rows);

}  // namespace hbforge
