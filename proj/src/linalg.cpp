#include "hbforge/linalg.hpp"

namespace hbforge {

Echelon row_echelon(const CoeffField& f, std::vector<ScalarRow> rows) {
    Echelon e;
    if (rows.empty()) return e;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && f.is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = f.inv(rows[r][c]);
        for (std::size_t k = c; k < ncols; ++k) rows[r][k] = f.mul(rows[r][k], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || f.is_zero(rows[i][c])) continue;
            Scalar factor = rows[i][c];
            for (std::size_t k = c; k < ncols; ++k)
                if (!f.is_zero(rows[r][k])) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
        }
        e.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rank = r;
    e.rows = std::move(rows);
    return e;
}

std::size_t matrix_rank(const CoeffField& f, std::vector<ScalarRow> rows) {
    return row_echelon(f, std::move(rows)).rank;
}

}  // namespace hbforge
