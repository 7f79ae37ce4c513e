#include "svw/linalg.hpp"

namespace svw {

Echelon rref(std::vector<Row> m, std::size_t cols) {
    Echelon e;
    e.cols = cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        GaussRat inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GaussRat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

std::vector<Row> nullspace(const std::vector<Row>& m, std::size_t cols) {
    Echelon e = rref(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Row v(cols);
        v[f] = GaussRat(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Row> solve(const std::vector<Row>& m, const Row& rhs, std::size_t cols) {
    std::vector<Row> aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    Echelon e = rref(std::move(aug), cols + 1);
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    Row x(cols);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rows[k][cols];
    return x;
}

}  // namespace svw
