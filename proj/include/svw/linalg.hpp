#pragma once

#include "svw/coeff.hpp"

#include <optional>
#include <vector>

namespace svw {

// Dense linear systems over the Gaussian rationals.
using Row = std::vector<GaussRat>;

struct Echelon {
    std::vector<Row> rows;           // reduced rows
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t cols = 0;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(std::vector<Row> m, std::size_t cols);

// Basis of {x : m x = 0}.
std::vector<Row> nullspace(const std::vector<Row>& m, std::size_t cols);

// Some x with m x = rhs, or nullopt when inconsistent.
std::optional<Row> solve(const std::vector<Row>& m, const Row& rhs, std::size_t cols);

}  // namespace svw
