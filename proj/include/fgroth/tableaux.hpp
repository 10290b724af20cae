#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fgroth/poly.hpp"
#include "fgroth/shapes.hpp"

namespace fgroth {

struct Cell {
    int row, col;  // 1-based
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Filling of a skew shape by nonempty sets of positive integers, stored as
/// bitmasks (bit k-1 set <=> k is an entry). Cells are in row-major reading order.
struct SetValuedTableau {
    std::vector<Cell> cells;
    std::vector<std::uint32_t> sets;

    int entry_count() const;
    std::vector<int> entries(std::size_t cell) const;
};

std::vector<Cell> skew_cells(const Partition& lambda, const Partition& mu);

/// Flagged set-valued tableaux of lambda/mu with entries in row i at most f_i:
/// rows weakly increase (max of a cell <= min of its right neighbour), columns
/// strictly increase (max of a cell < min of the cell below). Cells are filled
/// in reading order, each with candidate sets in colexicographic order.
/// Requires g = (1, ..., 1).
void for_each_fsvt(const SkewFlagged& inst, const std::function<void(const SetValuedTableau&)>& visit);
std::vector<SetValuedTableau> enumerate_fsvt(const SkewFlagged& inst);

/// sum_T b^{|T| - |lambda/mu|} x^T over flagged set-valued tableaux; requires g = 1.
Poly tableaux_polynomial(const SkewFlagged& inst);

/// Flagged skew semistandard tableaux with row i entries in [g_i, f_i],
/// weighted by x^T: the b = 0 model. Returned with b-cap 0.
Poly ssyt_polynomial(const SkewFlagged& inst);

}  // namespace fgroth
